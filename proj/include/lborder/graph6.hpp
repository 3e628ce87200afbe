#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lborder/graph.hpp"

namespace lborder {

// Largest order representable with the 4-byte size field.
inline constexpr std::size_t kGraph6MaxOrder = 258047;

struct Graph6Options {
  // Nonzero padding bits are an error when strict, a warning otherwise.
  bool strict = true;
  std::size_t max_order = kDefaultMaxOrder;
};

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at column " + std::to_string(position)),
        position_(position) {}
  // Zero-based character offset within the line.
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Decodes one graph6 record (no trailing newline). Warnings produced in
// lenient mode are appended to `warnings` when given.
Graph parse_graph6(std::string_view line, const Graph6Options& opts = {},
                   std::vector<std::string>* warnings = nullptr);

std::string write_graph6(const Graph& g);

// Line-oriented reader. A leading ">>graph6<<" header is stripped, other
// lines starting with ">>" and blank lines are skipped, and a trailing '\r'
// is ignored.
class Graph6Reader {
 public:
  struct Record {
    std::size_t line_number = 0;  // 1-based
    std::string text;
    std::optional<Graph> graph;  // empty when the line failed to parse
    std::string error;
    std::vector<std::string> warnings;
  };

  explicit Graph6Reader(std::istream& in, Graph6Options opts = {})
      : in_(in), opts_(opts) {}

  std::optional<Record> next();

 private:
  std::istream& in_;
  Graph6Options opts_;
  std::size_t line_number_ = 0;
};

}  // namespace lborder
