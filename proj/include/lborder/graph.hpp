#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lborder/rational.hpp"

namespace lborder {

inline constexpr std::size_t kDefaultMaxOrder = 256;

using Edge = std::pair<std::size_t, std::size_t>;

// Simple undirected graph on vertices 0..n-1, stored as a dense symmetric
// bit matrix. Values are immutable once built; the composition operators
// below return new graphs.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return edges_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return (rows_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
  }

  std::size_t degree(std::size_t v) const;
  std::vector<std::size_t> degrees() const;

  // Edges (i, j) with i < j, in row-major order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

  // Bit k of `code` selects the k-th vertex pair in the column-major upper
  // triangle order (0,1), (0,2), (1,2), (0,3), ... used by graph6.
  static Graph from_pair_code(std::size_t n, std::uint64_t code);

 private:
  friend class GraphBuilder;

  explicit Graph(std::size_t n)
      : n_(n), words_((n + 63) / 64), rows_(n * words_, 0) {}

  void set(std::size_t i, std::size_t j);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::size_t edges_ = 0;
  std::vector<std::uint64_t> rows_;
};

// Accumulates edges without validation; used by the constructors in this
// module after they have checked their own arguments.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n) : g_(n) {}
  GraphBuilder& edge(std::size_t i, std::size_t j) {
    g_.set(i, j);
    return *this;
  }
  Graph build() && { return std::move(g_); }

 private:
  Graph g_;
};

// Rejects self-loops, endpoints outside 0..n-1 and n above `max_order`.
// Duplicate and reversed pairs collapse into one edge.
Graph build_graph(std::size_t n, const std::vector<Edge>& edges,
                  std::size_t max_order = kDefaultMaxOrder);

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t b);
// aK2: vertex i is matched with vertex a + i.
Graph matching_graph(std::size_t a);

// Left operand keeps labels 0..n1-1, right operand is shifted by n1.
Graph graph_union(const Graph& g1, const Graph& g2);
Graph graph_join(const Graph& g1, const Graph& g2);
Graph complement(const Graph& g);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);

struct DegreeStats {
  std::vector<std::size_t> degrees;
  std::size_t edges = 0;
  Rational average;  // 2m / n
};

DegreeStats degree_stats(const Graph& g);

// ---- families -------------------------------------------------------------

enum class FamilyKind {
  complete,             // K_n
  empty,                // bK1
  matching,             // aK2
  kk_odot,              // (K_{n-1} u K_{n-2}) join K1, order 2n-2
  kk_dot,               // (K_n u K_{n-1}) join K1, order 2n
  match_join_complete,  // aK2 join K_b
  match_join_empty,     // aK2 join bK1
};

struct FamilyId {
  FamilyKind kind = FamilyKind::complete;
  long n = 0;
  long a = 0;
  long b = 0;

  static FamilyId complete(long n) { return {FamilyKind::complete, n, 0, 0}; }
  static FamilyId empty(long b) { return {FamilyKind::empty, 0, 0, b}; }
  static FamilyId matching(long a) { return {FamilyKind::matching, 0, a, 0}; }
  static FamilyId kk_odot(long n) { return {FamilyKind::kk_odot, n, 0, 0}; }
  static FamilyId kk_dot(long n) { return {FamilyKind::kk_dot, n, 0, 0}; }
  static FamilyId match_join_complete(long a, long b) {
    return {FamilyKind::match_join_complete, 0, a, b};
  }
  static FamilyId match_join_empty(long a, long b) {
    return {FamilyKind::match_join_empty, 0, a, b};
  }

  bool is_primitive() const {
    return kind == FamilyKind::complete || kind == FamilyKind::empty ||
           kind == FamilyKind::matching;
  }

  // Throws std::invalid_argument when a parameter is below its bound.
  void validate() const;
  std::size_t order() const;

  bool operator==(const FamilyId&) const = default;
};

// Short machine name: "complete", "empty", "matching", "kkodot", "kkdot",
// "mjc", "mje".
std::string family_name(FamilyKind kind);
// e.g. "kkodot(n=5)", "mjc(a=2,b=3)".
std::string to_string(const FamilyId& id);

Graph family(const FamilyId& id);

// Two copies of K_n plus n edges from vertex 0 of the first copy to every
// vertex of the second copy.
Graph kk_dot_direct(long n);

}  // namespace lborder
