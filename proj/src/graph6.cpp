#include "lborder/graph6.hpp"

namespace lborder {

namespace {

constexpr int kBias = 63;

std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

int sextet(char c) { return static_cast<unsigned char>(c) - kBias; }

std::size_t read_big_endian(std::string_view digits) {
  std::size_t v = 0;
  for (char c : digits) v = (v << 6) | static_cast<std::size_t>(sextet(c));
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view line, const Graph6Options& opts,
                   std::vector<std::string>* warnings) {
  if (line.empty()) throw Graph6Error("empty graph6 record", 0);
  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Graph6Error("character code " + std::to_string(c) + " outside 63..126", i);
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (line[0] != '~') {
    n = static_cast<std::size_t>(sextet(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] != '~') {
    if (line.size() < 4) throw Graph6Error("truncated size field", line.size());
    n = read_big_endian(line.substr(1, 3));
    pos = 4;
  } else {
    if (line.size() < 8) throw Graph6Error("truncated size field", line.size());
    n = read_big_endian(line.substr(2, 6));
    pos = 8;
  }
  if (n > opts.max_order) {
    throw Graph6Error("order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.max_order),
                      0);
  }

  const std::size_t bits = pair_count(n);
  const std::size_t need = (bits + 5) / 6;
  const std::size_t have = line.size() - pos;
  if (have < need) {
    throw Graph6Error("truncated record: expected " + std::to_string(need) +
                          " data characters for order " + std::to_string(n) + ", found " +
                          std::to_string(have),
                      line.size());
  }
  if (have > need) throw Graph6Error("unexpected trailing characters", pos + need);

  GraphBuilder builder(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(line[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) builder.edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + need - 1;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (sextet(line[last]) & pad_mask) {
      if (opts.strict) throw Graph6Error("nonzero padding bits", last);
      if (warnings) {
        warnings->push_back("nonzero padding bits at column " + std::to_string(last));
      }
    }
  }
  return std::move(builder).build();
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) {
    throw std::invalid_argument("write_graph6: order " + std::to_string(n) +
                                " exceeds the graph6 range 0.." +
                                std::to_string(kGraph6MaxOrder));
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::optional<Graph6Reader::Record> Graph6Reader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    // nauty writes the header directly in front of the first record.
    if (line.starts_with(">>graph6<<")) line.erase(0, 10);
    if (line.empty() || line.starts_with(">>")) continue;
    Record rec;
    rec.line_number = line_number_;
    rec.text = line;
    try {
      rec.graph = parse_graph6(line, opts_, &rec.warnings);
    } catch (const Graph6Error& e) {
      rec.error = e.what();
    }
    return rec;
  }
  return std::nullopt;
}

}  // namespace lborder
