#include "lborder/graph.hpp"

#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace lborder {

void Graph::set(std::size_t i, std::size_t j) {
  auto& wij = rows_[i * words_ + (j >> 6)];
  const std::uint64_t bit = std::uint64_t{1} << (j & 63);
  if (wij & bit) return;
  wij |= bit;
  rows_[j * words_ + (i >> 6)] |= std::uint64_t{1} << (i & 63);
  ++edges_;
}

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w)
    d += static_cast<std::size_t>(std::popcount(rows_[v * words_ + w]));
  return d;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (adjacent(i, j)) out.emplace_back(i, j);
  return out;
}

Graph Graph::from_pair_code(std::size_t n, std::uint64_t code) {
  if (n > 11)
    throw std::invalid_argument("pair code supports at most 11 vertices");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k)
      if ((code >> k) & 1u) g.set(i, j);
  return g;
}

Graph build_graph(std::size_t n, const std::vector<Edge>& edges,
                  std::size_t max_order) {
  if (n > max_order) {
    throw std::invalid_argument("graph order " + std::to_string(n) +
                                " exceeds cap " + std::to_string(max_order));
  }
  GraphBuilder b(n);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [i, j] = edges[k];
    if (i >= n || j >= n) {
      std::ostringstream msg;
      msg << "edge #" << k << " (" << i << "," << j
          << ") has an endpoint outside 0.." << (n == 0 ? 0 : n - 1);
      throw std::invalid_argument(msg.str());
    }
    if (i == j) {
      throw std::invalid_argument("edge #" + std::to_string(k) +
                                  " is a self-loop at vertex " +
                                  std::to_string(i));
    }
    b.edge(i, j);
  }
  return std::move(b).build();
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.edge(i, j);
  return std::move(b).build();
}

Graph empty_graph(std::size_t b) { return GraphBuilder(b).build(); }

Graph matching_graph(std::size_t a) {
  GraphBuilder b(2 * a);
  for (std::size_t i = 0; i < a; ++i) b.edge(i, a + i);
  return std::move(b).build();
}

namespace {

GraphBuilder disjoint(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  GraphBuilder b(n1 + g2.order());
  for (const auto& [i, j] : g1.edges()) b.edge(i, j);
  for (const auto& [i, j] : g2.edges()) b.edge(n1 + i, n1 + j);
  return b;
}

}  // namespace

Graph graph_union(const Graph& g1, const Graph& g2) {
  return disjoint(g1, g2).build();
}

Graph graph_join(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  auto b = disjoint(g1, g2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < g2.order(); ++j) b.edge(i, n1 + j);
  return std::move(b).build();
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) b.edge(i, j);
  return std::move(b).build();
}

std::size_t component_count(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<bool> seen(n, false);
  std::size_t components = 0;
  std::queue<std::size_t> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    frontier.push(s);
    while (!frontier.empty()) {
      const auto v = frontier.front();
      frontier.pop();
      for (std::size_t u = 0; u < n; ++u) {
        if (!seen[u] && g.adjacent(v, u)) {
          seen[u] = true;
          frontier.push(u);
        }
      }
    }
  }
  return components;
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

DegreeStats degree_stats(const Graph& g) {
  if (g.order() == 0)
    throw std::invalid_argument("degree_stats: graph has no vertices");
  DegreeStats s;
  s.degrees = g.degrees();
  s.edges = g.edge_count();
  s.average = Rational(BigInt(2 * s.edges), BigInt(g.order()));
  return s;
}

// ---- families --------------------------------------------------------------

void FamilyId::validate() const {
  auto require = [this](bool ok, const char* what) {
    if (!ok) {
      throw std::invalid_argument(to_string(*this) + ": " + what);
    }
  };
  switch (kind) {
    case FamilyKind::complete:
      require(n >= 1, "requires n >= 1");
      break;
    case FamilyKind::empty:
      require(b >= 1, "requires b >= 1");
      break;
    case FamilyKind::matching:
      require(a >= 1, "requires a >= 1");
      break;
    case FamilyKind::kk_odot:
    case FamilyKind::kk_dot:
      require(n >= 3, "requires n >= 3");
      break;
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty:
      require(a >= 2 && b >= 2, "requires a >= 2 and b >= 2");
      break;
  }
}

std::size_t FamilyId::order() const {
  switch (kind) {
    case FamilyKind::complete: return static_cast<std::size_t>(n);
    case FamilyKind::empty: return static_cast<std::size_t>(b);
    case FamilyKind::matching: return static_cast<std::size_t>(2 * a);
    case FamilyKind::kk_odot: return static_cast<std::size_t>(2 * n - 2);
    case FamilyKind::kk_dot: return static_cast<std::size_t>(2 * n);
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty:
      return static_cast<std::size_t>(2 * a + b);
  }
  return 0;
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::complete: return "complete";
    case FamilyKind::empty: return "empty";
    case FamilyKind::matching: return "matching";
    case FamilyKind::kk_odot: return "kkodot";
    case FamilyKind::kk_dot: return "kkdot";
    case FamilyKind::match_join_complete: return "mjc";
    case FamilyKind::match_join_empty: return "mje";
  }
  return "?";
}

std::string to_string(const FamilyId& id) {
  const auto name = family_name(id.kind);
  switch (id.kind) {
    case FamilyKind::complete:
    case FamilyKind::kk_odot:
    case FamilyKind::kk_dot:
      return name + "(n=" + std::to_string(id.n) + ")";
    case FamilyKind::empty:
      return name + "(b=" + std::to_string(id.b) + ")";
    case FamilyKind::matching:
      return name + "(a=" + std::to_string(id.a) + ")";
    case FamilyKind::match_join_complete:
    case FamilyKind::match_join_empty:
      return name + "(a=" + std::to_string(id.a) +
             ",b=" + std::to_string(id.b) + ")";
  }
  return name;
}

Graph family(const FamilyId& id) {
  id.validate();
  const auto n = static_cast<std::size_t>(id.n);
  const auto a = static_cast<std::size_t>(id.a);
  const auto b = static_cast<std::size_t>(id.b);
  switch (id.kind) {
    case FamilyKind::complete: return complete_graph(n);
    case FamilyKind::empty: return empty_graph(b);
    case FamilyKind::matching: return matching_graph(a);
    case FamilyKind::kk_odot:
      return graph_join(graph_union(complete_graph(n - 1), complete_graph(n - 2)),
                        complete_graph(1));
    case FamilyKind::kk_dot:
      return graph_join(graph_union(complete_graph(n), complete_graph(n - 1)),
                        complete_graph(1));
    case FamilyKind::match_join_complete:
      return graph_join(matching_graph(a), complete_graph(b));
    case FamilyKind::match_join_empty:
      return graph_join(matching_graph(a), empty_graph(b));
  }
  throw std::logic_error("unhandled family kind");
}

Graph kk_dot_direct(long n) {
  if (n < 3) throw std::invalid_argument("kk_dot_direct: requires n >= 3");
  const auto k = static_cast<std::size_t>(n);
  GraphBuilder b(2 * k);
  for (std::size_t copy = 0; copy < 2; ++copy)
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) b.edge(copy * k + i, copy * k + j);
  for (std::size_t j = 0; j < k; ++j) b.edge(0, k + j);
  return std::move(b).build();
}

}  // namespace lborder
