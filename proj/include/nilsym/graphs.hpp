#pragma once

// Lie algebras of directed graphs: one X per vertex, one Z per edge.

#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "nilsym/algebra.hpp"
#include "nilsym/error.hpp"

namespace nilsym {

class DirectedGraph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;  // 1-based (tail, head)

  DirectedGraph(std::size_t vertices, std::vector<Edge> edges) : vertices_(vertices), edges_(std::move(edges)) {
    if (vertices_ == 0) throw Error(Errc::BadIndex, "graph needs at least one vertex");
    if (edges_.empty()) throw Error(Errc::NoEdges, "graph needs at least one edge");
    std::set<Edge> seen;
    for (const auto& [i, l] : edges_) {
      if (i < 1 || l < 1 || i > vertices_ || l > vertices_)
        throw Error(Errc::BadIndex, "edge (" + std::to_string(i) + "," + std::to_string(l) + ") out of range");
      if (i == l) throw Error(Errc::SelfLoop, "self-loop at vertex " + std::to_string(i));
      if (!seen.insert({std::min(i, l), std::max(i, l)}).second)
        throw Error(Errc::DuplicateEdge,
                    "more than one edge between " + std::to_string(i) + " and " + std::to_string(l));
    }
  }

  std::size_t vertices() const { return vertices_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

 private:
  std::size_t vertices_;
  std::vector<Edge> edges_;
};

/// Basis X_1..X_m, Z_1..Z_q with [X_i, X_l] = Z_k for edge k = (i -> l).
inline LieAlgebra graph_algebra(const DirectedGraph& g, std::string name = {}) {
  const std::size_t m = g.vertices();
  std::vector<BracketEntry> brackets;
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    auto [i, l] = g.edges()[k];
    Rational c = i < l ? Rational(1) : Rational(-1);
    brackets.push_back({std::min(i, l), std::max(i, l), {{m + k + 1, c}}});
  }
  return LieAlgebra(m + g.edge_count(), std::move(brackets), std::move(name));
}

/// Edges i -> l for i < l in lexicographic order.
inline DirectedGraph complete_graph(std::size_t n) {
  if (n < 2) throw Error(Errc::BadIndex, "complete graph needs n >= 2");
  std::vector<DirectedGraph::Edge> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t l = i + 1; l <= n; ++l) edges.emplace_back(i, l);
  return DirectedGraph(n, std::move(edges));
}

inline LieAlgebra free_2step(std::size_t n) { return graph_algebra(complete_graph(n), "f(" + std::to_string(n) + ")"); }

/// Connected components of the underlying undirected graph, as vertex labels
/// (0-based component index per vertex).
inline std::vector<std::size_t> components(const DirectedGraph& g) {
  std::vector<std::size_t> parent(g.vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [i, l] : g.edges()) parent[find(i - 1)] = find(l - 1);
  std::vector<std::size_t> label(g.vertices());
  for (std::size_t v = 0; v < g.vertices(); ++v) label[v] = find(v);
  return label;
}

/// Symplectic iff |V|+|E| is even and no component has more edges than vertices.
inline bool pt_criterion(const DirectedGraph& g) {
  if ((g.vertices() + g.edge_count()) % 2 == 1) return false;
  auto label = components(g);
  std::vector<long> balance(g.vertices(), 0);  // vertices minus edges per root
  for (std::size_t v = 0; v < g.vertices(); ++v) ++balance[label[v]];
  for (const auto& e : g.edges()) --balance[label[e.first - 1]];
  for (long b : balance)
    if (b < 0) return false;
  return true;
}

}  // namespace nilsym
