#pragma once

/**
 * Finite simple graphs on vertices 0..n-1 with bitmask adjacency rows.
 *
 * A VertexSet is a 64-bit mask; graphs are capped at kMaxVertices = 63 so
 * every subset of the vertex set fits one word.
 */

#include "polyvol/error.hpp"

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polyvol {

using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 63;

inline constexpr VertexSet bit(int v) { return VertexSet{1} << v; }
inline constexpr VertexSet full_set(int n) { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }
inline int popcount(VertexSet s) { return std::popcount(s); }
inline int lowest(VertexSet s) { return std::countr_zero(s); }

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;

  explicit Graph(int n) : adj_(check_size(n), 0) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (const auto& e : edges) add_edge(e.u, e.v);
  }

  int size() const noexcept { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const noexcept { return full_set(size()); }
  VertexSet neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
  int degree(int v) const { return popcount(neighbors(v)); }
  bool has_edge(int u, int v) const { return (neighbors(u) & bit(v)) != 0; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (auto row : adj_) twice += static_cast<std::size_t>(popcount(row));
    return twice / 2;
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < size(); ++u)
      for (VertexSet rest = adj_[u] & ~full_set(u + 1); rest != 0; rest &= rest - 1) out.push_back({u, lowest(rest)});
    return out;
  }

  void add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= size() || v >= size())
      throw ParameterError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw ParameterError("self-loop at vertex " + std::to_string(u));
    adj_[u] |= bit(v);
    adj_[v] |= bit(u);
  }

  /// Induced subgraph on `keep`, relabeled to 0..|keep|-1 preserving order.
  Graph induced(VertexSet keep) const {
    std::vector<int> index(adj_.size(), -1);
    int k = 0;
    for (VertexSet s = keep & vertices(); s != 0; s &= s - 1) index[lowest(s)] = k++;
    Graph h(k);
    for (VertexSet s = keep & vertices(); s != 0; s &= s - 1) {
      const int u = lowest(s);
      for (VertexSet t = adj_[u] & keep; t != 0; t &= t - 1) h.adj_[index[u]] |= bit(index[lowest(t)]);
    }
    return h;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static std::size_t check_size(int n) {
    if (n < 0 || n > kMaxVertices)
      throw ParameterError("vertex count must be in [0, " + std::to_string(kMaxVertices) + "], got " +
                           std::to_string(n));
    return static_cast<std::size_t>(n);
  }

  std::vector<VertexSet> adj_;
};

inline Graph delete_vertex(const Graph& g, int i) {
  if (i < 0 || i >= g.size()) throw ParameterError("vertex index out of range: " + std::to_string(i));
  return g.induced(g.vertices() & ~bit(i));
}

/// G + H: disjoint union plus every edge between the two vertex sets. H's vertices follow G's.
inline Graph join_graphs(const Graph& g, const Graph& h) {
  const int n = g.size();
  Graph out(n + h.size());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(n + e.u, n + e.v);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < h.size(); ++v) out.add_edge(u, n + v);
  return out;
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.size();
  Graph out(n + h.size());
  for (const auto& e : g.edges()) out.add_edge(e.u, e.v);
  for (const auto& e : h.edges()) out.add_edge(n + e.u, n + e.v);
  return out;
}

/// Vertices of `within` that have at least one neighbor inside `within`.
inline VertexSet non_isolated(const Graph& g, VertexSet within) {
  VertexSet keep = 0;
  for (VertexSet s = within; s != 0; s &= s - 1) {
    const int v = lowest(s);
    if ((g.neighbors(v) & within) != 0) keep |= bit(v);
  }
  return keep;
}

/// Removes degree-0 vertices; returns the remaining graph and how many were removed.
inline std::pair<Graph, int> strip_isolated(const Graph& g) {
  const VertexSet keep = non_isolated(g, g.vertices());
  return {g.induced(keep), g.size() - popcount(keep)};
}

/// Maximal connected vertex subsets of `within`, ordered by lowest vertex.
inline std::vector<VertexSet> component_sets(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet remaining = within;
  while (remaining != 0) {
    VertexSet comp = bit(lowest(remaining));
    VertexSet frontier = comp;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    remaining &= ~comp;
  }
  return out;
}

inline std::vector<Graph> connected_components(const Graph& g) {
  std::vector<Graph> out;
  for (VertexSet c : component_sets(g, g.vertices())) out.push_back(g.induced(c));
  return out;
}

struct Bipartition {
  VertexSet side_a = 0;
  VertexSet side_b = 0;
};

/// BFS 2-coloring; each component's lowest vertex (and every isolated vertex) goes to side A.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition out;
  for (VertexSet comp : component_sets(g, g.vertices())) {
    VertexSet a = bit(lowest(comp));
    VertexSet b = 0;
    VertexSet frontier = a;
    bool on_a = true;
    while (frontier != 0) {
      VertexSet next = 0;
      for (VertexSet s = frontier; s != 0; s &= s - 1) next |= g.neighbors(lowest(s));
      VertexSet& same = on_a ? a : b;
      VertexSet& other = on_a ? b : a;
      if ((next & same) != 0) return std::nullopt;
      next &= ~other;
      other |= next;
      frontier = next;
      on_a = !on_a;
    }
    out.side_a |= a;
    out.side_b |= b;
  }
  return out;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

/// Relabels vertex v to perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  Graph out(g.size());
  for (const auto& e : g.edges()) out.add_edge(perm.at(e.u), perm.at(e.v));
  return out;
}

}  // namespace polyvol
