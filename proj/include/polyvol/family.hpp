#pragma once

// Named graph families and join expressions.

#include "polyvol/error.hpp"
#include "polyvol/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace polyvol {

struct FamilySpec {
  enum class Kind { null, path, cycle, complete, complete_bipartite, bn, join, njoin, explicit_edges };

  Kind kind = Kind::null;
  std::vector<int> params;           // null/path/cycle/complete/bn: {n}; complete_bipartite: {m, n}; njoin: {k}; edges: {n}
  std::vector<FamilySpec> children;  // join: two; njoin: one
  std::vector<Edge> edges;           // explicit_edges only

  static FamilySpec null(int n) { return {Kind::null, {n}, {}, {}}; }
  static FamilySpec path(int n) { return {Kind::path, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {Kind::cycle, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {Kind::complete, {n}, {}, {}}; }
  static FamilySpec complete_bipartite(int m, int n) { return {Kind::complete_bipartite, {m, n}, {}, {}}; }
  static FamilySpec bn(int n) { return {Kind::bn, {n}, {}, {}}; }
  static FamilySpec join(FamilySpec a, FamilySpec b) { return {Kind::join, {}, {std::move(a), std::move(b)}, {}}; }
  static FamilySpec njoin(int k, FamilySpec s) { return {Kind::njoin, {k}, {std::move(s)}, {}}; }
  static FamilySpec explicit_edges(int n, std::vector<Edge> e) { return {Kind::explicit_edges, {n}, {}, std::move(e)}; }

  int param(std::size_t i) const { return params.at(i); }

  std::string to_string() const {
    switch (kind) {
      case Kind::null:
        return "null:" + std::to_string(param(0));
      case Kind::path:
        return "path:" + std::to_string(param(0));
      case Kind::cycle:
        return "cycle:" + std::to_string(param(0));
      case Kind::complete:
        return "complete:" + std::to_string(param(0));
      case Kind::complete_bipartite:
        return "kbip:" + std::to_string(param(0)) + "," + std::to_string(param(1));
      case Kind::bn:
        return "bn:" + std::to_string(param(0));
      case Kind::join:
        return "join(" + children.at(0).to_string() + "," + children.at(1).to_string() + ")";
      case Kind::njoin:
        return "njoin(" + std::to_string(param(0)) + "," + children.at(0).to_string() + ")";
      case Kind::explicit_edges: {
        std::string s = "edges:" + std::to_string(param(0)) + ":";
        for (std::size_t i = 0; i < edges.size(); ++i)
          s += (i ? "," : "") + std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v);
        return s;
      }
    }
    return {};
  }
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ParameterError(what);
}

}  // namespace detail

inline Graph build_family(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::null: {
      detail::require(spec.param(0) >= 0, "null graph needs n >= 0");
      return Graph(spec.param(0));
    }
    case Kind::path: {
      const int n = spec.param(0);
      detail::require(n >= 0, "path needs n >= 0");
      Graph g(n);
      for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
      return g;
    }
    case Kind::cycle: {
      const int n = spec.param(0);
      detail::require(n >= 3, "cycle needs n >= 3");
      Graph g(n);
      for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
      return g;
    }
    case Kind::complete: {
      const int n = spec.param(0);
      detail::require(n >= 1, "complete graph needs n >= 1");
      Graph g(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
      return g;
    }
    case Kind::complete_bipartite: {
      const int m = spec.param(0);
      const int n = spec.param(1);
      detail::require(m >= 1 && n >= 1, "complete bipartite graph needs m, n >= 1");
      return join_graphs(Graph(m), Graph(n));
    }
    case Kind::bn: {
      // K_{n,n} minus the matching {i, n+i}.
      const int n = spec.param(0);
      detail::require(n >= 2, "bn needs n >= 2");
      Graph g(2 * n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) g.add_edge(i, n + j);
      return g;
    }
    case Kind::join:
      detail::require(spec.children.size() == 2, "join needs two operands");
      return join_graphs(build_family(spec.children[0]), build_family(spec.children[1]));
    case Kind::njoin: {
      const int k = spec.param(0);
      detail::require(k >= 1, "njoin multiplier must be >= 1");
      detail::require(spec.children.size() == 1, "njoin needs one operand");
      const Graph base = build_family(spec.children[0]);
      Graph g = base;
      for (int i = 1; i < k; ++i) g = join_graphs(g, base);
      return g;
    }
    case Kind::explicit_edges:
      return Graph(spec.param(0), spec.edges);
  }
  throw ParameterError("unknown family kind");
}

}  // namespace polyvol
