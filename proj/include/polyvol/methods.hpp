#pragma once

// Uniform entry point over the exact volume methods.

#include "polyvol/bipartite.hpp"
#include "polyvol/closed_forms.hpp"
#include "polyvol/ehrhart.hpp"
#include "polyvol/error.hpp"
#include "polyvol/family.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/rvf.hpp"
#include "polyvol/sliced.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyvol {

enum class Method { automatic, rvf, closed, join, perm, symmetric, ehrhart, mc };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::automatic:
      return "auto";
    case Method::rvf:
      return "rvf";
    case Method::closed:
      return "closed";
    case Method::join:
      return "join";
    case Method::perm:
      return "perm";
    case Method::symmetric:
      return "symmetric";
    case Method::ehrhart:
      return "ehrhart";
    case Method::mc:
      return "mc";
  }
  return "?";
}

inline std::optional<Method> parse_method(std::string_view s) {
  for (Method m : {Method::automatic, Method::rvf, Method::closed, Method::join, Method::perm, Method::symmetric,
                   Method::ehrhart, Method::mc})
    if (method_name(m) == s) return m;
  return std::nullopt;
}

/// Exact methods in the order crosscheck reports them.
inline const std::vector<Method>& exact_methods() {
  static const std::vector<Method> all{Method::rvf,     Method::closed,  Method::join,
                                       Method::perm,    Method::symmetric, Method::ehrhart};
  return all;
}

/// A graph together with the family expression it came from, when known.
struct GraphInput {
  Graph graph;
  std::optional<FamilySpec> spec;
  std::string label;

  static GraphInput from_spec(FamilySpec s) {
    GraphInput in{build_family(s), s, s.to_string()};
    return in;
  }
  static GraphInput from_graph(Graph g, std::string label) { return {std::move(g), std::nullopt, std::move(label)}; }
};

struct MethodLimits {
  int rvf_max_vertices = kRvfMaxVertices;
};

/// Method that `automatic` resolves to: closed form for a recognized family, else perm for a small bipartite graph, else rvf.
inline Method resolve_auto(const GraphInput& in) {
  if (in.spec) {
    try {
      (void)family_volume(*in.spec);
      return Method::closed;
    } catch (const MethodNotApplicable&) {
    }
  }
  if (is_bipartite(in.graph) && from_graph(in.graph).n() <= kPermMaxSide) return Method::perm;
  return Method::rvf;
}

inline Rational exact_volume(const GraphInput& in, Method method, const MethodLimits& limits = {}) {
  switch (method) {
    case Method::automatic:
      return exact_volume(in, resolve_auto(in), limits);
    case Method::rvf:
      return rvf_volume(in.graph, limits.rvf_max_vertices);
    case Method::closed:
      if (!in.spec) throw MethodNotApplicable("closed forms need a family expression, not an explicit graph");
      return family_volume(*in.spec);
    case Method::join:
      if (!in.spec) throw MethodNotApplicable("join method needs a join expression");
      return sliced_eval(sliced_from_spec(*in.spec), 1);
    case Method::perm:
      return perm_volume(from_graph(in.graph));
    case Method::symmetric:
      return symmetric_volume(from_graph(in.graph));
    case Method::ehrhart:
      return ehrhart_volume(in.graph);
    case Method::mc:
      break;
  }
  throw MethodNotApplicable("method '" + std::string(method_name(method)) + "' is not exact");
}

}  // namespace polyvol
