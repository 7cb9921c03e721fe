#pragma once

/**
 * Exact vol(P(G)) by the recursive volume formula
 *
 *     vol(G) = (1 / 2n) * sum_i vol(G - i)      (G without isolated vertices)
 *
 * evaluated over subsets of the original vertex set. Each state is the mask of
 * surviving vertices; isolated vertices are stripped (a free coordinate
 * integrates to 1) and disconnected states factor into their components.
 */

#include "polyvol/error.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/rational.hpp"

#include <string>
#include <unordered_map>

namespace polyvol {

inline constexpr int kRvfMaxVertices = 26;

class RvfSolver {
 public:
  explicit RvfSolver(const Graph& g) : g_(g) {}

  Rational volume() { return volume_of(g_.vertices()); }

  Rational volume_of(VertexSet alive) {
    alive = non_isolated(g_, alive);
    if (alive == 0) return 1;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;

    Rational result;
    const auto comps = component_sets(g_, alive);
    if (comps.size() > 1) {
      result = 1;
      for (VertexSet c : comps) result *= volume_of(c);
    } else {
      Rational sum = 0;
      for (VertexSet s = alive; s != 0; s &= s - 1) sum += volume_of(alive & ~bit(lowest(s)));
      result = sum / (2 * popcount(alive));
    }
    memo_.emplace(alive, result);
    return result;
  }

  std::size_t states() const noexcept { return memo_.size(); }

 private:
  const Graph& g_;
  std::unordered_map<VertexSet, Rational> memo_;
};

/// Refuses graphs with more than `max_vertices` non-isolated vertices (capped at kRvfMaxVertices).
inline Rational rvf_volume(const Graph& g, int max_vertices = kRvfMaxVertices) {
  const int limit = max_vertices < kRvfMaxVertices ? max_vertices : kRvfMaxVertices;
  const int active = popcount(non_isolated(g, g.vertices()));
  if (active > limit)
    throw SizeError("rvf: " + std::to_string(active) + " non-isolated vertices exceeds the limit of " +
                    std::to_string(limit));
  RvfSolver solver(g);
  return solver.volume();
}

}  // namespace polyvol
