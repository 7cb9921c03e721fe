#pragma once

// Seeded Monte Carlo estimate of vol(P(G)).

#include "polyvol/graph.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace polyvol {

struct McEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
};

/// Uniform points of [0,1]^n from std::mt19937_64(seed); coordinate = (draw >> 11) * 2^-53.
/// Identical (G, samples, seed) gives identical output on every conforming standard library.
inline McEstimate mc_volume(const Graph& g, std::uint64_t samples, std::uint64_t seed) {
  McEstimate out;
  out.samples = samples;
  if (samples == 0) return out;
  const auto edges = g.edges();
  const int n = g.size();
  std::mt19937_64 rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n));
  constexpr double kScale = 1.0 / 9007199254740992.0;  // 2^-53
  for (std::uint64_t i = 0; i < samples; ++i) {
    for (auto& xi : x) xi = static_cast<double>(rng() >> 11) * kScale;
    bool inside = true;
    for (const auto& e : edges) {
      if (x[e.u] + x[e.v] > 1.0) {
        inside = false;
        break;
      }
    }
    out.hits += inside ? 1 : 0;
  }
  const double p = static_cast<double>(out.hits) / static_cast<double>(samples);
  out.estimate = p;
  out.standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  return out;
}

}  // namespace polyvol
