#pragma once

/**
 * Numeric checks of the trace identity for cycles:
 *
 *     vol(C_n) = ∫_0^1 K_n(t,t) dt = sum_{k ∈ Z} (2 / (π(4k+1)))^n,
 *
 * with K_1(s,t) = [s + t <= 1] and K_n the kernel of T^n, (Tg)(t) = ∫_0^{1-t} g.
 */

#include "polyvol/error.hpp"
#include "polyvol/rational.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace polyvol {

using Decimal = mp::number<mp::cpp_dec_float<50>, mp::et_off>;

inline Decimal pi_decimal() { return boost::math::constants::pi<Decimal>(); }

/// sum_{k=-K}^{K} 1/(4k+1)^n, with the ±k terms paired.
inline Decimal series_partial(int n, std::int64_t terms) {
  if (n < 2) throw ParameterError("series_partial needs n >= 2");
  if (terms < 1) throw ParameterError("series_partial needs K >= 1");
  // Sum from the smallest terms up.
  Decimal sum = 0;
  for (std::int64_t k = terms; k >= 1; --k) {
    const Decimal plus = mp::pow(Decimal(4 * k + 1), n);
    const Decimal minus = mp::pow(Decimal(1 - 4 * k), n);
    sum += 1 / plus + 1 / minus;
  }
  return sum + 1;
}

/// π^n vol(C_n) / 2^n.
inline Decimal series_target(int n, const Rational& cycle_volume) {
  const Decimal vol = Decimal(numerator_of(cycle_volume).str()) / Decimal(denominator_of(cycle_volume).str());
  return mp::pow(pi_decimal(), n) * vol / mp::pow(Decimal(2), n);
}

/// Error bound for the symmetric partial sum with K terms on each side.
inline double series_tail_bound(int n, std::int64_t terms) {
  return 2.0 / std::pow(4.0 * static_cast<double>(terms), n - 1);
}

namespace detail {

/// (Tg)(t_i) = ∫_0^{1-t_i} g on the uniform grid t_i = i/(N-1), by cumulative trapezoid sums.
inline std::vector<double> apply_operator(const std::vector<double>& g) {
  const std::size_t n = g.size();
  const double h = 1.0 / static_cast<double>(n - 1);
  std::vector<double> cumulative(n, 0.0);
  for (std::size_t i = 1; i < n; ++i) cumulative[i] = cumulative[i - 1] + 0.5 * h * (g[i - 1] + g[i]);
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = cumulative[n - 1 - i];
  return out;
}

inline double trapezoid(const std::vector<double>& f) {
  const double h = 1.0 / static_cast<double>(f.size() - 1);
  double s = 0.5 * (f.front() + f.back());
  for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
  return s * h;
}

}  // namespace detail

/// Trapezoid approximation of ∫_0^1 K_n(t,t) dt on `grid` points.
inline double trace_quadrature(int n, int grid) {
  if (n < 1) throw ParameterError("trace_quadrature needs n >= 1");
  if (grid < 100) throw ParameterError("trace_quadrature needs grid >= 100");
  const std::size_t pts = static_cast<std::size_t>(grid);
  std::vector<double> diagonal(pts);
  std::vector<double> column(pts);
  for (std::size_t j = 0; j < pts; ++j) {
    // Column s = t_j of K_1 is [i + j <= pts-1]; the grid point on the jump takes the mean value 1/2.
    for (std::size_t i = 0; i < pts; ++i) column[i] = i + j < pts - 1 ? 1.0 : (i + j == pts - 1 ? 0.5 : 0.0);
    for (int step = 1; step < n; ++step) column = detail::apply_operator(column);
    diagonal[j] = column[j];
  }
  return detail::trapezoid(diagonal);
}

/// max_i |(T g)(t_i) - λ g(t_i)| for g(t) = cos(π(4k+1)t/2), λ = 2/(π(4k+1)).
inline double eigen_residual(int k, int grid) {
  if (k < -5 || k > 5) throw ParameterError("eigen_residual needs |k| <= 5");
  if (grid < 1000) throw ParameterError("eigen_residual needs grid >= 1000");
  const double freq = std::numbers::pi * (4.0 * k + 1.0) / 2.0;
  const double lambda = 1.0 / freq;
  const std::size_t pts = static_cast<std::size_t>(grid);
  std::vector<double> g(pts);
  for (std::size_t i = 0; i < pts; ++i) g[i] = std::cos(freq * static_cast<double>(i) / static_cast<double>(pts - 1));
  const auto tg = detail::apply_operator(g);
  double worst = 0.0;
  for (std::size_t i = 0; i < pts; ++i) worst = std::max(worst, std::abs(tg[i] - lambda * g[i]));
  return worst;
}

}  // namespace polyvol
