#pragma once

// Closed-form volumes of named families and the Euler zigzag numbers behind them.

#include "polyvol/error.hpp"
#include "polyvol/family.hpp"
#include "polyvol/rational.hpp"

#include <vector>

namespace polyvol {

/// E_0..E_N from 2 E_{n+1} = sum_{i=0}^{n} C(n,i) E_i E_{n-i} (n >= 1), E_0 = E_1 = 1.
inline std::vector<BigInt> euler_numbers(int count) {
  if (count < 0) throw ParameterError("euler_numbers needs N >= 0");
  std::vector<BigInt> e{1};
  if (count >= 1) e.push_back(1);
  for (int n = 1; n + 1 <= count; ++n) {
    BigInt twice = 0;
    for (int i = 0; i <= n; ++i) twice += binomial(n, i) * e[i] * e[n - i];
    e.push_back(twice / 2);
  }
  return e;
}

/// B(r, s) = (r-1)!(s-1)!/(r+s-1)! for positive integers.
inline Rational beta_integer(int r, int s) {
  if (r < 1 || s < 1) throw ParameterError("beta_integer needs positive arguments");
  return Rational(factorial(r - 1) * factorial(s - 1), factorial(r + s - 1));
}

/// sum_{i=0}^{n} C(n,i) (-1)^i m/(m+i), term by term.
inline Rational altsum_identity(int m, int n) {
  if (m < 1 || n < 0) throw ParameterError("altsum_identity needs m >= 1, n >= 0");
  Rational sum = 0;
  for (int i = 0; i <= n; ++i) {
    const Rational term(binomial(n, i) * m, BigInt(m + i));
    if (i % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

/// vol(L_0)..vol(L_N) = E_n/n!, the Maclaurin coefficients of sec x + tan x.
inline std::vector<Rational> path_generating_coefficients(int count) {
  const auto e = euler_numbers(count);
  std::vector<Rational> out;
  out.reserve(e.size());
  for (std::size_t n = 0; n < e.size(); ++n) out.emplace_back(e[n], factorial(static_cast<unsigned>(n)));
  return out;
}

namespace closed {

inline Rational path(int n) { return Rational(euler_numbers(n).back(), factorial(n)); }

inline Rational cycle(int n) { return Rational(euler_numbers(n - 1).back(), 2 * factorial(n - 1)); }

inline Rational complete(int n) { return pow2(1 - n); }

inline Rational complete_bipartite(int m, int n) { return Rational(BigInt(1), binomial(m + n, m)); }

/// njoin(n, null:k)
inline Rational multi_null_join(int n, int k) {
  const unsigned kn = static_cast<unsigned>(k * n);
  BigInt partial = 0;
  for (int i = 0; i < k; ++i) partial += binomial(kn, i);
  const Rational scale = pow2(-static_cast<int>(kn));
  return scale + scale * n * Rational(partial, binomial(kn, k));
}

inline Rational bn(int n) { return (1 + Rational(1, n)) / Rational(binomial(2 * n, n)); }

}  // namespace closed

/// Closed form for path, cycle, complete, complete_bipartite, bn and njoin(n, null:k).
inline Rational family_volume(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  (void)build_family(spec);  // parameter validation
  switch (spec.kind) {
    case Kind::path:
      return closed::path(spec.param(0));
    case Kind::cycle:
      return closed::cycle(spec.param(0));
    case Kind::complete:
      return closed::complete(spec.param(0));
    case Kind::complete_bipartite:
      return closed::complete_bipartite(spec.param(0), spec.param(1));
    case Kind::bn:
      return closed::bn(spec.param(0));
    case Kind::njoin: {
      const FamilySpec& child = spec.children.at(0);
      if (child.kind == Kind::null && child.param(0) >= 1) return closed::multi_null_join(spec.param(0), child.param(0));
      break;
    }
    default:
      break;
  }
  throw MethodNotApplicable("no closed form for " + spec.to_string());
}

}  // namespace polyvol
