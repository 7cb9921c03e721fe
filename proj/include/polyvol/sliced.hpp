#pragma once

/**
 * Sliced volumes vol(G, c) = vol(P(G) ∩ [0,c]^n) for join expressions over
 * null graphs.
 *
 * For c <= 1/2 no edge constraint is active inside [0,c]^n, so vol(G, c) = c^n.
 * On [1/2, 1] the function is a single polynomial, stored as `high`. Joins
 * are computed from
 *
 *     vol(A+B, c) = ∫_0^c f_A'(s) f_B(min(1-s, c)) ds,
 *
 * split at s = 1-c and s = 1/2 so every piece integrates a polynomial.
 */

#include "polyvol/closed_forms.hpp"
#include "polyvol/error.hpp"
#include "polyvol/family.hpp"
#include "polyvol/polynomial.hpp"
#include "polyvol/rational.hpp"

namespace polyvol {

struct SlicedVolume {
  int n = 0;
  Polynomial high;

  friend bool operator==(const SlicedVolume&, const SlicedVolume&) = default;
};

inline const Rational& one_half() {
  static const Rational h(1, 2);
  return h;
}

inline SlicedVolume sliced_null(int k) {
  if (k < 1) throw ParameterError("sliced_null needs k >= 1");
  return {k, Polynomial::monomial(1, static_cast<std::size_t>(k))};
}

inline SlicedVolume sliced_join(const SlicedVolume& a, const SlicedVolume& b) {
  const Rational& half = one_half();
  const Polynomial one_minus_x({1, -1});

  // s in [0, 1-c]:   f_B(c) * (1-c)^{|A|}
  Polynomial high = b.high * Polynomial::affine_power(-1, 1, static_cast<unsigned>(a.n));

  // s in [1-c, 1/2]: ∫ |A| s^{|A|-1} f_B(1-s) ds
  const Polynomial mid =
      (Polynomial::monomial(a.n, static_cast<std::size_t>(a.n - 1)) * b.high.affine_compose(-1, 1)).antiderivative();
  high += Polynomial::constant(mid(half)) - mid.affine_compose(-1, 1);

  // s in [1/2, c]:   ∫ f_A'(s) (1-s)^{|B|} ds
  const Polynomial top =
      (a.high.derivative() * Polynomial::affine_power(-1, 1, static_cast<unsigned>(b.n))).antiderivative();
  high += top - Polynomial::constant(top(half));

  return {a.n + b.n, high};
}

/// m-fold self join: high(c) = 2^{-m|A|} + ∫_{1/2}^{c} m (1-u)^{|A|(m-1)} A.high'(u) du.
inline SlicedVolume sliced_multiple(const SlicedVolume& a, int m) {
  if (m < 1) throw ParameterError("sliced_multiple needs m >= 1");
  if (m == 1) return a;
  const Polynomial integrand =
      Rational(m) * Polynomial::affine_power(-1, 1, static_cast<unsigned>(a.n * (m - 1))) * a.high.derivative();
  const Polynomial anti = integrand.antiderivative();
  Polynomial high = anti - Polynomial::constant(anti(one_half()));
  high += Polynomial::constant(pow2(-m * a.n));
  return {m * a.n, high};
}

/// c^n (1-c)^m + m sum_{i=0}^{n} C(n,i) (-1)^i (c^{m+i} - (1-c)^{m+i}) / (m+i), built directly.
inline SlicedVolume sliced_complete_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw ParameterError("sliced_complete_bipartite needs m, n >= 1");
  Polynomial high = Polynomial::monomial(1, static_cast<std::size_t>(n)) *
                    Polynomial::affine_power(-1, 1, static_cast<unsigned>(m));
  for (int i = 0; i <= n; ++i) {
    const unsigned e = static_cast<unsigned>(m + i);
    Rational coeff = Rational(binomial(n, i) * m, BigInt(m + i));
    if (i % 2 != 0) coeff = -coeff;
    high += coeff * (Polynomial::monomial(1, e) - Polynomial::affine_power(-1, 1, e));
  }
  return {m + n, high};
}

inline Rational sliced_eval(const SlicedVolume& s, const Rational& c) {
  if (c < 0 || c > 1) throw ParameterError("sliced_eval needs 0 <= c <= 1");
  if (c <= one_half()) return pow(c, static_cast<unsigned>(s.n));
  return s.high(c);
}

/// Sliced volume of a join expression (null, complete, kbip, join, njoin).
inline SlicedVolume sliced_from_spec(const FamilySpec& spec) {
  using Kind = FamilySpec::Kind;
  switch (spec.kind) {
    case Kind::null:
      if (spec.param(0) >= 1) return sliced_null(spec.param(0));
      break;
    case Kind::complete:
      (void)build_family(spec);
      return sliced_multiple(sliced_null(1), spec.param(0));
    case Kind::complete_bipartite:
      (void)build_family(spec);
      return sliced_complete_bipartite(spec.param(0), spec.param(1));
    case Kind::join:
      return sliced_join(sliced_from_spec(spec.children.at(0)), sliced_from_spec(spec.children.at(1)));
    case Kind::njoin:
      (void)build_family(spec);
      return sliced_multiple(sliced_from_spec(spec.children.at(0)), spec.param(0));
    default:
      break;
  }
  throw MethodNotApplicable("sliced volumes cover join expressions over null graphs only, not " + spec.to_string());
}

}  // namespace polyvol
