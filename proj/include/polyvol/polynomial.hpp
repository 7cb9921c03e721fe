#pragma once

/**
 * Dense univariate polynomials over Q.
 *
 * coefficients()[i] is the coefficient of x^i. The zero polynomial has no
 * coefficients; every other polynomial has a nonzero leading coefficient.
 */

#include "polyvol/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace polyvol {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }

  /// c·x^k
  static Polynomial monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
  }

  /// (a·x + b)^k, expanded.
  static Polynomial affine_power(const Rational& a, const Rational& b, unsigned k) {
    std::vector<Rational> v(k + 1);
    for (unsigned i = 0; i <= k; ++i) v[i] = Rational(binomial(k, i)) * pow(a, i) * pow(b, k - i);
    return Polynomial(std::move(v));
  }

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }

  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Rational& c) {
    for (auto& x : coeffs_) x *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return {};
    std::vector<Rational> r(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j) r[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Polynomial(std::move(r));
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> r(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned>(i);
    return Polynomial(std::move(r));
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    if (is_zero()) return {};
    std::vector<Rational> r(coeffs_.size() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i + 1] = coeffs_[i] / static_cast<unsigned>(i + 1);
    return Polynomial(std::move(r));
  }

  /// q(x) = p(a·x + b).
  Polynomial affine_compose(const Rational& a, const Rational& b) const {
    Polynomial result;
    const Polynomial inner({b, a});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) result = result * inner + constant(*it);
    return result;
  }

  /// ∫_lo^hi p(x) dx
  Rational integrate(const Rational& lo, const Rational& hi) const {
    const Polynomial anti = antiderivative();
    return anti(hi) - anti(lo);
  }

  /// Lowest degree first, e.g. "-1/2 + 2*c - c^2".
  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const Rational& c = coeffs_[i];
      if (c == 0) continue;
      const bool neg = c < 0;
      const Rational mag = neg ? Rational(-c) : c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      if (i == 0) {
        out += polyvol::to_string(mag);
        continue;
      }
      if (mag != 1) out += polyvol::to_string(mag) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

inline Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op) {
  switch (op) {
    case PolyOp::add:
      return p + q;
    case PolyOp::sub:
      return p - q;
    case PolyOp::mul:
      return p * q;
  }
  return {};
}

inline Rational poly_eval(const Polynomial& p, const Rational& c) { return p(c); }

enum class CalculusOp { derivative, antiderivative };

inline Polynomial poly_calculus(const Polynomial& p, CalculusOp op) {
  return op == CalculusOp::derivative ? p.derivative() : p.antiderivative();
}

inline Polynomial poly_affine_compose(const Polynomial& p, const Rational& a, const Rational& b) {
  return p.affine_compose(a, b);
}

}  // namespace polyvol
