#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace polyvol {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;

// Always stored reduced with a positive denominator, so == is structural.
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

/// num/den for any nonzero den (the two-argument Rational constructor requires den > 0).
inline Rational make_rational(const BigInt& num, const BigInt& den) {
  return den < 0 ? Rational(BigInt(-num), BigInt(-den)) : Rational(num, den);
}

inline BigInt numerator_of(const Rational& r) { return mp::numerator(r); }
inline BigInt denominator_of(const Rational& r) { return mp::denominator(r); }

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

/// 2^e for any signed exponent.
inline Rational pow2(int e) {
  BigInt p = BigInt(1) << (e < 0 ? -e : e);
  return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

inline Rational pow(const Rational& base, unsigned e) {
  Rational result = 1;
  Rational b = base;
  while (e != 0) {
    if (e & 1U) result *= b;
    b *= b;
    e >>= 1U;
  }
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Fixed-point rendering with `places` digits after the point, rounding half to even.
inline std::string to_fixed(const Rational& r, unsigned places = 6) {
  BigInt num = numerator_of(r);
  const BigInt den = denominator_of(r);
  const bool negative = num < 0;
  if (negative) num = -num;

  BigInt scale = 1;
  for (unsigned i = 0; i < places; ++i) scale *= 10;

  BigInt scaled = num * scale;
  BigInt q = scaled / den;
  const BigInt rem2 = (scaled % den) * 2;
  if (rem2 > den || (rem2 == den && (q & 1) != 0)) q += 1;

  std::string digits = q.str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  std::string out = digits.substr(0, digits.size() - places);
  if (places != 0) out += "." + digits.substr(digits.size() - places);
  if (negative && q != 0) out.insert(0, "-");
  return out;
}

/// "p/q" or "p" for integers.
inline std::string to_string(const Rational& r) {
  if (denominator_of(r) == 1) return numerator_of(r).str();
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

/// "p/q (≈ d.dddddd)"
inline std::string render(const Rational& r) { return to_string(r) + " (≈ " + to_fixed(r, 6) + ")"; }

}  // namespace polyvol
