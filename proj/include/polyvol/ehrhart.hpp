#pragma once

/**
 * Lattice-point counts L(t) = |tP(G) ∩ Z^n| and Ehrhart interpolation.
 *
 * Bipartite G gives a 0/1-polytope, so L is a degree-n polynomial in t.
 * Otherwise P(G) has half-integral vertices and L restricted to even t is a
 * degree-n polynomial in s = t/2 (the Ehrhart polynomial of 2P(G)).
 */

#include "polyvol/error.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/polynomial.hpp"
#include "polyvol/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace polyvol {

inline constexpr int kEhrhartMaxVertices = 7;

namespace detail {

/// Greedy placement order: each next vertex has the most neighbors already placed.
inline std::vector<int> counting_order(const Graph& g) {
  std::vector<int> order;
  VertexSet placed = 0;
  for (int step = 0; step < g.size(); ++step) {
    int best = -1;
    int best_key = -1;
    for (VertexSet s = g.vertices() & ~placed; s != 0; s &= s - 1) {
      const int v = lowest(s);
      const int key = popcount(g.neighbors(v) & placed) * 64 + g.degree(v);
      if (key > best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(best);
    placed |= bit(best);
  }
  return order;
}

class LatticeCounter {
 public:
  LatticeCounter(const Graph& g, std::int64_t t) : g_(g), t_(t), order_(counting_order(g)), value_(g.size(), 0) {
    for (std::size_t i = 0; i < order_.size(); ++i) {
      VertexSet earlier = 0;
      for (std::size_t j = 0; j < i; ++j) earlier |= bit(order_[j]);
      earlier_.push_back(g.neighbors(order_[i]) & earlier);
    }
  }

  BigInt count() {
    if (order_.empty()) return 1;
    return BigInt(descend(0));
  }

 private:
  std::uint64_t descend(std::size_t depth) {
    const int v = order_[depth];
    std::int64_t cap = t_;
    for (VertexSet s = earlier_[depth]; s != 0; s &= s - 1) cap = std::min(cap, t_ - value_[lowest(s)]);
    if (depth + 1 == order_.size()) return static_cast<std::uint64_t>(cap + 1);
    std::uint64_t total = 0;
    for (std::int64_t x = 0; x <= cap; ++x) {
      value_[v] = x;
      total += descend(depth + 1);
    }
    return total;
  }

  const Graph& g_;
  std::int64_t t_;
  std::vector<int> order_;
  std::vector<VertexSet> earlier_;
  std::vector<std::int64_t> value_;
};

/// Newton divided differences through (x_i, y_i), expanded into monomial form.
inline Polynomial newton_interpolate(const std::vector<Rational>& xs, std::vector<Rational> ys) {
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) ys[i] = (ys[i] - ys[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial p;
  for (std::size_t k = n; k-- > 0;) p = p * Polynomial({-xs[k], 1}) + Polynomial::constant(ys[k]);
  return p;
}

}  // namespace detail

inline BigInt lattice_count(const Graph& g, std::int64_t t) {
  if (t < 0) throw ParameterError("lattice_count needs t >= 0");
  detail::LatticeCounter counter(g, t);
  return counter.count();
}

struct EhrhartFit {
  enum class Parity { integral, even_only };

  int n = 0;
  Parity parity = Parity::integral;
  Polynomial poly;  // in t (integral) or s = t/2 (even_only)
  std::vector<BigInt> samples;  // L at the interpolation nodes
};

inline EhrhartFit ehrhart_fit(const Graph& g) {
  const int n = g.size();
  if (n > kEhrhartMaxVertices)
    throw SizeError("ehrhart: " + std::to_string(n) + " vertices exceeds the limit of " +
                    std::to_string(kEhrhartMaxVertices));
  EhrhartFit fit;
  fit.n = n;
  fit.parity = is_bipartite(g) ? EhrhartFit::Parity::integral : EhrhartFit::Parity::even_only;
  const int step = fit.parity == EhrhartFit::Parity::integral ? 1 : 2;

  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int k = 0; k <= n; ++k) {
    fit.samples.push_back(lattice_count(g, static_cast<std::int64_t>(k) * step));
    xs.emplace_back(k);
    ys.emplace_back(fit.samples.back());
  }
  fit.poly = detail::newton_interpolate(xs, ys);
  return fit;
}

inline Rational ehrhart_volume(const EhrhartFit& fit) {
  const Rational lead = fit.poly[static_cast<std::size_t>(fit.n)];
  return fit.parity == EhrhartFit::Parity::integral ? lead : lead * pow2(-fit.n);
}

inline Rational ehrhart_volume(const Graph& g) { return ehrhart_volume(ehrhart_fit(g)); }

/// Numerator f(x) of sum_t L(t) x^t = f(x)/(1-x)^{n+1}.
struct HStar {
  std::vector<BigInt> coefficients;

  BigInt at_one() const {
    BigInt s = 0;
    for (const auto& c : coefficients) s += c;
    return s;
  }
};

inline HStar hstar(const Graph& g) {
  const int n = g.size();
  if (!is_bipartite(g)) throw MethodNotApplicable("h* is only computed for bipartite graphs");
  if (n > kEhrhartMaxVertices)
    throw SizeError("hstar: " + std::to_string(n) + " vertices exceeds the limit of " +
                    std::to_string(kEhrhartMaxVertices));
  std::vector<BigInt> values;
  for (int t = 0; t <= n; ++t) values.push_back(lattice_count(g, t));
  HStar h;
  for (int k = 0; k <= n; ++k) {
    BigInt f = 0;
    for (int j = 0; j <= k; ++j) {
      const BigInt term = binomial(static_cast<unsigned>(n + 1), static_cast<unsigned>(j)) * values[k - j];
      if (j % 2 == 0)
        f += term;
      else
        f -= term;
    }
    h.coefficients.push_back(f);
  }
  return h;
}

inline Rational hstar_volume(const HStar& h) {
  const unsigned d = static_cast<unsigned>(h.coefficients.size()) - 1;
  return Rational(h.at_one(), factorial(d));
}

}  // namespace polyvol
