#pragma once

/**
 * Bipartite volumes by the order-cell permutation sum
 *
 *     vol(B) = sum_{σ ∈ S_n} prod_{i=1}^{n} 1 / (i + α_1 + ... + α_i),
 *
 * where α_i counts the V2-vertices whose earliest neighbor under σ sits at
 * position i. Vertices of V1 are 0..n-1 here; neighborhoods are masks over V1.
 */

#include "polyvol/error.hpp"
#include "polyvol/graph.hpp"
#include "polyvol/rational.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace polyvol {

inline constexpr int kPermMaxSide = 10;

class BipartiteGraph {
 public:
  /// Empty neighborhoods are dropped; each contributes a volume factor of 1.
  BipartiteGraph(int n, std::vector<VertexSet> neighborhoods) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw ParameterError("bipartite side size out of range");
    for (VertexSet nb : neighborhoods) {
      if ((nb & ~full_set(n)) != 0) throw ParameterError("neighborhood outside V1");
      if (nb != 0) hoods_.push_back(nb);
    }
  }

  int n() const noexcept { return n_; }
  int m() const noexcept { return static_cast<int>(hoods_.size()); }
  const std::vector<VertexSet>& neighborhoods() const noexcept { return hoods_; }

 private:
  int n_;
  std::vector<VertexSet> hoods_;
};

/// Uses `v1` (a side of a valid bipartition of G with isolated vertices stripped) as V1.
inline BipartiteGraph from_graph(const Graph& g, VertexSet v1) {
  const Graph core = strip_isolated(g).first;
  // Map side membership onto the stripped graph.
  const VertexSet kept = non_isolated(g, g.vertices());
  VertexSet side = 0;
  int k = 0;
  for (VertexSet s = kept; s != 0; s &= s - 1, ++k)
    if ((v1 & bit(lowest(s))) != 0) side |= bit(k);

  std::vector<int> index(static_cast<std::size_t>(core.size()), -1);
  int n = 0;
  for (VertexSet s = side; s != 0; s &= s - 1) index[lowest(s)] = n++;

  std::vector<VertexSet> hoods;
  for (VertexSet s = core.vertices() & ~side; s != 0; s &= s - 1) {
    const int w = lowest(s);
    VertexSet nb = 0;
    for (VertexSet t = core.neighbors(w); t != 0; t &= t - 1) {
      const int u = lowest(t);
      if ((side & bit(u)) == 0) throw MethodNotApplicable("given V1 is not a side of a bipartition");
      nb |= bit(index[u]);
    }
    hoods.push_back(nb);
  }
  for (VertexSet s = side; s != 0; s &= s - 1)
    if ((core.neighbors(lowest(s)) & side) != 0) throw MethodNotApplicable("given V1 is not a side of a bipartition");
  return BipartiteGraph(n, std::move(hoods));
}

/// V1 = the smaller side, ties broken toward the side holding the lowest-index vertex.
inline BipartiteGraph from_graph(const Graph& g) {
  const Graph core = strip_isolated(g).first;
  const auto parts = bipartition(core);
  if (!parts) throw MethodNotApplicable("graph is not bipartite");
  VertexSet a = parts->side_a;
  VertexSet b = parts->side_b;
  const bool a_first = b == 0 || (a != 0 && lowest(a) < lowest(b));
  if (popcount(b) < popcount(a) || (popcount(b) == popcount(a) && !a_first)) std::swap(a, b);

  // Lift the side back to the labels of g.
  VertexSet lifted = 0;
  int k = 0;
  for (VertexSet s = non_isolated(g, g.vertices()); s != 0; s &= s - 1, ++k)
    if ((a & bit(k)) != 0) lifted |= bit(lowest(s));
  return from_graph(g, lifted);
}

/// α_i for i = 1..n (returned 0-based); sigma[i] is the V1 vertex at position i+1.
inline std::vector<int> alpha_profile(const BipartiteGraph& b, const std::vector<int>& sigma) {
  const int n = b.n();
  if (static_cast<int>(sigma.size()) != n) throw ParameterError("sigma must be a permutation of V1");
  std::vector<int> position(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    const int v = sigma[i];
    if (v < 0 || v >= n || position[v] != -1) throw ParameterError("sigma must be a permutation of V1");
    position[v] = i;
  }
  std::vector<int> alphas(static_cast<std::size_t>(n), 0);
  for (VertexSet nb : b.neighborhoods()) {
    int first = n;
    for (VertexSet s = nb; s != 0; s &= s - 1) first = std::min(first, position[lowest(s)]);
    ++alphas[first];
  }
  return alphas;
}

namespace detail {

inline void require_perm_size(const BipartiteGraph& b) {
  if (b.n() > kPermMaxSide)
    throw SizeError("perm: side V1 has " + std::to_string(b.n()) + " vertices, limit is " + std::to_string(kPermMaxSide));
}

/// prod_i 1/(i + α_1 + ... + α_i)
inline Rational order_cell_term(const std::vector<int>& alphas) {
  BigInt den = 1;
  int prefix = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    prefix += alphas[i];
    den *= static_cast<int>(i + 1) + prefix;
  }
  return Rational(BigInt(1), den);
}

}  // namespace detail

/// Each of the n! terms evaluated separately.
inline Rational perm_volume_enumerated(const BipartiteGraph& b) {
  detail::require_perm_size(b);
  std::vector<int> sigma(static_cast<std::size_t>(b.n()));
  std::iota(sigma.begin(), sigma.end(), 0);
  Rational sum = 0;
  do {
    sum += detail::order_cell_term(alpha_profile(b, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return sum;
}

/// The permutation sum with permutations grouped by prefix set.
///
/// The i-th factor depends on σ only through S = {σ(1..i)}: i + Σ_{j≤i} α_j = |S| + #{N_j : N_j ∩ S ≠ ∅}.
/// So sum(S) = (1/(|S| + hit(S))) · Σ_{v∈S} sum(S - v), and vol(B) = sum(V1).
inline Rational perm_volume(const BipartiteGraph& b) {
  detail::require_perm_size(b);
  const int n = b.n();
  const std::size_t states = std::size_t{1} << n;
  std::vector<Rational> sum(states);
  sum[0] = 1;
  for (std::size_t s = 1; s < states; ++s) {
    const VertexSet set = s;
    int hit = 0;
    for (VertexSet nb : b.neighborhoods())
      if ((nb & set) != 0) ++hit;
    Rational acc = 0;
    for (VertexSet t = set; t != 0; t &= t - 1) acc += sum[set & ~bit(lowest(t))];
    sum[s] = acc / (popcount(set) + hit);
  }
  return sum[states - 1];
}

/// Every transposition of V1 maps the neighborhood multiset onto itself.
inline bool is_side_symmetric(const BipartiteGraph& b) {
  std::vector<VertexSet> base = b.neighborhoods();
  std::sort(base.begin(), base.end());
  for (int x = 0; x < b.n(); ++x) {
    for (int y = x + 1; y < b.n(); ++y) {
      std::vector<VertexSet> swapped;
      swapped.reserve(base.size());
      for (VertexSet nb : base) {
        const bool hx = (nb & bit(x)) != 0;
        const bool hy = (nb & bit(y)) != 0;
        if (hx != hy) nb ^= bit(x) | bit(y);
        swapped.push_back(nb);
      }
      std::sort(swapped.begin(), swapped.end());
      if (swapped != base) return false;
    }
  }
  return true;
}

/// n! · (single order-cell term at the identity permutation).
inline Rational symmetric_volume(const BipartiteGraph& b) {
  if (!is_side_symmetric(b)) throw MethodNotApplicable("bipartite graph is not side-symmetric");
  std::vector<int> identity(static_cast<std::size_t>(b.n()));
  std::iota(identity.begin(), identity.end(), 0);
  return Rational(factorial(static_cast<unsigned>(b.n()))) * detail::order_cell_term(alpha_profile(b, identity));
}

}  // namespace polyvol
