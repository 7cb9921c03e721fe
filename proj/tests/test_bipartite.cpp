#include "polyvol/bipartite.hpp"
#include "polyvol/closed_forms.hpp"
#include "polyvol/dsl.hpp"
#include "polyvol/rvf.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace polyvol;

namespace {

Graph graph_of(const char* dsl) { return build_family(parse_family(dsl)); }

std::vector<int> identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// path:3 with the two end vertices on V1
BipartiteGraph path3_ends() { return from_graph(graph_of("path:3"), bit(0) | bit(2)); }

}  // namespace

TEST(FromGraph, Examples) {
  const BipartiteGraph p3 = path3_ends();
  EXPECT_EQ(p3.n(), 2);
  EXPECT_EQ(p3.neighborhoods(), (std::vector<VertexSet>{0b11}));

  const BipartiteGraph k23 = from_graph(graph_of("kbip:2,3"));
  EXPECT_EQ(k23.n(), 2);
  EXPECT_EQ(k23.neighborhoods(), (std::vector<VertexSet>{0b11, 0b11, 0b11}));

  EXPECT_THROW(from_graph(graph_of("cycle:5")), MethodNotApplicable);
}

TEST(FromGraph, PicksSmallerSide) {
  const BipartiteGraph p3 = from_graph(graph_of("path:3"));
  EXPECT_EQ(p3.n(), 1);
  EXPECT_EQ(p3.m(), 2);
  const BipartiteGraph k32 = from_graph(graph_of("kbip:3,2"));
  EXPECT_EQ(k32.n(), 2);
  EXPECT_EQ(k32.m(), 3);
  // tie goes to the side holding vertex 0
  const BipartiteGraph p4 = from_graph(graph_of("path:4"));
  EXPECT_EQ(p4.n(), 2);
  EXPECT_EQ(p4.neighborhoods(), (std::vector<VertexSet>{0b11, 0b10}));
}

TEST(FromGraph, StripsIsolatedVertices) {
  const BipartiteGraph b = from_graph(graph_of("edges:6:1-3,3-5"));
  EXPECT_EQ(b.n() + b.m(), 3);
  EXPECT_EQ(perm_volume(b), Rational(1, 3));
  EXPECT_EQ(BipartiteGraph(2, {0b01, 0, 0b11}).m(), 2);
}

TEST(FromGraph, RejectsAnInvalidSide) {
  EXPECT_THROW(from_graph(graph_of("path:3"), bit(0) | bit(1)), MethodNotApplicable);
}

TEST(AlphaProfile, Examples) {
  const BipartiteGraph k23 = from_graph(graph_of("kbip:2,3"));
  EXPECT_EQ(alpha_profile(k23, {0, 1}), (std::vector<int>{3, 0}));
  EXPECT_EQ(alpha_profile(k23, {1, 0}), (std::vector<int>{3, 0}));
  EXPECT_EQ(alpha_profile(path3_ends(), {0, 1}), (std::vector<int>{1, 0}));
  EXPECT_EQ(alpha_profile(path3_ends(), {1, 0}), (std::vector<int>{1, 0}));
  EXPECT_EQ(alpha_profile(from_graph(graph_of("bn:3")), identity(3)), (std::vector<int>{2, 1, 0}));
  EXPECT_THROW(alpha_profile(k23, {0, 0}), ParameterError);
  EXPECT_THROW(alpha_profile(k23, {0}), ParameterError);
}

TEST(PermVolume, Examples) {
  // two permutations, each (1/2)(1/3)
  EXPECT_EQ(perm_volume(path3_ends()), Rational(1, 3));
  EXPECT_EQ(perm_volume(from_graph(graph_of("kbip:2,3"))), Rational(1, 10));
  EXPECT_EQ(perm_volume(from_graph(graph_of("bn:3"))), Rational(1, 15));
}

TEST(PermVolume, SizeGuard) {
  EXPECT_THROW(perm_volume(from_graph(graph_of("kbip:11,11"))), SizeError);
  EXPECT_NO_THROW(perm_volume(from_graph(graph_of("kbip:10,11"))));
}

TEST(IsSideSymmetric, Examples) {
  EXPECT_TRUE(is_side_symmetric(from_graph(graph_of("kbip:3,4"))));
  EXPECT_TRUE(is_side_symmetric(from_graph(graph_of("bn:3"))));
  EXPECT_FALSE(is_side_symmetric(from_graph(graph_of("path:4"))));
}

TEST(SymmetricVolume, Examples) {
  EXPECT_EQ(symmetric_volume(from_graph(graph_of("kbip:2,3"))), Rational(1, 10));
  EXPECT_EQ(symmetric_volume(from_graph(graph_of("bn:3"))), Rational(1, 15));
  // (1 + 1/4)/C(8,4)
  EXPECT_EQ(symmetric_volume(from_graph(graph_of("bn:4"))), Rational(1, 56));
  EXPECT_THROW(symmetric_volume(from_graph(graph_of("path:4"))), MethodNotApplicable);
}

TEST(BipartiteProperty, PermVolumeMatchesRvf) {
  for (const auto& [name, g] : corpus::bipartite_corpus()) EXPECT_EQ(perm_volume(from_graph(g)), rvf_volume(g)) << name;
}

TEST(BipartiteProperty, EitherSideGivesTheSameVolume) {
  for (const auto& [name, g] : corpus::bipartite_corpus()) {
    const auto parts = bipartition(strip_isolated(g).first);
    ASSERT_TRUE(parts);
    const Graph core = strip_isolated(g).first;
    if (popcount(parts->side_a) > kPermMaxSide || popcount(parts->side_b) > kPermMaxSide) continue;
    EXPECT_EQ(perm_volume(from_graph(core, parts->side_a)), perm_volume(from_graph(core, parts->side_b))) << name;
  }
}

TEST(BipartiteProperty, GroupedSumEqualsExplicitPermutationSum) {
  for (const auto& [name, g] : corpus::bipartite_corpus()) {
    const BipartiteGraph b = from_graph(g);
    if (b.n() > 7) continue;
    EXPECT_EQ(perm_volume(b), perm_volume_enumerated(b)) << name;
  }
}

TEST(BipartiteProperty, AlphasSumToV2Size) {
  std::mt19937_64 rng(41);
  for (const auto& [name, g] : corpus::bipartite_corpus()) {
    const BipartiteGraph b = from_graph(g);
    std::vector<int> sigma = identity(b.n());
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      const auto a = alpha_profile(b, sigma);
      EXPECT_EQ(std::accumulate(a.begin(), a.end(), 0), b.m()) << name;
    }
  }
}

TEST(BipartiteProperty, SymmetricGraphsHaveOneAlphaProfile) {
  for (const char* s : {"kbip:3,4", "kbip:5,2", "bn:2", "bn:3", "bn:4", "bn:5", "cycle:4", "cycle:6"}) {
    const BipartiteGraph b = from_graph(graph_of(s));
    ASSERT_TRUE(is_side_symmetric(b)) << s;
    std::vector<int> sigma = identity(b.n());
    const auto first = alpha_profile(b, sigma);
    do {
      EXPECT_EQ(alpha_profile(b, sigma), first) << s;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    EXPECT_EQ(symmetric_volume(b), perm_volume(b)) << s;
  }
}

TEST(BipartiteProperty, SymmetricCorpusGraphsHaveOneAlphaProfile) {
  for (const auto& [name, g] : corpus::bipartite_corpus()) {
    const BipartiteGraph b = from_graph(g);
    if (b.n() > 5 || !is_side_symmetric(b)) continue;
    std::vector<int> sigma = identity(b.n());
    const auto first = alpha_profile(b, sigma);
    while (std::next_permutation(sigma.begin(), sigma.end())) EXPECT_EQ(alpha_profile(b, sigma), first) << name;
  }
}

TEST(BipartiteProperty, BnClosedForm) {
  for (int n = 2; n <= 6; ++n) {
    const Rational expected = (1 + Rational(1, n)) / Rational(binomial(2 * static_cast<unsigned>(n), static_cast<unsigned>(n)));
    EXPECT_EQ(perm_volume(from_graph(build_family(FamilySpec::bn(n)))), expected) << n;
  }
}
