#include "polyvol/dsl.hpp"
#include "polyvol/montecarlo.hpp"
#include "polyvol/rvf.hpp"

#include "corpus.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace polyvol;

namespace {

Graph graph_of(const char* dsl) { return build_family(parse_family(dsl)); }

bool within_four_sigma(const McEstimate& e, const Rational& exact) {
  return std::abs(e.estimate - to_double(exact)) <= 4 * e.standard_error;
}

}  // namespace

TEST(McVolume, EdgelessGraphIsCertain) {
  const McEstimate e = mc_volume(graph_of("null:3"), 1000, 1);
  EXPECT_EQ(e.estimate, 1.0);
  EXPECT_EQ(e.standard_error, 0.0);
  EXPECT_EQ(e.hits, 1000u);
}

TEST(McVolume, ZeroSamples) {
  const McEstimate e = mc_volume(graph_of("path:3"), 0, 1);
  EXPECT_EQ(e.samples, 0u);
  EXPECT_EQ(e.hits, 0u);
}

TEST(McVolume, Examples) {
  const McEstimate k2 = mc_volume(graph_of("complete:2"), 1000000, 42);
  EXPECT_TRUE(within_four_sigma(k2, Rational(1, 2))) << k2.estimate << " ± " << k2.standard_error;
  EXPECT_NEAR(k2.standard_error, 5e-4, 1e-5);
  const McEstimate c5 = mc_volume(graph_of("cycle:5"), 1000000, 42);
  EXPECT_TRUE(within_four_sigma(c5, Rational(5, 48))) << c5.estimate << " ± " << c5.standard_error;
}

TEST(McVolume, DeterministicForAFixedSeed) {
  const Graph g = graph_of("kbip:2,3");
  const McEstimate a = mc_volume(g, 50000, 9);
  const McEstimate b = mc_volume(g, 50000, 9);
  EXPECT_EQ(a.hits, b.hits);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_NE(mc_volume(g, 50000, 10).hits, a.hits);
}

TEST(McProperty, AgreesWithExactVolumeOnRandomGraphs) {
  int passed = 0;
  const auto graphs = corpus::general_corpus(37, 20);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const McEstimate e = mc_volume(graphs[i].graph, 200000, 1000 + i);
    if (within_four_sigma(e, rvf_volume(graphs[i].graph))) ++passed;
  }
  EXPECT_GE(passed, 19);
}
