#include <gtest/gtest.h>

#include <cmath>

#include "forestcolor/oracles.hpp"

using namespace forestcolor;

namespace {

ColoredForest path3(Palette pal) {
  ColoredForest f(4, pal);
  f.insert_topology(0, 1);
  f.insert_topology(1, 2);
  f.insert_topology(2, 3);
  return f;
}

ColoredForest binary2(Palette pal) {
  ColoredForest f(7, pal);
  for (VertexId c : {1u, 2u}) f.insert_topology(0, c);
  for (VertexId c : {3u, 4u}) f.insert_topology(1, c);
  for (VertexId c : {5u, 6u}) f.insert_topology(2, c);
  return f;
}

}  // namespace

// Counted by hand: kappa (kappa-1)^2 on the path; on the tree kappa(kappa-1)
// for the root's edges times (kappa-1)(kappa-2) below each child.
TEST(Enumerate, SupportSizes) {
  EXPECT_EQ(enumerate_proper_colorings(path3(Palette(3, 0))).size(), 12u);
  EXPECT_EQ(enumerate_proper_colorings(path3(Palette(3, 1))).size(), 36u);
  EXPECT_EQ(enumerate_proper_colorings(binary2(Palette(3, 0))).size(), 24u);
  EXPECT_EQ(enumerate_proper_colorings(binary2(Palette(3, 1))).size(), 432u);
}

TEST(Enumerate, LexOrderAndProper) {
  auto all = enumerate_proper_colorings(path3(Palette(3, 0)));
  EXPECT_EQ(canonical_coloring(all.front()), "1,2,1");
  EXPECT_EQ(canonical_coloring(all.back()), "3,2,3");
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Enumerate, RefusesLargeForests) {
  ColoredForest f(14, Palette(2, 0));
  for (VertexId v = 0; v + 1 < 14; ++v) f.insert_topology(v, v + 1);
  EXPECT_EQ(f.edge_count(), 13u);
  try {
    enumerate_proper_colorings(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(MinRecourse, ForcedSwapOnPath) {
  // 0-1 (1), 2-3 (2), kappa = 2: no color is free at both 1 and 2.
  ColoredForest f(4, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(2, 3);
  f.set_color(0, 1, 1);
  f.set_color(2, 3, 2);
  f.insert_topology(1, 2);
  EXPECT_EQ(min_recourse_bruteforce(f, EdgeKey(1, 2)), 1u);
}

TEST(MinRecourse, FreeColorCostsNothing) {
  ColoredForest f(3, Palette(3, 0));
  f.insert_topology(0, 1);
  f.set_color(0, 1, 1);
  f.insert_topology(1, 2);
  EXPECT_EQ(min_recourse_bruteforce(f, EdgeKey(1, 2)), 0u);
}

TEST(ColoringProbability, TopDownPath) {
  ColoredForest f = path3(Palette(3, 0));
  f.reroot(0);
  f.set_color(0, 1, 1);
  f.set_color(1, 2, 2);
  f.set_color(2, 3, 1);
  EXPECT_EQ(coloring_probability(f), Rational(1, 12));
  f.set_color(1, 2, 1);
  EXPECT_THROW(coloring_probability(f), ImproperColoringError);
}

TEST(ChiSquare, SurvivalClosedForm) {
  // two degrees of freedom: survival is exp(-x/2)
  EXPECT_NEAR(chisq_survival(2.0, 2), std::exp(-1.0), 1e-12);
  EXPECT_NEAR(chisq_survival(5.0, 2), std::exp(-2.5), 1e-12);
  EXPECT_DOUBLE_EQ(chisq_survival(0.0, 3), 1.0);
}

TEST(ChiSquare, UniformityStatistic) {
  ChiSquare c = chisq_uniformity(std::vector<std::uint64_t>{30, 10}, 2);
  EXPECT_DOUBLE_EQ(c.statistic, 10.0);
  EXPECT_EQ(c.dof, 1u);
  // absent cells count as zero
  ChiSquare z = chisq_uniformity(std::vector<std::uint64_t>{40}, 2);
  EXPECT_DOUBLE_EQ(z.statistic, 40.0);
  EXPECT_LT(z.p_value, 1e-6);
  try {
    chisq_uniformity(std::vector<std::uint64_t>{5, 5}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InsufficientSamples);
  }
  EXPECT_THROW(chisq_uniformity(std::vector<std::uint64_t>{50, 50, 50}, 2), Error);
}
