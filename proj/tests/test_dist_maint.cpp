#include <gtest/gtest.h>

#include <cmath>

#include "forestcolor/adversaries.hpp"
#include "forestcolor/dist_maint.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/oracles.hpp"
#include "forestcolor/sequence.hpp"

using namespace forestcolor;

TEST(DistMaint, RecolorProbabilityExact) {
  EXPECT_EQ(recolor_probability(4, 1), Rational(1, 4));
  EXPECT_EQ(recolor_probability(4, 2), Rational(1, 12));
  EXPECT_EQ(recolor_probability(4, 5), Rational(1, 324));
  EXPECT_EQ(recolor_probability(3, 3), Rational(1, 12));
}

TEST(DistMaint, ToggleClosedForm) {
  // (delta-1)/kappa * sum_{i<h} ((delta-1)/(kappa-1))^i, summed independently
  for (unsigned kappa : {3u, 4u, 5u}) {
    for (unsigned h : {1u, 2u, 6u}) {
      double want = 0, term = 2.0 / kappa;
      for (unsigned i = 0; i < h; ++i) {
        want += term;
        term *= 2.0 / (kappa - 1);
      }
      EXPECT_NEAR(toggle_expected_recourse(3, kappa, h).convert_to<double>(), want, 1e-12)
          << "kappa=" << kappa << " h=" << h;
    }
  }
  // c = 0: linear in h
  EXPECT_EQ(toggle_expected_recourse(3, 3, 6), Rational(4));
}

TEST(DistMaint, FixForbiddenSwapsBicoloredPath) {
  ColoredForest f(4, Palette(3, 0));
  f.insert_topology(0, 1, 0);
  f.insert_topology(1, 2, 1);
  f.insert_topology(2, 3, 2);
  f.set_color(0, 1, 1);
  f.set_color(1, 2, 2);
  f.set_color(2, 3, 1);
  f.set_color(0, 1, 2);  // parent edge of 1 changed 1 -> 2
  RepairTrace t = fix_forbidden(f, 1, 1, 2);
  EXPECT_EQ(t.swapped.size(), 2u);
  EXPECT_EQ(f.color(1, 2), 1u);
  EXPECT_EQ(f.color(2, 3), 2u);
  f.assert_proper();
}

TEST(DistMaint, SampleMatchesTopDownDistribution) {
  Palette pal(3, 1);
  ColoredForest f(7, pal);
  for (VertexId c : {1u, 2u}) f.insert_topology(0, c, 0);
  for (VertexId c : {3u, 4u}) f.insert_topology(1, c, 1);
  for (VertexId c : {5u, 6u}) f.insert_topology(2, c, 2);
  Rng rng(5);
  sample_uniform_coloring(f, rng);
  f.assert_proper();
  // uniform over the 432 proper colorings
  EXPECT_EQ(coloring_probability(f), Rational(1, 432));
}

TEST(DistMaint, RootedAndUnrootedStayProper) {
  for (const char* which : {"rooted", "unrooted"}) {
    Palette pal(4, 1);
    const std::size_t n = 300;
    bool rooted = std::string(which) == "rooted";
    UpdateSequence seq = rooted ? gen_random_rooted(n, 4, 3000, 3) : gen_random_dynamic(n, 4, 3000, 3);
    ColoredForest f(n, pal);
    Rng rng(11);
    for (const Update& up : seq) {
      RepairTrace t;
      std::size_t r = rooted ? dm_update_rooted(f, up, rng, &t) : dm_update_unrooted(f, up, rng, &t);
      EXPECT_LE(r, t.swapped.size());
    }
    f.assert_proper();
  }
}

TEST(DistMaint, SmallUniformityByHistogram) {
  HistogramConfig cfg;
  cfg.extra = 1;
  cfg.script = parse_sequence("+ 2 3\n+ 0 1\n+ 1 2\n- 0 1\n+ 0 1\n");
  cfg.runs = 20000;
  cfg.seed = 77;
  HistogramResult h = run_histogram(cfg);
  EXPECT_EQ(h.cells.size(), 36u);
  EXPECT_GT(h.chi.p_value, 1e-4);
  std::uint64_t total = 0;
  for (const auto& [key, count] : h.cells) total += count;
  EXPECT_EQ(total, cfg.runs);
}

TEST(DistMaint, DepthOneFrequency) {
  // the edge below the attached root is recolored with probability 1/kappa
  Palette pal(3, 1);
  std::size_t hits = 0;
  const std::size_t trials = 20000;
  for (std::size_t t = 0; t < trials; ++t) {
    TwoTrees tt = make_two_trees(pal, 2, t);
    ColoredForest f = tt.initial;
    VertexId child = f.children(tt.r1).front();
    Color before = f.color(tt.r1, child);
    Rng rng(mix_seed(t, 9));
    dm_update_rooted(f, Update::insert(tt.r1, tt.r2, tt.r2), rng);
    hits += f.color(tt.r1, child) != before;
  }
  double p = 0.25, sigma = std::sqrt(p * (1 - p) / trials);
  EXPECT_NEAR(static_cast<double>(hits) / trials, p, 4 * sigma);
}
