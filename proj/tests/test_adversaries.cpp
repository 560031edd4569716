#include <gtest/gtest.h>

#include "forestcolor/adversaries.hpp"
#include "forestcolor/algorithm.hpp"

using namespace forestcolor;

namespace {

std::size_t replay(Algorithm& alg, ColoredForest& f, const UpdateSequence& seq) {
  std::size_t total = 0;
  for (const Update& up : seq) total += alg.apply(f, up);
  return total;
}

}  // namespace

TEST(IncrementalLb, DeltaEightExact) {
  Palette pal(8, 0);
  EXPECT_EQ(incremental_lb_ell(8, 0), 4u);
  IncrementalGreedyLb lb = gen_incremental_greedy_lb(pal);
  EXPECT_EQ(lb.updates.size(), 18u);
  EXPECT_EQ(lb.predicted_recourse, 4u);
  ColoredForest f(lb.vertices, pal);
  auto alg = make_algorithm("greedy", pal, 0, TieBreaker::scripted(lb.ties));
  EXPECT_EQ(replay(*alg, f, lb.updates), 4u);
  f.assert_proper();
}

TEST(Thresholds, SmallPalettes) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 0), 1);
  Thresholds t = adversary_thresholds(Palette(3, 0));
  EXPECT_EQ(t.n0, 15);
  EXPECT_EQ(t.n1, 8);
  EXPECT_EQ(t.n2, 6);
  EXPECT_EQ(star_palettes(Palette(3, 0)).size(), 3u);
  EXPECT_EQ(star_palettes(Palette(4, 1)).size(), 10u);
  for (ColorSet s : star_palettes(Palette(4, 1))) EXPECT_EQ(s.size(), 3u);
}

TEST(OwnerStars, ForcesRecourse) {
  Palette pal(3, 0);
  OwnerStarAdversary adv(pal, 60);
  ColoredForest f(adv.vertex_count(), pal);
  auto alg = make_algorithm("greedy", pal);
  RecourseLedger ledger;
  DirectChannel ch(f, *alg, &ledger);
  std::size_t last_steps = 0;
  adv.on_step = [&](const OwnerStarProgress& p) { last_steps = p.steps; };
  adv.play(ch);
  f.assert_proper();
  EXPECT_EQ(last_steps, 60u);
  EXPECT_GT(ledger.total(), 0u);
  EXPECT_LE(ledger.amortized(), 0.5);
}

TEST(LayeredTree, BuildAndCheck) {
  Palette pal(3, 1);
  ColorSet p = ColorSet::of({1, 2});
  EXPECT_EQ(complement(p, pal), ColorSet::of({3, 4}));
  std::size_t size = layered_tree_vertices(2, 2, 3);
  EXPECT_EQ(size, 1u + 2 + 4 + 8);  // two children per vertex: |P| = |complement| = 2
  ColoredForest f(size, pal);
  VertexId next = 1;
  auto verts = build_layered_tree(f, 0, p, 3, next);
  EXPECT_EQ(verts.size(), size);
  EXPECT_TRUE(is_layered(f, 0, p));
  EXPECT_FALSE(is_layered(f, 0, complement(p, pal)));
  f.assert_proper();
}

TEST(LayeredCycle, DepthNineSteadyState) {
  Palette pal(3, 0);
  LayeredCycleSetup s = gen_greedy_cycle(pal, 9);
  const GreedyCycle& g = s.cycle;
  EXPECT_EQ(g.d1 + g.d2 + 1, 6u);
  EXPECT_EQ(g.predicted_recourse, 11u);
  ASSERT_EQ(g.cycle.size(), 6u);
  const int cycles = 5;
  std::vector<Color> script;
  for (int k = 0; k < cycles; ++k) script.insert(script.end(), g.ties.begin(), g.ties.end());
  auto alg = make_algorithm("greedy", pal, 0, g.lexmin_exact ? TieBreaker::lex_min() : TieBreaker::scripted(script));
  ColoredForest f = s.initial;
  const auto h0 = f.state_hash();
  for (int k = 0; k < cycles; ++k) {
    EXPECT_EQ(replay(*alg, f, g.cycle), 11u);
    EXPECT_EQ(f.state_hash(), h0);
  }
  EXPECT_THROW(gen_greedy_cycle(pal, 5), Error);
}

TEST(Bootstrap, BuildsLayeredPairWithoutRecourse) {
  Palette pal(3, 1);
  BootstrapLayeredAdversary adv(pal, 3);
  ColoredForest f(adv.vertex_count(), pal);
  auto alg = make_algorithm("greedy", pal);
  RecourseLedger ledger;
  DirectChannel ch(f, *alg, &ledger);
  adv.play(ch);
  EXPECT_EQ(ledger.total(), 0u);
  EXPECT_TRUE(is_layered(f, adv.p_root(), adv.p()));
  EXPECT_TRUE(is_layered(f, adv.pbar_root(), complement(adv.p(), pal)));
  f.assert_proper();
}

TEST(Doubling, LengthsAndLevels) {
  const std::uint64_t want[] = {1, 4, 9, 20, 41, 84};
  for (unsigned i = 1; i <= 6; ++i) EXPECT_EQ(doubling_length(i), want[i - 1]);
  for (unsigned i = 1; i < 12; ++i) {
    std::uint64_t d = doubling_length(i);
    EXPECT_EQ(doubling_length(i + 1), 2 * d + 1 + d % 2);
  }
  EXPECT_EQ(doubling_levels(doubling_length(11) + 1), 11u);
  EXPECT_EQ(doubling_levels(doubling_length(11)), 10u);
  EXPECT_EQ(doubling_levels(1), 0u);
}

TEST(Doubling, AdaptiveForcesShorterSide) {
  Delta2DoublingAdversary adv(512, true);
  ColoredForest f(adv.vertex_count(), adv.palette());
  auto alg = make_algorithm("greedy", adv.palette());
  RecourseLedger ledger;
  DirectChannel ch(f, *alg, &ledger);
  adv.play(ch);
  f.assert_proper();
  EXPECT_TRUE(adv.parity_ok());
  EXPECT_GE(ledger.total(), adv.forced_recourse());
  EXPECT_GT(adv.forced_recourse(), 0u);
}

TEST(ShiftStars, ZeroExtraBeatsBound) {
  Palette pal(3, 0);
  ShiftStarAdversary adv(pal, 600);
  ColoredForest f(adv.vertex_count(), pal);
  auto alg = make_algorithm("greedy", pal);
  RecourseLedger ledger;
  DirectChannel ch(f, *alg, &ledger);
  adv.play(ch);
  f.assert_proper();
  EXPECT_GT(adv.report().stars, 0u);
  EXPECT_GT(ledger.total(), 0u);
}

TEST(RandomizedC0, IncrementalRounds) {
  Palette pal(4, 0);
  RandIncremental r = gen_rand_c0_incremental(pal, 1000, 3);
  EXPECT_GT(r.rounds, 0u);
  EXPECT_LE(r.vertices, 1000u);
  ColoredForest f(r.vertices, pal);
  auto alg = make_algorithm("dist-maint", pal, 1);
  replay(*alg, f, r.updates);
  f.assert_proper();
}

TEST(RandomizedC0, ToggleRestoresTopology) {
  Palette pal = Palette::relaxed(3, 1);
  TwoTrees t = make_two_trees(pal, 3, 8);
  EXPECT_EQ(t.initial.vertex_count(), 2 * complete_tree_vertices(2, 3) + 1);
  UpdateSequence seq = gen_toggle_workload(t, 50);
  EXPECT_EQ(seq.size(), 100u);
  ColoredForest f = t.initial;
  auto alg = make_algorithm("dist-maint", pal, 1);
  replay(*alg, f, seq);
  EXPECT_EQ(f.edges(), t.initial.edges());
  f.assert_proper();
  UpdateSequence dyn = gen_rand_c0_dynamic(t, 20);
  ColoredForest g = t.initial;
  replay(*alg, g, dyn);
  g.assert_proper();
}
