#include <gtest/gtest.h>

#include "forestcolor/algorithm.hpp"
#include "forestcolor/greedy.hpp"
#include "forestcolor/oracles.hpp"

using namespace forestcolor;

namespace {

// Random forest on n vertices with a random proper coloring, then an
// uncolored edge between two components.
struct Instance {
  ColoredForest f;
  EdgeKey e;
};

std::optional<Instance> random_instance(Rng& rng, std::size_t n, const Palette& pal) {
  ColoredForest f(n, pal);
  for (int tries = 0; tries < 40 && f.edge_count() + 2 < n; ++tries) {
    VertexId u = static_cast<VertexId>(rng.uniform_index(n));
    VertexId v = static_cast<VertexId>(rng.uniform_index(n));
    if (u == v || f.same_component(u, v) || f.degree(u) >= pal.delta() || f.degree(v) >= pal.delta()) continue;
    f.insert_topology(u, v);
    ColorSet free = f.available(EdgeKey(u, v));
    if (free.empty()) {
      f.delete_topology(EdgeKey(u, v));
      continue;
    }
    auto opts = free.to_vector();
    f.set_color(u, v, opts[rng.uniform_index(opts.size())]);
  }
  for (int tries = 0; tries < 100; ++tries) {
    VertexId u = static_cast<VertexId>(rng.uniform_index(n));
    VertexId v = static_cast<VertexId>(rng.uniform_index(n));
    if (u == v || f.same_component(u, v) || f.degree(u) >= pal.delta() || f.degree(v) >= pal.delta()) continue;
    f.insert_topology(u, v);
    return Instance{std::move(f), EdgeKey(u, v)};
  }
  return std::nullopt;
}

}  // namespace

TEST(TieBreaker, ScriptedPolicy) {
  TieBreaker tb = TieBreaker::scripted({3, 0});
  EXPECT_EQ(tb.choose(ColorSet::of({1, 3})), 3u);
  EXPECT_EQ(tb.choose(ColorSet::of({2, 4})), 2u);  // 0: lowest
  try {
    tb.choose(ColorSet::of({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScriptExhausted);
  }
  TieBreaker bad = TieBreaker::scripted({2});
  try {
    bad.choose(ColorSet::of({1, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScriptMismatch);
  }
  EXPECT_EQ(TieBreaker::lex_min().choose(ColorSet::of({5, 2})), 2u);
}

TEST(TieBreaker, SeededIsReproducible) {
  TieBreaker a = TieBreaker::seeded(9), b = TieBreaker::seeded(9);
  ColorSet s = ColorSet::range(10);
  for (int i = 0; i < 50; ++i) {
    Color x = a.choose(s);
    EXPECT_EQ(x, b.choose(s));
    EXPECT_TRUE(s.contains(x));
  }
}

TEST(Greedy, FreeColorMeansNoRecourse) {
  ColoredForest f(3, Palette(3, 0));
  f.insert_topology(0, 1);
  f.set_color(0, 1, 1);
  f.insert_topology(1, 2);
  TieBreaker tb = TieBreaker::lex_min();
  EXPECT_EQ(greedy_insert(f, EdgeKey(1, 2), tb), 0u);
  EXPECT_EQ(f.color(1, 2), 2u);
}

TEST(Greedy, DpTableOnForcedPath) {
  // 0-1 (1), 2-3 (2), kappa = 2. Giving the new edge color 1 costs the
  // subtree of 1 one recoloring, color 2 costs the subtree of 2 one.
  ColoredForest f(4, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(2, 3);
  f.set_color(0, 1, 1);
  f.set_color(2, 3, 2);
  f.insert_topology(1, 2);
  DpTable t = greedy_dp_table(f, EdgeKey(1, 2));
  EXPECT_EQ(t.cost(1, 1) + t.cost(2, 1), 1);
  EXPECT_EQ(t.cost(1, 2) + t.cost(2, 2), 1);
  TieBreaker tb = TieBreaker::lex_min();
  EXPECT_EQ(greedy_insert(f, EdgeKey(1, 2), tb), 1u);
  f.assert_proper();
}

TEST(Greedy, MatchesBruteForceOracle) {
  Rng rng(20240611);
  std::size_t checked = 0, forced = 0;
  for (int i = 0; i < 400; ++i) {
    Color delta = static_cast<Color>(2 + rng.uniform_index(3));
    Color extra = delta >= 4 && rng.coin() ? 1 : 0;
    Palette pal(delta, extra);
    auto inst = random_instance(rng, 5 + rng.uniform_index(6), pal);
    if (!inst || inst->f.edge_count() > kOracleEdgeLimit) continue;
    std::size_t want = min_recourse_bruteforce(inst->f, inst->e);
    TieBreaker tb = TieBreaker::seeded(i);
    std::size_t got = greedy_insert(inst->f, inst->e, tb);
    ASSERT_EQ(got, want) << inst->f.snapshot();
    inst->f.assert_proper();
    ++checked;
    forced += want > 0;
  }
  EXPECT_GE(checked, 300u);
  EXPECT_GE(forced, 20u);
}

TEST(Greedy, VariantsStayProper) {
  for (const char* id : {"greedy", "greedy-shift", "greedy-path", "smallest-subtree"}) {
    Palette pal(4, 0);
    Rng rng(7);
    ColoredForest f(200, pal);
    auto alg = make_algorithm(id, pal, 1);
    std::size_t ok = 0;
    for (int step = 0; step < 2000; ++step) {
      VertexId u = static_cast<VertexId>(rng.uniform_index(200));
      VertexId v = static_cast<VertexId>(rng.uniform_index(200));
      if (u == v) continue;
      if (f.has_edge(u, v)) {
        alg->apply(f, Update::erase(u, v));
      } else if (!f.same_component(u, v) && f.degree(u) < 4 && f.degree(v) < 4) {
        alg->apply(f, Update::insert(u, v));
        ++ok;
      }
    }
    f.assert_proper();
    EXPECT_GT(ok, 100u) << id;
  }
}

TEST(Greedy, DeleteNeverRecolors) {
  ColoredForest f(3, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(1, 2);
  f.set_color(0, 1, 1);
  f.set_color(1, 2, 2);
  EXPECT_EQ(greedy_delete(f, EdgeKey(0, 1)), 0u);
  EXPECT_EQ(f.edge_count(), 1u);
}

TEST(Algorithm, FactoryValidatesPalette) {
  EXPECT_THROW(make_algorithm("no-such", Palette(3, 0)), Error);
  try {
    make_algorithm("colorful-path", Palette(4, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongPalette);
  }
  try {
    make_algorithm("sublinear-delta", Palette(4, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongPalette);
  }
  for (const auto& id : algorithm_ids()) EXPECT_FALSE(id.empty());
}
