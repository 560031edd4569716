#include <gtest/gtest.h>

#include "forestcolor/algorithm.hpp"
#include "forestcolor/colorful_path.hpp"
#include "forestcolor/harness.hpp"

using namespace forestcolor;

TEST(ColorfulPath, NeedsRootChild) {
  Palette pal(3, 1);
  ColoredForest f(4, pal);
  f.insert_topology(0, 1, 0);
  f.set_color(0, 1, 1);
  try {
    cp_insert(f, 2, 1);  // 1 is not a root
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotRoot);
  }
}

TEST(ColorfulPath, FreeColorStops) {
  Palette pal(3, 1);
  ColoredForest f(3, pal);
  std::vector<CpStep> trace;
  EXPECT_EQ(cp_insert(f, 0, 1, &trace), 0u);
  ASSERT_EQ(trace.size(), 1u);
  EXPECT_EQ(trace[0].kind, CpStepKind::Stop);
  EXPECT_EQ(f.parent(1), 0u);
  EXPECT_NE(f.color(0, 1), kUncolored);
}

TEST(ColorfulPath, RandomRootedStaysProper) {
  for (Color delta = 3; delta <= 6; ++delta) {
    Palette pal(delta, delta - 2);
    const std::size_t n = 300;
    UpdateSequence seq = gen_random_rooted(n, delta, 3000, delta);
    ColoredForest f(n, pal);
    auto alg = make_algorithm("colorful-path", pal);
    std::size_t total = 0;
    for (const Update& up : seq) {
      total += alg->apply(f, up);
      if (up.kind == UpdateKind::Insert) {
        ASSERT_TRUE(f.has_edge(up.u, up.v));
        if (up.parent_hint) {
          EXPECT_EQ(f.parent(EdgeKey(up.u, up.v).other(*up.parent_hint)), *up.parent_hint);
        }
      }
    }
    f.assert_proper();
    EXPECT_LE(static_cast<double>(total) / static_cast<double>(seq.size()), 10.0);
  }
}

TEST(ColorfulPath, TraceLengthMatchesRecourse) {
  Palette pal(4, 2);
  const std::size_t n = 200;
  UpdateSequence seq = gen_random_rooted(n, 4, 1000, 44);
  ColoredForest f(n, pal);
  for (const Update& up : seq) {
    if (up.kind == UpdateKind::Delete) {
      EXPECT_EQ(cp_delete(f, EdgeKey(up.u, up.v)), 0u);
      continue;
    }
    VertexId p = up.parent_hint.value_or(up.u);
    VertexId r = EdgeKey(up.u, up.v).other(p);
    std::vector<CpStep> trace;
    std::size_t rec = cp_insert(f, p, r, &trace);
    ASSERT_FALSE(trace.empty());
    EXPECT_EQ(trace.back().kind, CpStepKind::Stop);
    // every step after the first recolors one existing edge
    EXPECT_LE(rec, trace.size() - 1);
  }
  f.assert_proper();
}
