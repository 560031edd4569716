#include <gtest/gtest.h>

#include "forestcolor/algorithm.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/sublinear.hpp"

using namespace forestcolor;

TEST(LevelPlan, CapsHalvePerLevel) {
  for (std::size_t n : {16u, 1024u, 16384u}) {
    LevelPlan p = level_plan(n, 4);
    ASSERT_EQ(p.caps.size(), p.ell);
    std::uint64_t budget = 0;
    for (unsigned i = 1; i <= p.ell; ++i) {
      EXPECT_EQ(p.cap(i), (p.d + (1ull << (i - 1)) - 1) >> (i - 1));
      budget += (1ull << (i - 1)) * p.cap(i);
    }
    EXPECT_EQ(p.cap(p.ell + 1), 0u);
    EXPECT_EQ(p.budget(), budget);
    EXPECT_GE(p.d, 1u);
  }
  EXPECT_LE(level_plan(16384, 4).budget(), 16384u);
}

TEST(Sublinear, RandomMergesStayProper) {
  Palette pal(4, 0);
  const std::size_t n = 2000;
  UpdateSequence seq = gen_random_dynamic(n, 4, 6000, 17);
  ColoredForest f(n, pal);
  std::size_t inserts = 0;
  for (const Update& up : seq) {
    if (up.kind == UpdateKind::Delete) {
      EXPECT_EQ(sublinear_delete(f, EdgeKey(up.u, up.v)), 0u);
      continue;
    }
    f.insert_topology(up.u, up.v, up.parent_hint);
    SublinearStats st;
    std::size_t r = sublinear_insert(f, EdgeKey(up.u, up.v), &st);
    EXPECT_TRUE(st.disjoint);
    EXPECT_TRUE(st.pending_within_bound);
    if (st.truncations == 0) {
      EXPECT_LE(r, st.plan.n + 1);
    }
    ++inserts;
  }
  f.assert_proper();
  EXPECT_GT(inserts, 1000u);
}

TEST(Sublinear, RejectsExtraColors) {
  ColoredForest f(2, Palette(4, 1));
  f.insert_topology(0, 1);
  try {
    sublinear_insert(f, EdgeKey(0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::WrongPalette);
  }
}
