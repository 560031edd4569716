#include <gtest/gtest.h>

#include "forestcolor/forest.hpp"

using namespace forestcolor;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Palette, ExtraColorsBounded) {
  EXPECT_EQ(Palette(5, 3).kappa(), 8u);
  EXPECT_EQ(kind_of([] { Palette(5, 4); }), ErrorKind::InvalidPalette);
  EXPECT_EQ(kind_of([] { Palette(2, 1); }), ErrorKind::InvalidPalette);
  EXPECT_EQ(kind_of([] { Palette(0, 0); }), ErrorKind::InvalidPalette);
  EXPECT_EQ(Palette::relaxed(3, 2).kappa(), 5u);
}

TEST(ColorSet, BitOperations) {
  ColorSet a = ColorSet::of({1, 3, 5});
  ColorSet b = ColorSet::range(3);
  EXPECT_EQ((a & b).to_vector(), (std::vector<Color>{1, 3}));
  EXPECT_EQ((b - a).to_vector(), (std::vector<Color>{2}));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ(ColorSet().lowest(), 0u);
  EXPECT_EQ(ColorSet::range(63).size(), 63u);
  EXPECT_FALSE(a.contains(0));
}

TEST(Forest, TopologyErrors) {
  ColoredForest f(5, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(1, 2);
  EXPECT_EQ(kind_of([&] { f.insert_topology(0, 2); }), ErrorKind::SameComponent);
  EXPECT_EQ(kind_of([&] { f.insert_topology(1, 3); }), ErrorKind::DegreeExceeded);
  EXPECT_EQ(kind_of([&] { f.delete_topology(EdgeKey(3, 4)); }), ErrorKind::MissingEdge);
  EXPECT_EQ(kind_of([&] { f.color(0, 3); }), ErrorKind::MissingEdge);
  EXPECT_EQ(f.edge_count(), 2u);
  EXPECT_EQ(f.component_edges(2), 2u);
}

TEST(Forest, ProperColoringCheck) {
  ColoredForest f(3, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(1, 2);
  f.set_color(0, 1, 1);
  f.set_color(1, 2, 1);
  EXPECT_THROW(f.assert_proper(), ImproperColoringError);
  f.set_color(1, 2, 2);
  EXPECT_NO_THROW(f.assert_proper());
  EXPECT_EQ(f.neighbor_with_color(1, 2), 2u);
  EXPECT_EQ(f.available(1).size(), 0u);
}

TEST(Forest, ChildRerootedAndHints) {
  ColoredForest f(4, Palette(3, 0));
  f.insert_topology(0, 1);  // child is v
  EXPECT_EQ(f.parent(1), 0u);
  f.insert_topology(2, 3, 3);  // hint: parent 3
  EXPECT_EQ(f.parent(2), 3u);
  f.insert_topology(1, 2);  // 2's tree is rerooted at 2 and hung below 1
  EXPECT_EQ(f.parent(2), 1u);
  EXPECT_EQ(f.parent(3), 2u);
  EXPECT_EQ(f.find_root(3), 0u);
  f.delete_topology(EdgeKey(1, 2));
  EXPECT_TRUE(f.is_root(2));
}

TEST(Forest, SnapshotRoundTrip) {
  ColoredForest f(6, Palette(3, 1));
  f.insert_topology(0, 1);
  f.insert_topology(0, 2);
  f.insert_topology(4, 3, 4);
  f.set_color(0, 1, 4);
  f.set_color(0, 2, 2);
  f.set_color(3, 4, 1);
  ColoredForest g = ColoredForest::from_snapshot(f.snapshot());
  EXPECT_EQ(g.snapshot(), f.snapshot());
  EXPECT_EQ(g.state_hash(), f.state_hash());
  EXPECT_EQ(g.palette(), f.palette());
}

TEST(Forest, ColoringHashIgnoresRooting) {
  ColoredForest f(3, Palette(2, 0));
  f.insert_topology(0, 1);
  f.insert_topology(1, 2);
  f.set_color(0, 1, 1);
  f.set_color(1, 2, 2);
  auto ch = f.coloring_hash();
  auto sh = f.state_hash();
  f.reroot(2);
  EXPECT_EQ(f.coloring_hash(), ch);
  EXPECT_NE(f.state_hash(), sh);
}

TEST(Recourse, NetDifferenceOnly) {
  ColoredForest f(4, Palette(3, 0));
  f.insert_topology(0, 1);
  f.insert_topology(0, 2);
  f.set_color(0, 1, 1);
  f.set_color(0, 2, 2);
  {
    RecourseScope scope(f);
    f.set_color(0, 1, 3);
    f.set_color(0, 1, 1);  // back to the original
    f.set_color(0, 2, 3);
    f.insert_topology(0, 3);
    f.set_color(0, 3, 2);  // new edge: free
    EXPECT_EQ(scope.recourse(), 1u);
  }
  RecourseLedger ledger;
  ledger.record(3);
  ledger.record(0);
  ledger.record(1);
  EXPECT_EQ(ledger.total(), 4u);
  EXPECT_EQ(ledger.worst_case(), 3u);
  EXPECT_DOUBLE_EQ(ledger.amortized(), 4.0 / 3.0);
}

TEST(Forest, RecourseHookSeesChanges) {
  ColoredForest f(2, Palette(2, 0));
  f.insert_topology(0, 1);
  int calls = 0;
  f.set_recourse_hook([&](EdgeKey, Color, Color) { ++calls; });
  f.set_color(0, 1, 1);
  f.set_color(0, 1, 2);
  EXPECT_GE(calls, 1);
}
