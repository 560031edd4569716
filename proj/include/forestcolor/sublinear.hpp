#pragma once

#include <cstdint>
#include <vector>

#include "forestcolor/forest.hpp"

namespace forestcolor {

// Caps for the truncated recoloring. d_i = ceil(D / 2^(i-1)) keeps the
// per-level budget 2^(i-1) * d_i close to D; levels past ell are uncapped.
struct LevelPlan {
  std::size_t n = 0;     // edges in the smaller tree
  unsigned ell = 1;
  std::uint64_t d = 1;
  std::vector<std::uint64_t> caps;  // caps[i-1] = d_i

  std::uint64_t cap(unsigned level) const;  // 0 means uncapped
  // Sum over levels of 2^(i-1) * d_i.
  std::uint64_t budget() const;
};

LevelPlan level_plan(std::size_t n, unsigned delta);

struct SublinearStats {
  LevelPlan plan;
  unsigned levels_used = 0;
  std::size_t max_pending = 0;
  std::size_t truncations = 0;
  bool disjoint = true;          // sibling conflicts never shared a subtree
  bool pending_within_bound = true;  // at most 2^(i-1) conflicts at level i
};

// Requires kappa == delta >= 3. e must be present and uncolored.
std::size_t sublinear_insert(ColoredForest& f, EdgeKey e, SublinearStats* stats = nullptr);
std::size_t sublinear_delete(ColoredForest& f, EdgeKey e);

}  // namespace forestcolor
