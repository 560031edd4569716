#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "forestcolor/forest.hpp"
#include "forestcolor/rng.hpp"

namespace forestcolor {

// Chooses the color of a newly inserted edge among equally cheap options.
class TieBreaker {
 public:
  enum class Policy { LexMin, Scripted, SeededRandom };

  static TieBreaker lex_min() { return TieBreaker(Policy::LexMin, {}, 0); }
  // One entry per insertion. 0 defers to the lowest candidate.
  static TieBreaker scripted(std::vector<Color> choices) {
    return TieBreaker(Policy::Scripted, std::move(choices), 0);
  }
  static TieBreaker seeded(std::uint64_t seed) { return TieBreaker(Policy::SeededRandom, {}, seed); }

  Policy policy() const { return policy_; }
  std::size_t remaining() const { return script_.size() - next_; }

  // Throws ScriptExhausted, or ScriptMismatch when the scripted color is not a candidate.
  Color choose(ColorSet candidates);

 private:
  TieBreaker(Policy p, std::vector<Color> script, std::uint64_t seed)
      : policy_(p), script_(std::move(script)), rng_(seed) {}

  Policy policy_;
  std::vector<Color> script_;
  std::size_t next_ = 0;
  Rng rng_;
};

// P(v, beta) for every vertex on both sides of an inserted edge. At the two
// endpoints the entry is the cost of their subtrees when the new edge gets beta.
struct DpTable {
  Color kappa = 0;
  std::unordered_map<VertexId, std::vector<std::int64_t>> values;  // index beta in 1..kappa

  std::int64_t cost(VertexId v, Color beta) const { return values.at(v).at(beta); }
};

DpTable greedy_dp_table(const ColoredForest& f, EdgeKey e);

// e must be present and uncolored. Each returns the recourse of the update.
std::size_t greedy_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb);
// chain (optional) receives the recolored edges in shift order.
std::size_t greedy_shift_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb,
                                std::vector<EdgeKey>* chain = nullptr);
std::size_t greedy_path_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb,
                               std::vector<EdgeKey>* chain = nullptr);
// Requires kappa == delta.
std::size_t smallest_subtree_path_insert(ColoredForest& f, EdgeKey e,
                                         std::vector<EdgeKey>* chain = nullptr);
std::size_t greedy_delete(ColoredForest& f, EdgeKey e);

}  // namespace forestcolor
