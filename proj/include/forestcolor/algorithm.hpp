#pragma once

#include <memory>
#include <string>
#include <vector>

#include "forestcolor/dist_maint.hpp"
#include "forestcolor/forest.hpp"
#include "forestcolor/greedy.hpp"
#include "forestcolor/sublinear.hpp"

namespace forestcolor {

// One dynamic edge-coloring algorithm bound to nothing but its own state
// (tie-breaker, rng). apply() performs the update on f and returns its recourse.
class Algorithm {
 public:
  virtual ~Algorithm() = default;
  virtual std::string id() const = 0;
  virtual bool randomized() const { return false; }
  virtual std::size_t apply(ColoredForest& f, const Update& up) = 0;
  // Scripted ties fed by an adaptive adversary; null for algorithms without ties.
  virtual TieBreaker* tie_breaker() { return nullptr; }
};

const std::vector<std::string>& algorithm_ids();

// Throws InvalidArgument for an unknown id, WrongPalette when the palette does
// not fit the algorithm.
std::unique_ptr<Algorithm> make_algorithm(const std::string& id, const Palette& palette,
                                          std::uint64_t seed = 0,
                                          TieBreaker tb = TieBreaker::lex_min());

}  // namespace forestcolor
