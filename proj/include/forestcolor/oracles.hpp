#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "forestcolor/dist_maint.hpp"
#include "forestcolor/forest.hpp"

namespace forestcolor {

// Colors listed in sorted-EdgeKey order.
using EdgeColoring = std::vector<Color>;

constexpr std::size_t kOracleEdgeLimit = 12;

// All proper kappa-colorings of f's topology (f's colors are ignored), in
// lexicographic order. Throws TooLarge above kOracleEdgeLimit edges.
std::vector<EdgeColoring> enumerate_proper_colorings(const ColoredForest& f);

// f holds the old coloring plus new_edge uncolored. Minimum number of old
// edges whose color must change so the whole forest is properly colored.
std::size_t min_recourse_bruteforce(const ColoredForest& f, EdgeKey new_edge);

// Probability of f's current coloring under the top-down distribution for
// f's rooting. Throws ImproperColoringError when the coloring is not proper.
Rational coloring_probability(const ColoredForest& f);

std::string canonical_coloring(const ColoredForest& f);
std::string canonical_coloring(const EdgeColoring& c);

struct ColoringHistogram {
  std::map<std::string, std::uint64_t> counts;
  std::uint64_t total = 0;

  void add(const std::string& key) {
    ++counts[key];
    ++total;
  }
};

struct ChiSquare {
  double statistic = 0;
  double p_value = 1;
  std::size_t dof = 0;
};

// Pearson test against the uniform distribution on `support` cells; cells
// absent from the histogram count as zero. Throws InsufficientSamples when
// total < 10 * support, InvalidArgument when the histogram has more cells than support.
ChiSquare chisq_uniformity(const ColoringHistogram& h, std::size_t support);
ChiSquare chisq_uniformity(const std::vector<std::uint64_t>& counts, std::size_t support);

// Upper tail of the chi-square distribution.
double chisq_survival(double statistic, std::size_t dof);

}  // namespace forestcolor
