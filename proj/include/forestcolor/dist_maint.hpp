#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "forestcolor/forest.hpp"
#include "forestcolor/rng.hpp"

namespace forestcolor {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct Swap {
  EdgeKey edge;
  Color old_color;
  Color new_color;
};

struct RepairTrace {
  VertexId start = kNoVertex;
  std::vector<Swap> swapped;
};

// Colors every edge top-down under the current rooting: a vertex's child
// edges get a uniformly random injective coloring avoiding its parent-edge color.
void sample_uniform_coloring(ColoredForest& f, Rng& rng);

// v's parent edge just changed alpha -> beta. Swaps alpha/beta down the
// bicolored path below v.
RepairTrace fix_forbidden(ColoredForest& f, VertexId v, Color alpha, Color beta);
// r just gained a parent edge of color beta.
RepairTrace root_to_child(ColoredForest& f, VertexId r, Color beta, Rng& rng);
// r just lost its parent edge, which had color alpha.
RepairTrace child_to_root(ColoredForest& f, VertexId r, Color alpha, Rng& rng);

// Rooted model: an insertion attaches a root below its parent. Without a hint
// the endpoint that is a root becomes the child (v when both are roots).
std::size_t dm_update_rooted(ColoredForest& f, const Update& up, Rng& rng, RepairTrace* trace = nullptr);
// General updates. Insertions reroot one side first; deletions use the current rooting.
std::size_t dm_update_unrooted(ColoredForest& f, const Update& up, Rng& rng, RepairTrace* trace = nullptr);

// Probability that a fixed edge at this depth below the attached root is
// recolored by one insertion: 1 / (kappa * (kappa-1)^(depth-1)).
Rational recolor_probability(unsigned kappa, unsigned depth);

// Expected recourse of inserting an edge above the root of a complete
// (delta-1)-ary tree of height h whose coloring is uniform.
Rational toggle_expected_recourse(unsigned delta, unsigned kappa, unsigned h);

}  // namespace forestcolor
