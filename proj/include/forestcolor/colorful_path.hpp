#pragma once

#include <vector>

#include "forestcolor/forest.hpp"

namespace forestcolor {

enum class CpStepKind { Stop, StepToFree, StepAvoidGrandparent };

struct CpStep {
  EdgeKey edge;
  CpStepKind kind;
  Color color_taken;
};

// Insert (p, r) where r is a root, then repair downward from r.
// Requires kappa = 2*delta - 2 and delta >= 3. trace receives one entry per step.
std::size_t cp_insert(ColoredForest& f, VertexId p, VertexId r, std::vector<CpStep>* trace = nullptr);
std::size_t cp_delete(ColoredForest& f, EdgeKey e);

}  // namespace forestcolor
