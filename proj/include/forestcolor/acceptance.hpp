#pragma once

#include <functional>
#include <string>
#include <vector>

#include "forestcolor/forest.hpp"

namespace forestcolor {

// Greedy insertion under test: colors the present, uncolored edge e and
// returns the recourse.
using InsertFn = std::function<std::size_t(ColoredForest&, EdgeKey)>;

struct AcceptanceOptions {
  InsertFn greedy;  // empty: greedy_insert with LexMin ties
};

struct Verdict {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

inline constexpr int kCriteriaCount = 12;

// Suites: oracles, deterministic, randomized, all. Throws InvalidArgument otherwise.
std::vector<int> suite_criteria(const std::string& suite);
const std::vector<std::string>& suite_ids();

// Never throws: an exception inside a check becomes a failing verdict.
Verdict run_criterion(int id, const AcceptanceOptions& opts = {});
std::vector<Verdict> run_acceptance(const std::string& suite, const AcceptanceOptions& opts = {});

// "PASS  4 owner-star ... (detail)"
std::string format_verdict(const Verdict& v);

}  // namespace forestcolor
