#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forestcolor/adversaries.hpp"
#include "forestcolor/forest.hpp"
#include "forestcolor/greedy.hpp"
#include "forestcolor/oracles.hpp"

namespace forestcolor {

struct ExperimentConfig {
  std::string algorithm = "greedy";
  std::string workload;  // workload id or path to a sequence file
  Color delta = 3;
  Color extra = 0;
  std::size_t n = 0;  // 0: the workload's own default
  std::optional<std::uint64_t> seed;  // required when anything random is involved
  std::size_t reps = 1;
  unsigned depth = 0;      // tree depth / height for workloads that take one; 0: default
  std::size_t steps = 0;   // steps, cycles, rounds or toggles; 0: default
  std::string output;      // CSV path; empty: none
};

// Seed of repetition `rep`.
std::uint64_t rep_seed(std::uint64_t seed, std::size_t rep);

// Palette for a config: strict when possible, relaxed when kappa exceeds the
// usual range (still at most 63 colors).
Palette config_palette(const ExperimentConfig& cfg);

const std::vector<std::string>& workload_ids();
bool workload_is_random(const std::string& id);

// One repetition's inputs: starting forest, the adversary that drives it, the
// algorithm's tie-break policy, and the bound the workload declares.
struct Workload {
  explicit Workload(ColoredForest f) : initial(std::move(f)) {}
  ColoredForest initial;
  std::unique_ptr<AdaptiveAdversary> adversary;
  TieBreaker ties = TieBreaker::lex_min();
  std::optional<double> bound;
};

// Throws InvalidArgument for unknown ids, plus whatever the generator throws.
Workload make_workload(const ExperimentConfig& cfg, std::uint64_t seed);

// Random topology generators. Every update is legal when applied in order.
UpdateSequence gen_random_incremental(std::size_t n, Color delta, std::uint64_t seed);
UpdateSequence gen_random_dynamic(std::size_t n, Color delta, std::size_t steps, std::uint64_t seed);
// Rooted model: each insertion links the root of one tree below a vertex of another.
UpdateSequence gen_random_rooted(std::size_t n, Color delta, std::size_t steps, std::uint64_t seed);

struct UpdateRow {
  std::size_t rep = 0;
  std::size_t index = 0;
  UpdateKind kind = UpdateKind::Insert;
  std::size_t recourse = 0;
  std::size_t size_u = 0;  // vertices in u's component before an insert, after a delete
  std::size_t size_v = 0;
  double cum_amortized = 0;
  std::size_t worst_case = 0;
};

struct RunSummary {
  std::size_t rep = 0;
  std::size_t updates = 0;
  std::size_t total = 0;
  double amortized = 0;
  std::size_t worst_case = 0;
  std::optional<double> bound;
};

struct ExperimentResult {
  std::vector<UpdateRow> rows;
  std::vector<RunSummary> summaries;
};

ExperimentResult run_experiment(const ExperimentConfig& cfg);

inline constexpr const char* kCsvHeader = "rep,update_idx,kind,recourse,component_sizes,cum_amortized,worst_case,bound";
std::string to_csv(const ExperimentResult& r);
// Distribution of final colorings over seeded runs of one update script. Every
// proper coloring of the final topology gets a cell, zero counts included.
struct HistogramConfig {
  std::string algorithm = "dist-maint";
  Color delta = 3;
  Color extra = 0;
  std::size_t n = 0;  // vertices; 0: one past the largest id in the script
  UpdateSequence script;
  std::size_t runs = 10000;
  std::uint64_t seed = 0;  // run i uses mix_seed(seed, i)
};

struct HistogramResult {
  std::vector<std::pair<std::string, std::uint64_t>> cells;  // canonical coloring, count
  std::size_t runs = 0;
  ChiSquare chi;
};

// Throws TooLarge when the final forest exceeds the enumeration limit.
HistogramResult run_histogram(const HistogramConfig& cfg);

// One row per cell; colors inside a cell are space-separated. expected = runs / support.
inline constexpr const char* kHistogramHeader = "coloring,count,expected,support,runs,chisq_p";
std::string histogram_csv(const HistogramResult& h);

// Shortest round-trip decimal form.
std::string format_double(double x);

}  // namespace forestcolor
