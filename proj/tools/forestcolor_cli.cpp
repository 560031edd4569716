// forestcolor: run experiments, acceptance suites and oracles from the shell.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "forestcolor/acceptance.hpp"
#include "forestcolor/algorithm.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/oracles.hpp"
#include "forestcolor/sequence.hpp"
#include "json.hpp"

using namespace forestcolor;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::uint64_t> parse_counts(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stoull(tok));
  }
  return out;
}

int run_cmd(const ExperimentConfig& cfg) {
  ExperimentResult res = run_experiment(cfg);
  std::string csv = to_csv(res);
  if (cfg.output.empty()) {
    std::cout << csv;
    return 0;
  }
  std::ofstream(cfg.output, std::ios::binary) << csv;
  for (const RunSummary& s : res.summaries) {
    std::cout << "rep " << s.rep << ": " << s.updates << " updates, recourse " << s.total << ", amortized "
              << format_double(s.amortized) << ", worst " << s.worst_case;
    if (s.bound) std::cout << ", bound " << format_double(*s.bound);
    std::cout << '\n';
  }
  return 0;
}

int verify_cmd(const std::string& suite, const std::string& json_path) {
  bool all = true;
  nlohmann::json report = nlohmann::json::array();
  for (int id : suite_criteria(suite)) {
    Verdict v = run_criterion(id);
    std::cout << format_verdict(v) << std::endl;
    all = all && v.pass;
    report.push_back({{"id", v.id}, {"name", v.name}, {"pass", v.pass}, {"detail", v.detail}, {"seconds", v.seconds}});
  }
  if (!json_path.empty()) std::ofstream(json_path) << report.dump(2) << '\n';
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic edge coloring of forests: experiments, acceptance checks and oracles"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::uint64_t seed = 0;
  unsigned delta = 3, extra = 0;
  auto* run = app.add_subcommand("run", "run an algorithm on a workload and emit CSV");
  run->add_option("--alg", cfg.algorithm, "algorithm id")->required();
  run->add_option("--workload", cfg.workload, "workload id or sequence file")->required();
  run->add_option("--delta", delta, "maximum degree");
  run->add_option("--extra", extra, "extra colors c (kappa = delta + c)");
  run->add_option("--n", cfg.n, "vertices (0: workload default)");
  auto* seed_opt = run->add_option("--seed", seed, "base seed");
  run->add_option("--reps", cfg.reps, "repetitions")->check(CLI::PositiveNumber);
  run->add_option("--out", cfg.output, "CSV output path (default: stdout)");
  run->add_option("--depth", cfg.depth, "tree depth or height for workloads that take one");
  run->add_option("--steps", cfg.steps, "steps, cycles, rounds or toggles");

  std::string suite = "all";
  std::string json_path;
  auto* verify = app.add_subcommand("verify", "run acceptance criteria; exit 0 iff all pass");
  verify->add_option("--suite", suite, "oracles | deterministic | randomized | all");
  verify->add_option("--json", json_path, "also write verdicts as JSON");

  HistogramConfig hist;
  std::string script_path, hist_out;
  unsigned hist_delta = 3, hist_extra = 0;
  auto* histogram = app.add_subcommand("histogram", "coloring distribution over seeded runs of a script, as CSV");
  histogram->add_option("--alg", hist.algorithm, "algorithm id");
  histogram->add_option("--script", script_path, "sequence file")->required();
  histogram->add_option("--delta", hist_delta, "maximum degree");
  histogram->add_option("--extra", hist_extra, "extra colors c");
  histogram->add_option("--runs", hist.runs, "runs")->check(CLI::PositiveNumber);
  histogram->add_option("--seed", hist.seed, "base seed")->required();
  histogram->add_option("--out", hist_out, "CSV output path (default: stdout)");

  auto* list = app.add_subcommand("list", "list algorithm and workload ids");

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles on small forests");
  oracle->require_subcommand(1);
  std::string forest_path;
  auto* enumerate = oracle->add_subcommand("enumerate", "all proper colorings of a forest snapshot");
  enumerate->add_option("--forest", forest_path, "snapshot file")->required();
  std::vector<VertexId> edge;
  auto* minrec = oracle->add_subcommand("min-recourse", "minimum recourse to color a new edge");
  minrec->add_option("--forest", forest_path, "snapshot file (new edge present and uncolored)")->required();
  minrec->add_option("--edge", edge, "the new edge: two vertex ids")->required()->expected(2);
  std::string counts;
  std::size_t support = 0;
  auto* chisq = oracle->add_subcommand("chisq", "chi-square uniformity test");
  chisq->add_option("--counts", counts, "comma-separated cell counts")->required();
  chisq->add_option("--support", support, "number of cells in the support")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      cfg.delta = static_cast<Color>(delta);
      cfg.extra = static_cast<Color>(extra);
      if (seed_opt->count() > 0) cfg.seed = seed;
      return run_cmd(cfg);
    }
    if (*histogram) {
      hist.delta = static_cast<Color>(hist_delta);
      hist.extra = static_cast<Color>(hist_extra);
      hist.script = parse_sequence(read_file(script_path));
      HistogramResult h = run_histogram(hist);
      if (hist_out.empty()) {
        std::cout << histogram_csv(h);
      } else {
        std::ofstream(hist_out, std::ios::binary) << histogram_csv(h);
        std::cout << h.cells.size() << " cells, " << h.runs << " runs, chi-square p " << format_double(h.chi.p_value)
                  << '\n';
      }
      return 0;
    }
    if (*verify) return verify_cmd(suite, json_path);
    if (*list) {
      std::cout << "algorithms:";
      for (const auto& id : algorithm_ids()) std::cout << ' ' << id;
      std::cout << "\nworkloads:";
      for (const auto& id : workload_ids()) std::cout << ' ' << id;
      std::cout << " <sequence file>\nsuites:";
      for (const auto& id : suite_ids()) std::cout << ' ' << id;
      std::cout << '\n';
      return 0;
    }
    if (*enumerate) {
      ColoredForest f = ColoredForest::from_snapshot(read_file(forest_path));
      auto all = enumerate_proper_colorings(f);
      std::cout << all.size() << '\n';
      for (const auto& c : all) std::cout << canonical_coloring(c) << '\n';
      return 0;
    }
    if (*minrec) {
      ColoredForest f = ColoredForest::from_snapshot(read_file(forest_path));
      std::cout << min_recourse_bruteforce(f, EdgeKey(edge[0], edge[1])) << '\n';
      return 0;
    }
    if (*chisq) {
      ChiSquare c = chisq_uniformity(parse_counts(counts), support);
      std::cout << "statistic " << format_double(c.statistic) << " dof " << c.dof << " p " << format_double(c.p_value)
                << '\n';
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return 2;
  }
  return 0;
}
