#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "forestcolor/acceptance.hpp"
#include "forestcolor/algorithm.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/sequence.hpp"

using namespace forestcolor;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double to_double(const std::string& s) {
  double x = 0;
  std::from_chars(s.data(), s.data() + s.size(), x);
  return x;
}

struct Csv {
  std::string header;
  std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv c;
  auto lines = split(text, '\n');
  c.header = lines.at(0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (!lines[i].empty()) c.rows.push_back(split(lines[i], ','));
  }
  return c;
}

ExperimentConfig config(const std::string& alg, const std::string& workload, Color delta, Color extra) {
  ExperimentConfig cfg;
  cfg.algorithm = alg;
  cfg.workload = workload;
  cfg.delta = delta;
  cfg.extra = extra;
  return cfg;
}

}  // namespace

TEST(Harness, CsvSchemaAndSummary) {
  ExperimentConfig cfg = config("dist-maint", "random-dynamic", 4, 1);
  cfg.n = 100;
  cfg.steps = 300;
  cfg.reps = 2;
  cfg.seed = 5;
  Csv csv = parse_csv(to_csv(run_experiment(cfg)));
  EXPECT_EQ(csv.header, kCsvHeader);
  const std::size_t columns = split(kCsvHeader, ',').size();
  std::size_t summaries = 0;
  double sum = 0;
  std::size_t count = 0;
  for (const auto& row : csv.rows) {
    ASSERT_EQ(row.size(), columns);
    if (row[2] == "summary") {
      ++summaries;
      EXPECT_EQ(std::stoul(row[1]), count);
      EXPECT_EQ(std::stoul(row[3]), static_cast<std::size_t>(sum));
      // exact: the summary is total / updates rendered in round-trip form
      EXPECT_EQ(to_double(row[5]), sum / static_cast<double>(count));
      sum = 0;
      count = 0;
      continue;
    }
    EXPECT_TRUE(row[2] == "insert" || row[2] == "delete");
    EXPECT_EQ(std::stoul(row[1]), count);
    EXPECT_EQ(split(row[4], ';').size(), 2u);
    sum += std::stod(row[3]);
    ++count;
    EXPECT_EQ(to_double(row[5]), sum / static_cast<double>(count));
  }
  EXPECT_EQ(summaries, 2u);
}

TEST(Harness, SameSeedSameBytes) {
  ExperimentConfig cfg = config("dist-maint-rooted", "random-rooted", 3, 1);
  cfg.n = 200;
  cfg.seed = 42;
  std::string a = to_csv(run_experiment(cfg));
  EXPECT_EQ(a, to_csv(run_experiment(cfg)));
  cfg.seed = 43;
  EXPECT_NE(a, to_csv(run_experiment(cfg)));
}

TEST(Harness, SeedRequiredWhenRandom) {
  ExperimentConfig cfg = config("dist-maint", "random-incremental", 3, 0);
  cfg.n = 50;
  EXPECT_THROW(run_experiment(cfg), Error);
  ExperimentConfig det = config("greedy", "adv:greedy-incremental", 8, 0);
  EXPECT_NO_THROW(run_experiment(det));
}

TEST(Harness, RepSeedsDiffer) {
  EXPECT_NE(rep_seed(1, 0), rep_seed(1, 1));
  EXPECT_EQ(rep_seed(1, 3), mix_seed(1, 3));
}

TEST(Harness, LayeredCycleAmortizedElevenSixths) {
  ExperimentConfig cfg = config("greedy", "adv:layered-cycle", 3, 0);
  cfg.depth = 9;
  cfg.steps = 20;
  ExperimentResult r = run_experiment(cfg);
  ASSERT_EQ(r.summaries.size(), 1u);
  EXPECT_EQ(r.summaries[0].updates, 120u);
  EXPECT_EQ(r.summaries[0].total, 220u);
  EXPECT_EQ(r.summaries[0].amortized, 11.0 / 6.0);
  ASSERT_TRUE(r.summaries[0].bound);
  EXPECT_EQ(*r.summaries[0].bound, 11.0 / 6.0);
}

TEST(Harness, IncrementalLbBound) {
  ExperimentResult r = run_experiment(config("greedy", "adv:greedy-incremental", 8, 0));
  EXPECT_EQ(r.summaries[0].total, 4u);
  EXPECT_EQ(r.summaries[0].updates, 18u);
  EXPECT_EQ(r.summaries[0].amortized, 4.0 / 18.0);
}

TEST(Harness, ToggleMeanWithinThreeSigma) {
  ExperimentConfig cfg = config("dist-maint", "adv:toggle", 3, 1);
  cfg.depth = 6;
  cfg.steps = 40000;
  cfg.seed = 2024;
  ExperimentResult r = run_experiment(cfg);
  std::vector<double> inserts;
  for (const UpdateRow& row : r.rows) {
    if (row.kind == UpdateKind::Insert) inserts.push_back(static_cast<double>(row.recourse));
  }
  ASSERT_EQ(inserts.size(), 40000u);
  // batch means absorb the correlation between consecutive toggles
  const std::size_t batches = 40, per = inserts.size() / batches;
  std::vector<double> means;
  for (std::size_t b = 0; b < batches; ++b) {
    double s = 0;
    for (std::size_t i = b * per; i < (b + 1) * per; ++i) s += inserts[i];
    means.push_back(s / static_cast<double>(per));
  }
  double mean = 0, var = 0;
  for (double m : means) mean += m / batches;
  for (double m : means) var += (m - mean) * (m - mean) / (batches - 1);
  double sigma = std::sqrt(var / batches);
  double want = toggle_expected_recourse(3, 4, 6).convert_to<double>();
  EXPECT_NEAR(mean, want, 3 * sigma);
  ASSERT_TRUE(r.summaries[0].bound);
  EXPECT_DOUBLE_EQ(*r.summaries[0].bound, want);
}

TEST(Harness, SequenceFileWorkload) {
  std::string path = ::testing::TempDir() + "forestcolor_seq.txt";
  {
    std::ofstream out(path);
    out << "# tiny\n+ 0 1\n+ 1 2\n- 0 1\n";
  }
  ExperimentResult r = run_experiment(config("greedy", path, 2, 0));
  ASSERT_EQ(r.rows.size(), 3u);
  EXPECT_EQ(r.rows[2].kind, UpdateKind::Delete);
  EXPECT_EQ(r.rows[2].size_u + r.rows[2].size_v, 3u);
  EXPECT_THROW(run_experiment(config("greedy", "adv:nonexistent", 3, 0)), Error);
}

TEST(Harness, HistogramCsvSchema) {
  HistogramConfig cfg;
  cfg.script = parse_sequence("+ 0 1\n+ 1 2\n+ 2 3\n");
  cfg.runs = 1200;
  cfg.seed = 1;
  HistogramResult h = run_histogram(cfg);
  Csv csv = parse_csv(histogram_csv(h));
  EXPECT_EQ(csv.header, kHistogramHeader);
  ASSERT_EQ(csv.rows.size(), 12u);
  std::uint64_t total = 0;
  for (const auto& row : csv.rows) {
    ASSERT_EQ(row.size(), 6u);
    EXPECT_EQ(split(row[0], ' ').size(), 3u);
    total += std::stoull(row[1]);
    EXPECT_EQ(to_double(row[2]), 100.0);
    EXPECT_EQ(row[3], "12");
    EXPECT_EQ(row[4], "1200");
  }
  EXPECT_EQ(total, 1200u);
  EXPECT_EQ(histogram_csv(h), histogram_csv(run_histogram(cfg)));
}

TEST(Harness, FormatDoubleRoundTrips) {
  for (double x : {0.1, 1.0 / 3.0, 2.0 / 9.0, 1e-17, 12345.678}) EXPECT_EQ(to_double(format_double(x)), x);
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(4.0), "4");
}

TEST(Acceptance, SuiteIdsAndCriteria) {
  EXPECT_EQ(suite_criteria("all").size(), static_cast<std::size_t>(kCriteriaCount));
  std::vector<int> merged;
  for (const char* s : {"oracles", "deterministic", "randomized"}) {
    auto ids = suite_criteria(s);
    merged.insert(merged.end(), ids.begin(), ids.end());
  }
  std::sort(merged.begin(), merged.end());
  EXPECT_EQ(merged, suite_criteria("all"));
  EXPECT_THROW(suite_criteria("nope"), Error);
  Verdict v = run_criterion(99);
  EXPECT_FALSE(v.pass);
}

TEST(Acceptance, OracleCriterionPasses) {
  Verdict v = run_criterion(1);
  EXPECT_TRUE(v.pass) << v.detail;
  EXPECT_EQ(v.name, "oracle-equivalence");
  EXPECT_EQ(format_verdict(v).rfind("PASS  1 oracle-equivalence", 0), 0u);
}

// Mutation: a greedy that takes the next color over (off by one) must be
// caught by the oracle-equivalence criterion.
TEST(Acceptance, CorruptedGreedyIsCaught) {
  AcceptanceOptions opts;
  opts.greedy = [](ColoredForest& f, EdgeKey e) {
    TieBreaker tb = TieBreaker::lex_min();
    std::size_t r = greedy_insert(f, e, tb);
    Color c = f.color(e.a, e.b);
    f.set_color(e.a, e.b, c % f.palette().kappa() + 1);
    return r;
  };
  Verdict v = run_criterion(1, opts);
  EXPECT_FALSE(v.pass) << v.detail;
}
