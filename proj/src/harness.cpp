#include "forestcolor/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "forestcolor/algorithm.hpp"
#include "forestcolor/dist_maint.hpp"
#include "forestcolor/sequence.hpp"

namespace forestcolor {

std::uint64_t rep_seed(std::uint64_t seed, std::size_t rep) { return mix_seed(seed, rep); }

const std::vector<std::string>& workload_ids() {
  static const std::vector<std::string> ids = {
      "adv:greedy-incremental", "adv:owner-stars", "adv:layered-cycle", "adv:shift-stars",
      "adv:delta2",             "adv:rand-c0-inc", "adv:rand-c0-dyn",   "adv:toggle",
      "random-incremental",     "random-dynamic",  "random-rooted"};
  return ids;
}

bool workload_is_random(const std::string& id) {
  return id == "adv:delta2" || id == "adv:rand-c0-inc" || id == "adv:rand-c0-dyn" || id == "adv:toggle" ||
         id.rfind("random-", 0) == 0;
}

Palette config_palette(const ExperimentConfig& cfg) {
  // toggling is also studied above the usual extra-color range
  if (cfg.workload == "adv:toggle") return Palette::relaxed(cfg.delta, cfg.extra);
  return Palette(cfg.delta, cfg.extra);
}

// ------------------------------------------------------------- generators

namespace {

// Topology-only forest used by the generators.
ColoredForest scratch_forest(std::size_t n, Color delta) { return ColoredForest(n, Palette::relaxed(delta, 0)); }

bool try_random_insert(ColoredForest& f, Rng& rng, Color delta, UpdateSequence& out) {
  const std::size_t n = f.vertex_count();
  for (int attempt = 0; attempt < 64; ++attempt) {
    VertexId u = static_cast<VertexId>(rng.uniform_index(n));
    VertexId v = static_cast<VertexId>(rng.uniform_index(n));
    if (u == v || f.degree(u) >= delta || f.degree(v) >= delta || f.same_component(u, v)) continue;
    f.insert_topology(u, v);
    out.push_back(Update::insert(u, v));
    return true;
  }
  return false;
}

void random_delete(ColoredForest& f, Rng& rng, UpdateSequence& out) {
  auto edges = f.edges();
  EdgeKey e = edges[rng.uniform_index(edges.size())];
  f.delete_topology(e);
  out.push_back(Update::erase(e.a, e.b));
}

}  // namespace

UpdateSequence gen_random_incremental(std::size_t n, Color delta, std::uint64_t seed) {
  ColoredForest f = scratch_forest(n, delta);
  Rng rng(seed);
  UpdateSequence out;
  std::size_t misses = 0;
  while (f.edge_count() + 1 < n && misses < 64) {
    if (try_random_insert(f, rng, delta, out)) {
      misses = 0;
    } else {
      ++misses;
    }
  }
  return out;
}

UpdateSequence gen_random_dynamic(std::size_t n, Color delta, std::size_t steps, std::uint64_t seed) {
  ColoredForest f = scratch_forest(n, delta);
  Rng rng(seed);
  UpdateSequence out;
  for (std::size_t s = 0; s < steps; ++s) {
    bool insert = f.edge_count() == 0 || rng.uniform_index(3) != 0;
    if (insert && try_random_insert(f, rng, delta, out)) continue;
    if (f.edge_count() > 0) random_delete(f, rng, out);
  }
  return out;
}

UpdateSequence gen_random_rooted(std::size_t n, Color delta, std::size_t steps, std::uint64_t seed) {
  ColoredForest f = scratch_forest(n, delta);
  Rng rng(seed);
  UpdateSequence out;
  for (std::size_t s = 0; s < steps; ++s) {
    bool insert = f.edge_count() == 0 || rng.uniform_index(3) != 0;
    bool done = false;
    for (int attempt = 0; insert && attempt < 64 && !done; ++attempt) {
      VertexId r = f.find_root(static_cast<VertexId>(rng.uniform_index(n)));
      VertexId p = static_cast<VertexId>(rng.uniform_index(n));
      if (f.degree(r) >= delta || f.degree(p) >= delta || f.same_component(p, r)) continue;
      f.insert_topology(p, r, p);
      out.push_back(Update::insert(p, r, p));
      done = true;
    }
    if (!done && f.edge_count() > 0) random_delete(f, rng, out);
  }
  return out;
}

// ---------------------------------------------------------------- workloads

namespace {

std::size_t or_default(std::size_t v, std::size_t fallback) { return v == 0 ? fallback : v; }

Workload sequence_workload(const std::string& id, const Palette& pal, std::size_t n, UpdateSequence seq) {
  Workload w(ColoredForest(n, pal));
  w.adversary = std::make_unique<SequenceAdversary>(id, pal, n, std::move(seq));
  return w;
}

std::size_t vertices_needed(const UpdateSequence& seq) {
  std::size_t n = 0;
  for (const Update& up : seq) n = std::max<std::size_t>(n, std::max(up.u, up.v) + std::size_t{1});
  return n;
}

}  // namespace

Workload make_workload(const ExperimentConfig& cfg, std::uint64_t seed) {
  const Palette pal = config_palette(cfg);
  const std::string& id = cfg.workload;
  const bool greedy = cfg.algorithm == "greedy";

  if (id == "adv:greedy-incremental") {
    IncrementalGreedyLb lb = gen_incremental_greedy_lb(pal);
    Workload w = sequence_workload(id, pal, std::max(cfg.n, lb.vertices), lb.updates);
    if (greedy) w.ties = TieBreaker::scripted(lb.ties);
    w.bound = static_cast<double>(lb.predicted_recourse) / static_cast<double>(lb.updates.size());
    return w;
  }
  if (id == "adv:owner-stars") {
    std::size_t n0 = owner_star_layout(pal).vertices;
    auto adv = std::make_unique<OwnerStarAdversary>(pal, or_default(cfg.steps, 10 * n0), cfg.n);
    Workload w(ColoredForest(adv->vertex_count(), pal));
    w.adversary = std::move(adv);
    w.bound = 0.5;
    return w;
  }
  if (id == "adv:layered-cycle") {
    LayeredCycleSetup setup = gen_greedy_cycle(pal, cfg.depth == 0 ? 9 : cfg.depth);
    std::size_t cycles = or_default(cfg.steps, 100);
    UpdateSequence seq;
    std::vector<Color> ties;
    for (std::size_t k = 0; k < cycles; ++k) {
      seq.insert(seq.end(), setup.cycle.cycle.begin(), setup.cycle.cycle.end());
      ties.insert(ties.end(), setup.cycle.ties.begin(), setup.cycle.ties.end());
    }
    std::size_t n = setup.initial.vertex_count();
    Workload w(std::move(setup.initial));
    w.adversary = std::make_unique<SequenceAdversary>(id, pal, n, std::move(seq));
    if (greedy && !setup.cycle.lexmin_exact) w.ties = TieBreaker::scripted(std::move(ties));
    w.bound = static_cast<double>(setup.cycle.predicted_recourse) / 6.0;
    return w;
  }
  if (id == "adv:shift-stars") {
    std::size_t n = or_default(cfg.n, 4000);
    auto adv = std::make_unique<ShiftStarAdversary>(pal, n, static_cast<unsigned>(or_default(cfg.steps, 10)));
    Workload w(ColoredForest(n, pal));
    w.adversary = std::move(adv);
    return w;
  }
  if (id == "adv:delta2") {
    if (pal.delta() != 2) throw Error(ErrorKind::WrongPalette, "adv:delta2 needs delta = 2");
    std::size_t n = or_default(cfg.n, 4096);
    return sequence_workload(id, pal, n, gen_delta2_doubling(n, seed));
  }
  if (id == "adv:rand-c0-inc") {
    RandIncremental rc = gen_rand_c0_incremental(pal, or_default(cfg.n, 10000), seed);
    Workload w = sequence_workload(id, pal, rc.vertices, std::move(rc.updates));
    w.bound = 1.0 / pal.delta();
    return w;
  }
  if (id == "adv:rand-c0-dyn" || id == "adv:toggle") {
    unsigned h = cfg.depth == 0 ? 6 : cfg.depth;
    TwoTrees t = make_two_trees(pal, h, seed);
    UpdateSequence seq = id == "adv:toggle" ? gen_toggle_workload(t, or_default(cfg.steps, 10000))
                                            : gen_rand_c0_dynamic(t, or_default(cfg.steps, 1000));
    std::size_t n = t.initial.vertex_count();
    Workload w(std::move(t.initial));
    w.adversary = std::make_unique<SequenceAdversary>(id, pal, n, std::move(seq));
    if (id == "adv:toggle") {
      w.bound = toggle_expected_recourse(pal.delta(), pal.kappa(), h).convert_to<double>();
    }
    return w;
  }
  if (id == "random-incremental") {
    std::size_t n = or_default(cfg.n, 1000);
    return sequence_workload(id, pal, n, gen_random_incremental(n, pal.delta(), seed));
  }
  if (id == "random-dynamic" || id == "random-rooted") {
    std::size_t n = or_default(cfg.n, 1000);
    std::size_t steps = or_default(cfg.steps, 2 * n);
    UpdateSequence seq = id == "random-dynamic" ? gen_random_dynamic(n, pal.delta(), steps, seed)
                                                : gen_random_rooted(n, pal.delta(), steps, seed);
    return sequence_workload(id, pal, n, std::move(seq));
  }
  if (std::filesystem::is_regular_file(id)) {
    std::ifstream in(id);
    std::stringstream buf;
    buf << in.rdbuf();
    UpdateSequence seq = parse_sequence(buf.str());
    const std::size_t n = std::max(cfg.n, vertices_needed(seq));
    return sequence_workload(id, pal, n, std::move(seq));
  }
  throw Error(ErrorKind::InvalidArgument, "unknown workload '" + id + "'");
}

// ------------------------------------------------------------------- runs

namespace {

class RecordingChannel final : public UpdateChannel {
 public:
  RecordingChannel(ColoredForest& f, Algorithm& alg, std::size_t rep, std::vector<UpdateRow>& rows)
      : f_(f), alg_(alg), rep_(rep), rows_(rows) {}
  const ColoredForest& forest() const override { return f_; }
  std::size_t apply(const Update& up) override {
    UpdateRow row;
    if (up.kind == UpdateKind::Insert) sizes(up, row);
    std::size_t r = alg_.apply(f_, up);
    if (up.kind == UpdateKind::Delete) sizes(up, row);
    total_ += r;
    worst_ = std::max(worst_, r);
    row.rep = rep_;
    row.index = count_++;
    row.kind = up.kind;
    row.recourse = r;
    row.cum_amortized = static_cast<double>(total_) / static_cast<double>(count_);
    row.worst_case = worst_;
    rows_.push_back(row);
    return r;
  }
  TieBreaker* ties() override {
    TieBreaker* tb = alg_.tie_breaker();
    return tb && tb->policy() == TieBreaker::Policy::Scripted ? tb : nullptr;
  }

  std::size_t total() const { return total_; }
  std::size_t count() const { return count_; }
  std::size_t worst() const { return worst_; }

 private:
  void sizes(const Update& up, UpdateRow& row) const {
    row.size_u = f_.component_edges(up.u) + 1;
    row.size_v = f_.component_edges(up.v) + 1;
  }

  ColoredForest& f_;
  Algorithm& alg_;
  std::size_t rep_;
  std::vector<UpdateRow>& rows_;
  std::size_t total_ = 0;
  std::size_t count_ = 0;
  std::size_t worst_ = 0;
};

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.reps < 1) throw Error(ErrorKind::InvalidArgument, "reps must be >= 1");
  const Palette pal = config_palette(cfg);
  std::unique_ptr<Algorithm> probe = make_algorithm(cfg.algorithm, pal);
  if (!cfg.seed && (probe->randomized() || workload_is_random(cfg.workload))) {
    throw Error(ErrorKind::InvalidArgument, "a seed is required for randomized runs");
  }
  const std::uint64_t base = cfg.seed.value_or(0);
  ExperimentResult out;
  for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
    const std::uint64_t s = rep_seed(base, rep);
    Workload w = make_workload(cfg, mix_seed(s, 0));
    ColoredForest f = std::move(w.initial);
    std::unique_ptr<Algorithm> alg = make_algorithm(cfg.algorithm, pal, mix_seed(s, 1), std::move(w.ties));
    RecordingChannel ch(f, *alg, rep, out.rows);
    w.adversary->play(ch);
    RunSummary sum;
    sum.rep = rep;
    sum.updates = ch.count();
    sum.total = ch.total();
    sum.amortized = ch.count() == 0 ? 0.0 : static_cast<double>(ch.total()) / static_cast<double>(ch.count());
    sum.worst_case = ch.worst();
    sum.bound = w.bound;
    out.summaries.push_back(sum);
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string to_csv(const ExperimentResult& r) {
  std::string out = kCsvHeader;
  out += '\n';
  std::size_t next = 0;
  for (const RunSummary& s : r.summaries) {
    for (; next < r.rows.size() && r.rows[next].rep == s.rep; ++next) {
      const UpdateRow& row = r.rows[next];
      out += std::to_string(row.rep) + ',' + std::to_string(row.index) + ',' +
             (row.kind == UpdateKind::Insert ? "insert" : "delete") + ',' + std::to_string(row.recourse) + ',' +
             std::to_string(row.size_u) + ';' + std::to_string(row.size_v) + ',' +
             format_double(row.cum_amortized) + ',' + std::to_string(row.worst_case) + ",\n";
    }
    out += std::to_string(s.rep) + ',' + std::to_string(s.updates) + ",summary," + std::to_string(s.total) + ",," +
           format_double(s.amortized) + ',' + std::to_string(s.worst_case) + ',' +
           (s.bound ? format_double(*s.bound) : std::string()) + '\n';
  }
  return out;
}

HistogramResult run_histogram(const HistogramConfig& cfg) {
  Palette pal(cfg.delta, cfg.extra);
  std::size_t n = cfg.n;
  if (n == 0) {
    for (const Update& up : cfg.script) n = std::max<std::size_t>(n, std::max(up.u, up.v) + std::size_t{1});
  }
  ColoredForest shape(n, pal);
  for (const Update& up : cfg.script) {
    if (up.kind == UpdateKind::Insert) {
      shape.insert_topology(up.u, up.v, up.parent_hint);
    } else {
      shape.delete_topology(EdgeKey(up.u, up.v));
    }
  }
  HistogramResult out;
  std::map<std::string, std::size_t> index;
  for (const EdgeColoring& c : enumerate_proper_colorings(shape)) {
    index.emplace(canonical_coloring(c), out.cells.size());
    out.cells.emplace_back(canonical_coloring(c), 0);
  }
  for (std::size_t run = 0; run < cfg.runs; ++run) {
    ColoredForest f(n, pal);
    auto alg = make_algorithm(cfg.algorithm, pal, mix_seed(cfg.seed, run));
    for (const Update& up : cfg.script) alg->apply(f, up);
    auto it = index.find(canonical_coloring(f));
    if (it == index.end()) throw Error(ErrorKind::ImproperColoring, "run produced a coloring outside the support");
    ++out.cells[it->second].second;
  }
  out.runs = cfg.runs;
  std::vector<std::uint64_t> counts;
  for (const auto& [key, count] : out.cells) counts.push_back(count);
  out.chi = chisq_uniformity(counts, counts.size());
  return out;
}

std::string histogram_csv(const HistogramResult& h) {
  std::string out = kHistogramHeader;
  out += '\n';
  const double expected = static_cast<double>(h.runs) / static_cast<double>(h.cells.size());
  const std::string tail = ',' + format_double(expected) + ',' + std::to_string(h.cells.size()) + ',' +
                           std::to_string(h.runs) + ',' + format_double(h.chi.p_value) + '\n';
  for (const auto& [key, count] : h.cells) {
    std::string cell = key;
    std::replace(cell.begin(), cell.end(), ',', ' ');
    out += cell + ',' + std::to_string(count) + tail;
  }
  return out;
}

}  // namespace forestcolor
