#include "forestcolor/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "forestcolor/adversaries.hpp"
#include "forestcolor/algorithm.hpp"
#include "forestcolor/dist_maint.hpp"
#include "forestcolor/greedy.hpp"
#include "forestcolor/harness.hpp"
#include "forestcolor/oracles.hpp"
#include "forestcolor/sequence.hpp"
#include "forestcolor/sublinear.hpp"

namespace forestcolor {

namespace {

// Pinned tolerances and sizes.
constexpr std::size_t kOracleInstances = 600;
constexpr double kOracleSeconds = 120.0;
constexpr std::size_t kCycleRepeats = 100;
constexpr double kOwnerStarFloor = 0.1;
constexpr double kColorfulPathCeiling = 10.0;
constexpr std::size_t kRootedUpdates = 10000;
constexpr std::size_t kUniformityRuns = 100000;
constexpr double kUniformityAlpha = 0.01;
constexpr std::size_t kUniformityTests = 20;
constexpr std::size_t kDepthTrials = 100000;
constexpr double kSigmas = 3.0;
constexpr std::size_t kToggles = 100000;
constexpr std::size_t kToggleBatches = 100;
constexpr double kIncrementalCeiling = 8.0;  // times 1/delta
constexpr double kIncrementalFloor = 0.1;    // times 1/delta
constexpr double kSublinearSlack = 2.0;
constexpr double kDoublingFloor = 1.0 / 16.0;  // times n lg n
constexpr double kDoublingSpread = 2.0;

std::string num(double x) {
  std::ostringstream os;
  os.precision(4);
  os << x;
  return os.str();
}

std::size_t apply_all(Algorithm& alg, ColoredForest& f, const UpdateSequence& seq) {
  std::size_t total = 0;
  for (const Update& up : seq) total += alg.apply(f, up);
  return total;
}

// ------------------------------------------------------------ 1: oracle

Verdict oracle_equivalence(const AcceptanceOptions& opts) {
  InsertFn greedy = opts.greedy;
  if (!greedy) {
    greedy = [](ColoredForest& f, EdgeKey e) {
      TieBreaker tb = TieBreaker::lex_min();
      return greedy_insert(f, e, tb);
    };
  }
  auto start = std::chrono::steady_clock::now();
  Rng rng(101);
  std::size_t instances = 0, mismatches = 0, improper = 0, nonzero = 0;
  while (instances < kOracleInstances) {
    Color delta = static_cast<Color>(2 + rng.uniform_index(3));
    Color extra = delta == 3 ? static_cast<Color>(rng.uniform_index(2)) : 0;
    Palette pal(delta, extra);
    std::size_t n = 4 + rng.uniform_index(7);
    ColoredForest f(n, pal);
    for (std::size_t k = 0; k < 3 * n; ++k) {
      VertexId u = static_cast<VertexId>(rng.uniform_index(n));
      VertexId v = static_cast<VertexId>(rng.uniform_index(n));
      if (u == v || f.degree(u) >= delta || f.degree(v) >= delta || f.same_component(u, v)) continue;
      f.insert_topology(u, v);
    }
    sample_uniform_coloring(f, rng);
    // bias toward saturated endpoints, where recoloring is forced
    std::vector<EdgeKey> cands;
    std::size_t best_load = 0;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (f.same_component(u, v) || f.degree(u) >= delta || f.degree(v) >= delta) continue;
        cands.emplace_back(u, v);
        best_load = std::max(best_load, (f.used(u) | f.used(v)).size());
      }
    }
    if (cands.empty()) continue;
    if (rng.uniform_index(4) != 0) {
      std::erase_if(cands, [&](EdgeKey e) { return (f.used(e.a) | f.used(e.b)).size() != best_load; });
    }
    EdgeKey pick = cands[rng.uniform_index(cands.size())];
    ColoredForest g = f;
    EdgeKey e = g.insert_topology(pick.a, pick.b);
    std::size_t opt = min_recourse_bruteforce(g, e);
    ++instances;
    if (opt > 0) ++nonzero;
    try {
      std::size_t got = greedy(g, e);
      g.assert_proper();
      if (got != opt) ++mismatches;
    } catch (const Error&) {
      ++improper;
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Verdict v;
  v.pass = mismatches == 0 && improper == 0 && secs < kOracleSeconds;
  v.detail = std::to_string(instances) + " instances (" + std::to_string(nonzero) + " with forced recoloring), " +
             std::to_string(mismatches) + " mismatches, " + std::to_string(improper) + " improper, " + num(secs) + " s";
  return v;
}

// ----------------------------------------------- 2: incremental lower bound

Verdict incremental_lb() {
  Palette pal(8, 0);
  IncrementalGreedyLb lb = gen_incremental_greedy_lb(pal);
  ColoredForest f(lb.vertices, pal);
  auto alg = make_algorithm("greedy", pal, 0, TieBreaker::scripted(lb.ties));
  std::size_t total = apply_all(*alg, f, lb.updates);
  f.assert_proper();
  Verdict v;
  v.pass = total == 4 && lb.updates.size() == 18 && lb.predicted_recourse == 4;
  v.detail = "recourse " + std::to_string(total) + " over " + std::to_string(lb.updates.size()) + " insertions";
  return v;
}

// ------------------------------------------------------- 3: layered cycle

TieBreaker cycle_ties(const GreedyCycle& g, std::size_t cycles) {
  if (g.lexmin_exact) return TieBreaker::lex_min();
  std::vector<Color> script;
  for (std::size_t k = 0; k < cycles; ++k) script.insert(script.end(), g.ties.begin(), g.ties.end());
  return TieBreaker::scripted(std::move(script));
}

Verdict layered_cycle() {
  Verdict v;
  v.pass = true;
  std::size_t prev = 0;
  Palette pal(3, 0);
  for (unsigned d : {6u, 9u, 12u}) {
    LayeredCycleSetup s = gen_greedy_cycle(pal, d);
    ColoredForest f = s.initial;
    const std::uint64_t h0 = f.state_hash();
    auto alg = make_algorithm("greedy", pal, 0, cycle_ties(s.cycle, kCycleRepeats));
    std::size_t exact = 0;
    for (std::size_t k = 0; k < kCycleRepeats; ++k) {
      std::size_t r = apply_all(*alg, f, s.cycle.cycle);
      if (r == s.cycle.predicted_recourse && f.state_hash() == h0) ++exact;
    }
    std::size_t want = 2 * s.cycle.d1 + 2 * s.cycle.d2 + 1;
    bool ok = exact == kCycleRepeats && s.cycle.predicted_recourse == want && want > prev;
    v.pass = v.pass && ok;
    prev = want;
    v.detail += "d=" + std::to_string(d) + ": " + std::to_string(exact) + "/" + std::to_string(kCycleRepeats) +
                " cycles at " + std::to_string(want) + (s.cycle.lexmin_exact ? " (lexmin)" : " (scripted)") + "; ";
  }
  return v;
}

// ---------------------------------------------------------- 4: owner stars

Verdict owner_stars() {
  Palette pal(3, 0);
  std::size_t n0 = adversary_thresholds(pal).n0.convert_to<std::size_t>();
  OwnerStarAdversary adv(pal, 10 * n0, n0);
  ColoredForest f(adv.vertex_count(), pal);
  auto alg = make_algorithm("greedy", pal);
  DirectChannel ch(f, *alg);
  std::vector<double> checkpoints;  // amortized after k * n0 steps, k = 1..10
  adv.on_step = [&](const OwnerStarProgress& p) {
    if (p.steps % n0 == 0) checkpoints.push_back(static_cast<double>(p.recourse) / static_cast<double>(p.updates));
  };
  adv.play(ch);
  f.assert_proper();
  Verdict v;
  bool increasing = checkpoints.size() == 10;
  for (std::size_t k = 2; k < checkpoints.size(); ++k) increasing = increasing && checkpoints[k] >= checkpoints[k - 1];
  increasing = increasing && checkpoints.back() > checkpoints[1] && checkpoints.back() <= 0.5;
  v.pass = checkpoints.size() == 10 && checkpoints[1] >= kOwnerStarFloor && increasing;
  v.detail = "n0=" + std::to_string(n0) + ", amortized at 2n0 " + num(checkpoints.size() > 1 ? checkpoints[1] : 0) +
             ", at 10n0 " + num(checkpoints.empty() ? 0 : checkpoints.back()) +
             (increasing ? ", nondecreasing" : ", not increasing");
  return v;
}

// ------------------------------------------------------- 5: colorful path

Verdict colorful_path() {
  Verdict v;
  v.pass = true;
  for (Color delta = 3; delta <= 6; ++delta) {
    Palette pal(delta, delta - 2);
    UpdateSequence seq = gen_random_rooted(2000, delta, kRootedUpdates, 500 + delta);
    ColoredForest f(2000, pal);
    auto alg = make_algorithm("colorful-path", pal);
    double amortized = static_cast<double>(apply_all(*alg, f, seq)) / static_cast<double>(seq.size());
    f.assert_proper();
    v.pass = v.pass && amortized <= kColorfulPathCeiling && seq.size() == kRootedUpdates;
    v.detail += "random D=" + std::to_string(delta) + ": " + num(amortized) + "; ";
  }
  // Layered cycle from a prebuilt layered pair: one warm-up cycle, then the
  // steady state. ColorfulPath pays once for the adversary-made coloring.
  Palette pal(3, 1);
  const std::size_t cycles = 50;
  const double resolution = 1.0 / static_cast<double>(6 * cycles);
  double prev_ratio = 0;
  double prev_greedy = 0;
  for (unsigned d : {6u, 9u, 12u}) {
    LayeredCycleSetup s = gen_greedy_cycle(pal, d);
    ColoredForest fc = s.initial;
    ColoredForest fg = s.initial;
    auto cp = make_algorithm("colorful-path", pal);
    auto gr = make_algorithm("greedy", pal, 0, cycle_ties(s.cycle, cycles + 1));
    std::size_t cp_warm = apply_all(*cp, fc, s.cycle.cycle);
    apply_all(*gr, fg, s.cycle.cycle);
    std::size_t cp_total = 0, gr_total = 0;
    for (std::size_t k = 0; k < cycles; ++k) {
      cp_total += apply_all(*cp, fc, s.cycle.cycle);
      gr_total += apply_all(*gr, fg, s.cycle.cycle);
    }
    fc.assert_proper();
    const double updates = static_cast<double>(6 * cycles);
    double cp_amortized = static_cast<double>(cp_total) / updates;
    double cp_with_warmup = static_cast<double>(cp_total + cp_warm) / (updates + 6);
    double gr_amortized = static_cast<double>(gr_total) / updates;
    double ratio = gr_amortized / std::max(cp_amortized, resolution);
    v.pass = v.pass && cp_with_warmup <= kColorfulPathCeiling && gr_amortized > prev_greedy && ratio > prev_ratio;
    prev_ratio = ratio;
    prev_greedy = gr_amortized;
    v.detail += "cycle d=" + std::to_string(d) + ": colorful " + num(cp_amortized) + " (warm-up " +
                std::to_string(cp_warm) + ") greedy " + num(gr_amortized) + " ratio " + num(ratio) + "; ";
  }
  return v;
}

// -------------------------------------------------------- 6: uniformity

struct UniformityCase {
  std::string name;
  std::string algorithm;
  std::string script;
};

Verdict uniformity() {
  // path 0-1-2-3 and the two-level binary tree rooted at 0
  const std::vector<UniformityCase> path = {
      {"path inc", "dist-maint", "+ 0 1\n+ 1 2\n+ 2 3\n"},
      {"path middle", "dist-maint", "+ 2 3\n+ 0 1\n+ 1 2\n"},
      {"path relink", "dist-maint", "+ 0 1\n+ 1 2\n+ 2 3\n- 1 2\n+ 1 2\n"},
      {"path churn", "dist-maint", "+ 1 2\n+ 0 1\n+ 2 3\n- 0 1\n+ 0 1\n- 2 3\n+ 2 3\n"},
      {"path rooted", "dist-maint-rooted", "+ 0 1 p=0\n+ 2 3 p=2\n+ 1 2 p=1\n- 0 1\n+ 0 1 p=1\n"},
  };
  const std::vector<UniformityCase> binary = {
      {"tree top-down", "dist-maint", "+ 0 1\n+ 0 2\n+ 1 3\n+ 1 4\n+ 2 5\n+ 2 6\n"},
      {"tree bottom-up", "dist-maint", "+ 1 3\n+ 1 4\n+ 2 5\n+ 2 6\n+ 0 1\n+ 0 2\n"},
      {"tree relink", "dist-maint", "+ 0 1\n+ 0 2\n+ 1 3\n+ 1 4\n+ 2 5\n+ 2 6\n- 0 1\n+ 0 1\n- 2 6\n+ 2 6\n"},
      {"tree churn", "dist-maint", "+ 1 3\n+ 1 4\n+ 2 5\n+ 2 6\n+ 0 1\n+ 0 2\n- 0 2\n+ 0 2\n- 1 3\n+ 1 3\n"},
      {"tree rooted", "dist-maint-rooted",
       "+ 1 3 p=1\n+ 1 4 p=1\n+ 2 5 p=2\n+ 2 6 p=2\n+ 0 1 p=0\n+ 0 2 p=0\n- 0 1\n+ 0 1 p=0\n"},
  };
  const double threshold = kUniformityAlpha / static_cast<double>(kUniformityTests);
  Verdict v;
  v.pass = true;
  double worst = 1.0;
  std::string worst_case;
  std::size_t tests = 0;
  for (Color extra : {Color{0}, Color{1}}) {
    Palette pal = Palette(3, extra);
    for (const auto* cases : {&path, &binary}) {
      std::size_t n = cases == &path ? 4 : 7;
      for (const UniformityCase& c : *cases) {
        UpdateSequence seq = parse_sequence(c.script);
        ColoredForest shape(n, pal);
        for (const Update& up : seq) {
          if (up.kind == UpdateKind::Insert) {
            shape.insert_topology(up.u, up.v, up.parent_hint);
          } else {
            shape.delete_topology(EdgeKey(up.u, up.v));
          }
        }
        const std::size_t support = enumerate_proper_colorings(shape).size();
        std::vector<std::uint64_t> counts;
        std::map<std::uint64_t, std::size_t> cell;
        for (std::size_t run = 0; run < kUniformityRuns; ++run) {
          ColoredForest f(n, pal);
          auto alg = make_algorithm(c.algorithm, pal, mix_seed(600 + tests, run));
          apply_all(*alg, f, seq);
          std::uint64_t key = f.coloring_hash();
          auto [it, fresh] = cell.emplace(key, counts.size());
          if (fresh) counts.push_back(0);
          ++counts[it->second];
        }
        ChiSquare chi = chisq_uniformity(counts, support);
        ++tests;
        if (chi.p_value < worst) {
          worst = chi.p_value;
          worst_case = c.name + " kappa=" + std::to_string(pal.kappa());
        }
        v.pass = v.pass && chi.p_value > threshold;
      }
    }
  }
  v.pass = v.pass && tests == kUniformityTests;
  v.detail = std::to_string(tests) + " tests at " + std::to_string(kUniformityRuns) + " runs, smallest p " +
             num(worst) + " (" + worst_case + "), threshold " + num(threshold);
  return v;
}

// ---------------------------------------------- 7: per-depth probabilities

Verdict depth_probabilities() {
  Palette pal(3, 1);
  const unsigned h = 5;
  const unsigned arity = pal.delta() - 1;
  std::size_t tree = complete_tree_vertices(arity, h);
  ColoredForest base(tree + 1, pal);
  VertexId next = 1;
  build_complete_tree(base, 0, arity, h, next);
  const VertexId top = static_cast<VertexId>(tree);
  RootedView view = rooted_view(base, 0);
  std::vector<unsigned> depth(base.vertex_count(), 0);
  for (VertexId u : view.order) {
    if (u != 0) depth[u] = depth[view.parent[u]] + 1;
  }
  std::vector<std::uint64_t> hits(h + 1, 0);
  bool exclusive = true;
  Rng rng(700);
  for (std::size_t t = 0; t < kDepthTrials; ++t) {
    ColoredForest f = base;
    sample_uniform_coloring(f, rng);
    auto before = f.coloring();
    dm_update_rooted(f, Update::insert(top, 0, top), rng);
    std::vector<unsigned> per(h + 1, 0);
    for (const auto& [key, col] : before) {
      if (f.color(key.a, key.b) == col) continue;
      unsigned d = std::max(depth[key.a], depth[key.b]);
      ++per[d];
    }
    for (unsigned d = 1; d <= h; ++d) {
      hits[d] += per[d];
      if (per[d] > 1) exclusive = false;
    }
  }
  Verdict v;
  v.pass = exclusive;
  double worst = 0;
  for (unsigned d = 1; d <= h; ++d) {
    double p = recolor_probability(pal.kappa(), d).convert_to<double>();
    double m = std::pow(static_cast<double>(arity), static_cast<double>(d));
    // one edge per depth at most, so the depth count is binomial with m * p
    double trials = static_cast<double>(kDepthTrials);
    double q = m * p;
    double sigma = std::sqrt(trials * q * (1 - q)) / (trials * m);
    double freq = static_cast<double>(hits[d]) / (trials * m);
    double z = std::abs(freq - p) / sigma;
    worst = std::max(worst, z);
    v.pass = v.pass && z <= kSigmas;
    v.detail += "d=" + std::to_string(d) + " " + num(freq) + " vs " + num(p) + "; ";
  }
  v.detail += "max deviation " + num(worst) + " sigma";
  return v;
}

// ------------------------------------------------------------- 8: toggle

struct ToggleStats {
  double mean = 0;
  double sigma = 0;
};

ToggleStats toggle_insert_recourse(const Palette& pal, unsigned h, std::size_t toggles, std::uint64_t seed) {
  TwoTrees t = make_two_trees(pal, h, seed);
  ColoredForest f = t.initial;
  auto alg = make_algorithm("dist-maint", pal, mix_seed(seed, 1));
  std::vector<double> batch(kToggleBatches, 0);
  const std::size_t per = toggles / kToggleBatches;
  double total = 0;
  for (std::size_t k = 0; k < per * kToggleBatches; ++k) {
    double r = static_cast<double>(alg->apply(f, Update::insert(t.r1, t.r2)));
    alg->apply(f, Update::erase(t.r1, t.r2));
    batch[k / per] += r;
    total += r;
  }
  ToggleStats s;
  const double count = static_cast<double>(per * kToggleBatches);
  s.mean = total / count;
  double var = 0;
  for (double b : batch) {
    double m = b / static_cast<double>(per);
    var += (m - s.mean) * (m - s.mean);
  }
  var /= static_cast<double>(kToggleBatches - 1);
  s.sigma = std::sqrt(var / static_cast<double>(kToggleBatches));
  return s;
}

Verdict toggle() {
  Verdict v;
  v.pass = true;
  const unsigned h = 6;
  for (Color kappa : {Color{4}, Color{5}}) {
    Palette pal = Palette::relaxed(3, kappa - 3);
    ToggleStats s = toggle_insert_recourse(pal, h, kToggles, 800 + kappa);
    double want = toggle_expected_recourse(3, kappa, h).convert_to<double>();
    double z = std::abs(s.mean - want) / s.sigma;
    v.pass = v.pass && z <= kSigmas;
    v.detail += "kappa=" + std::to_string(kappa) + ": " + num(s.mean) + " vs " + num(want) + " (" + num(z) +
                " sigma); ";
  }
  // kappa = delta: each level is recolored with probability one once reached
  Palette pal(3, 0);
  std::vector<double> means;
  for (unsigned hh : {2u, 4u, 6u}) {
    ToggleStats s = toggle_insert_recourse(pal, hh, kToggles / 2, 850 + hh);
    double want = toggle_expected_recourse(3, 3, hh).convert_to<double>();
    double z = std::abs(s.mean - want) / s.sigma;
    v.pass = v.pass && z <= kSigmas;
    means.push_back(s.mean);
    v.detail += "kappa=3 h=" + std::to_string(hh) + ": " + num(s.mean) + " vs " + num(want) + "; ";
  }
  // equal increments in h give equal increments in recourse
  double step1 = means[1] - means[0];
  double step2 = means[2] - means[1];
  bool linear = step1 > 0 && step2 > 0 && std::abs(step1 - step2) <= 0.25 * std::max(step1, step2);
  v.pass = v.pass && linear;
  v.detail += linear ? "linear in h" : "not linear in h";
  return v;
}

// ------------------------------------------------- 9: incremental 1/delta

Verdict incremental_delta() {
  Verdict v;
  v.pass = true;
  const std::size_t n = 10000;
  for (Color delta : {Color{4}, Color{8}, Color{16}, Color{32}}) {
    Palette pal(delta, 0);
    UpdateSequence seq = gen_random_incremental(n, delta, 900 + delta);
    ColoredForest f(n, pal);
    auto alg = make_algorithm("dist-maint", pal, 901 + delta);
    double up = static_cast<double>(apply_all(*alg, f, seq)) / static_cast<double>(seq.size());
    f.assert_proper();
    RandIncremental rc = gen_rand_c0_incremental(pal, n, 950 + delta);
    ColoredForest g(rc.vertices, pal);
    auto alg2 = make_algorithm("dist-maint", pal, 951 + delta);
    double lo = static_cast<double>(apply_all(*alg2, g, rc.updates)) / static_cast<double>(rc.updates.size());
    g.assert_proper();
    v.pass = v.pass && up <= kIncrementalCeiling / delta && lo >= kIncrementalFloor / delta;
    v.detail += "D=" + std::to_string(delta) + ": random " + num(up * delta) + "/D, adversary " + num(lo * delta) +
                "/D; ";
  }
  return v;
}

// ------------------------------------------------------ 10: sublinear

// Smaller side: a caterpillar hanging from z. Spine edges alternate colors 1
// and 2 starting with 1 at z, every spine vertex carries pendants colored 3
// and 4. In the hairy variant each pendant gets children of its own.
// Larger side: a star-like tree at x missing only color 1.
struct Caterpillar {
  ColoredForest f;
  VertexId x;
  VertexId z;
};

Caterpillar make_caterpillar(std::size_t target_edges, bool hairy, std::uint64_t seed) {
  Palette pal(4, 0);
  const std::size_t per_spine = hairy ? 3 + 2 * 2 : 3;
  const std::size_t spine = std::max<std::size_t>(2, target_edges / per_spine);
  const std::size_t small = spine * per_spine + 8;
  const std::size_t big = 2 * small + 8;
  ColoredForest f(small + big, pal);
  Rng rng(seed);
  VertexId next = 0;
  auto link = [&](VertexId a, VertexId b, Color c) {
    f.insert_topology(a, b, a);
    f.set_color(a, b, c);
  };
  VertexId z = next++;
  VertexId prev = z;
  std::vector<VertexId> spine_vs{z};
  for (std::size_t i = 0; i < spine; ++i) {
    VertexId s = next++;
    link(prev, s, i % 2 == 0 ? 1 : 2);
    spine_vs.push_back(s);
    prev = s;
  }
  for (std::size_t i = 0; i < spine_vs.size(); ++i) {
    VertexId s = spine_vs[i];
    for (Color c : {Color{3}, Color{4}}) {
      if (f.degree(s) >= pal.delta()) break;
      VertexId p = next++;
      link(s, p, c);
      if (!hairy) continue;
      // children avoiding c, random subset of the rest
      std::vector<Color> rest;
      for (Color k = 1; k <= 4; ++k) {
        if (k != c) rest.push_back(k);
      }
      std::size_t kids = 1 + rng.uniform_index(2);
      for (std::size_t k = 0; k < kids; ++k) {
        std::size_t j = rng.uniform_index(rest.size());
        VertexId q = next++;
        link(p, q, rest[j]);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      }
    }
  }
  // x: colors 2, 3, 4 used, each edge leading to a path of length big/3
  VertexId x = next++;
  for (Color c : {Color{2}, Color{3}, Color{4}}) {
    VertexId a = next++;
    link(x, a, c);
    VertexId cur = a;
    Color last = c;
    for (std::size_t k = 0; k + 1 < small / 2 + 1 && next < f.vertex_count(); ++k) {
      VertexId b = next++;
      Color col = last == 1 ? 2 : 1;
      link(cur, b, col);
      last = col;
      cur = b;
    }
  }
  return Caterpillar{std::move(f), x, z};
}

Verdict sublinear() {
  Verdict v;
  v.pass = true;
  for (std::size_t n : {std::size_t{1} << 10, std::size_t{1} << 14}) {
    std::size_t worst = 0;
    std::uint64_t budget = 0;
    std::size_t truncations = 0;
    for (bool hairy : {false, true}) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        Caterpillar c = make_caterpillar(n, hairy, 1000 + seed);
        c.f.assert_proper();
        EdgeKey e = c.f.insert_topology(c.x, c.z, c.x);
        SublinearStats st;
        std::size_t r = sublinear_insert(c.f, e, &st);
        c.f.assert_proper();
        budget = std::max(budget, st.plan.budget());
        truncations += st.truncations;
        worst = std::max(worst, r);
        v.pass = v.pass && static_cast<double>(r) <= kSublinearSlack * static_cast<double>(st.plan.budget()) &&
                 st.truncations > 0;
      }
    }
    v.detail += "N=" + std::to_string(n) + ": worst " + std::to_string(worst) + " vs 2x" + std::to_string(budget) +
                " (" + std::to_string(truncations) + " truncations); ";
  }
  // balanced trees: no truncation, one root-to-leaf path at most
  Palette pal(4, 0);
  for (unsigned h : {6u, 8u}) {
    std::size_t worst = 0;
    bool ok = true;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      std::size_t tree = complete_tree_vertices(3, h);
      ColoredForest f(2 * tree, pal);
      VertexId next = 1;
      build_complete_tree(f, 0, 3, h, next);
      VertexId r2 = next++;
      build_complete_tree(f, r2, 3, h, next);
      Rng rng(1100 + seed);
      sample_uniform_coloring(f, rng);
      EdgeKey e = f.insert_topology(0, r2, 0);
      std::size_t r = sublinear_insert(f, e);
      f.assert_proper();
      worst = std::max(worst, r);
      ok = ok && r <= h + 1;
    }
    v.pass = v.pass && ok;
    v.detail += "balanced h=" + std::to_string(h) + ": worst " + std::to_string(worst) + "; ";
  }
  return v;
}

// ------------------------------------------------------------- 11: delta 2

Verdict delta2() {
  Verdict v;
  Palette pal(2, 0);
  const std::uint64_t seeds = 8;
  std::vector<double> ratios;
  double total_top = 0, floor_top = 0;
  for (unsigned k = 8; k <= 12; ++k) {
    std::size_t n = std::size_t{1} << k;
    double total = 0;
    for (std::uint64_t s = 0; s < seeds; ++s) {
      UpdateSequence seq = gen_delta2_doubling(n, mix_seed(1200 + k, s));
      ColoredForest f(n, pal);
      auto alg = make_algorithm("greedy", pal);
      total += static_cast<double>(apply_all(*alg, f, seq));
      f.assert_proper();
    }
    total /= static_cast<double>(seeds);
    double nlgn = static_cast<double>(n) * k;
    ratios.push_back(total / nlgn);
    if (k == 12) {
      total_top = total;
      floor_top = kDoublingFloor * nlgn;
    }
    v.detail += "n=2^" + std::to_string(k) + ": " + num(total / nlgn) + "; ";
  }
  double lo = *std::min_element(ratios.begin(), ratios.end());
  double hi = *std::max_element(ratios.begin(), ratios.end());
  v.pass = total_top >= floor_top && lo > 0 && hi <= kDoublingSpread * lo;
  v.detail += "mean total at 2^12 " + num(total_top) + " vs floor " + num(floor_top);
  return v;
}

// ---------------------------------------------------------- 12: determinism

Verdict determinism() {
  Verdict v;
  v.pass = true;
  struct Run {
    const char* alg;
    const char* workload;
    Color delta, extra;
  };
  for (const Run& r : {Run{"dist-maint", "random-dynamic", 4, 1}, Run{"dist-maint", "adv:toggle", 3, 1},
                       Run{"dist-maint-rooted", "random-rooted", 3, 1}, Run{"greedy", "adv:delta2", 2, 0}}) {
    ExperimentConfig cfg;
    cfg.algorithm = r.alg;
    cfg.workload = r.workload;
    cfg.delta = r.delta;
    cfg.extra = r.extra;
    cfg.n = 300;
    cfg.steps = 600;
    cfg.depth = 4;
    cfg.reps = 3;
    cfg.seed = 1212;
    std::string a = to_csv(run_experiment(cfg));
    std::string b = to_csv(run_experiment(cfg));
    cfg.seed = 1213;
    std::string c = to_csv(run_experiment(cfg));
    bool ok = a == b && a != c;
    v.pass = v.pass && ok;
    v.detail += std::string(r.alg) + " on " + r.workload + (ok ? ": identical" : ": differs") + "; ";
  }
  return v;
}

const char* criterion_name(int id) {
  switch (id) {
    case 1: return "oracle-equivalence";
    case 2: return "incremental-greedy-lb";
    case 3: return "layered-cycle";
    case 4: return "owner-stars";
    case 5: return "colorful-path-constant";
    case 6: return "dist-maint-uniformity";
    case 7: return "recolor-probabilities";
    case 8: return "toggle-expectation";
    case 9: return "incremental-one-over-delta";
    case 10: return "sublinear-worst-case";
    case 11: return "delta2-doubling";
    case 12: return "determinism";
    default: return "unknown";
  }
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = {"oracles", "deterministic", "randomized", "all"};
  return ids;
}

std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "oracles") return {1};
  if (suite == "deterministic") return {2, 3, 4, 5, 10, 11};
  if (suite == "randomized") return {6, 7, 8, 9, 12};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + suite + "'");
}

Verdict run_criterion(int id, const AcceptanceOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    switch (id) {
      case 1: v = oracle_equivalence(opts); break;
      case 2: v = incremental_lb(); break;
      case 3: v = layered_cycle(); break;
      case 4: v = owner_stars(); break;
      case 5: v = colorful_path(); break;
      case 6: v = uniformity(); break;
      case 7: v = depth_probabilities(); break;
      case 8: v = toggle(); break;
      case 9: v = incremental_delta(); break;
      case 10: v = sublinear(); break;
      case 11: v = delta2(); break;
      case 12: v = determinism(); break;
      default: v.detail = "no such criterion";
    }
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("error: ") + e.what();
  }
  while (v.detail.size() >= 2 && v.detail.ends_with("; ")) v.detail.resize(v.detail.size() - 2);
  v.id = id;
  v.name = criterion_name(id);
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<Verdict> run_acceptance(const std::string& suite, const AcceptanceOptions& opts) {
  std::vector<Verdict> out;
  for (int id : suite_criteria(suite)) out.push_back(run_criterion(id, opts));
  return out;
}

std::string format_verdict(const Verdict& v) {
  std::string id = std::to_string(v.id);
  if (id.size() < 2) id = " " + id;
  return std::string(v.pass ? "PASS " : "FAIL ") + id + " " + v.name + ": " + v.detail + " [" + num(v.seconds) + " s]";
}

}  // namespace forestcolor
