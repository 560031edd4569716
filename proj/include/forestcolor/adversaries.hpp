#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forestcolor/dist_maint.hpp"
#include "forestcolor/forest.hpp"
#include "forestcolor/greedy.hpp"

namespace forestcolor {

// What an adversary sees and controls: the forest (read-only), the update
// channel, and the algorithm's scripted ties when it has any.
class UpdateChannel {
 public:
  virtual ~UpdateChannel() = default;
  virtual const ColoredForest& forest() const = 0;
  // Applies the update through the algorithm under test, returns its recourse.
  virtual std::size_t apply(const Update& up) = 0;
  // Scripted tie feed, or null when the algorithm has no tie-breaker or is not scripted.
  virtual TieBreaker* ties() { return nullptr; }
};

class AdaptiveAdversary {
 public:
  virtual ~AdaptiveAdversary() = default;
  virtual std::string id() const = 0;
  virtual std::size_t vertex_count() const = 0;
  virtual Palette palette() const = 0;
  // Issues updates until done. Every update is legal for the current forest.
  virtual void play(UpdateChannel& ch) = 0;
};

// Channel that applies updates straight to a forest through an algorithm and
// records recourse.
class Algorithm;
class DirectChannel final : public UpdateChannel {
 public:
  DirectChannel(ColoredForest& f, Algorithm& alg, RecourseLedger* ledger = nullptr);
  const ColoredForest& forest() const override { return f_; }
  std::size_t apply(const Update& up) override;
  TieBreaker* ties() override;

  // Called after each update with (update, recourse).
  std::function<void(const Update&, std::size_t)> on_update;

 private:
  ColoredForest& f_;
  Algorithm& alg_;
  RecourseLedger* ledger_;
};

// Replays a fixed sequence.
class SequenceAdversary final : public AdaptiveAdversary {
 public:
  SequenceAdversary(std::string id, Palette pal, std::size_t n, UpdateSequence seq)
      : id_(std::move(id)), pal_(pal), n_(n), seq_(std::move(seq)) {}
  std::string id() const override { return id_; }
  std::size_t vertex_count() const override { return n_; }
  Palette palette() const override { return pal_; }
  void play(UpdateChannel& ch) override {
    for (const Update& up : seq_) ch.apply(up);
  }
  const UpdateSequence& sequence() const { return seq_; }

 private:
  std::string id_;
  Palette pal_;
  std::size_t n_;
  UpdateSequence seq_;
};

// ---- incremental greedy lower bound ----

struct IncrementalGreedyLb {
  unsigned ell = 1;
  std::size_t vertices = 0;
  UpdateSequence updates;
  std::vector<Color> ties;  // one per insertion
  std::size_t predicted_recourse = 0;
};

unsigned incremental_lb_ell(unsigned delta, unsigned extra);
IncrementalGreedyLb gen_incremental_greedy_lb(const Palette& pal);

// ---- thresholds ----

struct Thresholds {
  BigInt n0;
  BigInt n1;
  BigInt n2;
};

BigInt binomial(unsigned n, unsigned k);
Thresholds adversary_thresholds(const Palette& pal);

// ---- owner stars ----

// The (delta-1)-subsets of [kappa], lexicographic.
std::vector<ColorSet> star_palettes(const Palette& pal);

struct OwnerStarLayout {
  std::size_t stars = 0;  // (c+1) * |palettes| + 1
  std::size_t owners = 0;
  std::size_t vertices = 0;
};
OwnerStarLayout owner_star_layout(const Palette& pal);

struct OwnerStarProgress {
  std::size_t steps = 0;
  std::size_t updates = 0;
  std::size_t recourse = 0;
  std::size_t disconnects = 0;
};

// Throws InsufficientVertices when n is below the layout's vertex count.
// Checkpoints (if set) receive progress after each completed step.
class OwnerStarAdversary final : public AdaptiveAdversary {
 public:
  OwnerStarAdversary(const Palette& pal, std::size_t steps, std::size_t n = 0);
  std::string id() const override { return "adv:owner-stars"; }
  std::size_t vertex_count() const override { return n_; }
  Palette palette() const override { return pal_; }
  void play(UpdateChannel& ch) override;

  std::function<void(const OwnerStarProgress&)> on_step;

 private:
  ColorSet star_palette(const ColoredForest& f, std::size_t star) const;

  Palette pal_;
  std::size_t steps_;
  std::size_t n_;
  OwnerStarLayout layout_;
  std::vector<ColorSet> palettes_;
};

// ---- layered trees ----

ColorSet complement(ColorSet p, const Palette& pal);

// Vertex count of a perfect P-layered tree of the given depth.
std::size_t layered_tree_vertices(std::size_t p_size, std::size_t pbar_size, unsigned depth);

// Builds a perfect P-layered tree below `root` on fresh vertices starting at
// next_free. Child j of a vertex gets the j-th smallest color of its layer's
// sub-palette. Returns the tree's vertices in BFS order.
std::vector<VertexId> build_layered_tree(ColoredForest& f, VertexId root, ColorSet p, unsigned depth,
                                         VertexId& next_free);

// Structural check from `root`: full, and layer colors alternate P / complement.
bool is_layered(const ColoredForest& f, VertexId root, ColorSet p);

struct GreedyCycle {
  unsigned d = 0, d1 = 0, d2 = 0;
  ColorSet p;
  VertexId r1 = kNoVertex, r2 = kNoVertex, r3 = kNoVertex, r4 = kNoVertex;
  VertexId u1 = kNoVertex, u2 = kNoVertex;
  UpdateSequence cycle;  // 6 updates
  std::size_t predicted_recourse = 0;
  // Greedy tie script for one cycle (one entry per insertion) that realizes the
  // predicted recourse, and whether LexMin already does so.
  std::vector<Color> ties;
  bool lexmin_exact = false;
};

// Cycle for two given trees: r1 roots a P-layered tree, r2 a complementary
// one, both of depth d. u_i lies d_i steps below r_i along lowest-id children.
GreedyCycle greedy_cycle_for(const ColoredForest& f, VertexId r1, VertexId r2, ColorSet p, unsigned d);

struct LayeredCycleSetup {
  ColoredForest initial;
  GreedyCycle cycle;
};
// Fills g.ties and g.lexmin_exact by replaying greedy from `initial`. Throws
// NotApplicable when no tie choice gives the predicted per-step recourse.
void script_greedy_cycle(const ColoredForest& initial, GreedyCycle& g);

// |P| = c+1. Throws DepthTooSmall when d < 6.
LayeredCycleSetup gen_greedy_cycle(const Palette& pal, unsigned d);

// Builds a P-layered and a complementary layered tree of depth d from the
// empty forest by star replication, against a deterministic algorithm that
// never recolors when it does not have to. Throws NotApplicable when the
// algorithm recolors anyway.
class BootstrapLayeredAdversary final : public AdaptiveAdversary {
 public:
  BootstrapLayeredAdversary(const Palette& pal, unsigned depth, std::size_t n = 0);
  std::string id() const override { return "adv:layered-bootstrap"; }
  std::size_t vertex_count() const override { return n_; }
  Palette palette() const override { return pal_; }
  void play(UpdateChannel& ch) override;

  // Valid after play().
  VertexId p_root() const { return p_root_; }
  VertexId pbar_root() const { return pbar_root_; }
  ColorSet p() const { return p_; }
  std::size_t stars_built() const { return stars_built_; }

  static std::size_t required_vertices(const Palette& pal, unsigned depth);

 private:
  Palette pal_;
  unsigned depth_;
  std::size_t n_;
  VertexId p_root_ = kNoVertex;
  VertexId pbar_root_ = kNoVertex;
  ColorSet p_;
  std::size_t stars_built_ = 0;
};

// ---- delta = 2 doubling ----

// d_1 = 1, d_{i+1} = 2 d_i + 1 + (d_i mod 2).
std::uint64_t doubling_length(unsigned i);
// Largest level whose path fits in n vertices (d_level + 1 <= n); 0 if none.
unsigned doubling_levels(std::size_t n);

// Merges paths level by level. Adaptive: links the endpoint that forces
// recoloring. Oblivious: picks the endpoint with a seeded coin.
class Delta2DoublingAdversary final : public AdaptiveAdversary {
 public:
  Delta2DoublingAdversary(std::size_t n, bool adaptive, std::uint64_t seed = 0);
  std::string id() const override { return "adv:delta2"; }
  std::size_t vertex_count() const override { return n_; }
  Palette palette() const override { return Palette(2, 0); }
  void play(UpdateChannel& ch) override;

  unsigned levels() const { return levels_; }
  // Sum over merges of the shorter side (a lower bound on forced recourse
  // for the adaptive version).
  std::uint64_t forced_recourse() const;
  bool parity_ok() const { return parity_ok_; }

  // Plays on an arbitrary vertex set using only `colors` (two of them) on the
  // new edges. Used by the shift-star reduction.
  void play_on(UpdateChannel& ch, const std::vector<VertexId>& vertices, ColorSet colors);

 private:
  std::size_t n_;
  bool adaptive_;
  Rng rng_;
  unsigned levels_;
  bool parity_ok_ = true;
};

// Oblivious static version.
UpdateSequence gen_delta2_doubling(std::size_t n, std::uint64_t seed);

// ---- shift-star reduction ----

struct ShiftStarReport {
  std::size_t stars = 0;
  std::size_t groups = 0;        // distinct star palettes
  std::size_t palette_changes = 0;  // stars whose leaf palette changed after setup
  std::uint64_t proof_bound_k = 0;  // K = floor(n / (star size))
  std::uint64_t proof_bound_b = 0;  // B = number of possible star palettes
};

// c = 0: stars of degree delta-2 grouped by palette, doubling on the centers
// of each group. c >= 1: stars of degree delta-c-2, then layered bootstrap and
// the greedy cycle on the centers of the largest group, `cycles` times.
class ShiftStarAdversary final : public AdaptiveAdversary {
 public:
  ShiftStarAdversary(const Palette& pal, std::size_t n, unsigned cycles = 10);
  std::string id() const override { return "adv:shift-stars"; }
  std::size_t vertex_count() const override { return n_; }
  Palette palette() const override { return pal_; }
  void play(UpdateChannel& ch) override;
  const ShiftStarReport& report() const { return report_; }

 private:
  Palette pal_;
  std::size_t n_;
  unsigned cycles_;
  ShiftStarReport report_;
};

// ---- randomized constructions for c = 0 ----

// Repeated rounds: two (delta-1)-stars, then a fair coin links their centers
// directly or through a fresh middle vertex.
struct RandIncremental {
  std::size_t vertices = 0;
  std::size_t rounds = 0;
  UpdateSequence updates;
};
RandIncremental gen_rand_c0_incremental(const Palette& pal, std::size_t n, std::uint64_t seed);

// Complete (delta-1)-ary trees: root has delta-1 children, so does every inner vertex.
std::size_t complete_tree_vertices(unsigned arity, unsigned h);
std::vector<VertexId> build_complete_tree(ColoredForest& f, VertexId root, unsigned arity, unsigned h,
                                          VertexId& next_free);

struct TwoTrees {
  ColoredForest initial;
  VertexId r1 = kNoVertex, r2 = kNoVertex;
  VertexId spare = kNoVertex;  // isolated helper vertex
  unsigned h = 0;
};
// Two complete (delta-1)-ary trees of height h plus one spare vertex, colored
// from the top-down distribution.
TwoTrees make_two_trees(const Palette& pal, unsigned h, std::uint64_t seed);

// Alternates linking the roots directly with linking both to the spare vertex,
// deleting between rounds.
UpdateSequence gen_rand_c0_dynamic(const TwoTrees& t, std::size_t rounds);

// Insert/delete (r1, r2) `toggles` times.
UpdateSequence gen_toggle_workload(const TwoTrees& t, std::size_t toggles);

}  // namespace forestcolor
