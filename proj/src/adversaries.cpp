#include "forestcolor/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "forestcolor/algorithm.hpp"

namespace forestcolor {

// ---------------------------------------------------------------- channels

DirectChannel::DirectChannel(ColoredForest& f, Algorithm& alg, RecourseLedger* ledger)
    : f_(f), alg_(alg), ledger_(ledger) {}

std::size_t DirectChannel::apply(const Update& up) {
  std::size_t r = alg_.apply(f_, up);
  if (ledger_) ledger_->record(r);
  if (on_update) on_update(up, r);
  return r;
}

TieBreaker* DirectChannel::ties() {
  TieBreaker* tb = alg_.tie_breaker();
  if (tb == nullptr || tb->policy() != TieBreaker::Policy::Scripted) return nullptr;
  return tb;
}

// ------------------------------------------------- incremental greedy bound

namespace {

double lb_ratio(unsigned ell, unsigned delta, unsigned extra) {
  double l = ell;
  return l / (delta + (l * l + (2.0 * extra + 1.0) * l) / 2.0);
}

}  // namespace

unsigned incremental_lb_ell(unsigned delta, unsigned extra) {
  double root = std::sqrt(2.0 * delta);
  unsigned lo = static_cast<unsigned>(std::floor(root));
  unsigned hi = static_cast<unsigned>(std::ceil(root));
  unsigned best = 0;
  for (unsigned ell : {lo, hi}) {
    if (ell < 1 || ell + 1 + extra > delta) continue;
    if (best == 0 || lb_ratio(ell, delta, extra) > lb_ratio(best, delta, extra)) best = ell;
  }
  return best == 0 ? 1 : best;
}

IncrementalGreedyLb gen_incremental_greedy_lb(const Palette& pal) {
  const unsigned delta = pal.delta();
  const unsigned c = pal.extra();
  if (delta < 3) throw Error(ErrorKind::InvalidArgument, "incremental lower bound needs delta >= 3");
  IncrementalGreedyLb out;
  out.ell = incremental_lb_ell(delta, c);
  const unsigned ell = out.ell;
  VertexId next = 0;
  VertexId u = next++;
  for (unsigned k = 0; k < delta - ell; ++k) {
    VertexId leaf = next++;
    out.updates.push_back(Update::insert(u, leaf, u));
    out.ties.push_back(ell + c + 1 + k);
  }
  for (unsigned i = 1; i <= ell; ++i) {
    VertexId v = next++;
    for (unsigned col = i; col <= ell + c; ++col) {
      VertexId leaf = next++;
      out.updates.push_back(Update::insert(v, leaf, v));
      out.ties.push_back(col);
    }
    out.updates.push_back(Update::insert(u, v, u));
    out.ties.push_back(i);
  }
  out.vertices = next;
  out.predicted_recourse = ell;
  return out;
}

// --------------------------------------------------------------- thresholds

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt threshold_n1(unsigned delta, unsigned c) {
  BigInt b = binomial(delta + c, c + 1);
  BigInt m = BigInt(c + 1) * (delta - 1);
  BigInt need = (m - 1) * b + 1;
  BigInt per_star = binomial(delta, c + 1);
  return ceil_div(need, per_star) * (delta + 1);
}

}  // namespace

Thresholds adversary_thresholds(const Palette& pal) {
  const unsigned delta = pal.delta();
  const unsigned c = pal.extra();
  if (delta < 3) throw Error(ErrorKind::InvalidArgument, "thresholds need delta >= 3");
  Thresholds t;
  BigInt b = binomial(delta + c, c + 1);
  BigInt stars = BigInt(c + 1) * b + 1;  // (M-1) B + 1 with M = c+2
  t.n0 = stars * delta + b;
  t.n1 = threshold_n1(delta, c);
  int x = std::min<int>(2 * static_cast<int>(c) + 2, static_cast<int>(delta) - static_cast<int>(c) - 2);
  BigInt shift_bound = 0;
  if (x > 0) {
    unsigned ux = static_cast<unsigned>(x);
    BigInt num = BigInt(delta) * ux * (delta + c - ux) * binomial(delta + c, ux);
    shift_bound = ceil_div(num, binomial(delta, ux));
  }
  t.n2 = std::max(shift_bound, threshold_n1(c + 2, c));
  return t;
}

// -------------------------------------------------------------- owner stars

std::vector<ColorSet> star_palettes(const Palette& pal) {
  const unsigned kappa = pal.kappa();
  const unsigned size = pal.delta() - 1;
  std::vector<ColorSet> out;
  std::vector<unsigned> idx(size);
  for (unsigned i = 0; i < size; ++i) idx[i] = i + 1;
  while (true) {
    ColorSet s;
    for (unsigned c : idx) s.insert(c);
    out.push_back(s);
    int i = static_cast<int>(size) - 1;
    while (i >= 0 && idx[i] == kappa - size + 1 + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

OwnerStarLayout owner_star_layout(const Palette& pal) {
  OwnerStarLayout l;
  l.owners = star_palettes(pal).size();
  l.stars = (pal.extra() + 1) * l.owners + 1;
  l.vertices = l.stars * pal.delta() + l.owners;
  return l;
}

OwnerStarAdversary::OwnerStarAdversary(const Palette& pal, std::size_t steps, std::size_t n)
    : pal_(pal), steps_(steps), layout_(owner_star_layout(pal)), palettes_(star_palettes(pal)) {
  if (pal.delta() < 3) throw Error(ErrorKind::InvalidArgument, "owner stars need delta >= 3");
  if (n != 0 && n < layout_.vertices) {
    throw Error(ErrorKind::InsufficientVertices,
                "need " + std::to_string(layout_.vertices) + " vertices, got " + std::to_string(n));
  }
  n_ = std::max(n, layout_.vertices);
}

ColorSet OwnerStarAdversary::star_palette(const ColoredForest& f, std::size_t star) const {
  VertexId center = static_cast<VertexId>(star * pal_.delta());
  ColorSet s;
  for (const Incidence& inc : f.incident(center)) {
    if (inc.to < layout_.stars * pal_.delta()) s.insert(inc.color);
  }
  return s;
}

void OwnerStarAdversary::play(UpdateChannel& ch) {
  const unsigned delta = pal_.delta();
  const VertexId owner_base = static_cast<VertexId>(layout_.stars * delta);
  std::map<std::uint64_t, std::size_t> owner_of;
  for (std::size_t i = 0; i < palettes_.size(); ++i) owner_of[palettes_[i].bits()] = i;

  OwnerStarProgress prog;
  auto apply = [&](const Update& up) {
    prog.recourse += ch.apply(up);
    ++prog.updates;
  };
  for (std::size_t s = 0; s < layout_.stars; ++s) {
    VertexId center = static_cast<VertexId>(s * delta);
    for (unsigned k = 1; k < delta; ++k) apply(Update::insert(center, center + k, center));
  }
  // owner index per connected star, or npos
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> attached(layout_.stars, none);
  for (std::size_t step = 0; step < steps_; ++step) {
    std::size_t s = 0;
    while (s < layout_.stars && attached[s] != none) ++s;
    if (s == layout_.stars) throw Error(ErrorKind::InvalidArgument, "no isolated star left");
    const ColoredForest& f = ch.forest();
    std::size_t owner = owner_of.at(star_palette(f, s).bits());
    VertexId center = static_cast<VertexId>(s * delta);
    apply(Update::insert(owner_base + static_cast<VertexId>(owner), center, owner_base + static_cast<VertexId>(owner)));
    attached[s] = owner;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t t = 0; t < layout_.stars; ++t) {
        if (attached[t] == none) continue;
        if (star_palette(ch.forest(), t) == palettes_[attached[t]]) continue;
        apply(Update::erase(owner_base + static_cast<VertexId>(attached[t]), static_cast<VertexId>(t * delta)));
        attached[t] = none;
        ++prog.disconnects;
        changed = true;
      }
    }
    prog.steps = step + 1;
    if (on_step) on_step(prog);
  }
}

// ----------------------------------------------------------- layered trees

ColorSet complement(ColorSet p, const Palette& pal) { return pal.all() - p; }

std::size_t layered_tree_vertices(std::size_t p_size, std::size_t pbar_size, unsigned depth) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (unsigned t = 0; t < depth; ++t) {
    level *= (t % 2 == 0) ? p_size : pbar_size;
    total += level;
  }
  return total;
}

std::vector<VertexId> build_layered_tree(ColoredForest& f, VertexId root, ColorSet p, unsigned depth,
                                         VertexId& next_free) {
  const ColorSet pbar = complement(p, f.palette());
  std::vector<VertexId> order{root};
  std::vector<unsigned> level{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    VertexId v = order[i];
    unsigned t = level[i];
    if (t == depth) continue;
    for (Color col : (t % 2 == 0 ? p : pbar).to_vector()) {
      if (next_free >= f.vertex_count()) throw Error(ErrorKind::InsufficientVertices, "layered tree does not fit");
      VertexId w = next_free++;
      f.insert_topology(v, w, v);
      f.set_color(v, w, col);
      order.push_back(w);
      level.push_back(t + 1);
    }
  }
  return order;
}

bool is_layered(const ColoredForest& f, VertexId root, ColorSet p) {
  const ColorSet pbar = complement(p, f.palette());
  RootedView view = rooted_view(f, root);
  std::vector<unsigned> depth(f.vertex_count(), 0);
  for (VertexId v : view.order) {
    if (v != root) depth[v] = depth[view.parent[v]] + 1;
    ColorSet kids;
    std::size_t count = 0;
    for (const Incidence& inc : f.incident(v)) {
      if (inc.to == view.parent[v]) continue;
      kids.insert(inc.color);
      ++count;
    }
    if (count == 0) continue;
    ColorSet want = depth[v] % 2 == 0 ? p : pbar;
    if (count != want.size() || kids != want) return false;
  }
  return true;
}

namespace {

VertexId lowest_child_walk(const ColoredForest& f, const RootedView& view, VertexId from, unsigned steps) {
  VertexId v = from;
  for (unsigned i = 0; i < steps; ++i) {
    VertexId next = kNoVertex;
    for (const Incidence& inc : f.incident(v)) {
      // pendant leaves hung off the tree (shift-star reduction) are skipped
      if (inc.to == view.parent[v] || f.degree(inc.to) == 1) continue;
      if (next == kNoVertex || inc.to < next) next = inc.to;
    }
    if (next == kNoVertex) throw Error(ErrorKind::DepthTooSmall, "tree too shallow for the cycle");
    v = next;
  }
  return v;
}

}  // namespace

GreedyCycle greedy_cycle_for(const ColoredForest& f, VertexId r1, VertexId r2, ColorSet p, unsigned d) {
  if (d < 6) throw Error(ErrorKind::DepthTooSmall, "cycle needs depth >= 6");
  GreedyCycle g;
  g.d = d;
  g.d1 = d / 3;
  g.d2 = g.d1 - 1;
  g.p = p;
  g.r1 = r1;
  g.r2 = r2;
  RootedView v1 = rooted_view(f, r1);
  RootedView v2 = rooted_view(f, r2);
  g.u1 = lowest_child_walk(f, v1, r1, g.d1);
  g.r4 = lowest_child_walk(f, v1, g.u1, 1);
  g.u2 = lowest_child_walk(f, v2, r2, g.d2);
  g.r3 = lowest_child_walk(f, v2, g.u2, 1);
  g.cycle = {Update::erase(g.u1, g.r4),        Update::erase(g.u2, g.r3), Update::insert(r1, r2, r1),
             Update::insert(g.u2, g.r3, g.u2), Update::erase(r1, r2),     Update::insert(g.u1, g.r4, g.u1)};
  g.predicted_recourse = 2 * g.d1 + 2 * g.d2 + 1;
  return g;
}

namespace {

// Recourse the cycle's k-th update should cost.
std::size_t cycle_step_recourse(const GreedyCycle& g, std::size_t k) {
  switch (k) {
    case 2: return g.d2;
    case 3: return g.d2 + 1 + g.d1;
    case 5: return g.d1;
    default: return 0;
  }
}

bool replay_cycle(const ColoredForest& initial, const GreedyCycle& g, TieBreaker tb) {
  ColoredForest f = initial;
  auto alg = make_algorithm("greedy", f.palette(), 0, std::move(tb));
  for (std::size_t k = 0; k < g.cycle.size(); ++k) {
    if (alg->apply(f, g.cycle[k]) != cycle_step_recourse(g, k)) return false;
  }
  return f.state_hash() == initial.state_hash();
}

}  // namespace

void script_greedy_cycle(const ColoredForest& initial, GreedyCycle& g) {
  g.lexmin_exact = replay_cycle(initial, g, TieBreaker::lex_min());
  g.ties.clear();
  if (g.lexmin_exact) {
    g.ties.assign(3, kUncolored);
    return;
  }
  // three insertions per cycle; try every color triple, lexicographically
  const Color kappa = initial.palette().kappa();
  std::vector<Color> ties(3, 1);
  while (true) {
    bool ok = false;
    try {
      ok = replay_cycle(initial, g, TieBreaker::scripted(ties));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ScriptMismatch) throw;
    }
    if (ok) {
      g.ties = ties;
      return;
    }
    std::size_t i = ties.size();
    while (i > 0 && ties[i - 1] == kappa) ties[--i] = 1;
    if (i == 0) break;
    ++ties[i - 1];
  }
  throw Error(ErrorKind::NotApplicable, "no tie choice realizes the cycle");
}

LayeredCycleSetup gen_greedy_cycle(const Palette& pal, unsigned d) {
  if (d < 6) throw Error(ErrorKind::DepthTooSmall, "cycle needs depth >= 6");
  const unsigned a = pal.extra() + 1;
  const unsigned b = pal.delta() - 1;
  ColorSet p = ColorSet::range(a);
  std::size_t n = layered_tree_vertices(a, b, d) + layered_tree_vertices(b, a, d);
  ColoredForest f(n, pal);
  VertexId next = 0;
  VertexId r1 = next++;
  build_layered_tree(f, r1, p, d, next);
  VertexId r2 = next++;
  build_layered_tree(f, r2, complement(p, pal), d, next);
  GreedyCycle g = greedy_cycle_for(f, r1, r2, p, d);
  script_greedy_cycle(f, g);
  return LayeredCycleSetup{std::move(f), std::move(g)};
}

// ----------------------------------------------------------- bootstrap

namespace {

std::vector<ColorSet> subsets_of(ColorSet q, unsigned k) {
  std::vector<Color> colors = q.to_vector();
  std::vector<ColorSet> out;
  if (k > colors.size()) return out;
  std::vector<unsigned> idx(k);
  for (unsigned i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    ColorSet s;
    for (unsigned i : idx) s.insert(colors[i]);
    out.push_back(s);
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && idx[i] == colors.size() - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct BootstrapOutcome {
  VertexId p_root = kNoVertex;
  VertexId pbar_root = kNoVertex;
  ColorSet p;
  std::size_t stars = 0;
};

// Star replication on `pool`, using only the colors in q on new edges. Every
// pool vertex can take `cap` more edges.
class Bootstrapper {
 public:
  Bootstrapper(UpdateChannel& ch, std::vector<VertexId> pool, ColorSet q, unsigned cap)
      : ch_(ch), q_(q), cap_(cap), a_(static_cast<unsigned>(q.size()) - cap + 1), b_(cap - 1) {
    std::reverse(pool.begin(), pool.end());
    free_ = std::move(pool);
  }

  BootstrapOutcome run(unsigned depth) {
    collect_base();
    BootstrapOutcome out;
    out.p = p_;
    out.p_root = build(true, depth);
    out.pbar_root = build(false, depth);
    out.stars = stars_;
    return out;
  }

 private:
  VertexId fresh() {
    if (free_.empty()) throw Error(ErrorKind::InsufficientVertices, "bootstrap ran out of vertices");
    VertexId v = free_.back();
    free_.pop_back();
    return v;
  }
  void release(VertexId v) { free_.push_back(v); }

  ColorSet q_colors(VertexId center, VertexId skip = kNoVertex) const {
    ColorSet s;
    for (const Incidence& inc : ch_.forest().incident(center)) {
      if (inc.to != skip && q_.contains(inc.color)) s.insert(inc.color);
    }
    return s;
  }

  void link(VertexId parent, VertexId child) {
    if (ch_.apply(Update::insert(parent, child, parent)) != 0) {
      throw Error(ErrorKind::NotApplicable, "algorithm recolored where no recoloring was needed");
    }
  }
  void cut(VertexId a, VertexId b) {
    if (ch_.apply(Update::erase(a, b)) != 0) {
      throw Error(ErrorKind::NotApplicable, "algorithm recolored on a deletion");
    }
  }

  // Neighbors of v reached through edges colored inside q.
  std::vector<VertexId> q_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    for (const Incidence& inc : ch_.forest().incident(v)) {
      if (q_.contains(inc.color)) out.push_back(inc.to);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void collect_base() {
    const unsigned m = a_ * b_;
    const auto families = subsets_of(q_, a_);
    // enough cap-stars that some a-subset sits inside m of their palettes
    BigInt need = BigInt(m - 1) * families.size() + 1;
    BigInt per = binomial(cap_, a_);
    std::size_t count = static_cast<std::size_t>((need + per - 1) / per);
    std::vector<std::pair<VertexId, std::vector<VertexId>>> stars;
    for (std::size_t s = 0; s < count; ++s) {
      VertexId center = fresh();
      std::vector<VertexId> leaves;
      for (unsigned k = 0; k < cap_; ++k) {
        VertexId leaf = fresh();
        link(center, leaf);
        leaves.push_back(leaf);
      }
      stars.emplace_back(center, std::move(leaves));
    }
    stars_ += count;
    std::size_t best = 0;
    std::size_t best_hits = 0;
    for (std::size_t i = 0; i < families.size(); ++i) {
      std::size_t hits = 0;
      for (const auto& [center, leaves] : stars) {
        if ((q_colors(center) & families[i]) == families[i]) ++hits;
      }
      if (hits > best_hits) {
        best_hits = hits;
        best = i;
      }
    }
    if (best_hits < m) throw Error(ErrorKind::InsufficientVertices, "pigeonhole failed");
    p_ = families[best];
    for (const auto& [center, leaves] : stars) {
      bool keep = base_.size() < m && (q_colors(center) & p_) == p_;
      for (VertexId leaf : leaves) {
        const ColoredForest& f = ch_.forest();
        if (keep && p_.contains(f.color(center, leaf))) continue;
        cut(center, leaf);
        release(leaf);
      }
      if (keep) {
        base_.push_back(center);
      } else {
        release(center);
      }
    }
  }

  // New P-star from the base; returns its center.
  VertexId replicate() {
    std::vector<VertexId> ws;
    for (unsigned j = 0; j < a_; ++j) {
      VertexId w = fresh();
      for (unsigned k = 0; k < b_; ++k) link(w, base_[j * b_ + k]);
      ws.push_back(w);
    }
    VertexId v = fresh();
    for (VertexId w : ws) link(v, w);
    for (unsigned j = 0; j < a_; ++j) {
      for (unsigned k = 0; k < b_; ++k) cut(ws[j], base_[j * b_ + k]);
    }
    ++stars_;
    return v;
  }

  // P-bar star: b fresh P-stars hung below w, then their leaves removed.
  VertexId replicate_complement() {
    std::vector<VertexId> kids;
    for (unsigned k = 0; k < b_; ++k) kids.push_back(replicate());
    VertexId w = fresh();
    for (VertexId k : kids) link(w, k);
    for (VertexId k : kids) {
      for (VertexId leaf : q_neighbors(k)) {
        if (leaf == w) continue;
        cut(k, leaf);
        release(leaf);
      }
    }
    ++stars_;
    return w;
  }

  // Perfect layered tree: is_p selects the root's sub-palette.
  VertexId build(bool is_p, unsigned depth) {
    if (depth == 1) return is_p ? replicate() : replicate_complement();
    unsigned width = is_p ? a_ : b_;
    std::vector<VertexId> kids;
    for (unsigned k = 0; k < width; ++k) kids.push_back(build(!is_p, depth - 1));
    VertexId root = fresh();
    for (VertexId k : kids) link(root, k);
    return root;
  }

  UpdateChannel& ch_;
  ColorSet q_;
  unsigned cap_;
  unsigned a_;
  unsigned b_;
  ColorSet p_;
  std::vector<VertexId> free_;
  std::vector<VertexId> base_;
  std::size_t stars_ = 0;
};

std::size_t bootstrap_vertices(unsigned qsize, unsigned cap, unsigned depth) {
  const unsigned a = qsize - cap + 1;
  const unsigned b = cap - 1;
  const unsigned m = a * b;
  BigInt need = BigInt(m - 1) * binomial(qsize, a) + 1;
  BigInt per = binomial(cap, a);
  std::size_t count = static_cast<std::size_t>((need + per - 1) / per);
  std::size_t phase1 = count * (cap + 1);
  std::size_t trees = layered_tree_vertices(a, b, depth) + layered_tree_vertices(b, a, depth);
  std::size_t phase2 = m * (a + 1) + trees + (b + 1) * (a + 1) + a + b + 2;
  return std::max(phase1, phase2);
}

}  // namespace

BootstrapLayeredAdversary::BootstrapLayeredAdversary(const Palette& pal, unsigned depth, std::size_t n)
    : pal_(pal), depth_(depth) {
  if (pal.delta() < 3) throw Error(ErrorKind::InvalidArgument, "bootstrap needs delta >= 3");
  if (depth < 1) throw Error(ErrorKind::DepthTooSmall, "depth must be positive");
  std::size_t need = required_vertices(pal, depth);
  if (n != 0 && n < need) {
    throw Error(ErrorKind::InsufficientVertices,
                "need " + std::to_string(need) + " vertices, got " + std::to_string(n));
  }
  n_ = std::max(n, need);
}

std::size_t BootstrapLayeredAdversary::required_vertices(const Palette& pal, unsigned depth) {
  return bootstrap_vertices(pal.kappa(), pal.delta(), depth);
}

void BootstrapLayeredAdversary::play(UpdateChannel& ch) {
  std::vector<VertexId> pool(n_);
  for (std::size_t i = 0; i < n_; ++i) pool[i] = static_cast<VertexId>(i);
  Bootstrapper boot(ch, std::move(pool), pal_.all(), pal_.delta());
  BootstrapOutcome out = boot.run(depth_);
  p_root_ = out.p_root;
  pbar_root_ = out.pbar_root;
  p_ = out.p;
  stars_built_ = out.stars;
}

// ---------------------------------------------------------- delta = 2

std::uint64_t doubling_length(unsigned i) {
  if (i < 1) throw Error(ErrorKind::InvalidArgument, "levels start at 1");
  return ((std::uint64_t{4} << i) - 4 - (i % 2)) / 3;
}

unsigned doubling_levels(std::size_t n) {
  unsigned level = 0;
  while (level < 60 && doubling_length(level + 1) + 1 <= n) ++level;
  return level;
}

Delta2DoublingAdversary::Delta2DoublingAdversary(std::size_t n, bool adaptive, std::uint64_t seed)
    : n_(n), adaptive_(adaptive), rng_(seed), levels_(doubling_levels(n)) {
  if (levels_ == 0) throw Error(ErrorKind::InsufficientVertices, "doubling needs at least 2 vertices");
}

std::uint64_t Delta2DoublingAdversary::forced_recourse() const {
  std::uint64_t total = 0;
  for (unsigned i = 2; i <= levels_; ++i) total += (std::uint64_t{1} << (levels_ - i)) * doubling_length(i - 1);
  return total;
}

void Delta2DoublingAdversary::play(UpdateChannel& ch) {
  std::vector<VertexId> vs(n_);
  for (std::size_t i = 0; i < n_; ++i) vs[i] = static_cast<VertexId>(i);
  play_on(ch, vs, ColorSet::range(2));
}

void Delta2DoublingAdversary::play_on(UpdateChannel& ch, const std::vector<VertexId>& vertices, ColorSet colors) {
  unsigned levels = doubling_levels(vertices.size());
  if (levels == 0) return;
  levels_ = levels;
  struct Path {
    VertexId x;
    VertexId y;
    std::uint64_t len;
  };
  std::size_t next = 0;
  auto fresh = [&]() { return vertices[next++]; };
  auto free_color = [&](VertexId v) { return (colors - ch.forest().used(v)).lowest(); };
  std::vector<Path> paths;
  std::size_t count = std::size_t{1} << (levels - 1);
  for (std::size_t i = 0; i < count; ++i) {
    VertexId x = fresh();
    VertexId y = fresh();
    ch.apply(Update::insert(x, y, x));
    paths.push_back({x, y, 1});
  }
  for (unsigned level = 2; level <= levels; ++level) {
    std::vector<Path> merged;
    for (std::size_t i = 0; i + 1 < paths.size(); i += 2) {
      Path a = paths[i];
      Path b = paths[i + 1];
      if (a.len % 2 == 1) {
        VertexId z = fresh();
        ch.apply(Update::insert(a.y, z, a.y));
        a.y = z;
        ++a.len;
      }
      if (a.len % 2 != 0) parity_ok_ = false;
      VertexId w = b.x;
      VertexId end;
      VertexId other;
      if (adaptive_) {
        Color fw = free_color(w);
        bool use_x = free_color(a.x) != fw;
        end = use_x ? a.x : a.y;
        other = use_x ? a.y : a.x;
      } else {
        bool use_x = rng_.coin();
        end = use_x ? a.x : a.y;
        other = use_x ? a.y : a.x;
      }
      ch.apply(Update::insert(end, w, end));
      merged.push_back({other, b.y, a.len + b.len + 1});
    }
    paths = std::move(merged);
  }
}

UpdateSequence gen_delta2_doubling(std::size_t n, std::uint64_t seed) {
  // Topology-only recording channel: the oblivious adversary never looks at colors.
  class Recorder final : public UpdateChannel {
   public:
    explicit Recorder(std::size_t n) : f_(n, Palette(2, 0)) {}
    const ColoredForest& forest() const override { return f_; }
    std::size_t apply(const Update& up) override {
      if (up.kind == UpdateKind::Insert) {
        f_.insert_topology(up.u, up.v, up.parent_hint);
      } else {
        f_.delete_topology(EdgeKey(up.u, up.v));
      }
      seq.push_back(up);
      return 0;
    }
    UpdateSequence seq;

   private:
    ColoredForest f_;
  };
  Recorder rec(n);
  Delta2DoublingAdversary adv(n, false, seed);
  adv.play(rec);
  return rec.seq;
}

// -------------------------------------------------------- shift stars

ShiftStarAdversary::ShiftStarAdversary(const Palette& pal, std::size_t n, unsigned cycles)
    : pal_(pal), n_(n), cycles_(cycles) {
  if (pal.delta() < 3) throw Error(ErrorKind::InvalidArgument, "shift-star reduction needs delta >= 3");
}

void ShiftStarAdversary::play(UpdateChannel& ch) {
  const unsigned delta = pal_.delta();
  const unsigned c = pal_.extra();
  const unsigned star_degree = delta - c - 2;
  const unsigned star_size = star_degree + 1;
  const std::size_t stars = n_ / star_size;
  report_ = ShiftStarReport{};
  report_.stars = stars;
  report_.proof_bound_k = stars;
  report_.proof_bound_b = static_cast<std::uint64_t>(binomial(pal_.kappa(), star_degree));
  std::vector<VertexId> centers;
  for (std::size_t s = 0; s < stars; ++s) {
    VertexId center = static_cast<VertexId>(s * star_size);
    for (unsigned k = 1; k <= star_degree; ++k) ch.apply(Update::insert(center, center + k, center));
    centers.push_back(center);
  }
  auto leaf_palette = [&](VertexId center) {
    ColorSet s;
    for (const Incidence& inc : ch.forest().incident(center)) {
      if (inc.to > center && inc.to <= center + star_degree) s.insert(inc.color);
    }
    return s;
  };
  std::map<std::uint64_t, std::vector<VertexId>> groups;
  std::vector<ColorSet> initial;
  for (VertexId center : centers) {
    ColorSet s = leaf_palette(center);
    initial.push_back(s);
    groups[s.bits()].push_back(center);
  }
  report_.groups = groups.size();
  if (c == 0) {
    // doubling on each group, reusing the leftover centers in smaller rounds
    for (auto& [bits, members] : groups) {
      std::size_t offset = 0;
      while (members.size() - offset >= 2) {
        std::vector<VertexId> slice(members.begin() + static_cast<std::ptrdiff_t>(offset), members.end());
        Delta2DoublingAdversary inner(slice.size(), true);
        inner.play_on(ch, slice, pal_.all() - ColorSet(bits));
        offset += doubling_length(inner.levels()) + 1;
      }
    }
  } else {
    auto largest = std::max_element(groups.begin(), groups.end(),
                                    [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
    ColorSet q = pal_.all() - ColorSet(largest->first);
    const unsigned cap = c + 2;
    unsigned depth = 0;
    for (unsigned d = 6; d < 40; ++d) {
      if (bootstrap_vertices(static_cast<unsigned>(q.size()), cap, d) > largest->second.size()) break;
      depth = d;
    }
    if (depth == 0) throw Error(ErrorKind::InsufficientVertices, "largest star group too small for the reduction");
    Bootstrapper boot(ch, largest->second, q, cap);
    BootstrapOutcome out = boot.run(depth);
    GreedyCycle g = greedy_cycle_for(ch.forest(), out.p_root, out.pbar_root, out.p, depth);
    for (unsigned k = 0; k < cycles_; ++k) {
      for (const Update& up : g.cycle) ch.apply(up);
    }
  }
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (leaf_palette(centers[i]) != initial[i]) ++report_.palette_changes;
  }
}

// ------------------------------------------------ randomized, c = 0

RandIncremental gen_rand_c0_incremental(const Palette& pal, std::size_t n, std::uint64_t seed) {
  const unsigned delta = pal.delta();
  RandIncremental out;
  const std::size_t per_round = 2 * static_cast<std::size_t>(delta) + 1;
  out.rounds = n / per_round;
  if (out.rounds == 0) throw Error(ErrorKind::InsufficientVertices, "need at least 2*delta+1 vertices");
  out.vertices = out.rounds * per_round;
  Rng rng(seed);
  VertexId next = 0;
  for (std::size_t r = 0; r < out.rounds; ++r) {
    VertexId centers[2];
    for (VertexId& center : centers) {
      center = next++;
      for (unsigned k = 1; k < delta; ++k) out.updates.push_back(Update::insert(center, next++, center));
    }
    VertexId mid = next++;
    if (rng.coin()) {
      out.updates.push_back(Update::insert(centers[0], centers[1]));
    } else {
      out.updates.push_back(Update::insert(centers[0], mid));
      out.updates.push_back(Update::insert(centers[1], mid));
    }
  }
  return out;
}

std::size_t complete_tree_vertices(unsigned arity, unsigned h) {
  std::size_t total = 1;
  std::size_t level = 1;
  for (unsigned t = 0; t < h; ++t) {
    level *= arity;
    total += level;
  }
  return total;
}

std::vector<VertexId> build_complete_tree(ColoredForest& f, VertexId root, unsigned arity, unsigned h,
                                          VertexId& next_free) {
  std::vector<VertexId> order{root};
  std::vector<unsigned> level{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (level[i] == h) continue;
    for (unsigned k = 0; k < arity; ++k) {
      if (next_free >= f.vertex_count()) throw Error(ErrorKind::InsufficientVertices, "tree does not fit");
      VertexId w = next_free++;
      f.insert_topology(order[i], w, order[i]);
      order.push_back(w);
      level.push_back(level[i] + 1);
    }
  }
  return order;
}

TwoTrees make_two_trees(const Palette& pal, unsigned h, std::uint64_t seed) {
  const unsigned arity = pal.delta() - 1;
  std::size_t n = 2 * complete_tree_vertices(arity, h) + 1;
  TwoTrees t{ColoredForest(n, pal)};
  VertexId next = 0;
  t.r1 = next++;
  build_complete_tree(t.initial, t.r1, arity, h, next);
  t.r2 = next++;
  build_complete_tree(t.initial, t.r2, arity, h, next);
  t.spare = next++;
  t.h = h;
  Rng rng(seed);
  sample_uniform_coloring(t.initial, rng);
  return t;
}

UpdateSequence gen_rand_c0_dynamic(const TwoTrees& t, std::size_t rounds) {
  UpdateSequence seq;
  for (std::size_t k = 0; k < rounds; ++k) {
    if (k % 2 == 0) {
      seq.push_back(Update::insert(t.r1, t.r2));
      seq.push_back(Update::erase(t.r1, t.r2));
    } else {
      seq.push_back(Update::insert(t.r1, t.spare));
      seq.push_back(Update::insert(t.r2, t.spare));
      seq.push_back(Update::erase(t.r1, t.spare));
      seq.push_back(Update::erase(t.r2, t.spare));
    }
  }
  return seq;
}

UpdateSequence gen_toggle_workload(const TwoTrees& t, std::size_t toggles) {
  UpdateSequence seq;
  for (std::size_t k = 0; k < toggles; ++k) {
    seq.push_back(Update::insert(t.r1, t.r2));
    seq.push_back(Update::erase(t.r1, t.r2));
  }
  return seq;
}

}  // namespace forestcolor
