#include "forestcolor/sublinear.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace forestcolor {

std::uint64_t LevelPlan::cap(unsigned level) const {
  if (level == 0 || level > caps.size()) return 0;
  return caps[level - 1];
}

std::uint64_t LevelPlan::budget() const {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < caps.size(); ++i) total += (std::uint64_t{1} << i) * caps[i];
  return total;
}

LevelPlan level_plan(std::size_t n, unsigned delta) {
  if (delta < 3) throw Error(ErrorKind::InvalidArgument, "level plan needs delta >= 3");
  LevelPlan plan;
  plan.n = n;
  double lg = n > 1 ? std::log2(static_cast<double>(n)) : 0.0;
  plan.ell = std::max(1u, static_cast<unsigned>(std::lround(std::sqrt(2.0 * lg))));
  double ell = plan.ell;
  double raw = std::pow(static_cast<double>(std::max<std::size_t>(n, 1)), 1.0 / ell) *
               std::pow(2.0, (ell + 1.0) / 2.0) / static_cast<double>(delta - 2);
  plan.d = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(raw - 1e-9)));
  for (unsigned i = 0; i < plan.ell; ++i) {
    std::uint64_t step = std::uint64_t{1} << i;
    plan.caps.push_back(std::max<std::uint64_t>(1, (plan.d + step - 1) / step));
  }
  return plan;
}

namespace {

struct Conflict {
  VertexId x;  // toward the inserted edge
  VertexId z;  // subtree side
};

class Resolver {
 public:
  Resolver(ColoredForest& f, const RootedView& view) : f_(f), view_(view) {}

  // Colors (x, z), possibly spawning conflicts below it.
  std::vector<Conflict> resolve(Conflict c, std::uint64_t cap, bool& truncated) {
    truncated = false;
    ColorSet ax = f_.available(c.x);
    ColorSet az = f_.available(c.z);
    ColorSet common = ax & az;
    if (!common.empty()) {
      f_.set_color(c.x, c.z, common.lowest());
      return {};
    }
    // Shortest bicolored path over all (a, b) pairs; long walks stop at cap + 1.
    std::uint64_t limit = cap == 0 ? UINT64_MAX : cap + 1;
    Color best_a = kUncolored;
    Color best_b = kUncolored;
    std::uint64_t best_len = UINT64_MAX;
    for (Color a : ax.to_vector()) {
      for (Color b : az.to_vector()) {
        std::uint64_t len = walk(c.z, a, b, limit).size();
        if (len < best_len) {
          best_len = len;
          best_a = a;
          best_b = b;
        }
      }
    }
    std::vector<VertexId> ys = walk_vertices(c.z, best_a, best_b, cap == 0 ? UINT64_MAX : cap);
    // ys[0] = z, ys[k] = lower end of the k-th path edge
    if (cap == 0 || best_len <= cap) {
      for (std::size_t k = 1; k < ys.size(); ++k) {
        f_.set_color(ys[k - 1], ys[k], k % 2 == 1 ? best_b : best_a);
      }
      f_.set_color(c.x, c.z, best_a);
      return {};
    }
    truncated = true;
    // Truncate at edge i (1-based) with a color outside {a, b}, picking the
    // option whose spawned subtrees are smallest.
    std::tuple<std::size_t, std::size_t, std::size_t, Color> best{SIZE_MAX, SIZE_MAX, 0, 0};
    for (std::size_t i = 1; i <= cap; ++i) {
      for (Color g = 1; g <= f_.palette().kappa(); ++g) {
        if (g == best_a || g == best_b) continue;
        std::size_t s1 = hanging_size(ys[i - 1], g);
        std::size_t s2 = hanging_size(ys[i], g);
        std::tuple<std::size_t, std::size_t, std::size_t, Color> key{std::max(s1, s2), s1 + s2, i, g};
        if (key < best) best = key;
      }
    }
    std::size_t i = std::get<2>(best);
    Color g = std::get<3>(best);
    VertexId c1 = f_.neighbor_with_color(ys[i - 1], g);
    VertexId c2 = f_.neighbor_with_color(ys[i], g);
    for (std::size_t k = 1; k < i; ++k) {
      f_.set_color(ys[k - 1], ys[k], k % 2 == 1 ? best_b : best_a);
    }
    f_.set_color(c.x, c.z, best_a);
    f_.set_color(ys[i - 1], ys[i], g);
    std::vector<Conflict> spawned;
    if (c1 != kNoVertex) {
      f_.set_color(ys[i - 1], c1, kUncolored);
      spawned.push_back({ys[i - 1], c1});
    }
    if (c2 != kNoVertex) {
      f_.set_color(ys[i], c2, kUncolored);
      spawned.push_back({ys[i], c2});
    }
    return spawned;
  }

 private:
  std::vector<VertexId> walk(VertexId z, Color a, Color b, std::uint64_t limit) const {
    auto ys = walk_vertices(z, a, b, limit);
    ys.erase(ys.begin());
    return ys;
  }

  std::vector<VertexId> walk_vertices(VertexId z, Color a, Color b, std::uint64_t limit) const {
    std::vector<VertexId> ys{z};
    Color want = a;
    VertexId cur = z;
    while (ys.size() - 1 < limit) {
      VertexId next = f_.neighbor_with_color(cur, want);
      if (next == kNoVertex) break;
      ys.push_back(next);
      cur = next;
      want = want == a ? b : a;
    }
    return ys;
  }

  // Edges in the subtree hanging below y through its g-colored edge.
  std::size_t hanging_size(VertexId y, Color g) const {
    VertexId w = f_.neighbor_with_color(y, g);
    if (w == kNoVertex) return 0;
    return 1 + view_.subtree_edges[w];
  }

  ColoredForest& f_;
  const RootedView& view_;
};

bool pairwise_disjoint(const RootedView& view, const std::vector<Conflict>& level) {
  std::vector<char> mark(view.member.size(), 0);
  for (const Conflict& c : level) mark[c.z] = 1;
  for (const Conflict& c : level) {
    for (VertexId w = view.parent[c.z]; w != kNoVertex; w = view.parent[w]) {
      if (mark[w]) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t sublinear_insert(ColoredForest& f, EdgeKey e, SublinearStats* stats) {
  const Palette& pal = f.palette();
  if (pal.extra() != 0 || pal.delta() < 3) {
    throw Error(ErrorKind::WrongPalette, "sublinear insertion needs kappa = delta >= 3");
  }
  if (f.color(e.a, e.b) != kUncolored) throw Error(ErrorKind::InvalidArgument, "edge already colored");
  RootedView va = rooted_view(f, e.a, e.b);
  RootedView vb = rooted_view(f, e.b, e.a);
  bool use_b = vb.subtree_edges[e.b] < va.subtree_edges[e.a];
  const RootedView& view = use_b ? vb : va;
  Conflict first = use_b ? Conflict{e.a, e.b} : Conflict{e.b, e.a};

  SublinearStats local;
  SublinearStats& st = stats ? *stats : local;
  st = SublinearStats{};
  st.plan = level_plan(view.subtree_edges[first.z], pal.delta());

  RecourseScope scope(f);
  Resolver resolver(f, view);
  std::vector<Conflict> level{first};
  unsigned depth = 0;
  while (!level.empty()) {
    ++depth;
    st.levels_used = depth;
    st.max_pending = std::max(st.max_pending, level.size());
    if (depth < 64 && level.size() > (std::size_t{1} << (depth - 1))) st.pending_within_bound = false;
    if (!pairwise_disjoint(view, level)) st.disjoint = false;
    std::uint64_t cap = st.plan.cap(depth);
    std::vector<Conflict> next;
    for (const Conflict& c : level) {
      bool truncated = false;
      auto spawned = resolver.resolve(c, cap, truncated);
      if (truncated) ++st.truncations;
      next.insert(next.end(), spawned.begin(), spawned.end());
    }
    level = std::move(next);
  }
  return scope.recourse();
}

std::size_t sublinear_delete(ColoredForest& f, EdgeKey e) {
  f.delete_topology(e);
  return 0;
}

}  // namespace forestcolor
