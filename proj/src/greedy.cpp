#include "forestcolor/greedy.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <tuple>

#include "forestcolor/assignment.hpp"

namespace forestcolor {

Color TieBreaker::choose(ColorSet candidates) {
  if (candidates.empty()) throw Error(ErrorKind::InvalidArgument, "no candidate colors");
  switch (policy_) {
    case Policy::LexMin:
      return candidates.lowest();
    case Policy::Scripted: {
      if (next_ >= script_.size()) throw Error(ErrorKind::ScriptExhausted, "tie-break script exhausted");
      Color c = script_[next_++];
      if (c == kUncolored) return candidates.lowest();
      if (!candidates.contains(c)) {
        throw Error(ErrorKind::ScriptMismatch,
                    "scripted color " + std::to_string(c) + " is not an optimal choice");
      }
      return c;
    }
    case Policy::SeededRandom: {
      auto options = candidates.to_vector();
      return options[rng_.uniform_index(options.size())];
    }
  }
  return candidates.lowest();
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 8;

// Children of v in a view, ascending ids.
std::vector<VertexId> view_children(const ColoredForest& f, const RootedView& view, VertexId v) {
  std::vector<VertexId> out;
  for (const auto& inc : f.incident(v)) {
    if (view.contains(inc.to) && view.parent[inc.to] == v) out.push_back(inc.to);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Color edge_color_or_none(const ColoredForest& f, VertexId p, VertexId v) {
  return p == kNoVertex ? kUncolored : f.color(p, v);
}

void check_new_edge(const ColoredForest& f, EdgeKey e) {
  if (f.color(e.a, e.b) != kUncolored) {
    throw Error(ErrorKind::InvalidArgument, "edge to color is already colored");
  }
}

// ---- exact minimum recourse -------------------------------------------

class GreedyDp {
 public:
  GreedyDp(const ColoredForest& f, VertexId root, VertexId other)
      : f_(f), kappa_(f.palette().kappa()), view_(rooted_view(f, root, other)) {
    table_.assign(f.vertex_count(), {});
    for (std::size_t i = view_.order.size(); i-- > 0;) {
      VertexId v = view_.order[i];
      auto kids = view_children(f_, view_, v);
      Color alpha = edge_color_or_none(f_, view_.parent[v], v);
      auto& row = table_[v];
      row.assign(kappa_ + 1, kInf);
      for (Color beta = 1; beta <= kappa_; ++beta) {
        std::int64_t below = assign_cost(kids, beta, ColorSet());
        row[beta] = below + (v != root && beta != alpha ? 1 : 0);
      }
    }
  }

  const RootedView& view() const { return view_; }
  std::int64_t cost(VertexId v, Color beta) const { return table_[v][beta]; }

  // Cheapest assignment of distinct colors, avoiding beta and `taken`, to kids.
  std::int64_t assign_cost(const std::vector<VertexId>& kids, Color beta, ColorSet taken) const {
    if (kids.empty()) return 0;
    std::vector<Color> cols;
    for (Color c = 1; c <= kappa_; ++c) {
      if (c != beta && !taken.contains(c)) cols.push_back(c);
    }
    if (cols.size() < kids.size()) return kInf;
    std::vector<std::vector<std::int64_t>> m(kids.size(), std::vector<std::int64_t>(cols.size()));
    for (std::size_t r = 0; r < kids.size(); ++r) {
      for (std::size_t c = 0; c < cols.size(); ++c) m[r][c] = table_[kids[r]][cols[c]];
    }
    return solve_assignment(m).cost;
  }

  // Lexicographically smallest optimal assignment (kids in id order, colors ascending).
  std::vector<Color> lexmin_assignment(const std::vector<VertexId>& kids, Color beta) const {
    std::int64_t target = assign_cost(kids, beta, ColorSet());
    std::vector<Color> out;
    ColorSet taken;
    for (std::size_t i = 0; i < kids.size(); ++i) {
      std::vector<VertexId> rest(kids.begin() + static_cast<std::ptrdiff_t>(i) + 1, kids.end());
      bool fixed = false;
      for (Color c = 1; c <= kappa_ && !fixed; ++c) {
        if (c == beta || taken.contains(c)) continue;
        ColorSet with_c = taken;
        with_c.insert(c);
        std::int64_t rest_cost = assign_cost(rest, beta, with_c);
        if (rest_cost >= kInf) continue;
        if (table_[kids[i]][c] + rest_cost == target) {
          out.push_back(c);
          taken = with_c;
          target -= table_[kids[i]][c];
          fixed = true;
        }
      }
      if (!fixed) throw Error(ErrorKind::InvalidArgument, "assignment reconstruction failed");
    }
    return out;
  }

  // Recolor this side so the new edge can take beta.
  void realize(ColoredForest& f, Color beta) const {
    std::vector<std::pair<VertexId, Color>> stack{{view_.root, beta}};
    while (!stack.empty()) {
      auto [v, b] = stack.back();
      stack.pop_back();
      auto kids = view_children(f_, view_, v);
      if (kids.empty()) continue;
      auto colors = lexmin_assignment(kids, b);
      for (std::size_t i = 0; i < kids.size(); ++i) {
        VertexId w = kids[i];
        Color alpha = f.color(v, w);
        if (colors[i] != alpha) f.set_color(v, w, colors[i]);
        std::int64_t below = table_[w][colors[i]] - (colors[i] != alpha ? 1 : 0);
        if (below > 0) stack.emplace_back(w, colors[i]);
      }
    }
  }

 private:
  const ColoredForest& f_;
  Color kappa_;
  RootedView view_;
  std::vector<std::vector<std::int64_t>> table_;
};

// ---- shift chains -----------------------------------------------------

// Cheapest shift chain entering each vertex through its (uncolored) parent edge.
class ShiftPlanner {
 public:
  ShiftPlanner(const ColoredForest& f, VertexId root, VertexId other, bool allow_fans)
      : f_(f), root_(root), other_(other), allow_fans_(allow_fans), view_(rooted_view(f, root, other)) {
    g_.assign(f.vertex_count(), kInf);
    for (std::size_t i = view_.order.size(); i-- > 0;) {
      VertexId z = view_.order[i];
      g_[z] = evaluate(z, entry_set(z), nullptr);
    }
  }

  std::int64_t cost(VertexId z) const { return g_[z]; }

  // Colors the parent edge of z may take when shifted into from above.
  ColorSet entry_set(VertexId z) const {
    if (z == root_) return f_.available(other_);
    VertexId y = view_.parent[z];
    ColorSet t = f_.available(y);
    if (y != root_) t.insert(f_.color(view_.parent[y], y));
    return t;
  }

  // Min over fans at z whose first edge color lies in `entry`; the fan is
  // written to `fan` when given. Restricting `entry` to one color pins the
  // first fan edge.
  std::int64_t evaluate(VertexId z, ColorSet entry, std::vector<VertexId>* fan) const {
    if (!(entry & f_.available(z)).empty()) {
      if (fan) fan->clear();
      return 0;
    }
    auto kids = view_children(f_, view_, z);
    const std::size_t k = kids.size();
    std::vector<int> dist(k, -1), prev(k, -1);
    std::queue<std::size_t> q;
    for (std::size_t i = 0; i < k; ++i) {
      if (entry.contains(f_.color(z, kids[i]))) {
        dist[i] = 1;
        q.push(i);
      }
    }
    while (allow_fans_ && !q.empty()) {
      std::size_t a = q.front();
      q.pop();
      ColorSet free_a = f_.available(kids[a]);
      for (std::size_t b = 0; b < k; ++b) {
        if (dist[b] >= 0 || !free_a.contains(f_.color(z, kids[b]))) continue;
        dist[b] = dist[a] + 1;
        prev[b] = static_cast<int>(a);
        q.push(b);
      }
    }
    std::int64_t best = kInf;
    int best_i = -1;
    for (std::size_t i = 0; i < k; ++i) {
      if (dist[i] < 0 || g_[kids[i]] >= kInf) continue;
      std::int64_t total = dist[i] + g_[kids[i]];
      if (total < best || (total == best && dist[i] < dist[best_i])) {
        best = total;
        best_i = static_cast<int>(i);
      }
    }
    if (fan && best_i >= 0) {
      fan->clear();
      for (int i = best_i; i >= 0; i = prev[i]) fan->push_back(kids[i]);
      std::reverse(fan->begin(), fan->end());
    }
    return best;
  }

  // Vertex sequence of the chain below z: consecutive fan edges (z, a_i), then
  // the fan at the last a, and so on. Returned as (shared vertex, far vertex).
  std::vector<std::pair<VertexId, VertexId>> chain_from(VertexId z, ColorSet entry) const {
    std::vector<std::pair<VertexId, VertexId>> out;
    std::vector<VertexId> fan;
    while (true) {
      evaluate(z, entry, &fan);
      if (fan.empty()) break;
      for (VertexId a : fan) out.emplace_back(z, a);
      VertexId next = fan.back();
      entry = entry_set(next);
      z = next;
    }
    return out;
  }

 private:
  const ColoredForest& f_;
  VertexId root_;
  VertexId other_;
  bool allow_fans_;
  RootedView view_;
  std::vector<std::int64_t> g_;
};

std::size_t apply_chain(ColoredForest& f, EdgeKey e, Color first,
                        const std::vector<std::pair<VertexId, VertexId>>& steps,
                        std::vector<EdgeKey>* chain) {
  RecourseScope scope(f);
  if (chain) chain->clear();
  if (steps.empty()) {
    f.set_color(e.a, e.b, first);
    return scope.recourse();
  }
  std::vector<Color> old(steps.size());
  for (std::size_t j = 0; j < steps.size(); ++j) old[j] = f.color(steps[j].first, steps[j].second);
  auto [s_last, t_last] = steps.back();
  f.set_color(s_last, t_last, kUncolored);
  f.set_color(e.a, e.b, old[0]);
  for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
    f.set_color(steps[j].first, steps[j].second, old[j + 1]);
  }
  ColorSet free = f.available(s_last) & f.available(t_last);
  if (free.empty()) throw Error(ErrorKind::InvalidArgument, "shift chain did not terminate");
  f.set_color(s_last, t_last, free.lowest());
  if (chain) {
    for (auto [s, t] : steps) chain->emplace_back(s, t);
  }
  return scope.recourse();
}

std::size_t shift_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb, bool allow_fans,
                         std::vector<EdgeKey>* chain) {
  check_new_edge(f, e);
  ColorSet common = f.available(e);
  if (!common.empty()) return apply_chain(f, e, tb.choose(common), {}, chain);
  ShiftPlanner side_a(f, e.a, e.b, allow_fans);
  ShiftPlanner side_b(f, e.b, e.a, allow_fans);
  std::int64_t best = std::min(side_a.cost(e.a), side_b.cost(e.b));
  // Candidate colors for e: the color of a first shifted edge on an optimal chain.
  ColorSet candidates;
  for (auto* side : {&side_a, &side_b}) {
    VertexId root = side == &side_a ? e.a : e.b;
    if (side->cost(root) != best) continue;
    ColorSet entry = side->entry_set(root);
    for (Color c : entry.to_vector()) {
      ColorSet only;
      only.insert(c);
      if (side->evaluate(root, only, nullptr) == best) candidates.insert(c);
    }
  }
  Color beta = tb.choose(candidates);
  bool on_a = f.used(e.a).contains(beta);
  const ShiftPlanner& side = on_a ? side_a : side_b;
  ColorSet only;
  only.insert(beta);
  auto steps = side.chain_from(on_a ? e.a : e.b, only);
  return apply_chain(f, e, beta, steps, chain);
}

}  // namespace

DpTable greedy_dp_table(const ColoredForest& f, EdgeKey e) {
  DpTable out;
  out.kappa = f.palette().kappa();
  for (auto [root, other] : {std::pair{e.a, e.b}, std::pair{e.b, e.a}}) {
    GreedyDp dp(f, root, other);
    for (VertexId v : dp.view().order) {
      auto& row = out.values[v];
      row.assign(out.kappa + 1, 0);
      for (Color b = 1; b <= out.kappa; ++b) row[b] = dp.cost(v, b);
    }
  }
  return out;
}

std::size_t greedy_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb) {
  check_new_edge(f, e);
  RecourseScope scope(f);
  ColorSet common = f.available(e);
  if (!common.empty()) {
    f.set_color(e.a, e.b, tb.choose(common));
    return scope.recourse();
  }
  GreedyDp dp_a(f, e.a, e.b);
  GreedyDp dp_b(f, e.b, e.a);
  const Color kappa = f.palette().kappa();
  std::int64_t best = kInf;
  ColorSet candidates;
  for (Color beta = 1; beta <= kappa; ++beta) {
    std::int64_t total = dp_a.cost(e.a, beta) + dp_b.cost(e.b, beta);
    if (total < best) {
      best = total;
      candidates = ColorSet();
    }
    if (total == best) candidates.insert(beta);
  }
  Color beta = tb.choose(candidates);
  dp_a.realize(f, beta);
  dp_b.realize(f, beta);
  f.set_color(e.a, e.b, beta);
  return scope.recourse();
}

std::size_t greedy_shift_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb, std::vector<EdgeKey>* chain) {
  return shift_insert(f, e, tb, true, chain);
}

std::size_t greedy_path_insert(ColoredForest& f, EdgeKey e, TieBreaker& tb, std::vector<EdgeKey>* chain) {
  return shift_insert(f, e, tb, false, chain);
}

std::size_t smallest_subtree_path_insert(ColoredForest& f, EdgeKey e, std::vector<EdgeKey>* chain) {
  if (f.palette().extra() != 0) {
    throw Error(ErrorKind::WrongPalette, "smallest-subtree path requires kappa = delta");
  }
  check_new_edge(f, e);
  RecourseScope scope(f);
  if (chain) chain->clear();
  // Walk into the smaller tree; ties go to the endpoint with the smaller id.
  RootedView va = rooted_view(f, e.a, e.b);
  RootedView vb = rooted_view(f, e.b, e.a);
  bool into_a = va.subtree_edges[e.a] < vb.subtree_edges[e.b] ||
                (va.subtree_edges[e.a] == vb.subtree_edges[e.b] && e.a < e.b);
  const RootedView& view = into_a ? va : vb;
  VertexId y = into_a ? e.b : e.a;
  VertexId z = into_a ? e.a : e.b;
  while (true) {
    ColorSet free = f.available(y) & f.available(z);
    if (!free.empty()) {
      f.set_color(y, z, free.lowest());
      break;
    }
    ColorSet from_above = f.available(y);
    VertexId best = kNoVertex;
    for (VertexId w : view_children(f, view, z)) {
      if (!from_above.contains(f.color(z, w))) continue;
      if (best == kNoVertex || view.subtree_edges[w] < view.subtree_edges[best]) best = w;
    }
    if (best == kNoVertex) throw Error(ErrorKind::InvalidArgument, "no continuation for the shift path");
    Color c = f.color(z, best);
    f.set_color(z, best, kUncolored);
    f.set_color(y, z, c);
    if (chain) chain->emplace_back(z, best);
    y = z;
    z = best;
  }
  return scope.recourse();
}

std::size_t greedy_delete(ColoredForest& f, EdgeKey e) {
  f.delete_topology(e);
  return 0;
}

}  // namespace forestcolor
