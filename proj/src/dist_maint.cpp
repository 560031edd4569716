#include "forestcolor/dist_maint.hpp"

namespace forestcolor {

namespace {

VertexId child_with_color(const ColoredForest& f, VertexId v, Color c) {
  VertexId par = f.parent(v);
  for (const Incidence& inc : f.incident(v)) {
    if (inc.to != par && inc.color == c) return inc.to;
  }
  return kNoVertex;
}

Color uniform_from(ColorSet s, Rng& rng) {
  auto colors = s.to_vector();
  return colors[rng.uniform_index(colors.size())];
}

void merge(RepairTrace* out, RepairTrace&& t) {
  if (out) *out = std::move(t);
}

}  // namespace

void sample_uniform_coloring(ColoredForest& f, Rng& rng) {
  std::vector<char> seen(f.vertex_count(), 0);
  for (VertexId s = 0; s < f.vertex_count(); ++s) {
    if (!f.is_root(s) || f.degree(s) == 0) continue;
    RootedView view = rooted_view(f, s);
    for (VertexId v : view.order) {
      ColorSet allowed = f.palette().all();
      if (!f.is_root(v)) allowed.erase(f.color(v, f.parent(v)));
      auto pool = allowed.to_vector();
      for (VertexId w : f.children(v)) {
        std::size_t i = rng.uniform_index(pool.size());
        f.set_color(v, w, pool[i]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
      }
    }
  }
}

RepairTrace fix_forbidden(ColoredForest& f, VertexId v, Color alpha, Color beta) {
  RepairTrace trace;
  trace.start = v;
  while (true) {
    VertexId w = child_with_color(f, v, beta);
    if (w == kNoVertex) break;
    f.set_color(v, w, alpha);
    trace.swapped.push_back({EdgeKey(v, w), beta, alpha});
    std::swap(alpha, beta);
    v = w;
  }
  return trace;
}

RepairTrace root_to_child(ColoredForest& f, VertexId r, Color beta, Rng& rng) {
  RepairTrace trace;
  trace.start = r;
  VertexId w = child_with_color(f, r, beta);
  if (w == kNoVertex) return trace;
  Color alpha = uniform_from(f.available(r), rng);
  f.set_color(r, w, alpha);
  trace.swapped.push_back({EdgeKey(r, w), beta, alpha});
  RepairTrace rest = fix_forbidden(f, w, beta, alpha);
  trace.swapped.insert(trace.swapped.end(), rest.swapped.begin(), rest.swapped.end());
  return trace;
}

RepairTrace child_to_root(ColoredForest& f, VertexId r, Color alpha, Rng& rng) {
  RepairTrace trace;
  trace.start = r;
  auto kids = f.children(r);
  std::size_t kappa = f.palette().kappa();
  if (rng.uniform_index(kappa) < kappa - kids.size()) return trace;
  VertexId w = kids[rng.uniform_index(kids.size())];
  Color gamma = f.color(r, w);
  f.set_color(r, w, alpha);
  trace.swapped.push_back({EdgeKey(r, w), gamma, alpha});
  RepairTrace rest = fix_forbidden(f, w, gamma, alpha);
  trace.swapped.insert(trace.swapped.end(), rest.swapped.begin(), rest.swapped.end());
  return trace;
}

namespace {

std::size_t rooted_insert(ColoredForest& f, VertexId p, VertexId r, Rng& rng, RepairTrace* trace) {
  RecourseScope scope(f);
  f.insert_topology(p, r, p);
  Color beta = uniform_from(f.available(p), rng);
  f.set_color(p, r, beta);
  merge(trace, root_to_child(f, r, beta, rng));
  return scope.recourse();
}

std::size_t rooted_delete(ColoredForest& f, VertexId u, VertexId v, Rng& rng, RepairTrace* trace) {
  if (!f.has_edge(u, v)) {
    throw Error(ErrorKind::MissingEdge, "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  VertexId child = f.parent(v) == u ? v : u;
  RecourseScope scope(f);
  Color alpha = f.delete_topology(EdgeKey(u, v));
  merge(trace, child_to_root(f, child, alpha, rng));
  return scope.recourse();
}

}  // namespace

std::size_t dm_update_rooted(ColoredForest& f, const Update& up, Rng& rng, RepairTrace* trace) {
  if (up.kind == UpdateKind::Delete) return rooted_delete(f, up.u, up.v, rng, trace);
  VertexId p;
  VertexId r;
  if (up.parent_hint) {
    p = *up.parent_hint;
    if (p != up.u && p != up.v) throw Error(ErrorKind::InvalidArgument, "parent hint is not an endpoint");
    r = up.u == p ? up.v : up.u;
  } else if (f.is_root(up.v)) {
    p = up.u;
    r = up.v;
  } else {
    p = up.v;
    r = up.u;
  }
  if (!f.is_root(r)) throw Error(ErrorKind::NotRoot, std::to_string(r) + " is not a root");
  return rooted_insert(f, p, r, rng, trace);
}

std::size_t dm_update_unrooted(ColoredForest& f, const Update& up, Rng& rng, RepairTrace* trace) {
  if (up.kind == UpdateKind::Delete) return rooted_delete(f, up.u, up.v, rng, trace);
  VertexId a = std::min(up.u, up.v);
  VertexId b = std::max(up.u, up.v);
  std::size_t delta = f.palette().delta();
  std::size_t ea = f.component_edges(a);
  std::size_t eb = f.component_edges(b);
  // child is the endpoint whose component gets rerooted
  VertexId child;
  if (ea <= delta && eb <= delta) {
    child = f.degree(b) < f.degree(a) ? b : a;
  } else {
    child = eb < ea ? b : a;
  }
  VertexId p = child == a ? b : a;
  return rooted_insert(f, p, child, rng, trace);
}

Rational recolor_probability(unsigned kappa, unsigned depth) {
  if (depth < 1 || kappa < 3) throw Error(ErrorKind::InvalidArgument, "need depth >= 1 and kappa >= 3");
  BigInt den = kappa;
  for (unsigned i = 1; i < depth; ++i) den *= (kappa - 1);
  return Rational(1, den);
}

Rational toggle_expected_recourse(unsigned delta, unsigned kappa, unsigned h) {
  Rational p(delta - 1, kappa - 1);
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i < h; ++i) {
    sum += term;
    term *= p;
  }
  return Rational(delta - 1, kappa) * sum;
}

}  // namespace forestcolor
