#include "forestcolor/colorful_path.hpp"

namespace forestcolor {

std::size_t cp_insert(ColoredForest& f, VertexId p, VertexId r, std::vector<CpStep>* trace) {
  const Color delta = f.palette().delta();
  if (delta < 3 || f.palette().kappa() != 2 * delta - 2) {
    throw Error(ErrorKind::WrongPalette, "colorful-path needs kappa = 2*delta - 2 and delta >= 3");
  }
  if (!f.is_root(r)) throw Error(ErrorKind::NotRoot, std::to_string(r) + " is not a root");
  RecourseScope scope(f);
  f.insert_topology(p, r, p);
  if (trace) trace->clear();
  VertexId u = p;
  VertexId v = r;
  while (true) {
    ColorSet free_u = f.available(u);
    ColorSet free_v = f.available(v);
    ColorSet common = free_u & free_v;
    if (!common.empty()) {
      f.set_color(u, v, common.lowest());
      if (trace) trace->push_back({EdgeKey(u, v), CpStepKind::Stop, common.lowest()});
      break;
    }
    // With 2*delta - 2 colors a step only moves on when both ends are
    // saturated and u's free colors are exactly v's used colors.
    if (f.degree(u) != delta || f.degree(v) != delta || free_u != f.used(v)) {
      throw Error(ErrorKind::InvalidArgument, "step-progression rule violated");
    }
    auto kids = f.children(v);
    VertexId next = kNoVertex;
    CpStepKind kind = CpStepKind::StepToFree;
    for (VertexId w : kids) {
      if (free_u.contains(f.color(v, w)) && !(f.available(w) & free_v).empty()) {
        next = w;
        break;
      }
    }
    if (next == kNoVertex) {
      kind = CpStepKind::StepAvoidGrandparent;
      Color avoid = kUncolored;
      VertexId pu = f.parent(u);
      if (pu != kNoVertex && f.parent(pu) != kNoVertex) avoid = f.color(f.parent(pu), pu);
      Color best = kUncolored;
      for (VertexId w : kids) {
        Color c = f.color(v, w);
        if (c == avoid || !free_u.contains(c)) continue;
        if (best == kUncolored || c < best) {
          best = c;
          next = w;
        }
      }
      if (next == kNoVertex) throw Error(ErrorKind::InvalidArgument, "no child color to shift");
    }
    Color taken = f.color(v, next);
    f.set_color(v, next, kUncolored);
    f.set_color(u, v, taken);
    if (trace) trace->push_back({EdgeKey(u, v), kind, taken});
    u = v;
    v = next;
  }
  return scope.recourse();
}

std::size_t cp_delete(ColoredForest& f, EdgeKey e) {
  f.delete_topology(e);
  return 0;
}

}  // namespace forestcolor
