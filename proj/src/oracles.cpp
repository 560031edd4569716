#include "forestcolor/oracles.hpp"

#include <boost/math/special_functions/gamma.hpp>
#include <limits>

namespace forestcolor {

namespace {

void guard(const ColoredForest& f) {
  if (f.edge_count() > kOracleEdgeLimit) {
    throw Error(ErrorKind::TooLarge, std::to_string(f.edge_count()) + " edges exceed the oracle limit of " +
                                         std::to_string(kOracleEdgeLimit));
  }
}

// Edge-indexed search state shared by the enumerator and the branch-and-bound.
struct Search {
  std::vector<EdgeKey> edges;
  std::vector<Color> color;
  std::vector<ColorSet> used;  // by vertex
  Color kappa;

  Search(const ColoredForest& f) : edges(f.edges()), color(edges.size(), kUncolored),
                                   used(f.vertex_count()), kappa(f.palette().kappa()) {}

  bool fits(std::size_t i, Color c) const {
    return !used[edges[i].a].contains(c) && !used[edges[i].b].contains(c);
  }
  void put(std::size_t i, Color c) {
    color[i] = c;
    used[edges[i].a].insert(c);
    used[edges[i].b].insert(c);
  }
  void take(std::size_t i) {
    used[edges[i].a].erase(color[i]);
    used[edges[i].b].erase(color[i]);
    color[i] = kUncolored;
  }
};

void enumerate_from(Search& s, std::size_t i, std::vector<EdgeColoring>& out) {
  if (i == s.edges.size()) {
    out.push_back(s.color);
    return;
  }
  for (Color c = 1; c <= s.kappa; ++c) {
    if (!s.fits(i, c)) continue;
    s.put(i, c);
    enumerate_from(s, i + 1, out);
    s.take(i);
  }
}

void bound_from(Search& s, const std::vector<Color>& old, std::size_t i, std::size_t cost, std::size_t& best) {
  if (cost >= best) return;
  if (i == s.edges.size()) {
    best = cost;
    return;
  }
  if (old[i] != kUncolored && s.fits(i, old[i])) {
    s.put(i, old[i]);
    bound_from(s, old, i + 1, cost, best);
    s.take(i);
  }
  std::size_t step = old[i] == kUncolored ? 0 : 1;
  for (Color c = 1; c <= s.kappa; ++c) {
    if (c == old[i] || !s.fits(i, c)) continue;
    s.put(i, c);
    bound_from(s, old, i + 1, cost + step, best);
    s.take(i);
  }
}

}  // namespace

std::vector<EdgeColoring> enumerate_proper_colorings(const ColoredForest& f) {
  guard(f);
  Search s(f);
  std::vector<EdgeColoring> out;
  enumerate_from(s, 0, out);
  return out;
}

std::size_t min_recourse_bruteforce(const ColoredForest& f, EdgeKey new_edge) {
  guard(f);
  if (!f.has_edge(new_edge.a, new_edge.b)) throw Error(ErrorKind::MissingEdge, "new edge not in forest");
  Search s(f);
  std::vector<Color> old;
  for (const auto& [key, c] : f.coloring()) old.push_back(key == new_edge ? kUncolored : c);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  bound_from(s, old, 0, 0, best);
  return best;
}

Rational coloring_probability(const ColoredForest& f) {
  f.assert_proper();
  for (const auto& [key, c] : f.coloring()) {
    if (c == kUncolored) throw ImproperColoringError(key.a, c, "uncolored edge");
  }
  const BigInt kappa = f.palette().kappa();
  Rational p = 1;
  for (VertexId v = 0; v < f.vertex_count(); ++v) {
    std::size_t kids = f.children(v).size();
    BigInt pool = f.is_root(v) ? kappa : kappa - 1;
    // kids distinct colors drawn injectively from pool
    for (std::size_t k = 0; k < kids; ++k) p /= Rational(pool - k);
  }
  return p;
}

std::string canonical_coloring(const EdgeColoring& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c[i]);
  }
  return s;
}

std::string canonical_coloring(const ColoredForest& f) {
  EdgeColoring c;
  for (const auto& [key, col] : f.coloring()) c.push_back(col);
  return canonical_coloring(c);
}

double chisq_survival(double statistic, std::size_t dof) {
  if (dof == 0) return 1.0;
  if (statistic <= 0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(dof) / 2.0, statistic / 2.0);
}

ChiSquare chisq_uniformity(const std::vector<std::uint64_t>& counts, std::size_t support) {
  if (support == 0) throw Error(ErrorKind::InvalidArgument, "empty support");
  if (counts.size() > support) throw Error(ErrorKind::InvalidArgument, "more cells than the support");
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  if (total < 10 * support) {
    throw Error(ErrorKind::InsufficientSamples,
                std::to_string(total) + " samples for support " + std::to_string(support));
  }
  double expected = static_cast<double>(total) / static_cast<double>(support);
  double stat = 0;
  for (auto c : counts) {
    double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  // unseen cells
  stat += static_cast<double>(support - counts.size()) * expected;
  ChiSquare out;
  out.statistic = stat;
  out.dof = support - 1;
  out.p_value = chisq_survival(stat, out.dof);
  return out;
}

ChiSquare chisq_uniformity(const ColoringHistogram& h, std::size_t support) {
  std::vector<std::uint64_t> counts;
  counts.reserve(h.counts.size());
  for (const auto& [key, c] : h.counts) counts.push_back(c);
  return chisq_uniformity(counts, support);
}

}  // namespace forestcolor
