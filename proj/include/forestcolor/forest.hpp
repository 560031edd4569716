#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forestcolor/core.hpp"

namespace forestcolor {

struct Incidence {
  VertexId to;
  Color color;
};

// Called with (edge, old color, new color) whenever an existing edge changes color.
using RecourseHook = std::function<void(EdgeKey, Color, Color)>;

class ColoredForest {
 public:
  ColoredForest(std::size_t n, Palette palette);

  std::size_t vertex_count() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  const Palette& palette() const { return palette_; }

  // Topology. The new edge is uncolored. Without a hint the child is v.
  // The child's component is rerooted at the child before linking.
  EdgeKey insert_topology(VertexId u, VertexId v, std::optional<VertexId> parent_hint = std::nullopt);
  // Returns the removed edge's color. The endpoint on the cut-off side becomes a root.
  Color delete_topology(EdgeKey e);
  void reroot(VertexId new_root);

  bool has_edge(VertexId u, VertexId v) const;
  Color color(VertexId u, VertexId v) const;  // throws MissingEdge
  void set_color(VertexId u, VertexId v, Color c);

  std::size_t degree(VertexId v) const { return adj_[v].size(); }
  const std::vector<Incidence>& incident(VertexId v) const { return adj_[v]; }
  ColorSet used(VertexId v) const;
  ColorSet available(VertexId v) const { return palette_.all() - used(v); }
  ColorSet available(EdgeKey e) const { return available(e.a) & available(e.b); }
  // Neighbor across the edge of color c at v, or kNoVertex.
  VertexId neighbor_with_color(VertexId v, Color c) const;

  // Rooting.
  VertexId parent(VertexId v) const { return parent_[v]; }
  bool is_root(VertexId v) const { return parent_[v] == kNoVertex; }
  VertexId find_root(VertexId v) const;
  std::vector<VertexId> children(VertexId v) const;  // ascending ids
  bool same_component(VertexId u, VertexId v) const { return find_root(u) == find_root(v); }
  std::size_t component_edges(VertexId v) const { return comp_edges_[find_root(v)]; }

  std::vector<EdgeKey> edges() const;  // sorted
  std::vector<std::pair<EdgeKey, Color>> coloring() const;  // sorted by key

  // Throws ImproperColoringError or Error(InvalidArgument) on a broken invariant.
  void assert_proper() const;

  std::string snapshot() const;
  static ColoredForest from_snapshot(std::string_view text);
  // Hash of topology + colors (rooting excluded).
  std::uint64_t coloring_hash() const;
  // Hash of topology + colors + rooting.
  std::uint64_t state_hash() const;

  void set_recourse_hook(RecourseHook hook) { hook_ = std::move(hook); }

  // Recourse accounting, used through RecourseScope.
  std::size_t open_scope();
  void close_scope();
  std::size_t net_recourse_since(std::size_t mark) const;

 private:
  void check_vertex(VertexId v) const;
  Incidence* find_incidence(VertexId u, VertexId v);
  const Incidence* find_incidence(VertexId u, VertexId v) const;
  std::size_t count_subtree_edges(VertexId v) const;

  Palette palette_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<VertexId> parent_;
  std::vector<std::size_t> comp_edges_;  // meaningful at roots
  std::size_t edges_ = 0;
  RecourseHook hook_;
  int scope_depth_ = 0;
  std::vector<std::pair<EdgeKey, Color>> change_log_;
};

// Net recourse of everything done to the forest while the scope is alive:
// edges that existed and were colored when first touched and end with a
// different color.
class RecourseScope {
 public:
  explicit RecourseScope(ColoredForest& f) : f_(f), mark_(f.open_scope()) {}
  ~RecourseScope() { f_.close_scope(); }
  RecourseScope(const RecourseScope&) = delete;
  RecourseScope& operator=(const RecourseScope&) = delete;

  std::size_t recourse() const { return f_.net_recourse_since(mark_); }

 private:
  ColoredForest& f_;
  std::size_t mark_;
};

class RecourseLedger {
 public:
  void record(std::size_t recourse) {
    per_update_.push_back(recourse);
    total_ += recourse;
    if (recourse > worst_) worst_ = recourse;
  }
  const std::vector<std::size_t>& per_update() const { return per_update_; }
  std::size_t total() const { return total_; }
  std::size_t updates() const { return per_update_.size(); }
  std::size_t worst_case() const { return worst_; }
  double amortized() const {
    return per_update_.empty() ? 0.0 : static_cast<double>(total_) / static_cast<double>(per_update_.size());
  }

 private:
  std::vector<std::size_t> per_update_;
  std::size_t total_ = 0;
  std::size_t worst_ = 0;
};

// A component viewed from an arbitrary root, independent of the stored rooting.
struct RootedView {
  VertexId root = kNoVertex;
  std::vector<VertexId> order;              // BFS order, root first
  std::vector<VertexId> parent;             // by vertex; kNoVertex at root and outside
  std::vector<std::size_t> subtree_edges;   // by vertex
  std::vector<char> member;                 // by vertex

  bool contains(VertexId v) const { return member[v] != 0; }
};

// Excluding `skip` (a neighbor of root) keeps the view on one side of an edge.
RootedView rooted_view(const ColoredForest& f, VertexId root, VertexId skip = kNoVertex);

// Edge count of each rooted subtree in root's component.
std::vector<std::pair<VertexId, std::size_t>> subtree_sizes(const ColoredForest& f, VertexId root);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace forestcolor
