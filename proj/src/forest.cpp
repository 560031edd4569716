#include "forestcolor/forest.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace forestcolor {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidPalette: return "InvalidPalette";
    case ErrorKind::SameComponent: return "SameComponent";
    case ErrorKind::DegreeExceeded: return "DegreeExceeded";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::MissingEdge: return "MissingEdge";
    case ErrorKind::ImproperColoring: return "ImproperColoring";
    case ErrorKind::NotRoot: return "NotRoot";
    case ErrorKind::WrongPalette: return "WrongPalette";
    case ErrorKind::ScriptExhausted: return "ScriptExhausted";
    case ErrorKind::ScriptMismatch: return "ScriptMismatch";
    case ErrorKind::InsufficientVertices: return "InsufficientVertices";
    case ErrorKind::DepthTooSmall: return "DepthTooSmall";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::InsufficientSamples: return "InsufficientSamples";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Palette::Palette(Color delta, Color extra) : delta_(delta), extra_(extra) {
  if (delta < 1) throw Error(ErrorKind::InvalidPalette, "delta must be >= 1");
  if (delta <= 2 && extra != 0) {
    throw Error(ErrorKind::InvalidPalette, "delta <= 2 requires extra = 0");
  }
  if (delta >= 3 && extra > delta - 2) {
    throw Error(ErrorKind::InvalidPalette, "extra must be <= delta - 2");
  }
  if (kappa() > kMaxColors) throw Error(ErrorKind::InvalidPalette, "kappa above 63");
}

Palette Palette::relaxed(Color delta, Color extra) {
  if (delta < 1) throw Error(ErrorKind::InvalidPalette, "delta must be >= 1");
  if (delta + extra > kMaxColors) throw Error(ErrorKind::InvalidPalette, "kappa above 63");
  return Palette(delta, extra, Unchecked{});
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

ColoredForest::ColoredForest(std::size_t n, Palette palette)
    : palette_(palette), adj_(n), parent_(n, kNoVertex), comp_edges_(n, 0) {}

void ColoredForest::check_vertex(VertexId v) const {
  if (v >= adj_.size()) {
    throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
}

Incidence* ColoredForest::find_incidence(VertexId u, VertexId v) {
  for (auto& inc : adj_[u]) {
    if (inc.to == v) return &inc;
  }
  return nullptr;
}

const Incidence* ColoredForest::find_incidence(VertexId u, VertexId v) const {
  for (const auto& inc : adj_[u]) {
    if (inc.to == v) return &inc;
  }
  return nullptr;
}

bool ColoredForest::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return find_incidence(u, v) != nullptr;
}

Color ColoredForest::color(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const Incidence* inc = find_incidence(u, v);
  if (inc == nullptr) {
    throw Error(ErrorKind::MissingEdge,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return inc->color;
}

ColorSet ColoredForest::used(VertexId v) const {
  ColorSet s;
  for (const auto& inc : adj_[v]) {
    if (inc.color != kUncolored) s.insert(inc.color);
  }
  return s;
}

VertexId ColoredForest::neighbor_with_color(VertexId v, Color c) const {
  for (const auto& inc : adj_[v]) {
    if (inc.color == c) return inc.to;
  }
  return kNoVertex;
}

VertexId ColoredForest::find_root(VertexId v) const {
  check_vertex(v);
  while (parent_[v] != kNoVertex) v = parent_[v];
  return v;
}

std::vector<VertexId> ColoredForest::children(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(adj_[v].size());
  for (const auto& inc : adj_[v]) {
    if (inc.to != parent_[v]) out.push_back(inc.to);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ColoredForest::set_color(VertexId u, VertexId v, Color c) {
  check_vertex(u);
  check_vertex(v);
  if (c > palette_.kappa()) {
    throw Error(ErrorKind::InvalidArgument, "color " + std::to_string(c) + " outside palette");
  }
  Incidence* a = find_incidence(u, v);
  if (a == nullptr) {
    throw Error(ErrorKind::MissingEdge,
                "no edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  Incidence* b = find_incidence(v, u);
  Color old = a->color;
  if (old == c) return;
  EdgeKey key(u, v);
  if (scope_depth_ > 0) change_log_.emplace_back(key, old);
  a->color = c;
  b->color = c;
  if (hook_) hook_(key, old, c);
}

void ColoredForest::reroot(VertexId r) {
  check_vertex(r);
  VertexId old_root = find_root(r);
  if (old_root == r) return;
  std::size_t edges = comp_edges_[old_root];
  VertexId prev = kNoVertex;
  VertexId cur = r;
  while (cur != kNoVertex) {
    VertexId next = parent_[cur];
    parent_[cur] = prev;
    prev = cur;
    cur = next;
  }
  comp_edges_[old_root] = 0;
  comp_edges_[r] = edges;
}

EdgeKey ColoredForest::insert_topology(VertexId u, VertexId v, std::optional<VertexId> parent_hint) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw Error(ErrorKind::InvalidArgument, "self loop");
  if (parent_hint && *parent_hint != u && *parent_hint != v) {
    throw Error(ErrorKind::InvalidArgument, "parent hint is not an endpoint");
  }
  if (find_incidence(u, v) != nullptr) {
    throw Error(ErrorKind::DuplicateEdge,
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exists");
  }
  if (adj_[u].size() >= palette_.delta() || adj_[v].size() >= palette_.delta()) {
    throw Error(ErrorKind::DegreeExceeded,
                "inserting (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds delta");
  }
  VertexId ru = find_root(u);
  VertexId rv = find_root(v);
  if (ru == rv) {
    throw Error(ErrorKind::SameComponent,
                "(" + std::to_string(u) + "," + std::to_string(v) + ") closes a cycle");
  }
  VertexId par = parent_hint ? *parent_hint : u;
  VertexId child = par == u ? v : u;
  reroot(child);
  VertexId proot = par == u ? ru : rv;
  parent_[child] = par;
  comp_edges_[proot] += comp_edges_[child] + 1;
  comp_edges_[child] = 0;
  adj_[u].push_back({v, kUncolored});
  adj_[v].push_back({u, kUncolored});
  ++edges_;
  return EdgeKey(u, v);
}

std::size_t ColoredForest::count_subtree_edges(VertexId v) const {
  std::size_t count = 0;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (const auto& inc : adj_[x]) {
      if (inc.to == parent_[x]) continue;
      ++count;
      stack.push_back(inc.to);
    }
  }
  return count;
}

Color ColoredForest::delete_topology(EdgeKey e) {
  check_vertex(e.a);
  check_vertex(e.b);
  Incidence* inc = find_incidence(e.a, e.b);
  if (inc == nullptr) {
    throw Error(ErrorKind::MissingEdge,
                "no edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ")");
  }
  Color old = inc->color;
  VertexId child = parent_[e.b] == e.a ? e.b : e.a;
  VertexId par = e.other(child);
  auto drop = [this](VertexId x, VertexId y) {
    auto& list = adj_[x];
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i].to == y) {
        list.erase(list.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
    }
  };
  drop(e.a, e.b);
  drop(e.b, e.a);
  --edges_;
  VertexId root = find_root(par);
  parent_[child] = kNoVertex;
  std::size_t cut = count_subtree_edges(child);
  comp_edges_[root] -= cut + 1;
  comp_edges_[child] = cut;
  if (scope_depth_ > 0) change_log_.emplace_back(e, old);
  return old;
}

std::vector<EdgeKey> ColoredForest::edges() const {
  std::vector<EdgeKey> out;
  out.reserve(edges_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (const auto& inc : adj_[u]) {
      if (u < inc.to) out.emplace_back(u, inc.to);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<EdgeKey, Color>> ColoredForest::coloring() const {
  std::vector<std::pair<EdgeKey, Color>> out;
  out.reserve(edges_);
  for (VertexId u = 0; u < adj_.size(); ++u) {
    for (const auto& inc : adj_[u]) {
      if (u < inc.to) out.emplace_back(EdgeKey(u, inc.to), inc.color);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void ColoredForest::assert_proper() const {
  const std::size_t n = adj_.size();
  for (VertexId v = 0; v < n; ++v) {
    if (adj_[v].size() > palette_.delta()) {
      throw Error(ErrorKind::DegreeExceeded, "vertex " + std::to_string(v) + " above delta");
    }
    ColorSet seen;
    for (const auto& inc : adj_[v]) {
      if (inc.color == kUncolored || inc.color > palette_.kappa() || seen.contains(inc.color)) {
        throw ImproperColoringError(v, inc.color,
                                    "improper coloring at vertex " + std::to_string(v) +
                                        " color " + std::to_string(inc.color));
      }
      seen.insert(inc.color);
    }
  }
  // Each component is a tree whose parent pointers lead to its single root.
  std::vector<char> seen(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::size_t vertices = 0;
    std::size_t degree_sum = 0;
    std::size_t roots = 0;
    VertexId root = kNoVertex;
    std::vector<VertexId> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      ++vertices;
      degree_sum += adj_[x].size();
      if (parent_[x] == kNoVertex) {
        ++roots;
        root = x;
      } else if (find_incidence(x, parent_[x]) == nullptr) {
        throw Error(ErrorKind::InvalidArgument, "parent pointer off the tree at " + std::to_string(x));
      }
      for (const auto& inc : adj_[x]) {
        if (!seen[inc.to]) {
          seen[inc.to] = 1;
          stack.push_back(inc.to);
        }
      }
    }
    if (degree_sum / 2 != vertices - 1) {
      throw Error(ErrorKind::SameComponent, "component of " + std::to_string(s) + " has a cycle");
    }
    if (roots != 1) {
      throw Error(ErrorKind::InvalidArgument, "component of " + std::to_string(s) + " has " +
                                                  std::to_string(roots) + " roots");
    }
    if (comp_edges_[root] != vertices - 1) {
      throw Error(ErrorKind::InvalidArgument, "stale component size at " + std::to_string(root));
    }
  }
}

std::string ColoredForest::snapshot() const {
  std::ostringstream out;
  out << "forest n=" << adj_.size() << " kappa=" << palette_.kappa() << " delta=" << palette_.delta()
      << '\n';
  for (const auto& [key, c] : coloring()) {
    out << "e " << key.a << ' ' << key.b << ' ' << c;
    if (parent_[key.b] == key.a) {
      out << " p=" << key.a;
    } else if (parent_[key.a] == key.b) {
      out << " p=" << key.b;
    }
    out << '\n';
  }
  return out.str();
}

namespace {

bool parse_field(std::string_view token, std::string_view name, std::uint64_t& value) {
  if (token.substr(0, name.size()) != name) return false;
  token.remove_prefix(name.size());
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

ColoredForest ColoredForest::from_snapshot(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<ColoredForest> f;
  std::vector<std::pair<VertexId, VertexId>> parent_marks;  // (child, parent)
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty() || tok[0][0] == '#') continue;
    if (!f) {
      std::uint64_t n = 0, kappa = 0, delta = 0;
      if (tok.size() != 4 || tok[0] != "forest" || !parse_field(tok[1], "n=", n) ||
          !parse_field(tok[2], "kappa=", kappa) || !parse_field(tok[3], "delta=", delta) ||
          kappa < delta) {
        throw ParseError(line_no, "expected 'forest n=<n> kappa=<k> delta=<d>'");
      }
      f.emplace(n, Palette::relaxed(static_cast<Color>(delta), static_cast<Color>(kappa - delta)));
      continue;
    }
    std::uint64_t a = 0, b = 0, c = 0, p = 0;
    bool ok = (tok.size() == 4 || tok.size() == 5) && tok[0] == "e" && parse_field(tok[1], "", a) &&
              parse_field(tok[2], "", b) && parse_field(tok[3], "", c);
    if (ok && tok.size() == 5) ok = parse_field(tok[4], "p=", p) && (p == a || p == b);
    if (!ok) throw ParseError(line_no, "expected 'e <a> <b> <color> [p=<a|b>]'");
    try {
      f->insert_topology(static_cast<VertexId>(a), static_cast<VertexId>(b));
      f->set_color(static_cast<VertexId>(a), static_cast<VertexId>(b), static_cast<Color>(c));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (tok.size() == 5) {
      VertexId par = static_cast<VertexId>(p);
      parent_marks.emplace_back(par == a ? static_cast<VertexId>(b) : static_cast<VertexId>(a), par);
    }
  }
  if (!f) throw ParseError(line_no, "missing header");
  if (!parent_marks.empty()) {
    std::vector<char> is_child(f->vertex_count(), 0);
    for (auto [child, par] : parent_marks) is_child[child] = 1;
    for (VertexId v = 0; v < f->vertex_count(); ++v) {
      if (!is_child[v] && f->degree(v) > 0) f->reroot(v);
    }
    for (auto [child, par] : parent_marks) {
      if (f->parent(child) != par) throw ParseError(line_no, "parent markers do not form a rooting");
    }
  }
  return std::move(*f);
}

std::uint64_t ColoredForest::coloring_hash() const {
  std::string buf;
  for (const auto& [key, c] : coloring()) {
    buf += std::to_string(key.a) + ' ' + std::to_string(key.b) + ' ' + std::to_string(c) + '\n';
  }
  return fnv1a(buf);
}

std::uint64_t ColoredForest::state_hash() const { return fnv1a(snapshot()); }

std::size_t ColoredForest::open_scope() {
  ++scope_depth_;
  return change_log_.size();
}

void ColoredForest::close_scope() {
  if (--scope_depth_ == 0) change_log_.clear();
}

std::size_t ColoredForest::net_recourse_since(std::size_t mark) const {
  std::unordered_map<EdgeKey, Color, EdgeKeyHash> first;
  for (std::size_t i = mark; i < change_log_.size(); ++i) {
    first.try_emplace(change_log_[i].first, change_log_[i].second);
  }
  std::size_t count = 0;
  for (const auto& [key, old] : first) {
    if (old == kUncolored) continue;
    const Incidence* inc = find_incidence(key.a, key.b);
    if (inc != nullptr && inc->color != old) ++count;
  }
  return count;
}

RootedView rooted_view(const ColoredForest& f, VertexId root, VertexId skip) {
  const std::size_t n = f.vertex_count();
  RootedView view;
  view.root = root;
  view.parent.assign(n, kNoVertex);
  view.subtree_edges.assign(n, 0);
  view.member.assign(n, 0);
  view.order.push_back(root);
  view.member[root] = 1;
  for (std::size_t i = 0; i < view.order.size(); ++i) {
    VertexId x = view.order[i];
    for (const auto& inc : f.incident(x)) {
      if (inc.to == view.parent[x] || (x == root && inc.to == skip)) continue;
      view.parent[inc.to] = x;
      view.member[inc.to] = 1;
      view.order.push_back(inc.to);
    }
  }
  for (std::size_t i = view.order.size(); i-- > 1;) {
    VertexId x = view.order[i];
    view.subtree_edges[view.parent[x]] += view.subtree_edges[x] + 1;
  }
  return view;
}

std::vector<std::pair<VertexId, std::size_t>> subtree_sizes(const ColoredForest& f, VertexId root) {
  RootedView view = rooted_view(f, root);
  std::vector<std::pair<VertexId, std::size_t>> out;
  out.reserve(view.order.size());
  for (VertexId v : view.order) out.emplace_back(v, view.subtree_edges[v]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace forestcolor
