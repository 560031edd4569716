#include "forestcolor/algorithm.hpp"

#include "forestcolor/colorful_path.hpp"

namespace forestcolor {

namespace {

enum class Kind { Greedy, Shift, Path, SmallestSubtree, ColorfulPath, DistRooted, Dist, Sublinear };

// Rooted-model insertion: returns (parent, child). The child must be a root.
std::pair<VertexId, VertexId> rooted_endpoints(const ColoredForest& f, const Update& up) {
  VertexId p;
  VertexId r;
  if (up.parent_hint) {
    p = *up.parent_hint;
    r = p == up.u ? up.v : up.u;
  } else if (f.is_root(up.v)) {
    p = up.u;
    r = up.v;
  } else {
    p = up.v;
    r = up.u;
  }
  return {p, r};
}

class Impl final : public Algorithm {
 public:
  Impl(std::string id, Kind kind, std::uint64_t seed, TieBreaker tb)
      : id_(std::move(id)), kind_(kind), tb_(std::move(tb)), rng_(seed) {}

  std::string id() const override { return id_; }
  bool randomized() const override { return kind_ == Kind::DistRooted || kind_ == Kind::Dist; }
  TieBreaker* tie_breaker() override {
    switch (kind_) {
      case Kind::Greedy:
      case Kind::Shift:
      case Kind::Path:
        return &tb_;
      default:
        return nullptr;
    }
  }

  std::size_t apply(ColoredForest& f, const Update& up) override {
    if (kind_ == Kind::DistRooted) return dm_update_rooted(f, up, rng_);
    if (kind_ == Kind::Dist) return dm_update_unrooted(f, up, rng_);
    if (up.kind == UpdateKind::Delete) {
      if (!f.has_edge(up.u, up.v)) {
        throw Error(ErrorKind::MissingEdge,
                    "no edge (" + std::to_string(up.u) + "," + std::to_string(up.v) + ")");
      }
      f.delete_topology(EdgeKey(up.u, up.v));
      return 0;
    }
    if (kind_ == Kind::ColorfulPath) {
      auto [p, r] = rooted_endpoints(f, up);
      return cp_insert(f, p, r);
    }
    EdgeKey e = f.insert_topology(up.u, up.v, up.parent_hint);
    switch (kind_) {
      case Kind::Greedy:
        return greedy_insert(f, e, tb_);
      case Kind::Shift:
        return greedy_shift_insert(f, e, tb_);
      case Kind::Path:
        return greedy_path_insert(f, e, tb_);
      case Kind::SmallestSubtree:
        return smallest_subtree_path_insert(f, e);
      case Kind::Sublinear:
        return sublinear_insert(f, e);
      default:
        throw Error(ErrorKind::InvalidArgument, "unreachable");
    }
  }

 private:
  std::string id_;
  Kind kind_;
  TieBreaker tb_;
  Rng rng_;
};

}  // namespace

const std::vector<std::string>& algorithm_ids() {
  static const std::vector<std::string> ids{"greedy",        "greedy-shift",      "greedy-path",
                                            "smallest-subtree", "colorful-path", "dist-maint-rooted",
                                            "dist-maint",    "sublinear-delta"};
  return ids;
}

std::unique_ptr<Algorithm> make_algorithm(const std::string& id, const Palette& palette, std::uint64_t seed,
                                          TieBreaker tb) {
  Kind kind;
  if (id == "greedy") {
    kind = Kind::Greedy;
  } else if (id == "greedy-shift") {
    kind = Kind::Shift;
  } else if (id == "greedy-path") {
    kind = Kind::Path;
  } else if (id == "smallest-subtree") {
    kind = Kind::SmallestSubtree;
  } else if (id == "colorful-path") {
    kind = Kind::ColorfulPath;
  } else if (id == "dist-maint-rooted") {
    kind = Kind::DistRooted;
  } else if (id == "dist-maint") {
    kind = Kind::Dist;
  } else if (id == "sublinear-delta") {
    kind = Kind::Sublinear;
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown algorithm '" + id + "'");
  }
  const Color delta = palette.delta();
  if ((kind == Kind::SmallestSubtree || kind == Kind::Sublinear) && palette.extra() != 0) {
    throw Error(ErrorKind::WrongPalette, id + " needs kappa = delta");
  }
  if (kind == Kind::Sublinear && delta < 3) throw Error(ErrorKind::WrongPalette, id + " needs delta >= 3");
  if (kind == Kind::ColorfulPath && (delta < 3 || palette.kappa() != 2 * delta - 2)) {
    throw Error(ErrorKind::WrongPalette, id + " needs kappa = 2*delta - 2 and delta >= 3");
  }
  return std::make_unique<Impl>(id, kind, seed, std::move(tb));
}

}  // namespace forestcolor
