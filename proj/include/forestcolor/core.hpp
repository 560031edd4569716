#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace forestcolor {

using VertexId = std::uint32_t;
using Color = std::uint32_t;  // 1..kappa; 0 means uncolored

inline constexpr VertexId kNoVertex = static_cast<VertexId>(-1);
inline constexpr Color kUncolored = 0;
inline constexpr Color kMaxColors = 63;

enum class ErrorKind {
  InvalidArgument,
  InvalidPalette,
  SameComponent,
  DegreeExceeded,
  DuplicateEdge,
  MissingEdge,
  ImproperColoring,
  NotRoot,
  WrongPalette,
  ScriptExhausted,
  ScriptMismatch,
  InsufficientVertices,
  DepthTooSmall,
  NotApplicable,
  TooLarge,
  InsufficientSamples,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class ImproperColoringError : public Error {
 public:
  ImproperColoringError(VertexId v, Color c, const std::string& what)
      : Error(ErrorKind::ImproperColoring, what), vertex_(v), color_(c) {}
  VertexId vertex() const { return vertex_; }
  Color color() const { return color_; }

 private:
  VertexId vertex_;
  Color color_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Set of colors in [1, 63] as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ColorSet range(Color kappa) {
    return ColorSet(kappa >= 63 ? ~std::uint64_t{1}
                                : ((std::uint64_t{1} << (kappa + 1)) - 2));
  }
  static ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  constexpr bool contains(Color c) const { return c != 0 && c <= 63 && (bits_ >> c) & 1; }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  // Smallest color, or 0 when empty.
  constexpr Color lowest() const {
    return bits_ == 0 ? 0 : static_cast<Color>(std::countr_zero(bits_));
  }
  constexpr std::uint64_t bits() const { return bits_; }

  std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
      out.push_back(static_cast<Color>(std::countr_zero(b)));
    }
    return out;
  }

  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet a, ColorSet b) = default;

 private:
  std::uint64_t bits_ = 0;
};

// kappa = delta + extra colors. The standard constructor enforces
// extra <= delta - 2 for delta >= 3 (extra = 0 for delta <= 2).
class Palette {
 public:
  Palette(Color delta, Color extra);

  // Only requires delta >= 1 and kappa <= 63. Used by the randomized
  // experiments that sweep kappa past 2*delta - 2.
  static Palette relaxed(Color delta, Color extra);

  Color delta() const { return delta_; }
  Color extra() const { return extra_; }
  Color kappa() const { return delta_ + extra_; }
  ColorSet all() const { return ColorSet::range(kappa()); }

  friend bool operator==(const Palette&, const Palette&) = default;

 private:
  struct Unchecked {};
  Palette(Color delta, Color extra, Unchecked) : delta_(delta), extra_(extra) {}

  Color delta_;
  Color extra_;
};

struct EdgeKey {
  VertexId a = 0;
  VertexId b = 0;

  EdgeKey() = default;
  EdgeKey(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  VertexId other(VertexId x) const { return x == a ? b : a; }
  friend auto operator<=>(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const {
    return std::hash<std::uint64_t>{}((std::uint64_t{e.a} << 32) | e.b);
  }
};

enum class UpdateKind { Insert, Delete };

struct Update {
  UpdateKind kind = UpdateKind::Insert;
  VertexId u = 0;
  VertexId v = 0;
  std::optional<VertexId> parent_hint;

  static Update insert(VertexId u, VertexId v, std::optional<VertexId> parent = std::nullopt) {
    return Update{UpdateKind::Insert, u, v, parent};
  }
  static Update erase(VertexId u, VertexId v) { return Update{UpdateKind::Delete, u, v, std::nullopt}; }

  friend bool operator==(const Update&, const Update&) = default;
};

using UpdateSequence = std::vector<Update>;

}  // namespace forestcolor
