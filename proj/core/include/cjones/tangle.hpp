#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cjones {

/// The eight oriented crossing forms of a height-generic (1,1)-tangle, in
/// the order used throughout the docs (see README for the picture table).
///
/// Corner labels are i = NW, j = NE, k = SW, l = SE, and m sits on the
/// crossing itself.
///
///   kind  over strand  under strand  label constraints
///   X1    NE -> SW     NW -> SE      l = i + m,  k = j - m
///   X2    SW -> NE     SE -> NW      i = l + m,  j = k - m
///   X3    NW -> SE     NE -> SW      l = i - m,  k = j + m
///   X4    SE -> NW     SW -> NE      i = l - m,  j = k + m
///   X5    SW -> NE     NW -> SE      j = k - m,  l = i + m
///   X6    NE -> SW     SE -> NW      k = j - m,  i = l + m
///   X7    NW -> SE     SW -> NE      j = k + m,  l = i - m
///   X8    SE -> NW     NE -> SW      k = j + m,  i = l - m
enum class CrossingKind : std::uint8_t { X1 = 1, X2, X3, X4, X5, X6, X7, X8 };

enum class Corner : std::uint8_t { NW = 0, NE = 1, SW = 2, SE = 3 };

/// Label slots in constraint vectors: i, j, k, l (the corners) then m.
inline constexpr std::size_t kLabelSlots = 5;
inline constexpr std::size_t kCrossingSlot = 4;

/// One Kronecker-delta constraint: sum_s coeff[s] * label[s] == 0.
using DeltaConstraint = std::array<int, kLabelSlots>;

struct CrossingTraits {
  std::array<DeltaConstraint, 2> constraints;
  /// Corners where a strand enters the crossing; the other two are exits.
  std::array<Corner, 2> entries;
};

const CrossingTraits& crossing_traits(CrossingKind kind);

std::string_view to_string(CrossingKind kind);
std::optional<CrossingKind> crossing_kind_from_string(std::string_view s);

enum class ExtremumType : std::uint8_t { Min, Max };
enum class Passage : std::uint8_t { LeftToRight, RightToLeft };

struct ExtremumKind {
  ExtremumType which;
  Passage direction;

  bool operator==(const ExtremumKind&) const = default;
};

/// Index into TangleDiagram::arcs().
struct ArcId {
  std::uint32_t value = 0;

  auto operator<=>(const ArcId&) const = default;
};

struct Crossing {
  CrossingKind kind;
  std::array<ArcId, 4> corners;  // indexed by Corner

  ArcId at(Corner c) const { return corners[static_cast<std::size_t>(c)]; }
};

struct Extremum {
  ExtremumKind kind;
  ArcId arc;
};

struct Endpoints {
  ArcId in;
  ArcId out;
};

/// A (1,1)-tangle diagram: named arcs, oriented crossings, oriented extrema
/// and the two endpoint arcs. Arcs are declared implicitly on first use.
class TangleDiagram {
 public:
  ArcId arc(std::string_view name);  // find or declare
  std::optional<ArcId> find_arc(std::string_view name) const;
  const std::string& arc_name(ArcId id) const { return arcs_.at(id.value); }

  void set_endpoints(ArcId in, ArcId out) { endpoints_ = Endpoints{in, out}; }
  void add_crossing(CrossingKind kind, ArcId nw, ArcId ne, ArcId sw, ArcId se);
  void add_extremum(ExtremumKind kind, ArcId arc);

  const std::vector<std::string>& arcs() const noexcept { return arcs_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<Extremum>& extrema() const noexcept { return extrema_; }
  const std::optional<Endpoints>& endpoints() const noexcept { return endpoints_; }

  /// Structural equality by arc name, independent of arc declaration order.
  friend bool operator==(const TangleDiagram& a, const TangleDiagram& b);

 private:
  std::vector<std::string> arcs_;
  std::vector<Crossing> crossings_;
  std::vector<Extremum> extrema_;
  std::optional<Endpoints> endpoints_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Parses the line-oriented tangle format:
///
///   # comment
///   open in=<arc> out=<arc>
///   cross <X1..X8> nw=<arc> ne=<arc> sw=<arc> se=<arc>
///   min <arc> dir=<ltr|rtl>
///   max <arc> dir=<ltr|rtl>
///
/// Throws ParseError (1-based line/column) on malformed input.
TangleDiagram parse_tangle(std::istream& in);
TangleDiagram parse_tangle(std::string_view text);

/// Reads and parses a tangle file.
TangleDiagram load_tangle(const std::string& path);

/// Canonical text form; parse_tangle(serialize(d)) == d.
std::string serialize(const TangleDiagram& d);

/// Combinatorial checks only (references and arity); planarity is trusted.
/// Empty result means the diagram is structurally valid.
std::vector<std::string> validate(const TangleDiagram& d);

/// Shipped fixtures: "trivial" and "4_1".
TangleDiagram builtin_diagram(std::string_view name);

}  // namespace cjones
