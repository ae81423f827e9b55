#include "cjones/tangle.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace cjones {

namespace {

using enum Corner;

// Slot order: i (NW), j (NE), k (SW), l (SE), m.
constexpr std::array<CrossingTraits, 8> kTraits{{
    // X1: l = i + m, k = j - m
    {{{{-1, 0, 0, 1, -1}, {0, -1, 1, 0, 1}}}, {NE, NW}},
    // X2: i = l + m, j = k - m
    {{{{1, 0, 0, -1, -1}, {0, 1, -1, 0, 1}}}, {SW, SE}},
    // X3: l = i - m, k = j + m
    {{{{-1, 0, 0, 1, 1}, {0, -1, 1, 0, -1}}}, {NW, NE}},
    // X4: i = l - m, j = k + m
    {{{{1, 0, 0, -1, 1}, {0, 1, -1, 0, -1}}}, {SE, SW}},
    // X5: j = k - m, l = i + m
    {{{{0, 1, -1, 0, 1}, {-1, 0, 0, 1, -1}}}, {SW, NW}},
    // X6: k = j - m, i = l + m
    {{{{0, -1, 1, 0, 1}, {1, 0, 0, -1, -1}}}, {NE, SE}},
    // X7: j = k + m, l = i - m
    {{{{0, 1, -1, 0, -1}, {-1, 0, 0, 1, 1}}}, {NW, SW}},
    // X8: k = j + m, i = l - m
    {{{{0, -1, 1, 0, -1}, {1, 0, 0, -1, 1}}}, {SE, NE}},
}};

constexpr std::array<std::string_view, 8> kKindNames{"X1", "X2", "X3", "X4",
                                                     "X5", "X6", "X7", "X8"};

bool valid_arc_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r') ++pos;
    out.push_back({line.substr(start, pos - start), start + 1});
  }
  return out;
}

class LineParser {
 public:
  LineParser(std::size_t line_no, std::vector<Token> tokens)
      : line_no_(line_no), tokens_(std::move(tokens)) {}

  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(line_no_, column, msg);
  }

  const Token& keyword() const { return tokens_.front(); }

  // Collects key=value pairs from tokens_[first..]; every key in `keys` must
  // appear exactly once and no other key is allowed.
  std::map<std::string_view, Token> keyed(std::size_t first,
                                          std::initializer_list<std::string_view> keys) const {
    std::map<std::string_view, Token> values;
    for (std::size_t t = first; t < tokens_.size(); ++t) {
      const Token& tok = tokens_[t];
      const auto eq = tok.text.find('=');
      if (eq == std::string_view::npos) fail(tok.column, "expected key=value, got '" + std::string(tok.text) + "'");
      const auto key = tok.text.substr(0, eq);
      if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
        fail(tok.column, "unexpected key '" + std::string(key) + "'");
      }
      if (values.contains(key)) fail(tok.column, "duplicate key '" + std::string(key) + "'");
      values.emplace(key, Token{tok.text.substr(eq + 1), tok.column + eq + 1});
    }
    for (auto key : keys) {
      if (!values.contains(key)) {
        fail(keyword().column, "missing key '" + std::string(key) + "'");
      }
    }
    return values;
  }

  std::string_view arc_name(const Token& tok) const {
    if (!valid_arc_name(tok.text)) fail(tok.column, "invalid arc name '" + std::string(tok.text) + "'");
    return tok.text;
  }

  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  std::size_t line_no_;
  std::vector<Token> tokens_;
};

}  // namespace

const CrossingTraits& crossing_traits(CrossingKind kind) {
  return kTraits.at(static_cast<std::size_t>(kind) - 1);
}

std::string_view to_string(CrossingKind kind) {
  return kKindNames.at(static_cast<std::size_t>(kind) - 1);
}

std::optional<CrossingKind> crossing_kind_from_string(std::string_view s) {
  for (std::size_t n = 0; n < kKindNames.size(); ++n) {
    if (kKindNames[n] == s) return static_cast<CrossingKind>(n + 1);
  }
  return std::nullopt;
}

ArcId TangleDiagram::arc(std::string_view name) {
  if (auto id = find_arc(name)) return *id;
  arcs_.emplace_back(name);
  return ArcId{static_cast<std::uint32_t>(arcs_.size() - 1)};
}

std::optional<ArcId> TangleDiagram::find_arc(std::string_view name) const {
  const auto it = std::find(arcs_.begin(), arcs_.end(), name);
  if (it == arcs_.end()) return std::nullopt;
  return ArcId{static_cast<std::uint32_t>(it - arcs_.begin())};
}

void TangleDiagram::add_crossing(CrossingKind kind, ArcId nw, ArcId ne, ArcId sw, ArcId se) {
  crossings_.push_back(Crossing{kind, {nw, ne, sw, se}});
}

void TangleDiagram::add_extremum(ExtremumKind kind, ArcId arc) { extrema_.push_back({kind, arc}); }

bool operator==(const TangleDiagram& a, const TangleDiagram& b) {
  if (a.crossings_.size() != b.crossings_.size() || a.extrema_.size() != b.extrema_.size() ||
      a.endpoints_.has_value() != b.endpoints_.has_value()) {
    return false;
  }
  std::set<std::string> names_a(a.arcs_.begin(), a.arcs_.end());
  std::set<std::string> names_b(b.arcs_.begin(), b.arcs_.end());
  if (names_a != names_b) return false;

  const auto same = [&](ArcId x, ArcId y) { return a.arc_name(x) == b.arc_name(y); };
  if (a.endpoints_ && !(same(a.endpoints_->in, b.endpoints_->in) &&
                        same(a.endpoints_->out, b.endpoints_->out))) {
    return false;
  }
  for (std::size_t c = 0; c < a.crossings_.size(); ++c) {
    const auto& x = a.crossings_[c];
    const auto& y = b.crossings_[c];
    if (x.kind != y.kind) return false;
    for (std::size_t s = 0; s < 4; ++s) {
      if (!same(x.corners[s], y.corners[s])) return false;
    }
  }
  for (std::size_t e = 0; e < a.extrema_.size(); ++e) {
    if (a.extrema_[e].kind != b.extrema_[e].kind || !same(a.extrema_[e].arc, b.extrema_[e].arc)) {
      return false;
    }
  }
  return true;
}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      line_(line),
      column_(column) {}

TangleDiagram parse_tangle(std::istream& in) {
  TangleDiagram d;
  std::string raw;
  std::size_t line_no = 0;
  std::size_t open_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    LineParser p(line_no, std::move(tokens));
    const auto& kw = p.keyword().text;

    if (kw == "open") {
      if (open_line != 0) {
        p.fail(p.keyword().column,
               "duplicate endpoint declaration (first on line " + std::to_string(open_line) + ")");
      }
      open_line = line_no;
      const auto kv = p.keyed(1, {"in", "out"});
      const ArcId in_arc = d.arc(p.arc_name(kv.at("in")));
      const ArcId out_arc = d.arc(p.arc_name(kv.at("out")));
      d.set_endpoints(in_arc, out_arc);
    } else if (kw == "cross") {
      if (p.tokens().size() < 2) p.fail(p.keyword().column, "cross: missing crossing kind");
      const Token& kind_tok = p.tokens()[1];
      const auto kind = crossing_kind_from_string(kind_tok.text);
      if (!kind) p.fail(kind_tok.column, "unknown crossing kind '" + std::string(kind_tok.text) + "'");
      const auto kv = p.keyed(2, {"nw", "ne", "sw", "se"});
      const ArcId nw = d.arc(p.arc_name(kv.at("nw")));
      const ArcId ne = d.arc(p.arc_name(kv.at("ne")));
      const ArcId sw = d.arc(p.arc_name(kv.at("sw")));
      const ArcId se = d.arc(p.arc_name(kv.at("se")));
      d.add_crossing(*kind, nw, ne, sw, se);
    } else if (kw == "min" || kw == "max") {
      if (p.tokens().size() < 2) p.fail(p.keyword().column, std::string(kw) + ": missing arc");
      const ArcId arc = d.arc(p.arc_name(p.tokens()[1]));
      const auto kv = p.keyed(2, {"dir"});
      const Token& dir = kv.at("dir");
      Passage passage;
      if (dir.text == "ltr") {
        passage = Passage::LeftToRight;
      } else if (dir.text == "rtl") {
        passage = Passage::RightToLeft;
      } else {
        p.fail(dir.column, "dir must be ltr or rtl, got '" + std::string(dir.text) + "'");
      }
      d.add_extremum({kw == "min" ? ExtremumType::Min : ExtremumType::Max, passage}, arc);
    } else {
      p.fail(p.keyword().column, "unknown statement '" + std::string(kw) + "'");
    }
  }
  if (open_line == 0) throw ParseError(line_no + 1, 1, "missing 'open in=<arc> out=<arc>' declaration");
  return d;
}

TangleDiagram parse_tangle(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_tangle(in);
}

TangleDiagram load_tangle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open tangle file '" + path + "'");
  return parse_tangle(in);
}

std::string serialize(const TangleDiagram& d) {
  std::ostringstream out;
  if (const auto& ep = d.endpoints()) {
    out << "open in=" << d.arc_name(ep->in) << " out=" << d.arc_name(ep->out) << '\n';
  }
  for (const auto& c : d.crossings()) {
    out << "cross " << to_string(c.kind) << " nw=" << d.arc_name(c.at(Corner::NW))
        << " ne=" << d.arc_name(c.at(Corner::NE)) << " sw=" << d.arc_name(c.at(Corner::SW))
        << " se=" << d.arc_name(c.at(Corner::SE)) << '\n';
  }
  for (const auto& e : d.extrema()) {
    out << (e.kind.which == ExtremumType::Min ? "min " : "max ") << d.arc_name(e.arc)
        << " dir=" << (e.kind.direction == Passage::LeftToRight ? "ltr" : "rtl") << '\n';
  }
  return out.str();
}

std::vector<std::string> validate(const TangleDiagram& d) {
  std::vector<std::string> violations;
  const auto n_arcs = d.arcs().size();
  if (!d.endpoints()) {
    violations.emplace_back("no endpoint declaration");
    return violations;
  }
  for (const auto& c : d.crossings()) {
    for (auto id : c.corners) {
      if (id.value >= n_arcs) {
        violations.emplace_back("crossing references unknown arc #" + std::to_string(id.value));
        return violations;
      }
    }
  }

  // Each arc runs from exactly one source end (the input endpoint or a
  // crossing exit) to exactly one sink end (a crossing entry or the output
  // endpoint).
  std::vector<int> sources(n_arcs, 0);
  std::vector<int> sinks(n_arcs, 0);
  const auto& ep = *d.endpoints();
  ++sources[ep.in.value];
  ++sinks[ep.out.value];
  for (const auto& c : d.crossings()) {
    const auto& traits = crossing_traits(c.kind);
    for (std::size_t s = 0; s < 4; ++s) {
      const auto corner = static_cast<Corner>(s);
      const bool entry = corner == traits.entries[0] || corner == traits.entries[1];
      ++(entry ? sinks : sources)[c.corners[s].value];
    }
  }
  for (std::size_t a = 0; a < n_arcs; ++a) {
    const auto& name = d.arcs()[a];
    if (sources[a] != 1) {
      violations.push_back("arc '" + name + "' has " + std::to_string(sources[a]) +
                           " outgoing ends (expected 1)");
    }
    if (sinks[a] != 1) {
      violations.push_back("arc '" + name + "' has " + std::to_string(sinks[a]) +
                           " incoming ends (expected 1)");
    }
  }
  if (ep.in == ep.out && !d.crossings().empty()) {
    violations.emplace_back("input and output endpoints share an arc in a non-trivial diagram");
  }
  for (const auto& e : d.extrema()) {
    if (e.arc.value >= n_arcs) violations.emplace_back("extremum references unknown arc");
  }
  return violations;
}

namespace {

constexpr std::string_view kTrivial = "open in=a out=a\n";

// Figure-eight knot cut open at the top. The strand meets the crossings in
// the order 1 2 3 4 2 1 4 3, alternating over/under. With the endpoints at
// 0 the crossing labels are m = 0, j, 0, i and the arcs carry
// 0, 0, j, j, i+j, i, i, 0, 0.
constexpr std::string_view kFigureEight = R"(# figure-eight knot as a (1,1)-tangle
open in=a0 out=a8
cross X1 nw=a5 ne=a0 sw=a1 se=a6
cross X8 nw=a5 ne=a1 sw=a2 se=a4
cross X3 nw=a2 ne=a7 sw=a8 se=a3
cross X6 nw=a4 ne=a6 sw=a7 se=a3
min a3 dir=ltr
max a5 dir=ltr
)";

}  // namespace

TangleDiagram builtin_diagram(std::string_view name) {
  if (name == "trivial") return parse_tangle(kTrivial);
  if (name == "4_1") return parse_tangle(kFigureEight);
  throw std::invalid_argument("unknown builtin diagram '" + std::string(name) +
                              "' (available: trivial, 4_1)");
}

}  // namespace cjones
