#include "cjones/statesum.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace cjones {

namespace {

// Per-kind weight data. Slots are i, j, k, l, m.
//   poch[s]    : exponent (+1 numerator, -1 denominator) of the q-Pochhammer
//                symbol at label s; `bar` selects (q^-1)_x instead of (q)_x.
//   sign       : the two slots whose sum (+1) gives the power of -1.
//   quadratic  : the two slots in the x*y term of the q exponent.
//   linear     : the two slots in the (x+y)/2 term.
//   orient     : +1 for q^{...}, -1 for q^{-...}.
struct WeightSpec {
  bool bar;
  std::array<int, 5> poch;
  std::array<int, 2> sign;
  std::array<int, 2> quadratic;
  std::array<int, 2> linear;
  int orient;
};

constexpr int I = 0, J = 1, K = 2, L = 3;

// X6 and X8 carry the linear term on the same corners as their quadratic
// term: these are the entries obtained by rotating X3 and X1 a quarter turn
// clockwise (which only adds right-to-left extrema of weight 1).
constexpr std::array<WeightSpec, 8> kWeights{{
    {false, {-1, 1, -1, 1, -1}, {I, K}, {I, K}, {I, K}, 1},   // X1
    {false, {1, -1, 1, -1, -1}, {J, L}, {J, L}, {J, L}, 1},   // X2
    {true, {1, -1, 1, -1, -1}, {J, L}, {J, L}, {J, L}, -1},   // X3
    {true, {-1, 1, -1, 1, -1}, {I, K}, {I, K}, {I, K}, -1},   // X4
    {true, {-1, -1, 1, 1, -1}, {I, J}, {I, J}, {K, L}, -1},   // X5
    {true, {1, 1, -1, -1, -1}, {K, L}, {K, L}, {K, L}, -1},   // X6
    {false, {1, 1, -1, -1, -1}, {K, L}, {K, L}, {I, J}, 1},   // X7
    {false, {-1, -1, 1, 1, -1}, {I, J}, {I, J}, {I, J}, 1},   // X8
}};

bool deltas_hold(CrossingKind kind, const std::array<std::int64_t, 5>& x) {
  for (const auto& c : crossing_traits(kind).constraints) {
    std::int64_t s = 0;
    for (std::size_t t = 0; t < kLabelSlots; ++t) s += c[t] * x[t];
    if (s != 0) return false;
  }
  return true;
}

void check_label(const RootContext& ctx, std::int64_t label, const char* what) {
  if (label < 0 || label >= ctx.n()) {
    throw std::out_of_range(std::string(what) + " label " + std::to_string(label) +
                            " outside [0, " + std::to_string(ctx.n() - 1) + "]");
  }
}

// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_part(re_, re_c_, x.real());
    add_part(im_, im_c_, x.imag());
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  static void add_part(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      comp += (sum - t) + x;
    } else {
      comp += (x - t) + sum;
    }
    sum = t;
  }
  double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

// --- rational elimination -------------------------------------------------

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  bool zero() const { return num == 0; }
  friend Rational operator-(Rational a, Rational b) {
    return {a.num * b.den - b.num * a.den, a.den * b.den};
  }
  friend Rational operator*(Rational a, Rational b) { return {a.num * b.num, a.den * b.den}; }
  friend Rational operator/(Rational a, Rational b) { return {a.num * b.den, a.den * b.num}; }
};

// floor(a / b) and ceil(a / b) for b > 0.
std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace

Complex PolarWeight::value(const RootContext& ctx) const {
  if (is_zero) return {0.0, 0.0};
  return std::exp(log_magnitude) * ctx.phase(quarters);
}

PolarWeight crossing_weight_polar(const RootContext& ctx, const QSymbolTable& table,
                                  CrossingKind kind, const CrossingLabels& labels) {
  const std::array<std::int64_t, 5> x{labels.i, labels.j, labels.k, labels.l, labels.m};
  for (auto v : x) check_label(ctx, v, "crossing");
  if (!deltas_hold(kind, x)) return {0.0, 0, true};

  const auto& w = kWeights.at(static_cast<std::size_t>(kind) - 1);
  const std::int64_t n = ctx.n();
  PolarWeight out;
  std::int64_t quarters = 0;
  for (std::size_t s = 0; s < kLabelSlots; ++s) {
    if (w.poch[s] == 0) continue;
    out.log_magnitude += w.poch[s] * table.log_g[x[s]];
    const std::int64_t a = qpoch_phase_count(ctx.n(), x[s]);
    quarters += w.poch[s] * (w.bar ? -a : a);
  }
  const std::int64_t sign = x[w.sign[0]] + x[w.sign[1]] + 1;
  quarters += 2 * n * (sign % 2);
  const std::int64_t exponent4 = 4 * x[w.quadratic[0]] * x[w.quadratic[1]] +
                                 2 * (x[w.linear[0]] + x[w.linear[1]]) + n * n + 1;
  quarters += w.orient * exponent4;
  out.quarters = ctx.reduce(quarters);
  return out;
}

PolarWeight extremum_weight_polar(const RootContext& ctx, ExtremumKind kind, int label) {
  check_label(ctx, label, "extremum");
  if (kind.direction == Passage::RightToLeft) return {};
  const std::int64_t a = 4 * static_cast<std::int64_t>(label) - 2 * (ctx.n() - 1);
  return {0.0, ctx.reduce(kind.which == ExtremumType::Min ? a : -a), false};
}

Complex crossing_weight(const RootContext& ctx, const QSymbolTable& table, CrossingKind kind,
                        const CrossingLabels& labels) {
  return crossing_weight_polar(ctx, table, kind, labels).value(ctx);
}

Complex crossing_weight(const RootContext& ctx, CrossingKind kind, const CrossingLabels& labels) {
  return crossing_weight(ctx, q_symbol_table(ctx), kind, labels);
}

Complex extremum_weight(const RootContext& ctx, ExtremumKind kind, int label) {
  return extremum_weight_polar(ctx, kind, label).value(ctx);
}

std::int64_t AffineExpr::eval(const std::vector<std::int64_t>& free) const {
  std::int64_t v = constant;
  for (std::size_t f = 0; f < coeffs.size(); ++f) v += coeffs[f] * free[f];
  return v;
}

int AffineExpr::last_variable() const {
  for (int f = static_cast<int>(coeffs.size()) - 1; f >= 0; --f) {
    if (coeffs[f] != 0) return f;
  }
  return -1;
}

std::vector<AffineExpr> reduce_system(const LabelSystem& system, std::vector<std::string>& free_names) {
  const std::size_t n_vars = system.names.size();
  const std::size_t cols = n_vars + 1;  // last column: constant term

  std::vector<std::vector<Rational>> rows;
  for (const auto& eq : system.equations) {
    std::vector<Rational> r(cols);
    for (std::size_t v = 0; v < n_vars && v < eq.size(); ++v) r[v] = Rational(eq[v]);
    rows.push_back(std::move(r));
  }
  for (const auto& [var, value] : system.pins) {
    std::vector<Rational> r(cols);
    r[var] = Rational(1);
    r[n_vars] = Rational(-value);
    rows.push_back(std::move(r));
  }

  // Reduced row echelon form, pivoting on the leftmost available column.
  std::vector<std::size_t> pivot_col_of_row;
  std::vector<int> row_of_pivot(n_vars, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n_vars && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    const Rational pv = rows[rank][c];
    for (auto& e : rows[rank]) e = e / pv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].zero()) continue;
      const Rational f = rows[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) rows[r][cc] = rows[r][cc] - f * rows[rank][cc];
    }
    row_of_pivot[c] = static_cast<int>(rank);
    pivot_col_of_row.push_back(c);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r) {
    if (!rows[r][n_vars].zero()) {
      throw InconsistentLabels("label constraints are inconsistent (0 = " +
                               std::to_string(rows[r][n_vars].num) + "/" +
                               std::to_string(rows[r][n_vars].den) + ")");
    }
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n_vars; ++c) {
    if (row_of_pivot[c] < 0) free_cols.push_back(c);
  }

  auto to_int = [&](Rational x, std::size_t var) {
    if (x.den != 1) {
      throw std::domain_error("label elimination produced a non-integral coefficient for '" +
                              system.names[var] + "'");
    }
    return x.num;
  };

  std::vector<AffineExpr> exprs(n_vars);
  for (std::size_t v = 0; v < n_vars; ++v) {
    AffineExpr& e = exprs[v];
    e.coeffs.assign(free_cols.size(), 0);
    if (row_of_pivot[v] < 0) {
      const auto pos = std::find(free_cols.begin(), free_cols.end(), v) - free_cols.begin();
      e.coeffs[pos] = 1;
      continue;
    }
    const auto& row = rows[row_of_pivot[v]];
    e.constant = -to_int(row[n_vars], v);
    for (std::size_t f = 0; f < free_cols.size(); ++f) e.coeffs[f] = -to_int(row[free_cols[f]], v);
  }
  std::vector<std::string> names;
  for (auto c : free_cols) names.push_back(system.names[c]);

  // Every variable is a label, hence >= 0. A free variable squeezed between
  // 0 and a bound of 0 (or lo == hi in general) is pinned and substituted.
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : exprs) {
      if (e.last_variable() < 0 && e.constant < 0) {
        throw InconsistentLabels("a label is forced negative (" + std::to_string(e.constant) + ")");
      }
    }
    for (std::size_t f = 0; f < names.size() && !changed; ++f) {
      std::int64_t lo = 0;
      std::int64_t hi = std::numeric_limits<std::int64_t>::max();
      for (const auto& e : exprs) {
        const auto a = e.coeffs[f];
        if (a == 0) continue;
        if (std::count_if(e.coeffs.begin(), e.coeffs.end(), [](std::int64_t c) { return c != 0; }) != 1) {
          continue;
        }
        if (a > 0) {
          lo = std::max(lo, ceil_div(-e.constant, a));
        } else {
          hi = std::min(hi, floor_div(e.constant, -a));
        }
      }
      if (lo > hi) {
        throw InconsistentLabels("free label '" + names[f] + "' has empty range [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
      }
      if (lo == hi) {
        for (auto& e : exprs) {
          e.constant += e.coeffs[f] * lo;
          e.coeffs.erase(e.coeffs.begin() + static_cast<std::ptrdiff_t>(f));
        }
        names.erase(names.begin() + static_cast<std::ptrdiff_t>(f));
        changed = true;
      }
    }
  }
  free_names = std::move(names);
  return exprs;
}

LabelScheme reduce_constraints(const TangleDiagram& d, int endpoint_label) {
  if (const auto violations = validate(d); !violations.empty()) {
    throw std::invalid_argument("invalid diagram: " + violations.front());
  }
  if (endpoint_label < 0) {
    throw std::out_of_range("endpoint label must be non-negative");
  }
  const std::size_t n_arcs = d.arcs().size();
  const std::size_t n_cross = d.crossings().size();

  LabelSystem sys;
  sys.names = d.arcs();
  for (std::size_t c = 0; c < n_cross; ++c) sys.names.push_back("m" + std::to_string(c + 1));
  for (std::size_t c = 0; c < n_cross; ++c) {
    const auto& cr = d.crossings()[c];
    for (const auto& con : crossing_traits(cr.kind).constraints) {
      std::vector<std::int64_t> row(sys.names.size(), 0);
      for (std::size_t s = 0; s < 4; ++s) row[cr.corners[s].value] += con[s];
      row[n_arcs + c] += con[kCrossingSlot];
      if (std::any_of(row.begin(), row.end(), [](std::int64_t v) { return v != 0; })) {
        sys.equations.push_back(std::move(row));
      }
    }
  }
  const auto& ep = *d.endpoints();
  sys.pins.emplace_back(ep.in.value, endpoint_label);
  sys.pins.emplace_back(ep.out.value, endpoint_label);

  LabelScheme scheme;
  auto exprs = reduce_system(sys, scheme.free);
  scheme.arc_labels.assign(exprs.begin(), exprs.begin() + static_cast<std::ptrdiff_t>(n_arcs));
  scheme.crossing_labels.assign(exprs.begin() + static_cast<std::ptrdiff_t>(n_arcs), exprs.end());
  for (const auto& e : exprs) {
    if (std::find(scheme.admissibility.begin(), scheme.admissibility.end(), e) ==
        scheme.admissibility.end()) {
      scheme.admissibility.push_back(e);
    }
  }
  return scheme;
}

namespace {

struct ChunkResult {
  Complex sum;
  std::int64_t terms = 0;
};

class Enumerator {
 public:
  Enumerator(const TangleDiagram& d, const LabelScheme& scheme, const RootContext& ctx,
             const QSymbolTable& table)
      : d_(d), scheme_(scheme), ctx_(ctx), table_(table), n_free_(scheme.free.size()) {
    by_depth_.resize(n_free_);
    for (const auto& e : scheme_.admissibility) {
      const int last = e.last_variable();
      if (last >= 0) by_depth_[last].push_back(&e);
    }
  }

  bool constants_admissible() const {
    for (const auto& e : scheme_.admissibility) {
      if (e.last_variable() < 0 && (e.constant < 0 || e.constant >= ctx_.n())) return false;
    }
    return true;
  }

  std::size_t n_free() const { return n_free_; }

  // Enumerates all assignments whose outermost free variable equals `first`
  // (or the single empty assignment when there are no free variables).
  ChunkResult run_chunk(std::int64_t first) const {
    ChunkResult out;
    CompensatedSum acc;
    std::vector<std::int64_t> free(n_free_, 0);
    if (n_free_ == 0) {
      acc.add(term(free));
      out.terms = 1;
    } else {
      free[0] = first;
      if (admissible_at(0, free)) recurse(1, free, acc, out.terms);
    }
    out.sum = acc.value();
    return out;
  }

 private:
  bool admissible_at(std::size_t depth, const std::vector<std::int64_t>& free) const {
    for (const auto* e : by_depth_[depth]) {
      const auto v = e->eval(free);
      if (v < 0 || v >= ctx_.n()) return false;
    }
    return true;
  }

  void recurse(std::size_t depth, std::vector<std::int64_t>& free, CompensatedSum& acc,
               std::int64_t& terms) const {
    if (depth == n_free_) {
      acc.add(term(free));
      ++terms;
      return;
    }
    for (std::int64_t v = 0; v < ctx_.n(); ++v) {
      free[depth] = v;
      if (admissible_at(depth, free)) recurse(depth + 1, free, acc, terms);
    }
  }

  Complex term(const std::vector<std::int64_t>& free) const {
    double log_mag = 0.0;
    std::int64_t quarters = 0;
    auto arc_label = [&](ArcId a) { return static_cast<int>(scheme_.arc_labels[a.value].eval(free)); };
    const auto& crossings = d_.crossings();
    for (std::size_t c = 0; c < crossings.size(); ++c) {
      const auto& cr = crossings[c];
      const CrossingLabels labels{arc_label(cr.at(Corner::NW)), arc_label(cr.at(Corner::NE)),
                                  arc_label(cr.at(Corner::SW)), arc_label(cr.at(Corner::SE)),
                                  static_cast<int>(scheme_.crossing_labels[c].eval(free))};
      const auto w = crossing_weight_polar(ctx_, table_, cr.kind, labels);
      if (w.is_zero) return {0.0, 0.0};
      log_mag += w.log_magnitude;
      if (log_mag > kMaxLogMagnitude) {
        throw std::range_error("state-sum partial product exceeds exp(" +
                               std::to_string(kMaxLogMagnitude) + ") at N=" +
                               std::to_string(ctx_.n()) + "; use the log-space closed form");
      }
      quarters += w.quarters;
    }
    for (const auto& e : d_.extrema()) {
      quarters += extremum_weight_polar(ctx_, e.kind, arc_label(e.arc)).quarters;
    }
    return std::exp(log_mag) * ctx_.phase(quarters);
  }

  const TangleDiagram& d_;
  const LabelScheme& scheme_;
  const RootContext& ctx_;
  const QSymbolTable& table_;
  std::size_t n_free_;
  std::vector<std::vector<const AffineExpr*>> by_depth_;
};

}  // namespace

StateSumResult evaluate(const TangleDiagram& d, const RootContext& ctx, const EvaluateOptions& options) {
  if (options.endpoint_label < 0 || options.endpoint_label >= ctx.n()) {
    throw std::out_of_range("endpoint label " + std::to_string(options.endpoint_label) +
                            " outside [0, " + std::to_string(ctx.n() - 1) + "]");
  }
  const LabelScheme scheme = reduce_constraints(d, options.endpoint_label);
  const QSymbolTable table = q_symbol_table(ctx);
  const Enumerator en(d, scheme, ctx, table);

  StateSumResult result;
  result.n = ctx.n();
  if (!en.constants_admissible()) {
    result.value = {0.0, 0.0};
    result.log_magnitude = -std::numeric_limits<double>::infinity();
    return result;
  }

  const std::size_t n_chunks = en.n_free() == 0 ? 1 : static_cast<std::size_t>(ctx.n());
  std::vector<ChunkResult> chunks(n_chunks);
  const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, n_chunks));

  if (workers == 1) {
    for (std::size_t c = 0; c < n_chunks; ++c) chunks[c] = en.run_chunk(static_cast<std::int64_t>(c));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          try {
            for (std::size_t c = next++; c < n_chunks; c = next++) {
              chunks[c] = en.run_chunk(static_cast<std::int64_t>(c));
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  CompensatedSum total;
  for (const auto& c : chunks) {
    total.add(c.sum);
    result.admissible_terms += c.terms;
  }
  result.value = total.value();
  result.log_magnitude = std::abs(result.value) > 0.0 ? std::log(std::abs(result.value))
                                                      : -std::numeric_limits<double>::infinity();
  return result;
}

}  // namespace cjones
