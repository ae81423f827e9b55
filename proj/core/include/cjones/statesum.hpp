#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cjones/phase_arith.hpp"
#include "cjones/tangle.hpp"

namespace cjones {

/// A weight in polar form: exp(log_magnitude) * q^(quarters / 4).
/// A zero weight (failed delta) has is_zero set.
struct PolarWeight {
  double log_magnitude = 0.0;
  std::int64_t quarters = 0;
  bool is_zero = false;

  Complex value(const RootContext& ctx) const;
};

/// Crossing labels: corners i (NW), j (NE), k (SW), l (SE) and the crossing label m.
struct CrossingLabels {
  int i = 0, j = 0, k = 0, l = 0, m = 0;
};

PolarWeight crossing_weight_polar(const RootContext& ctx, const QSymbolTable& table,
                                  CrossingKind kind, const CrossingLabels& labels);
PolarWeight extremum_weight_polar(const RootContext& ctx, ExtremumKind kind, int label);

/// R-matrix entry of a crossing; zero when a delta constraint fails.
/// Throws std::out_of_range when a label is outside [0, N-1].
Complex crossing_weight(const RootContext& ctx, CrossingKind kind, const CrossingLabels& labels);
Complex crossing_weight(const RootContext& ctx, const QSymbolTable& table, CrossingKind kind,
                        const CrossingLabels& labels);

/// Weight of a local extremum: q^{i-(N-1)/2} for a left-to-right minimum,
/// q^{-i+(N-1)/2} for a left-to-right maximum and 1 for right-to-left ones.
Complex extremum_weight(const RootContext& ctx, ExtremumKind kind, int label);

/// constant + sum_v coeffs[v] * free[v]
struct AffineExpr {
  std::int64_t constant = 0;
  std::vector<std::int64_t> coeffs;

  std::int64_t eval(const std::vector<std::int64_t>& free) const;
  /// Largest free-variable index with a non-zero coefficient, or -1.
  int last_variable() const;
  bool operator==(const AffineExpr&) const = default;
};

/// Result of eliminating the delta constraints of a diagram.
struct LabelScheme {
  std::vector<std::string> free;                // free variable names, in diagram order
  std::vector<AffineExpr> arc_labels;           // indexed by ArcId
  std::vector<AffineExpr> crossing_labels;      // m per crossing
  std::vector<AffineExpr> admissibility;        // each must lie in [0, N-1]
};

class InconsistentLabels : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bare linear system: variables named `names`, homogeneous equations
/// sum coeff * var == 0, and pins var == value. Exposed so the elimination
/// can be exercised independently of a diagram.
struct LabelSystem {
  std::vector<std::string> names;
  std::vector<std::vector<std::int64_t>> equations;
  std::vector<std::pair<std::size_t, std::int64_t>> pins;
};

/// Gaussian elimination over the rationals followed by pinning of free
/// variables whose non-negativity bounds collapse to a single value.
/// Returns one AffineExpr per variable; `free_names` receives the survivors.
std::vector<AffineExpr> reduce_system(const LabelSystem& system, std::vector<std::string>& free_names);

/// Throws std::invalid_argument for a structurally invalid diagram and
/// InconsistentLabels when no labeling exists.
LabelScheme reduce_constraints(const TangleDiagram& d, int endpoint_label);

struct StateSumResult {
  Complex value;
  int n = 0;
  std::int64_t admissible_terms = 0;
  double log_magnitude = 0.0;
};

struct EvaluateOptions {
  int endpoint_label = 0;
  unsigned workers = 1;
};

/// Sums the product of all crossing and extremum weights over every
/// admissible labeling. Partial sums are formed per value of the outermost
/// free variable and combined in a fixed order, so the result does not
/// depend on `workers`. Throws std::range_error when a partial product
/// exceeds exp(700).
StateSumResult evaluate(const TangleDiagram& d, const RootContext& ctx,
                        const EvaluateOptions& options = {});

inline constexpr double kMaxLogMagnitude = 700.0;

}  // namespace cjones
