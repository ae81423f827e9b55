#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cjones/phase_arith.hpp"

namespace cjones {

// ---------------------------------------------------------------------------
// Volume sequence a_N = 2 pi log J_N(4_1) / N and its extrapolated limit.

struct VolumeRow {
  int n = 0;
  double log_jn = 0.0;
  double a_n = 0.0;
};

struct VolumeTable {
  std::vector<VolumeRow> rows;  // strictly increasing n
  std::optional<double> extrapolated;
  double fit_residual = 0.0;
};

/// Rows for the given N values (sorted, duplicates dropped), computed from
/// fig8_log_jn. Throws std::invalid_argument for N < 1.
VolumeTable volume_sequence(std::vector<int> n_values);

/// Least-squares fit a_N = v + b log(N)/N + c/N. Returns v and stores it,
/// together with the Euclidean norm of the fit residual, in `t`.
/// Throws std::invalid_argument with fewer than 3 rows.
double extrapolate_volume(VolumeTable& t);

// ---------------------------------------------------------------------------
// Max-term bounds: g_{k*}^2 <= J_N <= N g_{k*}^2.

struct EkholmReport {
  int n = 0;
  int k_star = 0;          // exhaustive argmax of g_k, ties to the larger k
  double g2 = 0.0;         // g_{k*}^2 (may overflow to inf; see log_g2)
  double log_g2 = 0.0;
  double jn = 0.0;         // J_N(4_1) (may overflow to inf; see log_jn)
  double log_jn = 0.0;
  bool lower_ok = false;   // log_g2 <= log_jn
  bool upper_ok = false;   // log_jn <= log N + log_g2
  bool unimodal = false;   // g_k down on [0, N/6], up on [N/6, 5N/6]
  double riemann_sum = 0.0;  // (2/N) sum_{j<=k*} log 2 sin(j pi / N)
};

EkholmReport ekholm_report(int n);

/// (3/pi) L(pi/3), the limit of EkholmReport::riemann_sum.
double riemann_limit();

// ---------------------------------------------------------------------------
// Saddle-point route.

/// F(z, w) = -Li2(zw) + Li2(1/(zw)) + Li2(z) - Li2(1/w). Every Li2 argument
/// must lie in the closed unit disk, which holds for |z| = |w| = 1.
Complex saddle_potential(Complex z, Complex w);

/// Residuals of the stationarity equations in product form:
///   (1 - zw)(1 - 1/(zw)) - (1 - z),   (1 - zw)(1 - 1/(zw)) - (1 - 1/w).
std::array<Complex, 2> stationarity_residuals(Complex z, Complex w);

/// The same equations in logarithmic form, z dF/dz and w dF/dw:
///   log(1 - zw) + log(1 - 1/(zw)) - log(1 - z),  ... - log(1 - 1/w).
std::array<Complex, 2> log_stationarity(Complex z, Complex w);

/// Polynomial form: z^2w^2 - zw - z^2w + 1,  z^2w^2 - zw - z + 1.
std::array<Complex, 2> polynomial_residuals(Complex z, Complex w);

/// After u = zw: u^2 - u - zu + 1,  u^2 - u - z + 1.
std::array<Complex, 2> blowup_residuals(Complex z, Complex u);

/// u^2 - u + 1.
Complex hyperbolicity_residual(Complex u);

struct SaddleReport {
  std::array<Complex, 2> roots_u;            // roots of u^2 - u + 1
  double im_f0 = 0.0;                        // Im F at z = 0, u = exp(5 pi i / 3)
  std::array<Complex, 2> trivial_residuals;  // polynomial form at (z, w) = (1, 1)
  std::array<Complex, 2> blowup_at_root;     // blow-up system at z = 0, u = roots_u[1]
};

SaddleReport saddle_solve();

// ---------------------------------------------------------------------------
// Difference-equation route on f(i, j) = (q)_{i+j}(q^-1)_{i+j} / ((q)_i (q^-1)_j).

enum class RatioAxis { I, J };

/// f(i,j)/f(i-1,j) (axis I, needs i >= 1) or f(i,j)/f(i,j-1) (axis J, needs j >= 1),
/// taken from the q-symbol table.
Complex summand_ratio(const QSymbolTable& table, int i, int j, RatioAxis axis);

struct RatioReport {
  int n = 0;
  std::size_t samples = 0;
  /// max over samples of |(ratio - 1) * denominator - stationarity residual|
  /// with z = q^i, w = q^j.
  double max_ratio_residual = 0.0;
  int k_designated = 0;     // floor(5N/6)
  double log_f_max = 0.0;   // 2 log g_{k_designated}
  double f_max = 0.0;
  double v_n = 0.0;         // 2 pi log(f_max) / N
  int argmax_i = 0;         // discrete argmax of |f| (diagnostic)
  int argmax_j = 0;
  double log_abs_f_argmax = 0.0;
};

/// Throws std::invalid_argument for N < 2.
RatioReport summand_ratio_analysis(int n);

// ---------------------------------------------------------------------------

/// |log|(q)_{floor(alpha N)}| + N Im Li2(exp(2 pi i alpha)) / (2 pi)| / N.
/// Throws std::domain_error unless 0 < alpha < 1 and N >= 1.
double qpoch_asymptotic_gap(double alpha, int n);

/// 2 Im Li2(exp(i pi / 3)) = 6 L(pi/3), the hyperbolic volume of the
/// figure-eight knot complement.
double figure_eight_volume();

}  // namespace cjones
