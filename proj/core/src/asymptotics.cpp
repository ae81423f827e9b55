#include "cjones/asymptotics.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cjones/fig8.hpp"
#include "cjones/special_functions.hpp"

namespace cjones {

namespace {

constexpr double kPi = std::numbers::pi;

// log g_k for k = 0..n-1.
std::vector<double> log_g_sequence(int n) {
  std::vector<double> out(n, 0.0);
  for (int k = 1; k < n; ++k) out[k] = out[k - 1] + std::log(2.0 * std::sin(kPi * k / n));
  return out;
}

// Ties within this absolute log tolerance count as equal (g_{5N/6} = g_{5N/6 - 1}
// whenever 6 | N, since 2 sin(5 pi / 6) = 1).
constexpr double kTieTolerance = 1e-12;

}  // namespace

VolumeTable volume_sequence(std::vector<int> n_values) {
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
  VolumeTable t;
  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("volume_sequence: N must be >= 1, got " + std::to_string(n));
    const double log_jn = fig8_log_jn(n).log_value;
    t.rows.push_back({n, log_jn, 2.0 * kPi * log_jn / n});
  }
  return t;
}

double extrapolate_volume(VolumeTable& t) {
  const auto m = static_cast<Eigen::Index>(t.rows.size());
  if (m < 3) {
    throw std::invalid_argument("extrapolate_volume: need at least 3 rows, got " + std::to_string(m));
  }
  Eigen::MatrixXd design(m, 3);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index r = 0; r < m; ++r) {
    const double n = t.rows[r].n;
    design(r, 0) = 1.0;
    design(r, 1) = std::log(n) / n;
    design(r, 2) = 1.0 / n;
    rhs(r) = t.rows[r].a_n;
  }
  const Eigen::VectorXd coef = design.colPivHouseholderQr().solve(rhs);
  t.extrapolated = coef(0);
  t.fit_residual = (design * coef - rhs).norm();
  return coef(0);
}

EkholmReport ekholm_report(int n) {
  if (n < 1) throw std::invalid_argument("ekholm_report: N must be >= 1");
  const auto log_g = log_g_sequence(n);

  EkholmReport rep;
  rep.n = n;
  int k_star = 0;
  for (int k = 1; k < n; ++k) {
    if (log_g[k] >= log_g[k_star] - kTieTolerance) k_star = k;
  }
  // A later near-tie must not displace a strictly larger earlier maximum.
  const double best = *std::max_element(log_g.begin(), log_g.end());
  while (log_g[k_star] < best - kTieTolerance) --k_star;
  rep.k_star = k_star;
  rep.log_g2 = 2.0 * log_g[k_star];
  rep.g2 = std::exp(rep.log_g2);

  // log-sum-exp over 2 log g_k, shifted by the exact maximal term.
  const double shift = 2.0 * best;
  double scaled = 0.0;
  for (double lg : log_g) scaled += std::exp(2.0 * lg - shift);
  rep.log_jn = shift + std::log(scaled);
  rep.jn = std::exp(rep.log_jn);
  rep.lower_ok = rep.log_g2 <= rep.log_jn;
  rep.upper_ok = rep.log_jn <= std::log(static_cast<double>(n)) + rep.log_g2;

  const int lo = n / 6;                 // floor(N/6)
  const int mid = (n + 5) / 6;          // ceil(N/6)
  const int hi = (5 * n) / 6;           // floor(5N/6)
  bool unimodal = true;
  for (int k = 1; k <= lo && k < n; ++k) unimodal &= log_g[k] <= log_g[k - 1] + kTieTolerance;
  for (int k = mid + 1; k <= hi && k < n; ++k) unimodal &= log_g[k] >= log_g[k - 1] - kTieTolerance;
  rep.unimodal = unimodal;
  rep.riemann_sum = 2.0 * log_g[k_star] / n;
  return rep;
}

double riemann_limit() { return 3.0 / kPi * lobachevsky(kPi / 3.0); }

Complex saddle_potential(Complex z, Complex w) {
  const Complex u = z * w;
  return -li2(u) + li2(1.0 / u) + li2(z) - li2(1.0 / w);
}

std::array<Complex, 2> stationarity_residuals(Complex z, Complex w) {
  const Complex u = z * w;
  const Complex lhs = (1.0 - u) * (1.0 - 1.0 / u);
  return {lhs - (1.0 - z), lhs - (1.0 - 1.0 / w)};
}

std::array<Complex, 2> log_stationarity(Complex z, Complex w) {
  const Complex u = z * w;
  const Complex common = std::log(1.0 - u) + std::log(1.0 - 1.0 / u);
  return {common - std::log(1.0 - z), common - std::log(1.0 - 1.0 / w)};
}

std::array<Complex, 2> polynomial_residuals(Complex z, Complex w) {
  const Complex zw = z * w;
  return {zw * zw - zw - z * zw + 1.0, zw * zw - zw - z + 1.0};
}

std::array<Complex, 2> blowup_residuals(Complex z, Complex u) {
  return {u * u - u - z * u + 1.0, u * u - u - z + 1.0};
}

Complex hyperbolicity_residual(Complex u) { return u * u - u + 1.0; }

SaddleReport saddle_solve() {
  SaddleReport rep;
  // u^2 - u + 1 = 0  =>  u = (1 +- i sqrt 3) / 2.
  const Complex disc = std::sqrt(Complex{-3.0, 0.0});
  rep.roots_u = {(1.0 + disc) / 2.0, (1.0 - disc) / 2.0};

  // Term by term at (z, w, u) = (0, inf, exp(5 pi i / 3)): Li2(zw) -> Li2(u),
  // Li2(1/(zw)) -> Li2(1/u), Li2(z) -> Li2(0), Li2(1/w) -> Li2(0).
  const Complex u0 = std::polar(1.0, 5.0 * kPi / 3.0);
  const Complex f0 = -li2(u0) + li2(1.0 / u0) + li2(Complex{0.0, 0.0}) - li2(Complex{0.0, 0.0});
  rep.im_f0 = f0.imag();

  rep.trivial_residuals = polynomial_residuals({1.0, 0.0}, {1.0, 0.0});
  rep.blowup_at_root = blowup_residuals({0.0, 0.0}, rep.roots_u[1]);
  return rep;
}

Complex summand_ratio(const QSymbolTable& table, int i, int j, RatioAxis axis) {
  const int n = static_cast<int>(table.size());
  if (i < 0 || j < 0 || i + j > n - 1 || (axis == RatioAxis::I && i < 1) ||
      (axis == RatioAxis::J && j < 1)) {
    throw std::out_of_range("summand_ratio: (i, j) = (" + std::to_string(i) + ", " +
                            std::to_string(j) + ") out of range");
  }
  auto f = [&](int a, int b) {
    return table.qpoch[a + b] * table.qpoch_bar[a + b] / (table.qpoch[a] * table.qpoch_bar[b]);
  };
  return axis == RatioAxis::I ? f(i, j) / f(i - 1, j) : f(i, j) / f(i, j - 1);
}

RatioReport summand_ratio_analysis(int n) {
  if (n < 2) throw std::invalid_argument("summand_ratio_analysis: N must be >= 2");
  RatioReport rep;
  rep.n = n;
  const RootContext ctx(n);
  const auto table = q_symbol_table(ctx);

  // (a) the unit-ratio conditions are the stationarity equations.
  const int stride = std::max(1, n / 64);
  for (int i = 1; i < n; i += stride) {
    for (int j = 1; i + j < n; j += stride) {
      const Complex z = ctx.phase(4 * static_cast<std::int64_t>(i));
      const Complex w = ctx.phase(4 * static_cast<std::int64_t>(j));
      const auto res = stationarity_residuals(z, w);
      const Complex ri = summand_ratio(table, i, j, RatioAxis::I);
      const Complex rj = summand_ratio(table, i, j, RatioAxis::J);
      const double scale = 1.0 + std::abs(res[0]) + std::abs(res[1]);
      rep.max_ratio_residual = std::max(
          {rep.max_ratio_residual, std::abs((ri - 1.0) * (1.0 - z) - res[0]) / scale,
           std::abs((rj - 1.0) * (1.0 - 1.0 / w) - res[1]) / scale});
      ++rep.samples;
    }
  }

  // (b) the designated value at k = floor(5N/6).
  rep.k_designated = (5 * n) / 6;
  rep.log_f_max = 2.0 * table.log_g[rep.k_designated];
  rep.f_max = std::exp(rep.log_f_max);
  rep.v_n = 2.0 * kPi * rep.log_f_max / n;

  // (c) discrete argmax of log|f(i,j)| = 2 log g_{i+j} - log g_i - log g_j.
  rep.log_abs_f_argmax = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) {
      const double v = 2.0 * table.log_g[i + j] - table.log_g[i] - table.log_g[j];
      if (v > rep.log_abs_f_argmax) {
        rep.log_abs_f_argmax = v;
        rep.argmax_i = i;
        rep.argmax_j = j;
      }
    }
  }
  return rep;
}

double qpoch_asymptotic_gap(double alpha, int n) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("qpoch_asymptotic_gap: alpha must lie in (0, 1)");
  }
  if (n < 1) throw std::domain_error("qpoch_asymptotic_gap: N must be >= 1");
  const auto k = static_cast<int>(std::floor(alpha * n));
  if (k > n - 1) throw std::domain_error("qpoch_asymptotic_gap: floor(alpha N) exceeds N - 1");
  double log_mod = 0.0;  // log |(q)_k| = log g_k
  for (int j = 1; j <= k; ++j) log_mod += std::log(2.0 * std::sin(kPi * j / n));
  return std::abs(log_mod + n * im_li2_unit(2.0 * kPi * alpha) / (2.0 * kPi)) / n;
}

double figure_eight_volume() { return 2.0 * im_li2_unit(kPi / 3.0); }

}  // namespace cjones
