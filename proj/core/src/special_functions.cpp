#include "cjones/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cjones {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kTerms = 40;

// zeta(2k) / (2 pi)^{2k} for k = 1..kTerms, the common factor of both
// Bernoulli-type expansions below (|B_2k| / (2k)! = 2 zeta(2k) / (2 pi)^{2k}).
const std::array<double, kTerms + 1>& zeta_ratios() {
  static const auto table = [] {
    std::array<double, kTerms + 1> t{};
    for (int k = 1; k <= kTerms; ++k) {
      t[k] = std::riemann_zeta(2.0 * k) / std::pow(kTwoPi, 2 * k);
    }
    return t;
  }();
  return table;
}

void require_finite(double x, const char* fn) {
  if (!std::isfinite(x)) throw std::domain_error(std::string(fn) + ": argument is not finite");
}

// Li_2 for Re z <= 1/2, |z| <= 1, via u = -log(1 - z):
//   Li_2(z) = u - u^2/4 + sum_k B_2k u^{2k+1} / (2k+1)!
std::complex<double> li2_bernoulli(std::complex<double> z) {
  const std::complex<double> u = -std::log(1.0 - z);
  const std::complex<double> u2 = u * u;
  const auto& zr = zeta_ratios();
  std::complex<double> sum = u - 0.25 * u2;
  std::complex<double> power = u;  // u^{2k+1}
  for (int k = 1; k <= kTerms; ++k) {
    power *= u2;
    const double coeff = (k % 2 == 1 ? 2.0 : -2.0) * zr[k] / (2.0 * k + 1.0);
    const std::complex<double> term = coeff * power;
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double clausen(double theta) {
  require_finite(theta, "clausen");
  // Reduce to [-pi, pi], where
  //   Cl_2(t) = t - t log|t| + sum_k zeta(2k) / (k (2k+1)) * t (t / 2 pi)^{2k}
  // converges at least like 4^{-k}.
  const double t = std::remainder(theta, kTwoPi);
  if (t == 0.0) return 0.0;
  const double t2 = t * t;
  const auto& zr = zeta_ratios();
  double sum = 0.0;
  double power = t;  // t^{2k+1}
  for (int k = 1; k <= kTerms; ++k) {
    power *= t2;
    const double term = zr[k] * power / (k * (2.0 * k + 1.0));
    sum += term;
    if (std::abs(term) < 1e-18) break;
  }
  return t - t * std::log(std::abs(t)) + sum;
}

double lobachevsky(double theta) {
  require_finite(theta, "lobachevsky");
  return 0.5 * clausen(2.0 * std::remainder(theta, kPi));
}

double im_li2_unit(double theta) {
  require_finite(theta, "im_li2_unit");
  return clausen(theta);
}

std::complex<double> li2(std::complex<double> z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw std::domain_error("li2: argument is not finite");
  }
  const double r = std::abs(z);
  if (r > 1.0 + 1e-12) {
    throw std::domain_error("li2: |z| = " + std::to_string(r) + " is outside the closed unit disk");
  }
  if (z == 0.0) return {0.0, 0.0};
  if (z == 1.0) return {kPi * kPi / 6.0, 0.0};
  if (z.real() <= 0.5) return li2_bernoulli(z);
  // Reflection: Li_2(z) = pi^2/6 - log(z) log(1 - z) - Li_2(1 - z); here
  // |1 - z| < 1 and Re(1 - z) < 1/2.
  return kPi * kPi / 6.0 - std::log(z) * std::log(1.0 - z) - li2_bernoulli(1.0 - z);
}

double ideal_tet_volume(double alpha, double beta, double gamma) {
  require_finite(alpha, "ideal_tet_volume");
  require_finite(beta, "ideal_tet_volume");
  require_finite(gamma, "ideal_tet_volume");
  const double excess = alpha + beta + gamma - kPi;
  if (std::abs(excess) > 1e-9) {
    throw std::domain_error("ideal_tet_volume: dihedral angles must sum to pi (off by " +
                            std::to_string(excess) + ")");
  }
  return lobachevsky(alpha) + lobachevsky(beta) + lobachevsky(gamma);
}

double regular_ideal_tet_volume() { return 3.0 * lobachevsky(kPi / 3.0); }

}  // namespace cjones
