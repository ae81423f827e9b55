#include "cjones/phase_arith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cjones {

namespace {

// 2 sin(j pi / N) for 0 < j < N, folded onto j <= N/2.
double two_sin(int j, int n) {
  const int folded = (2 * j > n) ? n - j : j;
  return 2.0 * std::sin(std::numbers::pi * folded / n);
}

}  // namespace

RootContext::RootContext(int n) : n_(n), gamma_(std::numbers::pi / n) {
  if (n < 1) {
    throw std::invalid_argument("RootContext: N must be >= 1, got " + std::to_string(n));
  }
}

std::int64_t RootContext::reduce(std::int64_t a) const noexcept {
  const std::int64_t p = period();
  std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

Complex RootContext::phase(std::int64_t a) const noexcept {
  // Split into a quarter turn index and an angle in [0, pi/2); the quarter
  // turn is applied exactly so that multiples of pi/2 carry no rounding.
  const std::int64_t r = reduce(a);
  const std::int64_t quadrant = r / n_;
  const std::int64_t rest = r % n_;
  const double angle = std::numbers::pi * static_cast<double>(rest) / (2.0 * n_);
  const double c = rest == 0 ? 1.0 : std::cos(angle);
  const double s = rest == 0 ? 0.0 : std::sin(angle);
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

Complex phase_value(const RootContext& ctx, std::int64_t a) { return ctx.phase(a); }

std::int64_t qpoch_phase_count(int n, std::int64_t k) noexcept {
  // 1 - q^j = 2 sin(j pi/N) exp(i (j pi/N - pi/2)); summing the quarter
  // counts 2j - N over j = 1..k gives k(k+1) - kN.
  return k * (k + 1) - k * static_cast<std::int64_t>(n);
}

QSymbolTable q_symbol_table(const RootContext& ctx) {
  const int n = ctx.n();
  QSymbolTable t;
  t.qpoch.resize(n);
  t.qpoch_bar.resize(n);
  t.g.resize(n);
  t.log_g.resize(n);

  double g = 1.0;
  double log_g = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) {
      const double f = two_sin(k, n);
      g *= f;
      log_g += std::log(f);
    }
    t.g[k] = g;
    t.log_g[k] = log_g;
    const std::int64_t a = qpoch_phase_count(n, k);
    t.qpoch[k] = g * ctx.phase(a);
    t.qpoch_bar[k] = g * ctx.phase(-a);
  }
  return t;
}

double quantum_integer(const RootContext& ctx, int n) {
  const double gamma = ctx.gamma();
  return std::sin(n * gamma) / std::sin(gamma);
}

double quantum_factorial(const RootContext& ctx, int n) {
  double f = 1.0;
  for (int j = 2; j <= n; ++j) f *= quantum_integer(ctx, j);
  return f;
}

Complex q_binomial(const RootContext& ctx, int k, int i) {
  if (i < 0 || k < i || k > ctx.n() - 1) {
    throw std::out_of_range("q_binomial: need 0 <= i <= k <= N-1 (k=" + std::to_string(k) +
                            ", i=" + std::to_string(i) + ", N=" + std::to_string(ctx.n()) + ")");
  }
  // Multiplicative form avoids the large intermediate factorials.
  double b = 1.0;
  for (int t = 1; t <= i; ++t) {
    b *= quantum_integer(ctx, k - i + t) / quantum_integer(ctx, t);
  }
  return {b, 0.0};
}

}  // namespace cjones
