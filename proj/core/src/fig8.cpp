#include "cjones/fig8.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

namespace cjones {

namespace mp = boost::multiprecision;

Complex fig8_double_sum(const RootContext& ctx) {
  // For fixed k = i + j the summands cancel down to g_k^2 from terms up to
  // ~1e8 times larger at N = 200, so doubles lose the result past N ~ 130.
  // The symbols and the sum are therefore carried in 113-bit precision.
  using Real = mp::cpp_bin_float_quad;
  using Quad = mp::cpp_complex_quad;
  const int n = ctx.n();
  const Real two_pi_over_n = 2 * boost::math::constants::pi<Real>() / n;
  std::vector<Quad> qp(n), qb(n);
  qp[0] = qb[0] = Quad(1);
  for (int k = 1; k < n; ++k) {
    const Real angle = two_pi_over_n * k;
    const Quad qk(cos(angle), sin(angle));
    qp[k] = qp[k - 1] * (Quad(1) - qk);
    qb[k] = qb[k - 1] * (Quad(1) - conj(qk));
  }
  Quad sum(0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; i + j < n; ++j) sum += qp[i + j] * qb[i + j] / (qp[i] * qb[j]);
  }
  return {sum.real().convert_to<double>(), sum.imag().convert_to<double>()};
}

double fig8_single_sum(int n) {
  if (n < 1) throw std::invalid_argument("fig8_single_sum: N must be >= 1");
  double g = 1.0;
  double sum = 1.0;
  for (int k = 1; k < n; ++k) {
    g *= 2.0 * std::sin(std::numbers::pi * k / n);
    sum += g * g;
  }
  return sum;
}

double fig8_single_sum(const RootContext& ctx) { return fig8_single_sum(ctx.n()); }

LogSum fig8_log_jn(int n) {
  if (n < 1) throw std::invalid_argument("fig8_log_jn: N must be >= 1");
  // Running log-sum-exp: sum = exp(shift) * scaled, shift tracks the largest
  // term seen so far.
  double log_g = 0.0;
  double shift = 0.0;
  double scaled = 1.0;  // k = 0 term
  for (int k = 1; k < n; ++k) {
    log_g += std::log(2.0 * std::sin(std::numbers::pi * k / n));
    const double term = 2.0 * log_g;
    if (term > shift) {
      scaled = scaled * std::exp(shift - term) + 1.0;
      shift = term;
    } else {
      scaled += std::exp(term - shift);
    }
  }
  return {shift + std::log(scaled)};
}

Complex le_colored_jones(int n, Complex t) {
  if (n < 1) throw std::invalid_argument("le_colored_jones: N must be >= 1");
  if (t == Complex{0.0, 0.0}) throw std::domain_error("le_colored_jones: t must be non-zero");
  const Complex s = std::sqrt(t);
  const Complex s_inv = 1.0 / s;
  auto pw = [](Complex base, int e) {
    Complex r{1.0, 0.0};
    for (int b = 0; b < e; ++b) r *= base;
    return r;
  };
  // s^(N+l) and s^(N-l) are updated incrementally as l grows.
  Complex up = pw(s, n);        // s^(N+l)
  Complex up_inv = pw(s_inv, n);
  Complex down = up;            // s^(N-l)
  Complex down_inv = up_inv;
  Complex sum{1.0, 0.0};
  Complex prod{1.0, 0.0};
  for (int l = 1; l < n; ++l) {
    up *= s;
    up_inv *= s_inv;
    down *= s_inv;
    down_inv *= s;
    prod *= (up - up_inv) * (down - down_inv);
    sum += prod;
  }
  return sum;
}

}  // namespace cjones
