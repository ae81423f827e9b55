#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace cjones {

using Complex = std::complex<double>;

/// The root of unity q = exp(2 pi i / N) together with exact quarter-phase
/// arithmetic.
///
/// Every power of q that shows up in the crossing and extremum weights has
/// an exponent that is a multiple of 1/4. Such a power is carried as an
/// integer count `a` of the quarter unit exp(i pi / (2N)), so that
/// q^x == quarter^(4x). Counts are reduced modulo 4N before the single
/// trigonometric evaluation, which keeps long products free of phase drift.
class RootContext {
 public:
  explicit RootContext(int n);

  int n() const noexcept { return n_; }
  /// gamma = pi / N.
  double gamma() const noexcept { return gamma_; }
  /// Number of quarter units in a full turn (4N).
  std::int64_t period() const noexcept { return 4 * static_cast<std::int64_t>(n_); }

  /// Reduces a quarter count into [0, 4N).
  std::int64_t reduce(std::int64_t a) const noexcept;

  /// exp(i pi a / (2N)).
  Complex phase(std::int64_t a) const noexcept;

  /// q = exp(2 pi i / N).
  Complex q() const noexcept { return phase(4); }

 private:
  int n_;
  double gamma_;
};

/// exp(i pi a / (2N)), i.e. q^(a/4).
Complex phase_value(const RootContext& ctx, std::int64_t a);

/// q-symbol families at a fixed root, index k = 0..N-1.
struct QSymbolTable {
  std::vector<Complex> qpoch;      // (q)_k
  std::vector<Complex> qpoch_bar;  // (q^-1)_k
  std::vector<double> g;           // prod_{j<=k} 2 sin(j pi / N)
  std::vector<double> log_g;

  std::size_t size() const noexcept { return g.size(); }
};

/// Quarter count of the phase of (q)_k: (q)_k = g_k * exp(i pi a / (2N))
/// with a = k(k+1) - kN.
std::int64_t qpoch_phase_count(int n, std::int64_t k) noexcept;

QSymbolTable q_symbol_table(const RootContext& ctx);

/// Balanced quantum integer [n] = (q^{n/2} - q^{-n/2}) / (q^{1/2} - q^{-1/2}).
/// At q = exp(2 pi i / N) this is sin(n pi / N) / sin(pi / N).
double quantum_integer(const RootContext& ctx, int n);

/// [n]! = [1][2]...[n].
double quantum_factorial(const RootContext& ctx, int n);

/// Gauss binomial [k]! / ([i]! [k-i]!). Requires 0 <= i <= k <= N-1.
Complex q_binomial(const RootContext& ctx, int k, int i);

}  // namespace cjones
