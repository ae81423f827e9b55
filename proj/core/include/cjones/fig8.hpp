#pragma once

#include "cjones/phase_arith.hpp"

namespace cjones {

/// Natural log of a positive real sum.
struct LogSum {
  double log_value = 0.0;
};

/// J_N(4_1) = sum over i, j >= 0, i + j <= N-1 of
/// (q)_{i+j} (q^-1)_{i+j} / ((q)_i (q^-1)_j).
Complex fig8_double_sum(const RootContext& ctx);

/// J_N(4_1) = sum_{k=0}^{N-1} g_k^2 with g_k = prod_{j<=k} 2 sin(j pi / N).
/// Overflows to +inf once g_k^2 leaves the double range (N around 1100);
/// use fig8_log_jn beyond that.
double fig8_single_sum(const RootContext& ctx);
double fig8_single_sum(int n);

/// log J_N(4_1) by a streaming log-sum-exp over 2 log g_k. O(N) time, O(1) space.
LogSum fig8_log_jn(int n);

/// Le's colored Jones polynomial of 4_1 at generic t:
///   sum_{k=0}^{N-1} prod_{l=1}^{k} (t^{(N+l)/2} - t^{-(N+l)/2}) (t^{(N-l)/2} - t^{-(N-l)/2})
/// with t^{1/2} the principal square root. Throws std::domain_error for t = 0.
Complex le_colored_jones(int n, Complex t);

}  // namespace cjones
