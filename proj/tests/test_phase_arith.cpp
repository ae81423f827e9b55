#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cjones/phase_arith.hpp"
#include "oracles.hpp"

using cjones::Complex;
using cjones::RootContext;

namespace {

void expect_close(Complex a, Complex b, double tol) {
  EXPECT_LE(oracle::rel_err(a, b), tol) << a << " vs " << b;
}

}  // namespace

TEST(RootContext, RejectsNonPositiveN) {
  EXPECT_THROW(RootContext(0), std::invalid_argument);
  EXPECT_THROW(RootContext(-3), std::invalid_argument);
}

TEST(RootContext, BasicFields) {
  RootContext ctx(7);
  EXPECT_EQ(ctx.n(), 7);
  EXPECT_DOUBLE_EQ(ctx.gamma(), oracle::kPi / 7);
  EXPECT_EQ(ctx.period(), 28);
  EXPECT_EQ(ctx.reduce(-1), 27);
  EXPECT_EQ(ctx.reduce(57), 1);
}

TEST(RootContext, QIsPrimitiveRoot) {
  for (int n = 1; n <= 64; ++n) {
    RootContext ctx(n);
    EXPECT_NEAR(std::abs(ctx.q()), 1.0, 1e-15);
    Complex p{1.0, 0.0};
    for (int j = 0; j < n; ++j) p *= ctx.q();
    EXPECT_LE(std::abs(p - 1.0), 1e-13) << "N=" << n;
  }
}

TEST(PhaseValue, Examples) {
  RootContext two(2);
  EXPECT_EQ(cjones::phase_value(two, 0), Complex(1.0, 0.0));
  expect_close(cjones::phase_value(two, 5), Complex(-std::sqrt(0.5), -std::sqrt(0.5)), 1e-15);
  RootContext three(3);
  EXPECT_EQ(cjones::phase_value(three, 12), Complex(1.0, 0.0));
}

TEST(PhaseValue, QuarterTurnsAreExact) {
  for (int n = 1; n <= 40; ++n) {
    RootContext ctx(n);
    EXPECT_EQ(ctx.phase(n), Complex(0.0, 1.0));
    EXPECT_EQ(ctx.phase(2 * n), Complex(-1.0, 0.0));
    EXPECT_EQ(ctx.phase(3 * n), Complex(0.0, -1.0));
  }
}

TEST(PhaseValue, ReductionIsBitwiseStable) {
  for (int n : {1, 2, 3, 5, 11, 97, 1000}) {
    RootContext ctx(n);
    for (std::int64_t a = -50; a <= 50; ++a) {
      const Complex base = ctx.phase(a);
      for (std::int64_t w : {1, 2, 7, -3, 1000003}) {
        EXPECT_EQ(ctx.phase(a + w * 8 * n), base);
        EXPECT_EQ(ctx.phase(a + w * 4 * n), base);
      }
    }
  }
}

TEST(PhaseValue, MatchesPolar) {
  for (int n : {2, 3, 7, 50, 1001}) {
    RootContext ctx(n);
    for (std::int64_t a = -4 * n; a <= 8 * n; a += 3) {
      expect_close(ctx.phase(a), std::polar(1.0, oracle::kPi * a / (2.0 * n)), 1e-12);
    }
  }
}

TEST(QSymbolTable, TrivialN) {
  auto t = cjones::q_symbol_table(RootContext(1));
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t.qpoch[0], Complex(1.0, 0.0));
  EXPECT_EQ(t.qpoch_bar[0], Complex(1.0, 0.0));
  EXPECT_EQ(t.g[0], 1.0);
  EXPECT_EQ(t.log_g[0], 0.0);
}

TEST(QSymbolTable, ExampleN4) {
  auto t = cjones::q_symbol_table(RootContext(4));
  ASSERT_EQ(t.size(), 4u);
  EXPECT_NEAR(t.g[0], 1.0, 1e-15);
  EXPECT_NEAR(t.g[1], std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(t.g[2], 2.0 * std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(t.g[3], 4.0, 1e-14);
}

TEST(QSymbolTable, ExampleN6) {
  auto t = cjones::q_symbol_table(RootContext(6));
  EXPECT_NEAR(t.g[5], 6.0, 1e-13);
  expect_close(t.qpoch[5] * t.qpoch_bar[5], Complex(36.0, 0.0), 1e-13);
}

TEST(QSymbolTable, MatchesDirectProducts) {
  for (int n = 1; n <= 60; ++n) {
    auto t = cjones::q_symbol_table(RootContext(n));
    ASSERT_EQ(t.size(), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      expect_close(t.qpoch[k], oracle::qpoch(n, k), 1e-11);
      expect_close(t.qpoch_bar[k], oracle::qpoch_bar(n, k), 1e-11);
      EXPECT_NEAR(t.g[k], oracle::g(n, k), 1e-11 * std::max(1.0, oracle::g(n, k)));
    }
  }
}

TEST(QSymbolTable, ConjugationAndMagnitude) {
  for (int n : {2, 3, 10, 100, 500}) {
    auto t = cjones::q_symbol_table(RootContext(n));
    for (int k = 0; k < n; ++k) {
      const double scale = std::max(1.0, t.g[k]);
      EXPECT_LE(std::abs(t.qpoch_bar[k] - std::conj(t.qpoch[k])), 1e-12 * scale);
      EXPECT_LE(std::abs(std::abs(t.qpoch[k]) - t.g[k]), 1e-12 * scale);
      EXPECT_NEAR(t.log_g[k], std::log(t.g[k]), 1e-10 * std::max(1.0, std::abs(t.log_g[k])));
    }
  }
}

TEST(QSymbolTable, CyclotomicIdentity) {
  for (int n = 2; n <= 2000; ++n) {
    auto t = cjones::q_symbol_table(RootContext(n));
    EXPECT_NEAR(t.g[n - 1] / n, 1.0, 1e-10) << "N=" << n;
  }
}

TEST(QPochPhaseCount, ClosedForm) {
  for (int n : {1, 4, 9}) {
    for (std::int64_t k = 0; k < 20; ++k) {
      EXPECT_EQ(cjones::qpoch_phase_count(n, k), k * (k + 1) - k * n);
    }
  }
}

TEST(QuantumInteger, MatchesDefinition) {
  for (int n : {3, 7, 20}) {
    RootContext ctx(n);
    for (int m = 0; m < n; ++m) {
      expect_close(Complex(cjones::quantum_integer(ctx, m), 0.0), oracle::qint(n, m), 1e-12);
      expect_close(Complex(cjones::quantum_factorial(ctx, m), 0.0), oracle::qfact(n, m), 1e-10);
    }
  }
}

TEST(QBinomial, Examples) {
  for (int n : {2, 5, 9}) {
    RootContext ctx(n);
    for (int k = 0; k < n; ++k) EXPECT_EQ(cjones::q_binomial(ctx, k, 0), Complex(1.0, 0.0));
  }
  RootContext three(3);
  expect_close(cjones::q_binomial(three, 2, 1), Complex(1.0, 0.0), 1e-14);
}

TEST(QBinomial, RangeChecks) {
  RootContext ctx(5);
  EXPECT_THROW(cjones::q_binomial(ctx, 5, 1), std::out_of_range);
  EXPECT_THROW(cjones::q_binomial(ctx, 2, 3), std::out_of_range);
  EXPECT_THROW(cjones::q_binomial(ctx, 2, -1), std::out_of_range);
}

TEST(QBinomial, MatchesFactorialQuotient) {
  for (int n = 2; n <= 30; ++n) {
    RootContext ctx(n);
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i <= k; ++i) {
        const Complex ref = oracle::qfact(n, k) / (oracle::qfact(n, i) * oracle::qfact(n, k - i));
        expect_close(cjones::q_binomial(ctx, k, i), ref, 1e-10);
      }
    }
  }
}

// (q)_l = (-1)^l q^{l(l+1)/4} (q^{1/2} - q^{-1/2})^l [l]!
TEST(QSymbolTable, FactorizationIdentity) {
  for (int n = 1; n <= 50; ++n) {
    RootContext ctx(n);
    auto t = cjones::q_symbol_table(ctx);
    const Complex d = oracle::qpow(n, 0.5) - oracle::qpow(n, -0.5);
    for (int l = 0; l < n; ++l) {
      const Complex rhs = std::pow(-1.0, l) * oracle::qpow(n, l * (l + 1) / 4.0) *
                          std::pow(d, l) * cjones::quantum_factorial(ctx, l);
      expect_close(rhs, t.qpoch[l], 1e-10);
    }
  }
}

// sum_i (-1)^i q^{-i(k+1)/2} [k choose i] = (q^-1)_k. The terms cancel
// heavily for k near N/2, so the tolerance is relative to the largest term.
TEST(QBinomial, AlternatingSumGivesBarPochhammer) {
  for (int n = 1; n <= 50; ++n) {
    RootContext ctx(n);
    auto t = cjones::q_symbol_table(ctx);
    for (int k = 0; k < n; ++k) {
      Complex s{0.0, 0.0};
      double largest = 1.0;
      for (int i = 0; i <= k; ++i) {
        const Complex term = std::pow(-1.0, i) * oracle::qpow(n, -i * (k + 1) / 2.0) * cjones::q_binomial(ctx, k, i);
        s += term;
        largest = std::max(largest, std::abs(term));
      }
      EXPECT_LE(std::abs(s - t.qpoch_bar[k]), 1e-10 * largest) << "N=" << n << " k=" << k;
    }
  }
}
