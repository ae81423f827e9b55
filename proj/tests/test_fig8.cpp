#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "cjones/fig8.hpp"
#include "oracles.hpp"

using namespace cjones;

namespace {

Complex root(int n) { return std::polar(1.0, 2.0 * oracle::kPi / n); }

}  // namespace

TEST(Fig8DoubleSum, Examples) {
  EXPECT_NEAR(std::abs(fig8_double_sum(RootContext(1)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fig8_double_sum(RootContext(2)) - 5.0), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(fig8_double_sum(RootContext(3)) - 13.0), 0.0, 1e-12);
}

TEST(Fig8DoubleSum, MatchesOracle) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_LE(oracle::rel_err(fig8_double_sum(RootContext(n)), oracle::fig8_double(n)), 1e-10) << n;
  }
}

TEST(Fig8SingleSum, Examples) {
  EXPECT_DOUBLE_EQ(fig8_single_sum(1), 1.0);
  EXPECT_NEAR(fig8_single_sum(4), 27.0, 1e-12);
  EXPECT_NEAR(fig8_single_sum(5), 50.472135955, 1e-8);
  EXPECT_NEAR(fig8_single_sum(6), 89.0, 1e-11);
  EXPECT_EQ(fig8_single_sum(RootContext(6)), fig8_single_sum(6));
  EXPECT_THROW(fig8_single_sum(0), std::invalid_argument);
}

TEST(Fig8SingleSum, MatchesOracle) {
  for (int n = 1; n <= 300; ++n) {
    EXPECT_NEAR(fig8_single_sum(n) / oracle::fig8_single(n), 1.0, 1e-11) << n;
  }
}

TEST(LeColoredJones, Examples) {
  for (int n : {1, 2, 5, 17}) EXPECT_LE(std::abs(le_colored_jones(n, 1.0) - 1.0), 1e-15);
  EXPECT_NEAR(std::abs(le_colored_jones(2, 2.0) - 2.75), 0.0, 1e-13);
  EXPECT_LE(std::abs(le_colored_jones(3, root(3)) - 13.0), 1e-12);
  EXPECT_THROW(le_colored_jones(3, 0.0), std::domain_error);
  EXPECT_THROW(le_colored_jones(0, 1.0), std::invalid_argument);
}

// At N = 2 the formula is the Jones polynomial of the figure-eight.
TEST(LeColoredJones, JonesPolynomialAtN2) {
  for (Complex t : {Complex(0.3, 0.8), Complex(-2.0, 0.5), Complex(1.7, -0.1), Complex(-1.0, 0.0)}) {
    const Complex jones = t * t - t + 1.0 - 1.0 / t + 1.0 / (t * t);
    EXPECT_LE(oracle::rel_err(le_colored_jones(2, t), jones), 1e-13) << t;
  }
}

TEST(Fig8Forms, TripleAgreement) {
  for (int n = 1; n <= 200; ++n) {
    const double single = fig8_single_sum(n);
    const Complex dbl = fig8_double_sum(RootContext(n));
    const Complex le = le_colored_jones(n, root(n));
    EXPECT_LE(std::abs(dbl - single), 1e-9 * single) << n;
    EXPECT_LE(std::abs(le - single), 1e-9 * single) << n;
    EXPECT_GE(single, 1.0);
    EXPECT_LE(std::abs(dbl.imag()), 1e-9 * std::abs(dbl));
  }
}

TEST(Fig8LogJn, MatchesDirectSum) {
  for (int n = 1; n <= 2000; ++n) {
    EXPECT_NEAR(std::exp(fig8_log_jn(n).log_value) / fig8_single_sum(n), 1.0, 1e-9) << n;
  }
  EXPECT_THROW(fig8_log_jn(0), std::invalid_argument);
}

TEST(Fig8LogJn, LargeNStaysFinite) {
  for (int n : {5000, 100000, 1000000}) {
    const double v = fig8_log_jn(n).log_value;
    EXPECT_TRUE(std::isfinite(v));
    // log J_N grows like N V / (2 pi) with V ~ 2.03.
    EXPECT_NEAR(v / n, 2.0298832128193 / (2 * oracle::kPi), 0.01);
  }
}
