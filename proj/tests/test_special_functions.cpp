#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "cjones/special_functions.hpp"
#include "oracles.hpp"

using namespace cjones;
using oracle::kPi;

namespace {

constexpr double kCatalan = 0.915965594177219015;
constexpr double kLobPi3 = 0.338313868803217875;  // Lambda(pi/3) = v3 / 3

// 1000 points spread over a few periods, avoiding the exact multiples of pi.
std::vector<double> grid() {
  std::vector<double> g;
  for (int k = 0; k < 1000; ++k) g.push_back(-7.0 + 14.0 * (k + 0.5) / 1000.0);
  return g;
}

}  // namespace

TEST(Lobachevsky, Examples) {
  EXPECT_EQ(lobachevsky(0.0), 0.0);
  EXPECT_NEAR(lobachevsky(kPi / 3), 0.338313868803, 1e-12);
  EXPECT_NEAR(lobachevsky(kPi / 6), 0.507470803205, 1e-12);
  EXPECT_NEAR(lobachevsky(kPi / 6), 1.5 * lobachevsky(kPi / 3), 1e-12);
}

TEST(Lobachevsky, MatchesQuadrature) {
  for (double theta : {0.05, 0.3, kPi / 6, 0.9, kPi / 3, 1.3, kPi / 2}) {
    EXPECT_NEAR(lobachevsky(theta), oracle::lobachevsky_quadrature(theta), 1e-11) << theta;
  }
}

TEST(Lobachevsky, MatchesSeriesAtRationalAngles) {
  // (1/2) sum sin(2 n theta) / n^2; 2 theta is a multiple of pi/6 so the sign
  // pattern has period 12 and the truncation error is tiny.
  for (int p : {1, 2, 3, 5}) {
    const double theta = p * kPi / 12;
    EXPECT_NEAR(lobachevsky(theta), 0.5 * oracle::clausen_series(2 * theta, 12 * 250000), 1e-11) << p;
  }
}

TEST(Lobachevsky, Identities) {
  for (double t : grid()) {
    EXPECT_NEAR(lobachevsky(t + kPi), lobachevsky(t), 1e-11) << t;
    EXPECT_NEAR(lobachevsky(-t), -lobachevsky(t), 1e-11) << t;
    EXPECT_NEAR(lobachevsky(2 * t), 2 * lobachevsky(t) + 2 * lobachevsky(t + kPi / 2), 1e-11) << t;
  }
}

TEST(Lobachevsky, BoundaryValues) {
  EXPECT_NEAR(lobachevsky(kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(lobachevsky(kPi), 0.0, 1e-15);
  EXPECT_NEAR(lobachevsky(5 * kPi / 6), -1.5 * lobachevsky(kPi / 3), 1e-12);
  EXPECT_NEAR(lobachevsky(kPi / 4), kCatalan / 2, 1e-12);
}

TEST(Lobachevsky, MaximumAtSixthOfPi) {
  const double peak = lobachevsky(kPi / 6);
  for (double t : grid()) EXPECT_LE(lobachevsky(t), peak + 1e-15);
}

TEST(Lobachevsky, NonFinite) {
  EXPECT_THROW(lobachevsky(std::nan("")), std::domain_error);
  EXPECT_THROW(lobachevsky(INFINITY), std::domain_error);
  EXPECT_THROW(clausen(-INFINITY), std::domain_error);
  EXPECT_THROW(im_li2_unit(std::nan("")), std::domain_error);
}

TEST(ImLi2Unit, Examples) {
  EXPECT_EQ(im_li2_unit(0.0), 0.0);
  EXPECT_NEAR(im_li2_unit(kPi / 3), 1.014941606409, 1e-12);
  EXPECT_NEAR(im_li2_unit(kPi / 2), kCatalan, 1e-12);
  EXPECT_NEAR(im_li2_unit(kPi / 3), 3 * kLobPi3, 1e-12);
}

TEST(ImLi2Unit, MatchesSeries) {
  for (int p : {1, 2, 3, 4, 5, 7, 10, 11}) {
    const double theta = p * kPi / 6;
    EXPECT_NEAR(im_li2_unit(theta), oracle::clausen_series(theta, 12 * 250000), 1e-11) << p;
  }
}

TEST(ImLi2Unit, ClausenBridge) {
  for (double t : grid()) {
    EXPECT_NEAR(im_li2_unit(t), 2 * lobachevsky(t / 2), 1e-11) << t;
    EXPECT_NEAR(clausen(t + 2 * kPi), clausen(t), 1e-11) << t;
  }
}

TEST(Li2, Examples) {
  EXPECT_EQ(li2(0.0), std::complex<double>(0.0, 0.0));
  EXPECT_NEAR(li2(1.0).real(), kPi * kPi / 6, 1e-14);
  EXPECT_NEAR(li2(-1.0).real(), -kPi * kPi / 12, 1e-12);
  EXPECT_NEAR(li2(-1.0).imag(), 0.0, 1e-14);
  EXPECT_NEAR(li2(0.5).real(), kPi * kPi / 12 - std::log(2.0) * std::log(2.0) / 2, 1e-13);
}

TEST(Li2, MatchesPowerSeriesInsideDisk) {
  for (double r : {0.1, 0.5, 0.8, 0.95}) {
    for (int k = 0; k < 24; ++k) {
      const auto z = std::polar(r, 2 * kPi * k / 24 + 0.1);
      EXPECT_LE(std::abs(li2(z) - oracle::li2_series(z)), 1e-11) << z;
    }
  }
}

TEST(Li2, UnitCircle) {
  for (int k = 1; k < 360; ++k) {
    const double theta = 2 * kPi * k / 360;
    const auto v = li2(std::polar(1.0, theta));
    EXPECT_NEAR(v.real(), oracle::re_li2_unit(theta), 1e-10) << theta;
    EXPECT_NEAR(v.imag(), im_li2_unit(theta), 1e-10) << theta;
  }
}

TEST(Li2, Domain) {
  EXPECT_THROW(li2({1.5, 0.0}), std::domain_error);
  EXPECT_THROW(li2({0.0, -1.01}), std::domain_error);
  EXPECT_THROW(li2({std::nan(""), 0.0}), std::domain_error);
  EXPECT_NO_THROW(li2(std::polar(1.0 + 1e-13, 0.3)));
}

TEST(IdealTet, Examples) {
  EXPECT_NEAR(ideal_tet_volume(kPi / 3, kPi / 3, kPi / 3), 1.014941606409, 1e-12);
  EXPECT_NEAR(regular_ideal_tet_volume(), 3 * kLobPi3, 1e-13);
  for (double x : {0.2, 1.0, 2.5}) EXPECT_NEAR(ideal_tet_volume(0.0, x, kPi - x), 0.0, 1e-14);
  EXPECT_NEAR(ideal_tet_volume(kPi / 2, kPi / 4, kPi / 4), kCatalan, 1e-12);
}

TEST(IdealTet, RegularIsMaximal) {
  const double v3 = regular_ideal_tet_volume();
  for (double a = 0.1; a < 1.5; a += 0.1) {
    for (double b = 0.1; a + b < kPi - 0.05; b += 0.1) {
      EXPECT_LE(ideal_tet_volume(a, b, kPi - a - b), v3 + 1e-14);
    }
  }
}

TEST(IdealTet, AngleSumChecked) {
  EXPECT_THROW(ideal_tet_volume(1.0, 1.0, 1.0), std::domain_error);
  EXPECT_THROW(ideal_tet_volume(2 * kPi / 3, 2 * kPi / 3, 2 * kPi / 3), std::domain_error);
  EXPECT_NO_THROW(ideal_tet_volume(1.0, 1.0, kPi - 2.0 + 5e-10));
}
