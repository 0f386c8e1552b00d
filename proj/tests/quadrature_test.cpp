#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "fourierkit/error.hpp"
#include "fourierkit/quadrature.hpp"

using namespace fourierkit;

TEST(ImproperIntegral, BilateralExponentialMass) {
  Integrand g;
  g.fn = [](double t) { return Complex{std::exp(-std::abs(t)), 0.0}; };
  g.breakpoints = {0.0};
  const auto r = improper_integral(g);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-9);
  EXPECT_FALSE(r.tail_is_analytic);
  EXPECT_LE(r.total_error(), 1e-9 * 2.0 + 1e-12);
}

TEST(ImproperIntegral, AnalyticTailIsUsedWhenGiven) {
  Integrand g;
  g.fn = [](double t) { return Complex{std::exp(-std::abs(t)), 0.0}; };
  g.breakpoints = {0.0};
  g.tail_bound = [](double T) -> std::optional<double> { return 2.0 * std::exp(-T); };
  const auto r = improper_integral(g);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-9);
  EXPECT_TRUE(r.tail_is_analytic);
  EXPECT_LE(r.tail_bound, 2.0 * std::exp(-r.truncation_T) * 1.0000001);
}

TEST(ImproperIntegral, UnitBoxHasAreaTwo) {
  Integrand g;
  g.fn = [](double t) { return Complex{std::abs(t) <= 1.0 ? 1.0 : 0.0, 0.0}; };
  g.breakpoints = {-1.0, 1.0};
  g.lo = -1.0;
  g.hi = 1.0;
  EXPECT_NEAR(improper_integral(g).value.real(), 2.0, 1e-12);
}

TEST(ImproperIntegral, ConstantFunctionDoesNotConverge) {
  Integrand g;
  g.fn = [](double) { return Complex{1.0, 0.0}; };
  try {
    improper_integral(g);
    FAIL() << "expected NoConvergence";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConvergence);
  }
}

TEST(ImproperIntegral, SlowlyDecayingFunctionDoesNotConverge) {
  Integrand g;
  g.fn = [](double t) { return Complex{1.0 / (1.0 + std::abs(t)), 0.0}; };
  EXPECT_THROW(improper_integral(g), Error);
}

TEST(ImproperIntegral, GaussianWithOscillation) {
  // integral e^{-t^2} cos(5t) dt = sqrt(pi) e^{-25/4}
  Integrand g;
  g.fn = [](double t) { return Complex{std::exp(-t * t) * std::cos(5.0 * t), 0.0}; };
  g.oscillation = 5.0;
  const double expected = std::sqrt(std::numbers::pi) * std::exp(-6.25);
  EXPECT_NEAR(improper_integral(g).value.real(), expected, 1e-9 * expected + 1e-12);
}

TEST(ProperIntegral, PolynomialIsExact) {
  Integrand g;
  g.fn = [](double t) { return Complex{t * t * t - t, 1.0}; };
  const auto r = proper_integral(g, 0.0, 2.0);
  EXPECT_NEAR(r.value.real(), 2.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), 2.0, 1e-13);
}

TEST(QuadratureConfig, ValidatesInvariants) {
  QuadratureConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.rel_tol = 0.0;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.initial_half_width = 2.0 * cfg.max_half_width;
  EXPECT_THROW(cfg.validate(), Error);
  cfg = {};
  cfg.max_subdivisions = 0;
  EXPECT_THROW(cfg.validate(), Error);
}

TEST(QuadratureProperty, ErrorContractOnRandomExponentials) {
  // integral e^{-c|t - s|} dt = 2 / c for any shift s
  for (int k = 1; k <= 20; ++k) {
    const double c = 0.2 * k;
    const double s = std::sin(static_cast<double>(k)) * 5.0;
    Integrand g;
    g.fn = [c, s](double t) { return Complex{std::exp(-c * std::abs(t - s)), 0.0}; };
    g.breakpoints = {s};
    const auto r = improper_integral(g);
    EXPECT_NEAR(r.value.real(), 2.0 / c, 2e-9 * (2.0 / c) + 1e-12) << "c=" << c;
    EXPECT_TRUE(std::isfinite(r.error_estimate));
    EXPECT_TRUE(std::isfinite(r.tail_bound));
    EXPECT_LE(r.total_error(), 1e-9 * std::abs(r.value) + 1e-12);
  }
}
