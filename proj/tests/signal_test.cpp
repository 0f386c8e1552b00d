#include <gtest/gtest.h>

#include <cmath>

#include "fourierkit/error.hpp"
#include "fourierkit/signal.hpp"
#include "support/generators.hpp"

using namespace fourierkit;

namespace {

// Independent reference: the piecewise textbook formulas, and the combinator
// identities applied by recursion.
Complex reference(const Signal& f, double t);

Complex reference_primitive(const Primitive& p, double t) {
  switch (p.kind) {
    case PrimitiveKind::RectPulse: return std::abs(t) <= p.width ? 1.0 : 0.0;
    case PrimitiveKind::UnilatNegExp: return t >= 0 ? std::exp(-p.rate * t) : 0.0;
    case PrimitiveKind::BilateralExp: return std::exp(-std::abs(t));
    case PrimitiveKind::SineToneBurst:
      return std::abs(t) <= p.width ? std::sin(p.carrier * t) : 0.0;
    case PrimitiveKind::DampedUnilatSine:
      return t >= 0 ? std::exp(-p.rate * t) * std::sin(p.carrier * t) : 0.0;
    case PrimitiveKind::Gaussian: return std::exp(-t * t);
  }
  return 0.0;
}

Complex gaussian_derivative(int order, double t) {
  const double g = std::exp(-t * t);
  switch (order) {
    case 1: return -2.0 * t * g;
    case 2: return (4.0 * t * t - 2.0) * g;
    case 3: return (-8.0 * t * t * t + 12.0 * t) * g;
    default: return std::nan("");
  }
}

Complex reference(const Signal& f, double t) {
  const auto& node = f.node();
  if (auto* p = std::get_if<Primitive>(&node)) return reference_primitive(*p, t);
  if (auto* n = std::get_if<LinComb>(&node)) return n->a * reference(n->f, t) + n->b * reference(n->g, t);
  if (auto* n = std::get_if<TimeShift>(&node)) return reference(n->f, t - n->t0);
  if (auto* n = std::get_if<FreqShiftExp>(&node)) {
    const double s = n->sign == ShiftSign::Plus ? 1.0 : -1.0;
    return std::polar(1.0, s * n->omega0 * t) * reference(n->f, t);
  }
  if (auto* n = std::get_if<ModCos>(&node)) return std::cos(n->omega0 * t) * reference(n->f, t);
  if (auto* n = std::get_if<ModSin>(&node)) return std::sin(n->omega0 * t) * reference(n->f, t);
  if (auto* n = std::get_if<TimeScale>(&node)) return reference(n->f, n->a * t);
  if (auto* n = std::get_if<TimeReverse>(&node)) return reference(n->f, -t);
  if (auto* n = std::get_if<Derivative>(&node)) return gaussian_derivative(n->order, t);
  return std::nan("");
}

void expect_near(Complex a, Complex b, double tol) {
  EXPECT_LE(std::abs(a - b), tol * (1.0 + std::abs(b))) << a << " vs " << b;
}

}  // namespace

TEST(SignalBuild, RectPulseHasSymmetricSupportAndEvenParity) {
  const Signal f = rect_pulse(1.0);
  EXPECT_EQ(f.meta().support.lo, -1.0);
  EXPECT_EQ(f.meta().support.hi, 1.0);
  EXPECT_EQ(f.meta().parity, Parity::Even);
}

TEST(SignalBuild, RejectsInvalidParameters) {
  auto expect_violation = [](auto make) {
    try {
      make();
      FAIL() << "expected ConstraintViolation";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::ConstraintViolation);
    }
  };
  expect_violation([] { return rect_pulse(0.0); });
  expect_violation([] { return rect_pulse(-1.0); });
  expect_violation([] { return unilat_neg_exp(0.0); });
  expect_violation([] { return damped_unilat_sine(-1.0, 2.0); });
  expect_violation([] { return time_scale(rect_pulse(1.0), 0.0); });
  expect_violation([] { return derivative(rect_pulse(1.0), 1); });
  expect_violation([] { return derivative(unilat_neg_exp(1.0), 1); });
  expect_violation([] { return derivative(gaussian(), 0); });
  expect_violation([] { return rect_pulse(std::nan("")); });
}

TEST(SignalBuild, DerivativeAllowedOnSmoothDecayingTrees) {
  EXPECT_NO_THROW(derivative(gaussian(), 3));
  EXPECT_NO_THROW(derivative(mod_cos(time_shift(gaussian(), 1.0), 2.0), 2));
}

TEST(SignalEval, ClosedBoundaries) {
  EXPECT_EQ(rect_pulse(1.0).eval(1.0), Complex(1.0));
  EXPECT_EQ(rect_pulse(1.0).eval(-1.0), Complex(1.0));
  EXPECT_EQ(rect_pulse(1.0).eval(1.0000001), Complex(0.0));
  EXPECT_EQ(unilat_neg_exp(2.0).eval(-0.5), Complex(0.0));
  EXPECT_EQ(unilat_neg_exp(2.0).eval(0.0), Complex(1.0));
  EXPECT_EQ(damped_unilat_sine(1.0, 2.0).eval(0.0), Complex(0.0));
}

TEST(SignalMeta, Breakpoints) {
  EXPECT_EQ(rect_pulse(2.0).meta().breakpoints, (std::vector<double>{-2.0, 2.0}));
  EXPECT_EQ(unilat_neg_exp(1.0).meta().breakpoints, (std::vector<double>{0.0}));
  EXPECT_EQ(bilateral_exp().meta().breakpoints, (std::vector<double>{0.0}));
  EXPECT_EQ(sine_tone_burst(1.5, 2.0).meta().breakpoints, (std::vector<double>{-1.5, 1.5}));
  EXPECT_EQ(damped_unilat_sine(1.0, 2.0).meta().breakpoints, (std::vector<double>{0.0}));
  EXPECT_TRUE(gaussian().meta().breakpoints.empty());
}

TEST(SignalMeta, PrimitiveFacts) {
  EXPECT_EQ(bilateral_exp().meta().parity, Parity::Even);
  EXPECT_EQ(gaussian().meta().parity, Parity::Even);
  EXPECT_EQ(sine_tone_burst(2.0, 5.0).meta().parity, Parity::Odd);
  EXPECT_EQ(sine_tone_burst(2.0, 5.0).meta().support, (Support{-2.0, 2.0}));
  EXPECT_TRUE(unilat_neg_exp(1.0).meta().causal);
  EXPECT_TRUE(damped_unilat_sine(1.0, 1.0).meta().causal);
  EXPECT_FALSE(bilateral_exp().meta().causal);
  for (const Signal& f : {rect_pulse(1.0), unilat_neg_exp(1.0), bilateral_exp(),
                          sine_tone_burst(1.0, 1.0), damped_unilat_sine(1.0, 1.0), gaussian()}) {
    EXPECT_TRUE(f.meta().abs_integrable);
  }
  EXPECT_TRUE(gaussian().meta().smooth_everywhere);
  EXPECT_FALSE(bilateral_exp().meta().smooth_everywhere);
}

TEST(SignalMeta, ShiftedCausalSignal) {
  const Signal f = time_shift(unilat_neg_exp(1.0), 3.0);
  EXPECT_TRUE(f.meta().causal);
  EXPECT_EQ(f.meta().breakpoints, (std::vector<double>{3.0}));
  EXPECT_FALSE(time_shift(unilat_neg_exp(1.0), -3.0).meta().causal);
}

TEST(SignalMeta, ParityPropagation) {
  EXPECT_EQ(mod_sin(rect_pulse(1.0), 2.0).meta().parity, Parity::Odd);
  EXPECT_EQ(mod_cos(rect_pulse(1.0), 2.0).meta().parity, Parity::Even);
  EXPECT_EQ(mod_sin(sine_tone_burst(1.0, 2.0), 3.0).meta().parity, Parity::Even);
  EXPECT_EQ(derivative(gaussian(), 1).meta().parity, Parity::Odd);
  EXPECT_EQ(derivative(gaussian(), 2).meta().parity, Parity::Even);
  EXPECT_EQ(time_shift(rect_pulse(1.0), 1.0).meta().parity, Parity::Neither);
  EXPECT_EQ(time_reverse(sine_tone_burst(1.0, 2.0)).meta().parity, Parity::Odd);
}

TEST(SignalMeta, ReversedCausalSignalIsNotCausal) {
  const Signal f = time_reverse(unilat_neg_exp(1.0));
  EXPECT_FALSE(f.meta().causal);
  EXPECT_EQ(f.meta().support.kind(), SupportKind::LeftHalfLine);
}

TEST(SignalProperty, EvalMatchesReferenceOnRandomTrees) {
  gen::Gen gen(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 3));
    for (double t : gen.times(f, 1000 / 200 + 5, 6.0)) {
      expect_near(f.eval(t), reference(f, t), 1e-12);
    }
  }
}

TEST(SignalProperty, EvalMatchesReferenceAtThousandTimes) {
  gen::Gen gen(7);
  for (const Signal& f : {rect_pulse(1.3), unilat_neg_exp(0.7), bilateral_exp(),
                          sine_tone_burst(2.0, 3.0), damped_unilat_sine(1.0, 4.0), gaussian()}) {
    for (double t : gen.times(f, 1000, 8.0)) expect_near(f.eval(t), reference(f, t), 1e-14);
  }
}

TEST(SignalProperty, CombinatorIdentities) {
  gen::Gen gen(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Signal f = gen.signal(1);
    const double t0 = gen.uniform(-3, 3);
    const double a = gen.uniform(0.3, 3.0) * (gen.coin() ? 1 : -1);
    const double w0 = gen.uniform(0.5, 5.0);
    for (double t : gen.times(f, 20, 5.0)) {
      expect_near(time_reverse(f).eval(t), f.eval(-t), 1e-14);
      expect_near(time_scale(f, a).eval(t), f.eval(a * t), 1e-14);
      expect_near(time_shift(f, t0).eval(t), f.eval(t - t0), 1e-14);
      expect_near(mod_cos(f, w0).eval(t), std::cos(w0 * t) * f.eval(t), 1e-14);
    }
  }
}

TEST(SignalProperty, ParityMetadataHolds) {
  gen::Gen gen(13);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 2));
    const Parity p = f.meta().parity;
    if (p == Parity::Neither) continue;
    ++checked;
    for (double t : gen.times(f, 30, 6.0)) {
      const Complex mirrored = f.eval(-t);
      expect_near(mirrored, p == Parity::Even ? f.eval(t) : -f.eval(t), 1e-13);
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(SignalProperty, CausalSignalsVanishForNegativeTime) {
  gen::Gen gen(17);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 2));
    if (!f.meta().causal) continue;
    ++checked;
    for (double t : gen.times(f, 30, 6.0)) {
      if (t < 0.0) EXPECT_EQ(f.eval(t), Complex(0.0));
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(SignalProperty, SupportContainsAllNonzeroSamples) {
  gen::Gen gen(19);
  for (int trial = 0; trial < 200; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 3));
    const Support s = f.meta().support;
    for (double t : gen.times(f, 30, 10.0)) {
      if (t < s.lo || t > s.hi) EXPECT_EQ(f.eval(t), Complex(0.0));
    }
  }
}

TEST(SignalProperty, TailMassBoundsNumericTail) {
  gen::Gen gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Signal f = gen.signal(gen.integer(0, 2));
    const auto bound = f.tail_mass(4.0);
    if (!bound) continue;
    // Riemann sum of |f| on 4 <= |t| <= 60.
    double mass = 0.0;
    const double dt = 1e-3;
    for (double t = 4.0; t < 60.0; t += dt) mass += (std::abs(f.eval(t)) + std::abs(f.eval(-t))) * dt;
    EXPECT_LE(mass, *bound * (1 + 1e-2) + 1e-6) << trial;
  }
}

TEST(SignalEquality, StructuralEquality) {
  EXPECT_TRUE(structurally_equal(mod_sin(rect_pulse(2.0), 5.0), mod_sin(rect_pulse(2.0), 5.0)));
  EXPECT_FALSE(structurally_equal(mod_sin(rect_pulse(2.0), 5.0), mod_cos(rect_pulse(2.0), 5.0)));
  EXPECT_FALSE(structurally_equal(rect_pulse(2.0), rect_pulse(2.5)));
}
