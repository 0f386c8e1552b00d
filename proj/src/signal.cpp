#include "fourierkit/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "fourierkit/error.hpp"
#include "overloaded.hpp"

namespace fourierkit {

struct SignalImpl {
  SignalNode node;
  SignalMeta meta;
};

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

using detail::Overloaded;

[[noreturn]] void violation(const std::string& what) {
  throw Error(ErrorKind::ConstraintViolation, what);
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) violation(std::string(name) + " must be finite");
}

void require_finite(Complex v, const char* name) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    violation(std::string(name) + " must be finite");
  }
}

std::vector<double> normalized(std::vector<double> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

template <class Fn>
std::vector<double> mapped(const std::vector<double>& pts, Fn fn) {
  std::vector<double> out;
  out.reserve(pts.size());
  for (double p : pts) out.push_back(fn(p));
  return normalized(std::move(out));
}

Parity flip(Parity p) {
  switch (p) {
    case Parity::Even: return Parity::Odd;
    case Parity::Odd: return Parity::Even;
    case Parity::Neither: return Parity::Neither;
  }
  return Parity::Neither;
}

SignalMeta primitive_meta(const Primitive& p) {
  SignalMeta m;
  switch (p.kind) {
    case PrimitiveKind::RectPulse:
      m.support = {-p.width, p.width};
      m.breakpoints = {-p.width, p.width};
      m.parity = Parity::Even;
      m.decay_rate = kInf;
      break;
    case PrimitiveKind::UnilatNegExp:
      m.support = {0.0, kInf};
      m.breakpoints = {0.0};
      m.decay_rate = p.rate;
      break;
    case PrimitiveKind::BilateralExp:
      m.support = {-kInf, kInf};
      m.breakpoints = {0.0};
      m.parity = Parity::Even;
      m.decay_rate = 1.0;
      break;
    case PrimitiveKind::SineToneBurst:
      m.support = {-p.width, p.width};
      m.breakpoints = {-p.width, p.width};
      m.parity = Parity::Odd;
      m.decay_rate = kInf;
      m.oscillation = std::abs(p.carrier);
      break;
    case PrimitiveKind::DampedUnilatSine:
      m.support = {0.0, kInf};
      m.breakpoints = {0.0};
      m.decay_rate = p.rate;
      m.oscillation = std::abs(p.carrier);
      break;
    case PrimitiveKind::Gaussian:
      m.support = {-kInf, kInf};
      m.smooth_everywhere = true;
      m.parity = Parity::Even;
      m.decay_rate = kInf;
      break;
  }
  return m;
}

void validate(const Primitive& p) {
  require_finite(p.width, "T1");
  require_finite(p.rate, "c");
  require_finite(p.carrier, "w0");
  switch (p.kind) {
    case PrimitiveKind::RectPulse:
    case PrimitiveKind::SineToneBurst:
      if (!(p.width > 0.0)) violation("T1 must be > 0 (got " + std::to_string(p.width) + ")");
      break;
    case PrimitiveKind::UnilatNegExp:
    case PrimitiveKind::DampedUnilatSine:
      if (!(p.rate > 0.0)) violation("c must be > 0 (got " + std::to_string(p.rate) + ")");
      break;
    case PrimitiveKind::BilateralExp:
    case PrimitiveKind::Gaussian:
      break;
  }
}

std::optional<double> min_rate(std::optional<double> a, std::optional<double> b) {
  if (!a || !b) return std::nullopt;
  return std::min(*a, *b);
}

SignalMeta combine_meta(const SignalNode& node) {
  return std::visit(
      Overloaded{
          [](const Primitive& p) {
            validate(p);
            return primitive_meta(p);
          },
          [](const LinComb& n) {
            require_finite(n.a, "a");
            require_finite(n.b, "b");
            const auto& f = n.f.meta();
            const auto& g = n.g.meta();
            SignalMeta m;
            m.support = {std::min(f.support.lo, g.support.lo),
                         std::max(f.support.hi, g.support.hi)};
            auto bps = f.breakpoints;
            bps.insert(bps.end(), g.breakpoints.begin(), g.breakpoints.end());
            m.breakpoints = normalized(std::move(bps));
            m.abs_integrable = f.abs_integrable && g.abs_integrable;
            m.smooth_everywhere = f.smooth_everywhere && g.smooth_everywhere;
            m.decays_at_infinity = f.decays_at_infinity && g.decays_at_infinity;
            if (n.b == Complex{}) {
              m.parity = f.parity;
            } else if (n.a == Complex{}) {
              m.parity = g.parity;
            } else {
              m.parity = f.parity == g.parity ? f.parity : Parity::Neither;
            }
            m.decay_rate = min_rate(f.decay_rate, g.decay_rate);
            m.oscillation = std::max(f.oscillation, g.oscillation);
            m.causal = m.support.lo >= 0.0;
            return m;
          },
          [](const TimeShift& n) {
            require_finite(n.t0, "t0");
            SignalMeta m = n.f.meta();
            m.support = {m.support.lo + n.t0, m.support.hi + n.t0};
            m.breakpoints = mapped(m.breakpoints, [&](double p) { return p + n.t0; });
            if (n.t0 != 0.0) m.parity = Parity::Neither;
            m.causal = m.support.lo >= 0.0;
            return m;
          },
          [](const FreqShiftExp& n) {
            require_finite(n.omega0, "w0");
            SignalMeta m = n.f.meta();
            if (n.omega0 != 0.0) m.parity = Parity::Neither;
            m.oscillation += std::abs(n.omega0);
            return m;
          },
          [](const ModCos& n) {
            require_finite(n.omega0, "w0");
            SignalMeta m = n.f.meta();
            m.oscillation += std::abs(n.omega0);
            return m;
          },
          [](const ModSin& n) {
            require_finite(n.omega0, "w0");
            SignalMeta m = n.f.meta();
            m.parity = flip(m.parity);
            m.oscillation += std::abs(n.omega0);
            return m;
          },
          [](const TimeScale& n) {
            require_finite(n.a, "a");
            if (n.a == 0.0) violation("time scale factor a must be nonzero");
            SignalMeta m = n.f.meta();
            double lo = m.support.lo / n.a;
            double hi = m.support.hi / n.a;
            if (lo > hi) std::swap(lo, hi);
            // 0 / negative gives -0.0; keep the support endpoints tidy.
            m.support = {lo == 0.0 ? 0.0 : lo, hi == 0.0 ? 0.0 : hi};
            m.breakpoints = mapped(m.breakpoints, [&](double p) {
              double q = p / n.a;
              return q == 0.0 ? 0.0 : q;
            });
            if (m.decay_rate) m.decay_rate = *m.decay_rate * std::abs(n.a);
            m.oscillation *= std::abs(n.a);
            m.causal = m.support.lo >= 0.0;
            return m;
          },
          [](const TimeReverse& n) {
            SignalMeta m = n.f.meta();
            double lo = -m.support.hi;
            double hi = -m.support.lo;
            m.support = {lo == 0.0 ? 0.0 : lo, hi == 0.0 ? 0.0 : hi};
            m.breakpoints = mapped(m.breakpoints, [](double p) { return p == 0.0 ? 0.0 : -p; });
            m.causal = m.support.lo >= 0.0;
            return m;
          },
          [](const Derivative& n) {
            if (n.order < 1) violation("derivative order must be a positive integer");
            const auto& f = n.f.meta();
            if (!f.smooth_everywhere) {
              violation("derivative requires a subtree differentiable everywhere");
            }
            if (!f.decays_at_infinity) {
              violation("derivative requires a subtree decaying at +/- infinity");
            }
            SignalMeta m = f;
            if (n.order % 2 == 1) m.parity = flip(m.parity);
            return m;
          },
      },
      node.variant());
}

// Physicists' Hermite polynomial: d^n/dt^n e^{-t^2} = (-1)^n H_n(t) e^{-t^2}.
double hermite(int n, double t) {
  double h0 = 1.0;
  if (n == 0) return h0;
  double h1 = 2.0 * t;
  for (int k = 1; k < n; ++k) {
    double h2 = 2.0 * t * h1 - 2.0 * k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Complex eval_primitive(const Primitive& p, double t) {
  switch (p.kind) {
    case PrimitiveKind::RectPulse:
      return std::abs(t) <= p.width ? 1.0 : 0.0;
    case PrimitiveKind::UnilatNegExp:
      return t >= 0.0 ? std::exp(-p.rate * t) : 0.0;
    case PrimitiveKind::BilateralExp:
      return std::exp(-std::abs(t));
    case PrimitiveKind::SineToneBurst:
      return std::abs(t) <= p.width ? std::sin(p.carrier * t) : 0.0;
    case PrimitiveKind::DampedUnilatSine:
      return t >= 0.0 ? std::exp(-p.rate * t) * std::sin(p.carrier * t) : 0.0;
    case PrimitiveKind::Gaussian:
      return std::exp(-t * t);
  }
  return 0.0;
}

// k-th derivative of cos(w t) (is_sine=false) or sin(w t).
double trig_derivative(bool is_sine, double w, int k, double t) {
  const double phase = w * t + k * std::numbers::pi / 2.0;
  return std::pow(w, k) * (is_sine ? std::sin(phase) : std::cos(phase));
}

}  // namespace

std::string_view to_string(PrimitiveKind kind) {
  switch (kind) {
    case PrimitiveKind::RectPulse: return "rect_pulse";
    case PrimitiveKind::UnilatNegExp: return "unilat_neg_exp";
    case PrimitiveKind::BilateralExp: return "bilateral_exp";
    case PrimitiveKind::SineToneBurst: return "sine_tone_burst";
    case PrimitiveKind::DampedUnilatSine: return "damped_unilat_sine";
    case PrimitiveKind::Gaussian: return "gaussian";
  }
  return "?";
}

std::string_view to_string(Parity parity) {
  switch (parity) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
  }
  return "?";
}

SupportKind Support::kind() const {
  const bool lo_fin = std::isfinite(lo);
  const bool hi_fin = std::isfinite(hi);
  if (lo_fin && hi_fin) return SupportKind::CompactInterval;
  if (lo_fin) return SupportKind::RightHalfLine;
  if (hi_fin) return SupportKind::LeftHalfLine;
  return SupportKind::WholeLine;
}

Signal Signal::build(SignalNode node) {
  SignalMeta meta = combine_meta(node);
  if (std::holds_alternative<Primitive>(node)) {
    meta.causal = meta.support.lo >= 0.0;
  }
  return Signal(std::make_shared<const SignalImpl>(SignalImpl{std::move(node), std::move(meta)}));
}

const SignalNode& Signal::node() const { return impl_->node; }
const SignalMeta& Signal::meta() const { return impl_->meta; }

Complex Signal::eval(double t) const {
  return std::visit(
      Overloaded{
          [&](const Primitive& p) { return eval_primitive(p, t); },
          [&](const LinComb& n) { return n.a * n.f.eval(t) + n.b * n.g.eval(t); },
          [&](const TimeShift& n) { return n.f.eval(t - n.t0); },
          [&](const FreqShiftExp& n) {
            const double s = n.sign == ShiftSign::Plus ? 1.0 : -1.0;
            return std::polar(1.0, s * n.omega0 * t) * n.f.eval(t);
          },
          [&](const ModCos& n) { return std::cos(n.omega0 * t) * n.f.eval(t); },
          [&](const ModSin& n) { return std::sin(n.omega0 * t) * n.f.eval(t); },
          [&](const TimeScale& n) { return n.f.eval(n.a * t); },
          [&](const TimeReverse& n) { return n.f.eval(-t); },
          [&](const Derivative& n) { return n.f.eval_derivative(t, n.order); },
      },
      node().variant());
}

Complex Signal::eval_derivative(double t, int order) const {
  if (order == 0) return eval(t);
  return std::visit(
      Overloaded{
          [&](const Primitive& p) -> Complex {
            if (p.kind != PrimitiveKind::Gaussian) {
              throw Error(ErrorKind::ConstraintViolation,
                          std::string(to_string(p.kind)) + " is not differentiable everywhere");
            }
            const double sign = order % 2 == 0 ? 1.0 : -1.0;
            return sign * hermite(order, t) * std::exp(-t * t);
          },
          [&](const LinComb& n) {
            return n.a * n.f.eval_derivative(t, order) + n.b * n.g.eval_derivative(t, order);
          },
          [&](const TimeShift& n) { return n.f.eval_derivative(t - n.t0, order); },
          [&](const FreqShiftExp& n) {
            // Leibniz rule with d^j/dt^j e^{s i w0 t} = (s i w0)^j e^{s i w0 t}.
            const double s = n.sign == ShiftSign::Plus ? 1.0 : -1.0;
            const Complex k{0.0, s * n.omega0};
            Complex acc{};
            for (int j = 0; j <= order; ++j) {
              acc += binomial(order, j) * std::pow(k, order - j) * n.f.eval_derivative(t, j);
            }
            return std::polar(1.0, s * n.omega0 * t) * acc;
          },
          [&](const ModCos& n) {
            Complex acc{};
            for (int j = 0; j <= order; ++j) {
              acc += binomial(order, j) * trig_derivative(false, n.omega0, order - j, t) *
                     n.f.eval_derivative(t, j);
            }
            return acc;
          },
          [&](const ModSin& n) {
            Complex acc{};
            for (int j = 0; j <= order; ++j) {
              acc += binomial(order, j) * trig_derivative(true, n.omega0, order - j, t) *
                     n.f.eval_derivative(t, j);
            }
            return acc;
          },
          [&](const TimeScale& n) {
            return std::pow(n.a, order) * n.f.eval_derivative(n.a * t, order);
          },
          [&](const TimeReverse& n) {
            return (order % 2 == 0 ? 1.0 : -1.0) * n.f.eval_derivative(-t, order);
          },
          [&](const Derivative& n) { return n.f.eval_derivative(t, order + n.order); },
      },
      node().variant());
}

std::optional<double> Signal::tail_mass(double half_width) const {
  const double T = std::max(half_width, 0.0);
  const auto& sup = meta().support;
  if (sup.lo >= -T && sup.hi <= T) return 0.0;
  return std::visit(
      Overloaded{
          [&](const Primitive& p) -> std::optional<double> {
            switch (p.kind) {
              case PrimitiveKind::RectPulse:
              case PrimitiveKind::SineToneBurst:
                return 2.0 * std::max(0.0, p.width - T);
              case PrimitiveKind::UnilatNegExp:
              case PrimitiveKind::DampedUnilatSine:
                return std::exp(-p.rate * T) / p.rate;
              case PrimitiveKind::BilateralExp:
                return 2.0 * std::exp(-T);
              case PrimitiveKind::Gaussian:
                return std::sqrt(std::numbers::pi) * std::erfc(T);
            }
            return std::nullopt;
          },
          [&](const LinComb& n) -> std::optional<double> {
            auto mf = n.f.tail_mass(T);
            auto mg = n.g.tail_mass(T);
            if (!mf || !mg) return std::nullopt;
            return std::abs(n.a) * *mf + std::abs(n.b) * *mg;
          },
          [&](const TimeShift& n) { return n.f.tail_mass(T - std::abs(n.t0)); },
          [&](const FreqShiftExp& n) { return n.f.tail_mass(T); },
          [&](const ModCos& n) { return n.f.tail_mass(T); },
          [&](const ModSin& n) { return n.f.tail_mass(T); },
          [&](const TimeScale& n) -> std::optional<double> {
            const double a = std::abs(n.a);
            auto m = n.f.tail_mass(a * T);
            if (!m) return std::nullopt;
            return *m / a;
          },
          [&](const TimeReverse& n) { return n.f.tail_mass(T); },
          [&](const Derivative&) -> std::optional<double> { return std::nullopt; },
      },
      node().variant());
}

Signal rect_pulse(double width) {
  return Signal::build(Primitive{PrimitiveKind::RectPulse, width, 0.0, 0.0});
}
Signal unilat_neg_exp(double rate) {
  return Signal::build(Primitive{PrimitiveKind::UnilatNegExp, 0.0, rate, 0.0});
}
Signal bilateral_exp() { return Signal::build(Primitive{PrimitiveKind::BilateralExp}); }
Signal sine_tone_burst(double width, double carrier) {
  return Signal::build(Primitive{PrimitiveKind::SineToneBurst, width, 0.0, carrier});
}
Signal damped_unilat_sine(double rate, double carrier) {
  return Signal::build(Primitive{PrimitiveKind::DampedUnilatSine, 0.0, rate, carrier});
}
Signal gaussian() { return Signal::build(Primitive{PrimitiveKind::Gaussian}); }

Signal lin_comb(Complex a, const Signal& f, Complex b, const Signal& g) {
  return Signal::build(LinComb{a, f, b, g});
}
Signal scaled(Complex a, const Signal& f) { return lin_comb(a, f, 0.0, f); }
Signal time_shift(const Signal& f, double t0) { return Signal::build(TimeShift{f, t0}); }
Signal freq_shift_exp(const Signal& f, double omega0, ShiftSign sign) {
  return Signal::build(FreqShiftExp{f, omega0, sign});
}
Signal mod_cos(const Signal& f, double omega0) { return Signal::build(ModCos{f, omega0}); }
Signal mod_sin(const Signal& f, double omega0) { return Signal::build(ModSin{f, omega0}); }
Signal time_scale(const Signal& f, double a) { return Signal::build(TimeScale{f, a}); }
Signal time_reverse(const Signal& f) { return Signal::build(TimeReverse{f}); }
Signal derivative(const Signal& f, int order) { return Signal::build(Derivative{f, order}); }

bool structurally_equal(const Signal& lhs, const Signal& rhs) {
  if (lhs.node().index() != rhs.node().index()) return false;
  return std::visit(
      Overloaded{
          [&](const Primitive& p) {
            const auto& q = std::get<Primitive>(rhs.node());
            return p.kind == q.kind && p.width == q.width && p.rate == q.rate &&
                   p.carrier == q.carrier;
          },
          [&](const LinComb& n) {
            const auto& m = std::get<LinComb>(rhs.node());
            return n.a == m.a && n.b == m.b && structurally_equal(n.f, m.f) &&
                   structurally_equal(n.g, m.g);
          },
          [&](const TimeShift& n) {
            const auto& m = std::get<TimeShift>(rhs.node());
            return n.t0 == m.t0 && structurally_equal(n.f, m.f);
          },
          [&](const FreqShiftExp& n) {
            const auto& m = std::get<FreqShiftExp>(rhs.node());
            return n.omega0 == m.omega0 && n.sign == m.sign && structurally_equal(n.f, m.f);
          },
          [&](const ModCos& n) {
            const auto& m = std::get<ModCos>(rhs.node());
            return n.omega0 == m.omega0 && structurally_equal(n.f, m.f);
          },
          [&](const ModSin& n) {
            const auto& m = std::get<ModSin>(rhs.node());
            return n.omega0 == m.omega0 && structurally_equal(n.f, m.f);
          },
          [&](const TimeScale& n) {
            const auto& m = std::get<TimeScale>(rhs.node());
            return n.a == m.a && structurally_equal(n.f, m.f);
          },
          [&](const TimeReverse& n) {
            return structurally_equal(n.f, std::get<TimeReverse>(rhs.node()).f);
          },
          [&](const Derivative& n) {
            const auto& m = std::get<Derivative>(rhs.node());
            return n.order == m.order && structurally_equal(n.f, m.f);
          },
      },
      lhs.node().variant());
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::ExistenceViolation: return "ExistenceViolation";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::ExcludedPoint: return "ExcludedPoint";
    case ErrorKind::UnsupportedNode: return "UnsupportedNode";
    case ErrorKind::InvalidSystem: return "InvalidSystem";
    case ErrorKind::RootFindingFailure: return "RootFindingFailure";
    case ErrorKind::UnstableSystem: return "UnstableSystem";
    case ErrorKind::StepTooLarge: return "StepTooLarge";
    case ErrorKind::NotSettled: return "NotSettled";
    case ErrorKind::ParityViolation: return "ParityViolation";
    case ErrorKind::CausalityViolation: return "CausalityViolation";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::Usage: return "Usage";
  }
  return "?";
}

}  // namespace fourierkit
