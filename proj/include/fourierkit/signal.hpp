#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace fourierkit {

using Complex = std::complex<double>;

enum class PrimitiveKind {
  RectPulse,         // 1 on |t| <= T1
  UnilatNegExp,      // e^{-ct} on t >= 0
  BilateralExp,      // e^{-|t|}
  SineToneBurst,     // sin(w0 t) on |t| <= T1
  DampedUnilatSine,  // e^{-ct} sin(w0 t) on t >= 0
  Gaussian,          // e^{-t^2}
};

std::string_view to_string(PrimitiveKind kind);

/// Catalog leaf. Only the parameters relevant to `kind` are meaningful.
struct Primitive {
  PrimitiveKind kind = PrimitiveKind::Gaussian;
  double width = 0.0;    // T1 [s]
  double rate = 0.0;     // c [1/s]
  double carrier = 0.0;  // w0 [rad/s]
};

enum class Parity { Even, Odd, Neither };
std::string_view to_string(Parity parity);

enum class SupportKind { CompactInterval, RightHalfLine, LeftHalfLine, WholeLine };

/// Closed interval [lo, hi] outside of which the signal vanishes; either end
/// may be infinite.
struct Support {
  double lo;
  double hi;

  SupportKind kind() const;
  bool bounded() const { return kind() == SupportKind::CompactInterval; }
  friend bool operator==(const Support&, const Support&) = default;
};

/// Structural facts about a signal, propagated by the constructors. These
/// stand in for the piecewise-smoothness / absolute-integrability conditions
/// under which the Fourier integral exists.
struct SignalMeta {
  Support support{0.0, 0.0};
  std::vector<double> breakpoints;  // sorted, unique
  bool abs_integrable = true;
  bool smooth_everywhere = false;
  bool decays_at_infinity = true;
  bool causal = false;  // vanishes for t < 0
  Parity parity = Parity::Neither;
  // |f(t)| = O(e^{-rate |t|}); +inf for compact or super-exponential decay.
  std::optional<double> decay_rate;
  // Largest angular frequency the time-domain expression oscillates at.
  double oscillation = 0.0;
};

struct SignalNode;
struct SignalImpl;

/// Immutable handle to a signal expression tree. Cheap to copy; safe to share
/// across threads.
class Signal {
 public:
  /// Validates the node against the parameter constraints and computes its
  /// metadata. Throws Error(ConstraintViolation) on bad input.
  static Signal build(SignalNode node);

  const SignalNode& node() const;
  const SignalMeta& meta() const;

  Complex operator()(double t) const { return eval(t); }
  Complex eval(double t) const;

  /// n-th time derivative by exact differentiation of the expression. Only
  /// defined for smooth subtrees.
  Complex eval_derivative(double t, int order) const;

  /// Upper bound on the integral of |f| over |t| > half_width, or nullopt when
  /// no analytic bound is available.
  std::optional<double> tail_mass(double half_width) const;

 private:
  explicit Signal(std::shared_ptr<const SignalImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const SignalImpl> impl_;
};

struct LinComb {
  Complex a;
  Signal f;
  Complex b;
  Signal g;
};

struct TimeShift {
  Signal f;
  double t0;
};

enum class ShiftSign { Plus, Minus };

/// e^{+i w0 t} f(t) for Plus, e^{-i w0 t} f(t) for Minus.
struct FreqShiftExp {
  Signal f;
  double omega0;
  ShiftSign sign;
};

struct ModCos {
  Signal f;
  double omega0;
};

struct ModSin {
  Signal f;
  double omega0;
};

/// f(a t)
struct TimeScale {
  Signal f;
  double a;
};

struct TimeReverse {
  Signal f;
};

struct Derivative {
  Signal f;
  int order;
};

using SignalVariant = std::variant<Primitive, LinComb, TimeShift, FreqShiftExp, ModCos,
                                   ModSin, TimeScale, TimeReverse, Derivative>;

struct SignalNode : SignalVariant {
  using SignalVariant::SignalVariant;
  const SignalVariant& variant() const { return *this; }
};

// Constructors. All of them go through Signal::build.
Signal rect_pulse(double width);
Signal unilat_neg_exp(double rate);
Signal bilateral_exp();
Signal sine_tone_burst(double width, double carrier);
Signal damped_unilat_sine(double rate, double carrier);
Signal gaussian();
Signal lin_comb(Complex a, const Signal& f, Complex b, const Signal& g);
Signal scaled(Complex a, const Signal& f);  // lin_comb(a, f, 0, f)
Signal time_shift(const Signal& f, double t0);
Signal freq_shift_exp(const Signal& f, double omega0, ShiftSign sign);
Signal mod_cos(const Signal& f, double omega0);
Signal mod_sin(const Signal& f, double omega0);
Signal time_scale(const Signal& f, double a);
Signal time_reverse(const Signal& f);
Signal derivative(const Signal& f, int order);

inline Complex eval_signal(const Signal& f, double t) { return f.eval(t); }
inline const SignalMeta& signal_metadata(const Signal& f) { return f.meta(); }

/// Same node kinds, same parameters (compared exactly), same children.
bool structurally_equal(const Signal& lhs, const Signal& rhs);

}  // namespace fourierkit
