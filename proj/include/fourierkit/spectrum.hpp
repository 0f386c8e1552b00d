#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>

namespace fourierkit {

using Complex = std::complex<double>;

enum class SpectrumKind {
  Const,
  Omega,       // p*w + q
  IOmega,      // i*(p*w + q)
  Add,
  Sub,
  Mul,
  Div,
  Pow,         // integer power
  CExp,        // e^{arg}
  Sinc,        // sin(x)/x with x = T1*(p*w + q); 1 at x = 0
  SubstShift,  // inner evaluated at w - shift
  SubstScale,  // inner evaluated at w / scale
};

struct SpectrumNode;

/// Immutable closed-form expression in the angular frequency w.
class Spectrum {
 public:
  static Spectrum constant(Complex c);
  static Spectrum omega(double p = 1.0, double q = 0.0);
  static Spectrum i_omega(double p = 1.0, double q = 0.0);
  static Spectrum sinc(double width, double p = 1.0, double q = 0.0);
  static Spectrum add(Spectrum lhs, Spectrum rhs);
  static Spectrum sub(Spectrum lhs, Spectrum rhs);
  static Spectrum mul(Spectrum lhs, Spectrum rhs);
  /// `condition` names the side condition that excludes the zeros of `den`.
  static Spectrum div(Spectrum num, Spectrum den, std::string condition);
  static Spectrum pow(Spectrum base, int exponent);
  static Spectrum cexp(Spectrum arg);
  static Spectrum subst_shift(Spectrum inner, double shift);
  static Spectrum subst_scale(Spectrum inner, double scale);

  const SpectrumNode& node() const { return *node_; }
  SpectrumKind kind() const;

 private:
  explicit Spectrum(std::shared_ptr<const SpectrumNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const SpectrumNode> node_;
};

struct SpectrumNode {
  SpectrumKind kind = SpectrumKind::Const;
  Complex value;             // Const
  double p = 1.0;            // Omega / IOmega / Sinc affine slope
  double q = 0.0;            // Omega / IOmega / Sinc affine offset
  double width = 0.0;        // Sinc T1
  double param = 0.0;        // SubstShift shift / SubstScale scale
  int exponent = 0;          // Pow
  std::string condition;     // Div side condition
  std::optional<Spectrum> lhs;  // unary operand or left operand
  std::optional<Spectrum> rhs;
};

inline Spectrum operator+(Spectrum a, Spectrum b) { return Spectrum::add(std::move(a), std::move(b)); }
inline Spectrum operator-(Spectrum a, Spectrum b) { return Spectrum::sub(std::move(a), std::move(b)); }
inline Spectrum operator*(Spectrum a, Spectrum b) { return Spectrum::mul(std::move(a), std::move(b)); }

/// Evaluates at w. Sinc takes its limit at the removable singularity; a Div
/// whose denominator vanishes throws Error(ExcludedPoint) naming its
/// condition.
Complex spectrum_eval(const Spectrum& F, double omega);

/// Local rewrites only: constant folding, unit/zero elimination, pulling
/// constant factors to the front, collecting equal terms, and pushing
/// substitutions down into the affine leaves.
Spectrum simplify(const Spectrum& F);

/// Same shape; constants and affine parameters equal to `rel_tol`.
bool structurally_equal(const Spectrum& a, const Spectrum& b, double rel_tol = 1e-14);

/// Human-readable infix rendering in the variable w.
std::string to_string(const Spectrum& F);

}  // namespace fourierkit
