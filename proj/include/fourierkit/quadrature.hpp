#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace fourierkit {

using Complex = std::complex<double>;

struct QuadratureConfig {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  double initial_half_width = 32.0;    // seconds
  double max_half_width = 1048576.0;   // 2^20 seconds
  std::size_t max_subdivisions = 1000000;

  /// Throws Error(ConstraintViolation) if the invariants do not hold.
  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;  // quadrature error on the truncated domain
  double tail_bound = 0.0;      // bound (or estimate) for what lies beyond it
  double truncation_T = 0.0;    // half-width actually integrated
  std::size_t subdivisions = 0;
  bool tail_is_analytic = true;

  double total_error() const { return error_estimate + tail_bound; }
};

/// A complex integrand on the real line. Outside [lo, hi] it is taken to be
/// zero and is never evaluated.
struct Integrand {
  std::function<Complex(double)> fn;
  std::vector<double> breakpoints;  // discontinuities / kinks of fn
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  // Bound on the integral of |fn| over |t| > T. Empty (or returning nullopt)
  // switches truncation to the empirical shell-doubling estimate.
  std::function<std::optional<double>(double)> tail_bound;
  // Panels are capped at pi / oscillation to keep the rule accurate.
  double oscillation = 0.0;
  // Points the mass is concentrated around. Initial panels are at most one
  // unit wide near them and widen in proportion to the distance.
  std::vector<double> anchors{0.0};
};

/// Integral of the integrand over the whole real line.
///
/// Panels are split at every breakpoint and refined adaptively with a
/// 7/15-point Gauss-Kronrod pair until the summed error estimate is within
/// half the tolerance rel_tol * |value| + abs_tol. The domain starts at
/// [-T, T] with T = initial_half_width and doubles until the tail meets the
/// other half. Throws Error(NoConvergence) when max_half_width or
/// max_subdivisions is exhausted.
QuadratureResult improper_integral(const Integrand& g, const QuadratureConfig& cfg = {});

/// Integral over the finite interval [a, b] (intersected with the
/// integrand's support), same accuracy contract without truncation.
QuadratureResult proper_integral(const Integrand& g, double a, double b,
                                 const QuadratureConfig& cfg = {});

}  // namespace fourierkit
