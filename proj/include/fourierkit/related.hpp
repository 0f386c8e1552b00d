#pragma once

#include <vector>

#include "fourierkit/quadrature.hpp"
#include "fourierkit/report.hpp"
#include "fourierkit/signal.hpp"

namespace fourierkit {

/// integral f(t) cos(w t) dt over the whole line.
QuadratureResult numeric_cosine_ft(const Signal& f, double omega, const QuadratureConfig& cfg = {});

/// integral f(t) sin(w t) dt over the whole line.
QuadratureResult numeric_sine_ft(const Signal& f, double omega, const QuadratureConfig& cfg = {});

struct LaplacePoint {
  Complex s;
  bool re_zero() const { return s.real() == 0.0; }
};

/// integral_0^inf f(t) e^{-s t} dt. Requires Re s > -decay_rate of f (or any
/// s for signals with bounded support); throws Error(NoConvergence) otherwise.
QuadratureResult numeric_laplace(const Signal& f, LaplacePoint s, const QuadratureConfig& cfg = {});

/// integral_0^T f(t) e^{-s t} dt.
QuadratureResult laplace_truncated(const Signal& f, LaplacePoint s, double T,
                                   const QuadratureConfig& cfg = {});

/// F(w) against the cosine transform. Throws Error(ParityViolation) unless f
/// is even.
PropertyReport check_even_relation(const Signal& f, const std::vector<double>& grid, double tol,
                                   const QuadratureConfig& cfg = {});

/// F(w) against -i times the sine transform. Throws Error(ParityViolation)
/// unless f is odd.
PropertyReport check_odd_relation(const Signal& f, const std::vector<double>& grid, double tol,
                                  const QuadratureConfig& cfg = {});

/// F(w) against the Laplace transform at s = i w. Throws
/// Error(CausalityViolation) unless f is causal.
PropertyReport check_laplace_relation(const Signal& f, const std::vector<double>& grid,
                                      double tol, const QuadratureConfig& cfg = {});

}  // namespace fourierkit
