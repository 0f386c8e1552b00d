#pragma once

#include <functional>
#include <vector>

#include "fourierkit/quadrature.hpp"
#include "fourierkit/signal.hpp"

namespace fourierkit {

/// Wraps t -> f(t) * kernel(t) with f's breakpoints, support and tail bound.
/// `kernel` must have modulus <= 1 so that f's tail mass bounds the product.
Integrand signal_integrand(const Signal& f, std::function<Complex(double)> kernel,
                           double kernel_oscillation);

/// Points the signal's mass is concentrated around: the origins of its
/// primitives carried through shifts and scalings, and its breakpoints.
std::vector<double> signal_anchors(const Signal& f);

/// Quadrature of the Fourier integral  F(w) = integral f(t) e^{-i w t} dt.
/// Throws Error(ExistenceViolation) if f is not absolutely integrable.
QuadratureResult numeric_ft(const Signal& f, double omega, const QuadratureConfig& cfg = {});

/// L1 norm of f over the whole line; NoConvergence means it does not exist.
double abs_integrability_check(const Signal& f, const QuadratureConfig& cfg = {});

}  // namespace fourierkit
