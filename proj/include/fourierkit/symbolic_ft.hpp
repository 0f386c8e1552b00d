#pragma once

#include <string_view>

#include "fourierkit/signal.hpp"
#include "fourierkit/spectrum.hpp"

namespace fourierkit {

/// Closed-form spectrum by structural recursion: catalog transforms at the
/// leaves, transform properties at the combinators. The result is simplified.
Spectrum symbolic_ft(const Signal& f);

/// Closed-form spectrum of a single catalog primitive (unsimplified).
Spectrum primitive_spectrum(const Primitive& p);

/// Integral of f over the real line, read off as F(0). Throws
/// Error(ExcludedPoint) when the closed form is singular at zero.
Complex area_under(const Signal& f);

/// Name of the transform result or property that the top node of f
/// instantiates, e.g. "Time Shifting".
std::string_view rule_name(const Signal& f);

/// Name of the catalog result for a primitive kind.
std::string_view theorem_name(PrimitiveKind kind);

/// Closed form of the primitive's spectrum as text, e.g. "2*T1*sinc(w*T1)".
std::string_view closed_form_text(PrimitiveKind kind);

/// True when the tree contains a leaf whose closed form is checked only
/// against the quadrature oracle (the Gaussian).
bool oracle_validated_only(const Signal& f);

}  // namespace fourierkit
