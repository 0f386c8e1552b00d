#pragma once

#include <string>
#include <string_view>

#include "fourierkit/lti.hpp"
#include "fourierkit/signal.hpp"

namespace fourierkit {

/// Parses the signal language:
///
///   signal     := term | signal "+" term
///   term       := [coeff "*"] atom
///   coeff      := number | "(" complex ")"       e.g. 2, -0.5, (1+2i)
///   atom       := primitive | combinator
///   primitive  := rect(T1) | unilat_exp(c) | bilateral_exp() | gauss()
///               | sine_burst(T1, w0) | damped_sine(c, w0)
///   combinator := shift(s, t0) | scale(s, a) | reverse(s) | modcos(s, w0)
///               | modsin(s, w0) | cexp_shift(s, w0, +|-) | deriv(s, n)
///
/// Throws Error(SyntaxError) with the position and expected tokens, or
/// Error(ConstraintViolation) carrying the span of the offending call.
Signal parse_signal_dsl(std::string_view text);

/// Prints a signal in the same language; parsing the result gives back a
/// structurally equal tree.
std::string print_signal(const Signal& f);

/// Parses "builtin:name(k=v, ...)" or "out=[b0, b1, ...]; in=[a0, ...]".
DiffEqSystem parse_system_spec(std::string_view text);

}  // namespace fourierkit
