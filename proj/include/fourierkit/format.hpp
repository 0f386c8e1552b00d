#pragma once

#include <complex>
#include <string>

namespace fourierkit {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double v);

/// "2", "-0.5", or "(1+2i)" for values with a nonzero imaginary part.
std::string format_complex(std::complex<double> v);

}  // namespace fourierkit
