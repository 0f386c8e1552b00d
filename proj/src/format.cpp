#include "fourierkit/format.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace fourierkit {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0 as well
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) return std::to_string(v);
  return std::string(buf.data(), end);
}

std::string format_complex(std::complex<double> v) {
  if (v.imag() == 0.0) return format_number(v.real());
  std::string out = "(";
  if (v.real() != 0.0) out += format_number(v.real());
  const double im = v.imag();
  if (v.real() != 0.0 && !std::signbit(im)) out += "+";
  out += format_number(im);
  out += "i)";
  return out;
}

}  // namespace fourierkit
