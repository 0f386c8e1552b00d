#include "fourierkit/related.hpp"

#include <cmath>
#include <limits>

#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"
#include "fourierkit/numeric_ft.hpp"

namespace fourierkit {

namespace {

void require_integrable(const Signal& f) {
  if (!f.meta().abs_integrable) {
    throw Error(ErrorKind::ExistenceViolation, "signal is not absolutely integrable");
  }
}

// Restricts the integrand to t >= 0 (or [0, T]).
Integrand half_line(const Signal& f, Complex s, double T) {
  Integrand g = signal_integrand(
      f, [s](double t) { return std::exp(-s * t); }, std::abs(s.imag()));
  g.lo = std::max(g.lo, 0.0);
  g.hi = std::min(g.hi, T);
  if (s.real() < 0.0) {
    // e^{-st} grows, so f's own tail mass no longer bounds the product.
    g.tail_bound = nullptr;
  } else {
    g.tail_bound = [f](double T) { return f.tail_mass(T); };
  }
  return g;
}

}  // namespace

QuadratureResult numeric_cosine_ft(const Signal& f, double omega, const QuadratureConfig& cfg) {
  require_integrable(f);
  return improper_integral(
      signal_integrand(f, [omega](double t) { return Complex{std::cos(omega * t), 0.0}; }, omega),
      cfg);
}

QuadratureResult numeric_sine_ft(const Signal& f, double omega, const QuadratureConfig& cfg) {
  require_integrable(f);
  return improper_integral(
      signal_integrand(f, [omega](double t) { return Complex{std::sin(omega * t), 0.0}; }, omega),
      cfg);
}

QuadratureResult numeric_laplace(const Signal& f, LaplacePoint s, const QuadratureConfig& cfg) {
  const auto& meta = f.meta();
  const bool bounded_right = std::isfinite(meta.support.hi);
  if (!bounded_right) {
    const double rate = meta.decay_rate.value_or(0.0);
    if (!(s.s.real() > -rate)) {
      throw Error(ErrorKind::NoConvergence,
                  "Laplace integral diverges: need Re s > " + format_number(-rate) +
                      " (got Re s = " + format_number(s.s.real()) + ")");
    }
  }
  return improper_integral(half_line(f, s.s, std::numeric_limits<double>::infinity()), cfg);
}

QuadratureResult laplace_truncated(const Signal& f, LaplacePoint s, double T,
                                   const QuadratureConfig& cfg) {
  if (!(T >= 0.0)) throw Error(ErrorKind::ConstraintViolation, "T must be >= 0");
  return proper_integral(half_line(f, s.s, T), 0.0, T, cfg);
}

PropertyReport check_even_relation(const Signal& f, const std::vector<double>& grid, double tol,
                                   const QuadratureConfig& cfg) {
  if (f.meta().parity != Parity::Even) {
    throw Error(ErrorKind::ParityViolation,
                "signal is not even (parity " + std::string(to_string(f.meta().parity)) + ")");
  }
  PropertyReport r;
  r.property = "even_relation";
  r.theorem = "Fourier Transform of Even Function";
  r.signal = print_signal(f);
  r.grid = grid;
  r.tolerance = tol;
  for (double w : grid) {
    const Complex lhs = numeric_ft(f, w, cfg).value;
    const Complex rhs = numeric_cosine_ft(f, w, cfg).value;
    r.add(w, lhs, rhs, mixed_residual(lhs, rhs));
  }
  r.finish();
  return r;
}

PropertyReport check_odd_relation(const Signal& f, const std::vector<double>& grid, double tol,
                                  const QuadratureConfig& cfg) {
  if (f.meta().parity != Parity::Odd) {
    throw Error(ErrorKind::ParityViolation,
                "signal is not odd (parity " + std::string(to_string(f.meta().parity)) + ")");
  }
  PropertyReport r;
  r.property = "odd_relation";
  r.theorem = "Fourier Transform of Odd Function";
  r.signal = print_signal(f);
  r.grid = grid;
  r.tolerance = tol;
  for (double w : grid) {
    const Complex lhs = numeric_ft(f, w, cfg).value;
    const Complex rhs = Complex{0.0, -1.0} * numeric_sine_ft(f, w, cfg).value;
    r.add(w, lhs, rhs, mixed_residual(lhs, rhs));
  }
  r.finish();
  return r;
}

PropertyReport check_laplace_relation(const Signal& f, const std::vector<double>& grid,
                                      double tol, const QuadratureConfig& cfg) {
  if (!f.meta().causal) {
    throw Error(ErrorKind::CausalityViolation, "signal is not causal (nonzero for some t < 0)");
  }
  PropertyReport r;
  r.property = "laplace_relation";
  r.theorem = "Relationship with Laplace Transform";
  r.signal = print_signal(f);
  r.grid = grid;
  r.tolerance = tol;
  for (double w : grid) {
    const Complex lhs = numeric_ft(f, w, cfg).value;
    const Complex rhs = numeric_laplace(f, LaplacePoint{Complex{0.0, w}}, cfg).value;
    r.add(w, lhs, rhs, mixed_residual(lhs, rhs));
  }
  r.finish();
  return r;
}

}  // namespace fourierkit
