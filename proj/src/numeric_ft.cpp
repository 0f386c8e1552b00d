#include "fourierkit/numeric_ft.hpp"

#include <cmath>

#include <algorithm>

#include "fourierkit/error.hpp"
#include "overloaded.hpp"

namespace fourierkit {

namespace {

void collect_centers(const Signal& f, std::vector<double>& out) {
  std::visit(detail::Overloaded{
                 [&](const Primitive&) { out.push_back(0.0); },
                 [&](const LinComb& n) {
                   collect_centers(n.f, out);
                   collect_centers(n.g, out);
                 },
                 [&](const TimeShift& n) {
                   std::vector<double> inner;
                   collect_centers(n.f, inner);
                   for (double c : inner) out.push_back(c + n.t0);
                 },
                 [&](const TimeScale& n) {
                   std::vector<double> inner;
                   collect_centers(n.f, inner);
                   for (double c : inner) out.push_back(c / n.a);
                 },
                 [&](const TimeReverse& n) {
                   std::vector<double> inner;
                   collect_centers(n.f, inner);
                   for (double c : inner) out.push_back(-c);
                 },
                 [&](const auto& n) { collect_centers(n.f, out); },
             },
             f.node().variant());
}

}  // namespace

std::vector<double> signal_anchors(const Signal& f) {
  std::vector<double> out = f.meta().breakpoints;
  collect_centers(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Integrand signal_integrand(const Signal& f, std::function<Complex(double)> kernel,
                           double kernel_oscillation) {
  Integrand g;
  g.fn = [f, kernel = std::move(kernel)](double t) { return f.eval(t) * kernel(t); };
  const auto& meta = f.meta();
  g.breakpoints = meta.breakpoints;
  g.lo = meta.support.lo;
  g.hi = meta.support.hi;
  g.tail_bound = [f](double T) { return f.tail_mass(T); };
  g.oscillation = meta.oscillation + std::abs(kernel_oscillation);
  g.anchors = signal_anchors(f);
  return g;
}

QuadratureResult numeric_ft(const Signal& f, double omega, const QuadratureConfig& cfg) {
  if (!f.meta().abs_integrable) {
    throw Error(ErrorKind::ExistenceViolation,
                "Fourier transform requires an absolutely integrable signal");
  }
  return improper_integral(
      signal_integrand(f, [omega](double t) { return std::polar(1.0, -omega * t); }, omega),
      cfg);
}

double abs_integrability_check(const Signal& f, const QuadratureConfig& cfg) {
  Integrand g;
  g.fn = [f](double t) { return Complex{std::abs(f.eval(t)), 0.0}; };
  const auto& meta = f.meta();
  g.breakpoints = meta.breakpoints;
  g.lo = meta.support.lo;
  g.hi = meta.support.hi;
  g.tail_bound = [f](double T) { return f.tail_mass(T); };
  g.oscillation = meta.oscillation;
  g.anchors = signal_anchors(f);
  return improper_integral(g, cfg).value.real();
}

}  // namespace fourierkit
