#include "fourierkit/properties.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"
#include "fourierkit/numeric_ft.hpp"
#include "fourierkit/symbolic_ft.hpp"

namespace fourierkit {

void PropertyReport::add(double omega, Complex lhs, Complex rhs, double residual) {
  points.push_back(PropertyPoint{omega, lhs, rhs, residual});
  max_residual = std::max(max_residual, residual);
  finish();
}

void PropertyReport::finish() { passed = std::isfinite(max_residual) && max_residual <= tolerance; }

double mixed_residual(Complex lhs, Complex rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(rhs)); }

std::vector<double> standard_grid() {
  return {-10.0, -5.0, -2.0, -1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0};
}

std::string_view to_string(PropertyRule rule) {
  switch (rule) {
    case PropertyRule::Linearity: return "linearity";
    case PropertyRule::TimeShift: return "time_shift";
    case PropertyRule::FreqShift: return "freq_shift";
    case PropertyRule::ModCos: return "mod_cos";
    case PropertyRule::ModSin: return "mod_sin";
    case PropertyRule::TimeScale: return "time_scale";
    case PropertyRule::TimeReversal: return "time_reversal";
    case PropertyRule::Derivative: return "derivative";
    case PropertyRule::Area: return "area";
  }
  return "";
}

PropertyRule property_rule_from_string(std::string_view name) {
  for (auto rule : {PropertyRule::Linearity, PropertyRule::TimeShift, PropertyRule::FreqShift,
                    PropertyRule::ModCos, PropertyRule::ModSin, PropertyRule::TimeScale,
                    PropertyRule::TimeReversal, PropertyRule::Derivative, PropertyRule::Area}) {
    if (to_string(rule) == name) return rule;
  }
  throw Error(ErrorKind::Usage, "unknown property '" + std::string(name) + "'");
}

namespace {

Signal transformed(PropertyRule rule, const Signal& f, const PropertyParams& p) {
  switch (rule) {
    case PropertyRule::Linearity: return lin_comb(p.a, f, p.b, p.g.value_or(f));
    case PropertyRule::TimeShift: return time_shift(f, p.t0);
    case PropertyRule::FreqShift: return freq_shift_exp(f, p.omega0, p.sign);
    case PropertyRule::ModCos: return mod_cos(f, p.omega0);
    case PropertyRule::ModSin: return mod_sin(f, p.omega0);
    case PropertyRule::TimeScale: return time_scale(f, p.scale);
    case PropertyRule::TimeReversal: return time_reverse(f);
    case PropertyRule::Derivative: return derivative(f, p.order);
    case PropertyRule::Area: return f;
  }
  return f;
}

// The right-hand side of the property, built from numeric transforms of the
// untransformed operands.
Complex predicted(PropertyRule rule, const Signal& f, const PropertyParams& p, double w,
                  const QuadratureConfig& cfg) {
  const auto F = [&](double x) { return numeric_ft(f, x, cfg).value; };
  switch (rule) {
    case PropertyRule::Linearity:
      return p.a * F(w) + p.b * numeric_ft(p.g.value_or(f), w, cfg).value;
    case PropertyRule::TimeShift:
      return std::polar(1.0, -w * p.t0) * F(w);
    case PropertyRule::FreqShift:
      return F(p.sign == ShiftSign::Plus ? w - p.omega0 : w + p.omega0);
    case PropertyRule::ModCos:
      return 0.5 * (F(w - p.omega0) + F(w + p.omega0));
    case PropertyRule::ModSin:
      return (F(w - p.omega0) - F(w + p.omega0)) / Complex{0.0, 2.0};
    case PropertyRule::TimeScale:
      return F(w / p.scale) / std::abs(p.scale);
    case PropertyRule::TimeReversal:
      return F(-w);
    case PropertyRule::Derivative:
      return std::pow(Complex{0.0, w}, p.order) * F(w);
    case PropertyRule::Area:
      return area_under(f);
  }
  return {};
}

std::string params_text(PropertyRule rule, const PropertyParams& p) {
  switch (rule) {
    case PropertyRule::Linearity: {
      std::string s = "a=" + format_complex(p.a) + ", b=" + format_complex(p.b);
      if (p.g) s += ", g=" + print_signal(*p.g);
      return s;
    }
    case PropertyRule::TimeShift: return "t0=" + format_number(p.t0);
    case PropertyRule::FreqShift:
      return std::string("w0=") + format_number(p.omega0) +
             (p.sign == ShiftSign::Plus ? ", sign=+" : ", sign=-");
    case PropertyRule::ModCos:
    case PropertyRule::ModSin: return "w0=" + format_number(p.omega0);
    case PropertyRule::TimeScale: return "a=" + format_number(p.scale);
    case PropertyRule::TimeReversal: return "";
    case PropertyRule::Derivative: return "order=" + std::to_string(p.order);
    case PropertyRule::Area: return "";
  }
  return "";
}

}  // namespace

PropertyReport verify_property(PropertyRule rule, const Signal& f, const PropertyParams& params,
                               const std::vector<double>& grid, double tol,
                               const QuadratureConfig& cfg) {
  PropertyReport report;
  report.property = std::string(to_string(rule));
  report.signal = print_signal(f);
  report.tolerance = tol;
  report.notes = params_text(rule, params);

  if (rule == PropertyRule::Area) {
    report.theorem = "Area Under a Function";
    report.grid = {0.0};
    report.oracle_only = oracle_validated_only(f);
    const Complex integral = numeric_ft(f, 0.0, cfg).value;
    const Complex closed = area_under(f);
    report.add(0.0, integral, closed, mixed_residual(integral, closed));
    return report;
  }

  const Signal g = transformed(rule, f, params);
  report.theorem = std::string(rule_name(g));
  report.grid = grid;
  for (double w : grid) {
    const Complex lhs = numeric_ft(g, w, cfg).value;
    const Complex rhs = predicted(rule, f, params, w, cfg);
    report.add(w, lhs, rhs, mixed_residual(lhs, rhs));
  }
  report.finish();
  return report;
}

}  // namespace fourierkit
