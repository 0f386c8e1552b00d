#include "fourierkit/suites.hpp"

#include <cmath>

#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "fourierkit/lti.hpp"
#include "fourierkit/numeric_ft.hpp"
#include "fourierkit/properties.hpp"
#include "fourierkit/related.hpp"
#include "fourierkit/symbolic_ft.hpp"

namespace fourierkit {

namespace {

// Frequencies where the closed form does not hold (the sine burst at +-w0).
bool excluded(const Signal& f, double w) {
  const auto* p = std::get_if<Primitive>(&f.node());
  return p != nullptr && p->kind == PrimitiveKind::SineToneBurst && std::abs(w) == p->carrier;
}

}  // namespace

std::vector<PropertyReport> catalog_suite(std::optional<double> tol, const QuadratureConfig& cfg) {
  const std::vector<Signal> signals = {
      rect_pulse(1.0),        rect_pulse(2.5),           unilat_neg_exp(1.0),
      unilat_neg_exp(2.0),    bilateral_exp(),           sine_tone_burst(1.0, 3.0),
      sine_tone_burst(2.0, 5.0), damped_unilat_sine(1.0, 2.0), damped_unilat_sine(0.5, 5.0),
      gaussian(),
  };
  std::vector<PropertyReport> out;
  for (const Signal& f : signals) {
    const Spectrum F = symbolic_ft(f);
    PropertyReport r;
    r.property = "catalog";
    r.theorem = std::string(rule_name(f));
    r.signal = print_signal(f);
    r.tolerance = tol.value_or(1e-6);
    r.oracle_only = oracle_validated_only(f);
    r.notes = "closed form " + to_string(F);
    for (double w : standard_grid()) {
      if (excluded(f, w)) continue;
      r.grid.push_back(w);
      const Complex lhs = numeric_ft(f, w, cfg).value;
      const Complex rhs = spectrum_eval(F, w);
      r.add(w, lhs, rhs, mixed_residual(lhs, rhs));
    }
    r.finish();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> table2_suite(std::optional<double> tol, const QuadratureConfig& cfg) {
  const double t = tol.value_or(1e-5);
  const auto grid = standard_grid();
  std::vector<PropertyReport> out;
  auto run = [&](PropertyRule rule, const Signal& f, PropertyParams p, double rule_tol) {
    out.push_back(verify_property(rule, f, p, grid, rule_tol, cfg));
  };

  {
    PropertyParams p;
    p.a = 2.0;
    p.b = Complex{1.0, 2.0};
    p.g = bilateral_exp();
    run(PropertyRule::Linearity, rect_pulse(1.0), p, t);
    p.a = -0.5;
    p.b = 3.0;
    p.g = gaussian();
    run(PropertyRule::Linearity, unilat_neg_exp(1.0), p, t);
  }
  for (double t0 : {1.0, -1.0, 2.5}) {
    PropertyParams p;
    p.t0 = t0;
    run(PropertyRule::TimeShift, unilat_neg_exp(1.0), p, t);
    run(PropertyRule::TimeShift, rect_pulse(1.0), p, t);
  }
  for (ShiftSign sign : {ShiftSign::Plus, ShiftSign::Minus}) {
    for (double w0 : {1.0, 4.0}) {
      PropertyParams p;
      p.omega0 = w0;
      p.sign = sign;
      run(PropertyRule::FreqShift, rect_pulse(1.0), p, t);
      run(PropertyRule::FreqShift, bilateral_exp(), p, t);
    }
  }
  for (PropertyRule rule : {PropertyRule::ModCos, PropertyRule::ModSin}) {
    for (double w0 : {1.0, 4.0}) {
      PropertyParams p;
      p.omega0 = w0;
      run(rule, rect_pulse(1.0), p, t);
      run(rule, bilateral_exp(), p, t);
    }
  }
  for (double a : {0.5, 2.0, -1.0, -3.0}) {
    PropertyParams p;
    p.scale = a;
    run(PropertyRule::TimeScale, bilateral_exp(), p, t);
    run(PropertyRule::TimeScale, unilat_neg_exp(1.0), p, t);
  }
  run(PropertyRule::TimeReversal, unilat_neg_exp(1.0), {}, t);
  run(PropertyRule::TimeReversal, sine_tone_burst(1.0, 3.0), {}, t);
  for (int order : {1, 2, 3}) {
    PropertyParams p;
    p.order = order;
    run(PropertyRule::Derivative, gaussian(), p, t);
  }
  const double area_tol = tol.value_or(1e-8);
  for (const Signal& f : {bilateral_exp(), rect_pulse(3.0), unilat_neg_exp(2.0), gaussian()}) {
    run(PropertyRule::Area, f, {}, area_tol);
  }
  return out;
}

std::vector<PropertyReport> relations_suite(std::optional<double> tol,
                                            const QuadratureConfig& cfg) {
  const double t = tol.value_or(1e-6);
  const auto grid = standard_grid();
  std::vector<PropertyReport> out;
  for (const Signal& f : {rect_pulse(1.0), bilateral_exp(), gaussian()}) {
    out.push_back(check_even_relation(f, grid, t, cfg));
  }
  for (const Signal& f : {sine_tone_burst(1.0, 5.0), mod_sin(bilateral_exp(), 2.0)}) {
    out.push_back(check_odd_relation(f, grid, t, cfg));
  }
  const std::vector<double> laplace_grid = {0.5, 1.0, 3.0};
  for (const Signal& f : {unilat_neg_exp(2.0), damped_unilat_sine(1.0, 2.0)}) {
    out.push_back(check_laplace_relation(f, laplace_grid, t, cfg));
  }

  // The Laplace integral as the limit of integrals over [0, T].
  const Signal f = unilat_neg_exp(1.0);
  PropertyReport r;
  r.property = "laplace_truncation";
  r.theorem = "Alternative Representation of Laplace Transform";
  r.signal = print_signal(f);
  r.tolerance = tol.value_or(1e-8);
  r.notes = "T = 64; points are Im s with Re s = 0";
  for (double w : {0.0, 0.5, 1.0, 3.0}) {
    r.grid.push_back(w);
    const LaplacePoint s{Complex{0.0, w}};
    const Complex lhs = laplace_truncated(f, s, 64.0, cfg).value;
    const Complex rhs = numeric_laplace(f, s, cfg).value;
    r.add(w, lhs, rhs, mixed_residual(lhs, rhs));
  }
  r.finish();
  out.push_back(std::move(r));
  return out;
}

std::vector<PropertyReport> ode_suite(std::optional<double> tol, const SimConfig& cfg) {
  const double amp_tol = tol.value_or(0.01);
  const std::vector<double> omegas = {0.5, 1.0, 2.0};
  const std::vector<DiffEqSystem> systems = {
      builtin_system("bandpass", {{"wc", 1.0}}),
      builtin_system("mems", {{"K", 1.0}, {"D", 1.0}, {"M", 1.0}}),
  };
  std::vector<PropertyReport> out;
  for (const auto& sys : systems) out.push_back(cross_validate(sys, omegas, amp_tol, 0.02, cfg));

  SimConfig half = cfg;
  half.h = cfg.h / 2.0;
  for (const auto& sys : systems) {
    PropertyReport r;
    r.property = "step_convergence";
    r.theorem = "Frequency Response of n-order LTI System";
    r.signal = sys.name;
    r.tolerance = 1e-3;
    r.notes = "relative gain change when h is halved";
    for (double w : omegas) {
      r.grid.push_back(w);
      const auto coarse = steady_state_response(sys, w, cfg);
      const auto fine = steady_state_response(sys, w, half);
      r.add(w, coarse.amplitude_ratio, fine.amplitude_ratio,
            std::abs(coarse.amplitude_ratio - fine.amplitude_ratio) / fine.amplitude_ratio);
    }
    r.finish();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PropertyReport> run_suite(const std::string& name, std::optional<double> tol) {
  if (name == "catalog") return catalog_suite(tol);
  if (name == "table2") return table2_suite(tol);
  if (name == "relations") return relations_suite(tol);
  if (name == "ode") return ode_suite(tol);
  if (name == "all") {
    std::vector<PropertyReport> all;
    for (const char* part : {"catalog", "table2", "relations", "ode"}) {
      auto reports = run_suite(part, tol);
      all.insert(all.end(), reports.begin(), reports.end());
    }
    return all;
  }
  throw Error(ErrorKind::Usage,
              "unknown suite '" + name + "' (expected all, catalog, table2, relations, ode)");
}

}  // namespace fourierkit
