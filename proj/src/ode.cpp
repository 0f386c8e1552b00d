#include "fourierkit/ode.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"

namespace fourierkit {

void SimConfig::validate() const {
  if (!(h > 0.0)) throw Error(ErrorKind::ConstraintViolation, "step h must be > 0");
  if (settle_time && !(*settle_time > 0.0)) {
    throw Error(ErrorKind::ConstraintViolation, "settle time must be > 0");
  }
  if (measure_periods < 2) {
    throw Error(ErrorKind::ConstraintViolation, "measure_periods must be >= 2");
  }
}

InputSignal sinusoid(double omega, double amplitude) {
  return [omega, amplitude](double t, int order) {
    // d^k/dt^k sin(wt) = w^k sin(wt + k pi/2)
    return amplitude * std::pow(omega, order) *
           std::sin(omega * t + order * std::numbers::pi / 2.0);
  };
}

namespace {

PoleSet checked_poles(const DiffEqSystem& sys, double h) {
  const auto H = derive_freq_response(sys);
  PoleSet ps = poles(H);
  if (!ps.stable) {
    throw Error(ErrorKind::UnstableSystem, "system has a pole with Re >= 0; no steady state");
  }
  if (h * ps.max_modulus() > 0.1) {
    throw Error(ErrorKind::StepTooLarge,
                "h * max|pole| = " + format_number(h * ps.max_modulus()) + " exceeds 0.1");
  }
  return ps;
}

double wrap_phase(double x) {
  constexpr double kPi = std::numbers::pi;
  x = std::remainder(x, 2.0 * kPi);
  if (x <= -kPi) x += 2.0 * kPi;
  return x;
}

struct SineFit {
  double a = 0.0;  // sin coefficient
  double b = 0.0;  // cos coefficient
};

SineFit fit(const Trajectory& traj, double omega, std::size_t first, std::size_t last) {
  double ss = 0.0, sc = 0.0, cc = 0.0, ys = 0.0, yc = 0.0;
  for (std::size_t k = first; k <= last; ++k) {
    const double t = traj.h * static_cast<double>(k);
    const double s = std::sin(omega * t);
    const double c = std::cos(omega * t);
    ss += s * s;
    sc += s * c;
    cc += c * c;
    ys += traj.y[k] * s;
    yc += traj.y[k] * c;
  }
  const double det = ss * cc - sc * sc;
  return SineFit{(ys * cc - yc * sc) / det, (yc * ss - ys * sc) / det};
}

}  // namespace

Trajectory simulate_lti(const DiffEqSystem& sys, const InputSignal& input, double t_end,
                        const SimConfig& cfg) {
  cfg.validate();
  sys.validate();
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw Error(ErrorKind::ConstraintViolation, "t_end must be finite and >= 0");
  }
  checked_poles(sys, cfg.h);

  const auto& beta = sys.out_coeffs;
  const auto& alpha = sys.in_coeffs;
  const auto forcing = [&](double t) {
    double r = 0.0;
    for (std::size_t k = 0; k < alpha.size(); ++k) {
      if (alpha[k] != 0.0) r += alpha[k] * input(t, static_cast<int>(k));
    }
    return r;
  };

  Trajectory traj;
  traj.h = cfg.h;
  const auto steps = static_cast<std::size_t>(std::llround(t_end / cfg.h));
  traj.y.reserve(steps + 1);

  const std::size_t n = beta.size() - 1;
  if (n == 0) {
    for (std::size_t k = 0; k <= steps; ++k) {
      traj.y.push_back(forcing(cfg.h * static_cast<double>(k)) / beta[0]);
    }
    return traj;
  }

  // z = (y, y', ..., y^(n-1))
  std::vector<double> z(n, 0.0), k1(n), k2(n), k3(n), k4(n), tmp(n);
  const auto deriv = [&](double t, const std::vector<double>& s, std::vector<double>& out) {
    double top = forcing(t);
    for (std::size_t i = 0; i < n; ++i) top -= beta[i] * s[i];
    for (std::size_t i = 0; i + 1 < n; ++i) out[i] = s[i + 1];
    out[n - 1] = top / beta[n];
  };

  const double h = cfg.h;
  traj.y.push_back(0.0);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = h * static_cast<double>(k);
    deriv(t, z, k1);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * h * k1[i];
    deriv(t + 0.5 * h, tmp, k2);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + 0.5 * h * k2[i];
    deriv(t + 0.5 * h, tmp, k3);
    for (std::size_t i = 0; i < n; ++i) tmp[i] = z[i] + h * k3[i];
    deriv(t + h, tmp, k4);
    for (std::size_t i = 0; i < n; ++i) {
      z[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    // The output is y itself; feedthrough only arises when m = n, where the
    // forcing already carries alpha_n x^(n).
    traj.y.push_back(z[0]);
  }
  return traj;
}

double settle_time_for(const DiffEqSystem& sys, const SimConfig& cfg) {
  if (cfg.settle_time) return *cfg.settle_time;
  const PoleSet ps = checked_poles(sys, cfg.h);
  if (ps.poles.empty()) return cfg.h;
  return 20.0 / ps.slowest_decay();
}

SteadyStateMeasurement measure_steady_state(const Trajectory& traj, double omega,
                                            const SimConfig& cfg) {
  cfg.validate();
  if (!(omega > 0.0)) throw Error(ErrorKind::ConstraintViolation, "drive frequency must be > 0");
  if (!cfg.settle_time) {
    throw Error(ErrorKind::ConstraintViolation, "measure_steady_state needs a settle time");
  }
  const double period = 2.0 * std::numbers::pi / omega;
  const double start = *cfg.settle_time;
  const double stop = start + cfg.measure_periods * period;
  if (traj.y.empty() || traj.t_end() < stop - 0.5 * traj.h) {
    throw Error(ErrorKind::ConstraintViolation,
                "trajectory ends at " + format_number(traj.t_end()) + " s, window needs " +
                    format_number(stop) + " s");
  }
  const auto index = [&](double t) {
    return std::min(traj.y.size() - 1, static_cast<std::size_t>(std::llround(t / traj.h)));
  };
  const std::size_t first = index(start);
  const std::size_t last = index(stop);
  const std::size_t mid = index(start + (cfg.measure_periods / 2) * period);

  const SineFit whole = fit(traj, omega, first, last);
  const SineFit early = fit(traj, omega, first, mid);
  const SineFit late = fit(traj, omega, mid, last);

  SteadyStateMeasurement m;
  m.amplitude_ratio = std::hypot(whole.a, whole.b);
  // a sin(wt) + b cos(wt) = A sin(wt + phi)
  m.phase = wrap_phase(std::atan2(whole.b, whole.a));
  const double drift = std::hypot(early.a - late.a, early.b - late.b);
  m.non_periodicity = m.amplitude_ratio > 0.0 ? drift / m.amplitude_ratio : drift;
  if (m.non_periodicity > 0.01) {
    throw Error(ErrorKind::NotSettled,
                "response not periodic over the measure window (drift " +
                    format_number(m.non_periodicity) + " of amplitude)");
  }
  return m;
}

SteadyStateMeasurement steady_state_response(const DiffEqSystem& sys, double omega,
                                             const SimConfig& cfg) {
  SimConfig resolved = cfg;
  resolved.settle_time = settle_time_for(sys, cfg);
  const double t_end =
      *resolved.settle_time + cfg.measure_periods * 2.0 * std::numbers::pi / omega + cfg.h;
  const Trajectory traj = simulate_lti(sys, sinusoid(omega), t_end, resolved);
  return measure_steady_state(traj, omega, resolved);
}

PropertyReport cross_validate(const DiffEqSystem& sys, const std::vector<double>& omegas,
                              double amplitude_tol, double phase_tol, const SimConfig& cfg) {
  const auto H = derive_freq_response(sys);
  PropertyReport r;
  r.property = "ode_cross_validation";
  r.theorem = "Frequency Response of n-order LTI System";
  r.signal = sys.name;
  r.grid = omegas;
  r.tolerance = 1.0;
  r.notes = "residual = max(gain error / " + format_number(amplitude_tol) + ", phase error / " +
            format_number(phase_tol) + " rad)";
  for (double w : omegas) {
    const Complex expected = eval_freq_response(H, w);
    const auto m = steady_state_response(sys, w, cfg);
    const Complex measured = std::polar(m.amplitude_ratio, m.phase);
    const double gain = std::abs(expected);
    const double gain_err =
        gain > 0.0 ? std::abs(m.amplitude_ratio - gain) / gain : m.amplitude_ratio;
    const double phase_err = gain > 0.0 ? std::abs(wrap_phase(m.phase - std::arg(expected))) : 0.0;
    r.add(w, measured, expected, std::max(gain_err / amplitude_tol, phase_err / phase_tol));
  }
  r.finish();
  return r;
}

}  // namespace fourierkit
