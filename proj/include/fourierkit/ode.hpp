#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fourierkit/lti.hpp"
#include "fourierkit/report.hpp"

namespace fourierkit {

struct SimConfig {
  double h = 1e-3;                    // RK4 step [s]
  std::optional<double> settle_time;  // default 20 / |slowest pole real part|
  int measure_periods = 8;

  /// Throws Error(ConstraintViolation) unless h > 0, settle_time > 0 when
  /// set, and measure_periods >= 2.
  void validate() const;
};

/// x^(order)(t) for the drive signal.
using InputSignal = std::function<double(double t, int order)>;

/// amplitude * sin(omega t) with exact derivatives.
InputSignal sinusoid(double omega, double amplitude = 1.0);

struct Trajectory {
  double h = 0.0;
  std::vector<double> y;  // y[k] = y(k h)

  double t_end() const { return y.empty() ? 0.0 : h * static_cast<double>(y.size() - 1); }
};

/// Integrates the system from rest with classic fourth-order Runge-Kutta in
/// controllable companion form. The input derivatives enter through the
/// forcing sum alpha_k x^(k)(t), so the input is never differentiated
/// numerically. Throws Error(UnstableSystem) if a pole has Re >= 0 and
/// Error(StepTooLarge) if h * max|pole| > 0.1.
Trajectory simulate_lti(const DiffEqSystem& sys, const InputSignal& input, double t_end,
                        const SimConfig& cfg = {});

struct SteadyStateMeasurement {
  double amplitude_ratio = 0.0;
  double phase = 0.0;             // radians in (-pi, pi], relative to the drive
  double non_periodicity = 0.0;   // relative disagreement between window halves
};

/// Least-squares fit of a sin(wt) + b cos(wt) over measure_periods periods
/// starting at the settle time, for a unit-amplitude sine drive. Throws
/// Error(NotSettled) when the two halves of the window disagree by more than
/// 1% of the amplitude.
SteadyStateMeasurement measure_steady_state(const Trajectory& traj, double omega,
                                            const SimConfig& cfg);

/// Settle time the simulation uses for sys under cfg.
double settle_time_for(const DiffEqSystem& sys, const SimConfig& cfg);

/// Simulates the unit sine drive at omega and measures the steady state.
SteadyStateMeasurement steady_state_response(const DiffEqSystem& sys, double omega,
                                             const SimConfig& cfg = {});

/// Measured gain and phase against H(w) at each frequency. Each residual is
/// max(relative gain error / amplitude_tol, |phase error| / phase_tol), so
/// the report passes iff every residual is <= 1.
PropertyReport cross_validate(const DiffEqSystem& sys, const std::vector<double>& omegas,
                              double amplitude_tol = 0.01, double phase_tol = 0.02,
                              const SimConfig& cfg = {});

}  // namespace fourierkit
