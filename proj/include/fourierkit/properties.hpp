#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "fourierkit/quadrature.hpp"
#include "fourierkit/report.hpp"
#include "fourierkit/signal.hpp"

namespace fourierkit {

enum class PropertyRule {
  Linearity,
  TimeShift,
  FreqShift,
  ModCos,
  ModSin,
  TimeScale,
  TimeReversal,
  Derivative,
  Area,
};

std::string_view to_string(PropertyRule rule);
/// Accepts the names printed by to_string; throws Error(Usage) otherwise.
PropertyRule property_rule_from_string(std::string_view name);

/// Parameters of the transformation; each rule reads only its own fields.
struct PropertyParams {
  Complex a{1.0, 0.0};          // Linearity coefficient of f
  Complex b{1.0, 0.0};          // Linearity coefficient of g
  std::optional<Signal> g;      // Linearity second signal (defaults to f)
  double t0 = 0.0;              // TimeShift
  double omega0 = 0.0;          // FreqShift / ModCos / ModSin
  ShiftSign sign = ShiftSign::Plus;
  double scale = 1.0;           // TimeScale
  int order = 1;                // Derivative
};

/// Metamorphic check: the numeric transform of the transformed signal is
/// compared with the property applied to the numeric transform of f. For
/// Area, the numeric integral of f is compared with the closed form at 0 and
/// the grid is ignored.
PropertyReport verify_property(PropertyRule rule, const Signal& f, const PropertyParams& params,
                               const std::vector<double>& grid, double tol,
                               const QuadratureConfig& cfg = {});

}  // namespace fourierkit
