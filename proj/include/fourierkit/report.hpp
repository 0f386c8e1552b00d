#pragma once

#include <complex>
#include <string>
#include <vector>

namespace fourierkit {

using Complex = std::complex<double>;

struct PropertyPoint {
  double omega = 0.0;
  Complex lhs;
  Complex rhs;
  double residual = 0.0;
};

/// Outcome of checking one identity on a grid of frequencies.
struct PropertyReport {
  std::string property;  // e.g. "time_shift"
  std::string theorem;   // the named result the check instantiates
  std::string signal;    // DSL text or system description
  std::vector<double> grid;
  std::vector<PropertyPoint> points;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool oracle_only = false;
  std::string notes;

  /// Appends a point and updates max_residual / passed.
  void add(double omega, Complex lhs, Complex rhs, double residual);
  void finish();
};

/// |lhs - rhs| / (1 + |rhs|): relative for large values, absolute near zero.
double mixed_residual(Complex lhs, Complex rhs);

/// {±0.1, ±0.5, ±1, ±2, ±5, ±10}, ascending.
std::vector<double> standard_grid();

}  // namespace fourierkit
