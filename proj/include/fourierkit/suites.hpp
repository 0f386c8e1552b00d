#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fourierkit/ode.hpp"
#include "fourierkit/quadrature.hpp"
#include "fourierkit/report.hpp"

namespace fourierkit {

/// Catalog primitives: quadrature against the closed forms on the standard
/// grid, skipping each closed form's excluded frequencies. Default tol 1e-6.
std::vector<PropertyReport> catalog_suite(std::optional<double> tol = std::nullopt,
                                          const QuadratureConfig& cfg = {});

/// Every transform property as a metamorphic check. Default tol 1e-5, and
/// 1e-8 for the area checks.
std::vector<PropertyReport> table2_suite(std::optional<double> tol = std::nullopt,
                                         const QuadratureConfig& cfg = {});

/// Even / odd / Laplace relations and the truncated Laplace limit. Default
/// tol 1e-6 (1e-8 for truncation).
std::vector<PropertyReport> relations_suite(std::optional<double> tol = std::nullopt,
                                            const QuadratureConfig& cfg = {});

/// Simulated steady state against H(w) for the bandpass and MEMS systems,
/// plus step-halving convergence. `tol` is the relative gain tolerance
/// (default 1%); phase tolerance is 0.02 rad.
std::vector<PropertyReport> ode_suite(std::optional<double> tol = std::nullopt,
                                      const SimConfig& cfg = {});

/// "all", "catalog", "table2", "relations" or "ode"; throws Error(Usage)
/// for other names.
std::vector<PropertyReport> run_suite(const std::string& name,
                                      std::optional<double> tol = std::nullopt);

}  // namespace fourierkit
