#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fourierkit {

/// Exit statuses of run_command.
enum ExitCode : int {
  kExitPass = 0,
  kExitCheckFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Commands:
///
///   ft --signal <dsl> --omega <list|start:step:stop> [--symbolic-only] [--tol t] [--out json|csv]
///   freqresp --system <spec> --omega <list|start:step:stop> [--out json|csv]
///   verify --suite <all|table2|relations|catalog|ode> [--tol t] [--out json|csv]
///   catalog [--out json|csv]
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "1,2,3", "0.5" or "start:step:stop" (stop included when within half a
/// step). Throws Error(Usage) on malformed input.
std::vector<double> parse_omega_spec(const std::string& text);

}  // namespace fourierkit
