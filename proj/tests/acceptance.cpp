// Acceptance run: one PASS/FAIL line per criterion at the pinned tolerances.

#include <chrono>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fourierkit/cli.hpp"
#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "fourierkit/lti.hpp"
#include "fourierkit/numeric_ft.hpp"
#include "fourierkit/quadrature.hpp"
#include "fourierkit/signal.hpp"
#include "fourierkit/suites.hpp"

using namespace fourierkit;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = true;
  std::vector<std::string> failures;
  std::string summary;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      failures.push_back(what);
    }
  }
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void check_reports(Outcome& o, const std::vector<PropertyReport>& reports) {
  double worst = 0.0;
  for (const auto& r : reports) {
    if (!r.passed) {
      o.require(false, r.property + " on " + r.signal + ": residual " + fmt(r.max_residual) + " > " +
                           fmt(r.tolerance));
    }
    worst = std::max(worst, r.max_residual / (r.tolerance > 0.0 ? r.tolerance : 1.0));
  }
  o.summary = std::to_string(reports.size()) + " reports, worst residual/tol " + fmt(worst);
}

void check_runtime(Outcome& o, Clock::time_point start, double limit_s) {
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(elapsed <= limit_s, "runtime " + fmt(elapsed) + " s exceeds " + fmt(limit_s) + " s");
  o.summary += ", " + fmt(elapsed) + " s";
}

Outcome catalog_soundness() {
  Outcome o;
  const auto start = Clock::now();
  check_reports(o, catalog_suite());
  check_runtime(o, start, 60.0);
  return o;
}

Outcome transform_properties() {
  Outcome o;
  const auto start = Clock::now();
  const auto reports = table2_suite();
  check_reports(o, reports);
  bool bilateral_area = false;
  for (const auto& r : reports) {
    if (r.property == "area" && r.signal == "bilateral_exp()") {
      bilateral_area = r.passed && r.tolerance <= 1e-8 && std::abs(r.points.at(0).rhs - 2.0) <= 1e-8;
    } else if (r.property != "area") {
      o.require(r.tolerance <= 1e-5, r.property + " ran at tol " + fmt(r.tolerance));
    }
  }
  o.require(bilateral_area, "area of bilateral_exp is not 2 within 1e-8");
  check_runtime(o, start, 300.0);
  return o;
}

Outcome relations() {
  Outcome o;
  const auto reports = relations_suite();
  check_reports(o, reports);
  for (const auto& r : reports) {
    const double pinned = r.property == "laplace_truncation" ? 1e-8 : 1e-6;
    o.require(r.tolerance <= pinned, r.property + " ran at tol " + fmt(r.tolerance));
  }
  return o;
}

Outcome lti_algebra() {
  Outcome o;
  for (double wc : {0.5, 1.0, 10.0}) {
    const auto H = derive_freq_response(builtin_system("bandpass", {{"wc", wc}}));
    o.require(eval_freq_response(H, wc) == Complex(0.5, 0.0), "bandpass H(wc) != 1/2 at wc=" + fmt(wc));
  }
  const std::vector<std::array<double, 3>> triples = {{1, 1, 1}, {4, 0.5, 2}, {0.2, 3, 7}};
  for (const auto& [K, D, M] : triples) {
    const auto H = derive_freq_response(builtin_system("mems", {{"K", K}, {"D", D}, {"M", M}}));
    o.require(std::abs(eval_freq_response(H, 0.0) - M / K) <= 1e-15 * (M / K),
              "mems H(0) != M/K for K=" + fmt(K));
  }
  double worst = 0.0;
  for (double wc : {0.5, 1.0, 10.0}) {
    const auto H = derive_freq_response(builtin_system("bandpass", {{"wc", wc}}));
    for (double w : parse_omega_spec("0:0.1:10")) {
      worst = std::max(worst, std::abs(bandpass_factored(wc, w) - eval_freq_response(H, w)));
    }
  }
  o.require(worst <= 1e-12, "factored vs expanded bandpass differ by " + fmt(worst));
  bool rejected = false;
  try {
    DiffEqSystem improper;
    improper.out_coeffs = {1.0};
    improper.in_coeffs = {1.0, 1.0};
    derive_freq_response(improper);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::InvalidSystem;
  }
  o.require(rejected, "m > n system was not rejected");
  o.summary = "factored/expanded max difference " + fmt(worst);
  return o;
}

Outcome ode() {
  Outcome o;
  const auto start = Clock::now();
  check_reports(o, ode_suite());
  check_runtime(o, start, 120.0);
  return o;
}

Outcome existence_gating() {
  Outcome o;
  for (double T1 : {0.5, 1.0, 2.5}) {
    const double l1 = abs_integrability_check(rect_pulse(T1));
    o.require(std::abs(l1 - 2.0 * T1) <= 1e-8, "rect(" + fmt(T1) + ") L1 = " + fmt(l1));
  }
  const double bilateral = abs_integrability_check(bilateral_exp());
  o.require(std::abs(bilateral - 2.0) <= 1e-8, "bilateral_exp L1 = " + fmt(bilateral));
  bool no_convergence = false;
  try {
    Integrand constant;
    constant.fn = [](double) { return Complex(1.0, 0.0); };
    improper_integral(constant);
  } catch (const Error& e) {
    no_convergence = e.kind() == ErrorKind::NoConvergence;
  }
  o.require(no_convergence, "constant function did not raise NoConvergence");
  bool rejected = false;
  try {
    derivative(rect_pulse(1.0), 1);
  } catch (const Error& e) {
    rejected = e.kind() == ErrorKind::ConstraintViolation;
  }
  o.require(rejected, "derivative of rect was accepted");
  return o;
}

Outcome cli_contract() {
  Outcome o;
  auto run = [](const std::vector<std::string>& args, std::string& out) {
    std::ostringstream os, es;
    const int code = run_command(args, os, es);
    out = os.str();
    return code;
  };
  std::string out;

  int code = run({"ft", "--signal", "rect(1)", "--omega", "3.14159"}, out);
  o.require(code == kExitPass, "ft exit " + std::to_string(code));
  if (code == kExitPass) {
    const auto row = json::parse(out)["results"][0];
    const double sym = row["symbolic"]["re"];
    const double num = row["numeric"]["re"];
    o.require(std::abs(sym - 2.0 * std::sin(3.14159) / 3.14159) <= 1e-12, "ft symbolic value");
    o.require(std::abs(num - sym) <= 1e-6 && row["agree"].get<bool>(), "ft numeric disagrees");
  }

  code = run({"freqresp", "--system", "builtin:mems(K=1,D=1,M=1)", "--omega", "0:0.1:10", "--out", "csv"}, out);
  o.require(code == kExitPass, "freqresp exit " + std::to_string(code));
  o.require(out.rfind("# stable=true\n", 0) == 0, "freqresp csv lacks stable=true");
  o.require(out.find("omega,re,im,magnitude,phase\n") != std::string::npos, "freqresp csv header");

  code = run({"verify", "--suite", "table2"}, out);
  o.require(code == kExitPass, "verify table2 exit " + std::to_string(code));

  std::ifstream in(FOURIERKIT_TEST_DATA "/dsl_corpus.txt");
  int total = 0;
  int round_trips = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    ++total;
    try {
      const Signal f = parse_signal_dsl(line);
      if (structurally_equal(parse_signal_dsl(print_signal(f)), f)) ++round_trips;
      else o.require(false, "round trip: " + line);
    } catch (const Error& e) {
      o.require(false, "corpus entry '" + line + "': " + e.what());
    }
  }
  o.require(total == 50, "corpus has " + std::to_string(total) + " entries");
  o.summary = std::to_string(round_trips) + "/" + std::to_string(total) + " round trips";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"catalog soundness", catalog_soundness},
      {"transform properties", transform_properties},
      {"even/odd/Laplace relations", relations},
      {"LTI algebra", lti_algebra},
      {"ODE cross-validation", ode},
      {"existence gating", existence_gating},
      {"CLI contract", cli_contract},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("unexpected error: ") + e.what());
    }
    std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
    std::cout << "\n";
    for (const auto& f : o.failures) std::cout << "       " << f << "\n";
    if (!o.passed) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
