#include "fourierkit/cli.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fourierkit/dsl.hpp"
#include "fourierkit/error.hpp"
#include "fourierkit/format.hpp"
#include "fourierkit/lti.hpp"
#include "fourierkit/numeric_ft.hpp"
#include "fourierkit/report_json.hpp"
#include "fourierkit/suites.hpp"
#include "fourierkit/symbolic_ft.hpp"

namespace fourierkit {

using Json = nlohmann::ordered_json;

namespace {

double parse_double(const std::string& text) {
  const char* begin = text.data();
  const char* end = text.data() + text.size();
  if (begin != end && *begin == '+') ++begin;
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc{} || ptr != end || begin == end || !std::isfinite(v)) {
    throw Error(ErrorKind::Usage, "not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    const auto first = cur.find_first_not_of(" \t");
    const auto last = cur.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? "" : cur.substr(first, last - first + 1));
  }
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::RootFindingFailure:
    case ErrorKind::NotSettled:
    case ErrorKind::StepTooLarge:
    case ErrorKind::UnstableSystem:
      return kExitNumerical;
    case ErrorKind::ExcludedPoint:
      return kExitCheckFailed;
    default:
      return kExitUsage;
  }
}

Json document(const std::string& command, Json config) {
  Json doc;
  doc["command"] = command;
  doc["config"] = std::move(config);
  doc["results"] = Json::array();
  doc["errors"] = Json::array();
  return doc;
}

struct Output {
  std::string format = "json";
};

void write_csv_row(std::ostream& out, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out << ',';
    const std::string& c = cells[i];
    if (c.find_first_of(",\"\n") != std::string::npos) {
      out << '"';
      for (char ch : c) {
        if (ch == '"') out << '"';
        out << ch;
      }
      out << '"';
    } else {
      out << c;
    }
  }
  out << '\n';
}

std::string num(double v) { return format_number(v); }

Json quadrature_config_json(const QuadratureConfig& q) {
  return {{"rel_tol", q.rel_tol},
          {"abs_tol", q.abs_tol},
          {"initial_half_width", q.initial_half_width},
          {"max_half_width", q.max_half_width},
          {"max_subdivisions", q.max_subdivisions}};
}

struct FtOptions {
  std::string signal;
  std::string omega;
  bool symbolic_only = false;
  bool numeric = false;
  double tol = 1e-6;
};

int run_ft(const FtOptions& opt, const Output& fmt, std::ostream& out) {
  const Signal f = parse_signal_dsl(opt.signal);
  const auto omegas = parse_omega_spec(opt.omega);
  const Spectrum F = symbolic_ft(f);
  const QuadratureConfig qcfg;
  const bool with_numeric = !opt.symbolic_only;

  Json config{{"signal", print_signal(f)},
              {"omega", omegas},
              {"numeric", with_numeric},
              {"tol", opt.tol},
              {"spectrum", to_string(F)},
              {"theorem", std::string(rule_name(f))}};
  if (oracle_validated_only(f)) config["oracle_validated_only"] = true;
  if (with_numeric) config["quadrature"] = quadrature_config_json(qcfg);
  Json doc = document("ft", std::move(config));

  bool ok = true;
  std::vector<std::vector<std::string>> rows;
  for (double w : omegas) {
    Json row{{"omega", w}};
    std::vector<std::string> cells{num(w)};
    std::optional<Complex> sym;
    try {
      sym = spectrum_eval(F, w);
      row["symbolic"] = complex_json(*sym);
      cells.push_back(num(sym->real()));
      cells.push_back(num(sym->imag()));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExcludedPoint) throw;
      ok = false;
      row["symbolic"] = nullptr;
      doc["errors"].push_back(error_json(e));
      cells.insert(cells.end(), {"", ""});
    }
    if (with_numeric) {
      const auto q = numeric_ft(f, w, qcfg);
      row["numeric"] = complex_json(q.value);
      row["error_estimate"] = q.total_error();
      cells.push_back(num(q.value.real()));
      cells.push_back(num(q.value.imag()));
      cells.push_back(num(q.total_error()));
      if (sym) {
        const double res = mixed_residual(q.value, *sym);
        const bool agree = res <= opt.tol;
        ok = ok && agree;
        row["residual"] = res;
        row["agree"] = agree;
        cells.push_back(num(res));
        cells.push_back(agree ? "true" : "false");
      } else {
        cells.insert(cells.end(), {"", ""});
      }
    }
    doc["results"].push_back(std::move(row));
    rows.push_back(std::move(cells));
  }

  if (fmt.format == "csv") {
    std::vector<std::string> header{"omega", "symbolic_re", "symbolic_im"};
    if (with_numeric) {
      header.insert(header.end(), {"numeric_re", "numeric_im", "error_estimate", "residual", "agree"});
    }
    write_csv_row(out, header);
    for (const auto& r : rows) write_csv_row(out, r);
  } else {
    out << doc.dump(2) << '\n';
  }
  return ok ? kExitPass : kExitCheckFailed;
}

int run_freqresp(const std::string& system, const std::string& omega, const Output& fmt,
                 std::ostream& out) {
  const DiffEqSystem sys = parse_system_spec(system);
  const auto omegas = parse_omega_spec(omega);
  const RationalResponse H = derive_freq_response(sys);
  const PoleSet ps = poles(H);

  Json config{{"system", system},
              {"out", sys.out_coeffs},
              {"in", sys.in_coeffs},
              {"omega", omegas},
              {"theorem", "Frequency Response of n-order LTI System"}};
  Json doc = document("freqresp", std::move(config));
  Json pole_list = Json::array();
  for (const auto& p : ps.poles) {
    pole_list.push_back({{"value", complex_json(p.value)}, {"multiplicity", p.multiplicity}});
  }
  doc["analysis"] = {{"poles", pole_list}, {"stable", ps.stable}};

  bool ok = true;
  std::vector<std::vector<std::string>> rows;
  for (double w : omegas) {
    try {
      const Complex h = eval_freq_response(H, w);
      doc["results"].push_back({{"omega", w},
                                {"H", complex_json(h)},
                                {"magnitude", std::abs(h)},
                                {"phase", std::arg(h)}});
      rows.push_back({num(w), num(h.real()), num(h.imag()), num(std::abs(h)), num(std::arg(h))});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ExcludedPoint) throw;
      ok = false;
      doc["results"].push_back({{"omega", w}, {"H", nullptr}});
      doc["errors"].push_back(error_json(e));
      rows.push_back({num(w), "", "", "", ""});
    }
  }

  if (fmt.format == "csv") {
    out << "# stable=" << (ps.stable ? "true" : "false") << '\n';
    for (const auto& p : ps.poles) {
      out << "# pole=" << format_complex(p.value) << " multiplicity=" << p.multiplicity << '\n';
    }
    write_csv_row(out, {"omega", "re", "im", "magnitude", "phase"});
    for (const auto& r : rows) write_csv_row(out, r);
  } else {
    out << doc.dump(2) << '\n';
  }
  return ok ? kExitPass : kExitCheckFailed;
}

int run_verify(const std::string& suite, std::optional<double> tol, const Output& fmt,
               std::ostream& out) {
  Json config{{"suite", suite}};
  config["tol"] = tol ? Json(*tol) : Json(nullptr);
  Json doc = document("verify", std::move(config));
  const auto reports = run_suite(suite, tol);
  bool ok = true;
  for (const auto& r : reports) {
    ok = ok && r.passed;
    doc["results"].push_back(report_json(r));
  }
  if (fmt.format == "csv") {
    write_csv_row(out, {"property", "theorem", "signal", "max_residual", "tolerance", "passed"});
    for (const auto& r : reports) {
      write_csv_row(out, {r.property, r.theorem, r.signal, num(r.max_residual), num(r.tolerance),
                          r.passed ? "true" : "false"});
    }
  } else {
    out << doc.dump(2) << '\n';
  }
  return ok ? kExitPass : kExitCheckFailed;
}

struct CatalogEntry {
  PrimitiveKind kind;
  const char* dsl;
  const char* parameters;
  const char* definition;
};

int run_catalog(const Output& fmt, std::ostream& out) {
  const CatalogEntry entries[] = {
      {PrimitiveKind::RectPulse, "rect(T1)", "T1 > 0", "1 for |t| <= T1, else 0"},
      {PrimitiveKind::UnilatNegExp, "unilat_exp(c)", "c > 0", "e^(-c t) for t >= 0, else 0"},
      {PrimitiveKind::BilateralExp, "bilateral_exp()", "", "e^(-|t|)"},
      {PrimitiveKind::SineToneBurst, "sine_burst(T1, w0)", "T1 > 0",
       "sin(w0 t) for |t| <= T1, else 0"},
      {PrimitiveKind::DampedUnilatSine, "damped_sine(c, w0)", "c > 0",
       "e^(-c t) sin(w0 t) for t >= 0, else 0"},
      {PrimitiveKind::Gaussian, "gauss()", "", "e^(-t^2)"},
  };
  Json doc = document("catalog", Json::object());
  for (const auto& e : entries) {
    doc["results"].push_back({{"name", std::string(to_string(e.kind))},
                              {"dsl", e.dsl},
                              {"parameters", e.parameters},
                              {"definition", e.definition},
                              {"closed_form", std::string(closed_form_text(e.kind))},
                              {"theorem", std::string(theorem_name(e.kind))}});
  }
  if (fmt.format == "csv") {
    write_csv_row(out, {"name", "dsl", "parameters", "definition", "closed_form", "theorem"});
    for (const auto& e : entries) {
      write_csv_row(out, {std::string(to_string(e.kind)), e.dsl, e.parameters, e.definition,
                          std::string(closed_form_text(e.kind)), std::string(theorem_name(e.kind))});
    }
  } else {
    out << doc.dump(2) << '\n';
  }
  return kExitPass;
}

}  // namespace

std::vector<double> parse_omega_spec(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw Error(ErrorKind::Usage, "range must be start:step:stop");
    const double start = parse_double(parts[0]);
    const double step = parse_double(parts[1]);
    const double stop = parse_double(parts[2]);
    if (step == 0.0 || (stop - start) * step < 0.0) {
      throw Error(ErrorKind::Usage, "step must be nonzero and point from start towards stop");
    }
    const double count = std::floor((stop - start) / step + 0.5);
    if (count > 1e7) throw Error(ErrorKind::Usage, "range has too many points");
    std::vector<double> out;
    for (long k = 0; k <= static_cast<long>(count); ++k) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.12g", start + static_cast<double>(k) * step);
      out.push_back(std::strtod(buf, nullptr));
    }
    return out;
  }
  std::vector<double> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_double(part));
  if (out.empty()) throw Error(ErrorKind::Usage, "empty omega list");
  return out;
}

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fourier transforms, frequency responses and their numerical cross-checks",
               "fourierkit"};
  app.require_subcommand(1);
  Output fmt;
  const auto add_out = [&fmt](CLI::App* sub) {
    sub->add_option("--out", fmt.format, "Report format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  FtOptions ft;
  auto* ft_cmd = app.add_subcommand("ft", "Closed-form spectrum of a signal, with the quadrature oracle");
  ft_cmd->add_option("--signal", ft.signal, "Signal expression")->required();
  ft_cmd->add_option("--omega", ft.omega, "Frequencies: list or start:step:stop")->required();
  ft_cmd->add_flag("--numeric", ft.numeric, "Include the quadrature column (default)");
  ft_cmd->add_flag("--symbolic-only", ft.symbolic_only, "Skip the quadrature column");
  ft_cmd->add_option("--tol", ft.tol, "Agreement tolerance")->capture_default_str();
  add_out(ft_cmd);

  std::string system;
  std::string fr_omega;
  auto* fr_cmd = app.add_subcommand("freqresp", "Frequency response sweep, poles and stability");
  fr_cmd->add_option("--system", system, "builtin:name(k=v,...) or out=[..]; in=[..]")->required();
  fr_cmd->add_option("--omega", fr_omega, "Frequencies: list or start:step:stop")->required();
  add_out(fr_cmd);

  std::string suite;
  std::optional<double> tol;
  auto* verify_cmd = app.add_subcommand("verify", "Run property suites");
  verify_cmd->add_option("--suite", suite, "all, table2, relations, catalog or ode")
      ->required()
      ->check(CLI::IsMember({"all", "table2", "relations", "catalog", "ode"}));
  verify_cmd->add_option("--tol", tol, "Override the suite tolerance");
  add_out(verify_cmd);

  auto* catalog_cmd = app.add_subcommand("catalog", "List the catalog primitives");
  add_out(catalog_cmd);

  const auto fail = [&](const Error& e, const std::string& command) {
    Json doc = document(command, Json::object());
    doc["errors"].push_back(error_json(e));
    out << doc.dump(2) << '\n';
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    return fail(Error(ErrorKind::Usage, e.what()), args.empty() ? "" : args.front());
  }

  std::string command;
  try {
    if (ft_cmd->parsed()) {
      command = "ft";
      if (ft.numeric && ft.symbolic_only) {
        throw Error(ErrorKind::Usage, "--numeric and --symbolic-only are exclusive");
      }
      return run_ft(ft, fmt, out);
    }
    if (fr_cmd->parsed()) {
      command = "freqresp";
      return run_freqresp(system, fr_omega, fmt, out);
    }
    if (verify_cmd->parsed()) {
      command = "verify";
      return run_verify(suite, tol, fmt, out);
    }
    command = "catalog";
    return run_catalog(fmt, out);
  } catch (const Error& e) {
    return fail(e, command);
  }
}

}  // namespace fourierkit
