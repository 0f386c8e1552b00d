#include "fourierkit/report_json.hpp"

namespace fourierkit {

namespace {

// JSON has no infinities; report them as strings instead of null.
nlohmann::ordered_json number_json(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

}  // namespace

nlohmann::ordered_json complex_json(Complex v) {
  return {{"re", number_json(v.real())}, {"im", number_json(v.imag())}};
}

nlohmann::ordered_json report_json(const PropertyReport& r) {
  nlohmann::ordered_json j;
  j["property"] = r.property;
  j["theorem"] = r.theorem;
  j["signal"] = r.signal;
  j["grid"] = r.grid;
  auto points = nlohmann::ordered_json::array();
  for (const auto& p : r.points) {
    points.push_back({{"omega", p.omega},
                      {"lhs", complex_json(p.lhs)},
                      {"rhs", complex_json(p.rhs)},
                      {"residual", number_json(p.residual)}});
  }
  j["points"] = std::move(points);
  j["max_residual"] = number_json(r.max_residual);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  if (r.oracle_only) j["oracle_validated_only"] = true;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

nlohmann::ordered_json error_json(const Error& e) {
  nlohmann::ordered_json j;
  j["kind"] = std::string(to_string(e.kind()));
  j["message"] = e.what();
  if (e.span()) {
    j["line"] = e.span()->line;
    j["column"] = e.span()->column;
  }
  return j;
}

}  // namespace fourierkit
