#pragma once

#include <vector>

#include <json.hpp>

#include "fourierkit/error.hpp"
#include "fourierkit/report.hpp"

namespace fourierkit {

/// {"re": .., "im": ..}
nlohmann::ordered_json complex_json(Complex v);

nlohmann::ordered_json report_json(const PropertyReport& r);

/// {"kind": .., "message": .., "line": .., "column": ..}; the position is
/// present only for errors raised while parsing.
nlohmann::ordered_json error_json(const Error& e);

}  // namespace fourierkit
