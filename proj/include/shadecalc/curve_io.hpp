#pragma once

#include <string>

#include "shadecalc/curve.hpp"
#include "json.hpp"

namespace shadecalc {

/// Parses a curve file. Throws ParseError with field context for malformed
/// input and, when check is set, for a model that fails validate().
CurveModel parse_curve(const std::string& text, bool check = true);
CurveModel load_curve(const std::string& path, bool check = true);

/// Canonical JSON form; parse_curve(curve_json(m).dump()) reproduces m.
nlohmann::json curve_json(const CurveModel& curve);

}  // namespace shadecalc
