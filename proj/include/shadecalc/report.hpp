#pragma once

#include <string>
#include <vector>

#include "shadecalc/curve.hpp"
#include "shadecalc/invariants.hpp"
#include "json.hpp"

namespace shadecalc {

inline constexpr int kSchemaVersion = 1;

nlohmann::json invariant_json(const CurveModel& curve, const InvariantReport& rep);
nlohmann::json sweep_json(const SweepReport& rep);
nlohmann::json validation_json(const ValidationReport& rep);
nlohmann::json diagram_json(const CurveModel& curve, const Diagram& d);

struct ReportEnvelope {
  std::string command;
  /// Flags as given on the command line, already normalized to strings.
  nlohmann::json invocation = nlohmann::json::object();
  nlohmann::json result;
  std::vector<std::string> diagnostics;
  /// Set when the command failed; result is null then.
  std::string error_type;
  std::string error_message;
};

enum class ReportFormat { json, text };

/// Canonical bytes: sorted keys, two-space indent, trailing newline.
std::string emit_report(const ReportEnvelope& env, ReportFormat format);

}  // namespace shadecalc
