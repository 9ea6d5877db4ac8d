#pragma once

// Serialization of decomposition reports. The JSON key order is fixed so
// that reports can be diffed.

#include <optional>
#include <string>

#include <json.hpp>

#include "motivic/motives.hpp"

namespace motive {

struct ReportDocument {
  motivic::DecompositionReport report;
  /// Wall time of the computation; 0 when timing is suppressed.
  double elapsed_ms = 0;
};

nlohmann::ordered_json to_json(const ReportDocument& doc);
/// Inverse of to_json; throws nlohmann::json::exception or std::invalid_argument on malformed input.
ReportDocument report_from_json(const nlohmann::ordered_json& j);

/// Human-readable report; the elapsed line is omitted when elapsed_ms is empty.
std::string to_text(const motivic::DecompositionReport& report, std::optional<double> elapsed_ms);

}  // namespace motive
