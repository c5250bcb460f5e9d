#pragma once

#include "apsvm/diagnostics.hpp"
#include "apsvm/experiments.hpp"
#include "apsvm/text_io.hpp"

#include "json.hpp"

#include <string>

namespace apsvm {

inline constexpr const char* kDiagnoseSchemaVersion = "apsvm.diagnose/1";
inline constexpr const char* kBenchmarkSchemaVersion = "apsvm.benchmark/1";

nlohmann::ordered_json to_json(const HeterogeneityReport& report);
nlohmann::ordered_json to_json(const BenchmarkConfig& config);
nlohmann::ordered_json to_json(const ExperimentReport& report);

/// Tidy table, one row per (p, repeat, mode) record.
std::string records_csv(const ExperimentReport& report);

/// Figure-style series: one row per p, one column per mode, for `metric`
/// ("accuracy" or "sv_fraction").
std::string series_csv(const ExperimentReport& report, const std::string& metric);

/// Minimal SVG line chart of the same series over log10(p).
std::string series_svg(const ExperimentReport& report, const std::string& metric);

/// Pretty-printed JSON with a trailing newline.
void write_json(const std::string& path, const nlohmann::ordered_json& doc);

} // namespace apsvm
