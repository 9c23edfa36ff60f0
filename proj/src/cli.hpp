// Command-line front end. run() is the whole program minus process setup, so
// tests drive it with in-memory streams.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "turbex/exergy_engine.hpp"

namespace turbex::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kValidation = 2 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

enum class Format { Table, Csv, Json };

struct ComparisonDoc {
    AmbientState ambient;
    std::vector<AnalysisReport> reports;  // first entry is the delta baseline
    PressureSource pressure_source = PressureSource::Reconciled;
};

/// Expansion paths are attached only when the report was requested with them.
struct AnalysisDoc {
    AnalysisReport report;
    PressureSource pressure_source = PressureSource::Reconciled;
    std::vector<ExpansionPath> paths;
};

struct SweepDoc {
    SweepResult sweep;
    PressureSource pressure_source = PressureSource::Reconciled;
};

std::string render(const AnalysisDoc& doc, Format format);
std::string render(const SweepDoc& doc, Format format);
std::string render(const ComparisonDoc& doc, Format format);

// Inverses of the JSON renderings.
AnalysisDoc analysis_from_json(const nlohmann::ordered_json& j);
SweepDoc sweep_from_json(const nlohmann::ordered_json& j);
ComparisonDoc comparison_from_json(const nlohmann::ordered_json& j);

/// Existing file first, then <data dir>/<name>.csv|.regime, then built-ins.
OperatingRegime resolve_regime(const std::string& selector);

/// TURBEX_DATA_DIR from the environment, else the configured default.
std::string data_directory();

}  // namespace turbex::cli
