// exports.hpp — deterministic CSV, Touchstone and run-manifest writers.
//
// All writers emit ASCII with LF line endings and shortest round-trip
// decimals, so re-exporting identical data is byte-identical.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "magnon/response.hpp"

namespace magnon {

/// Shortest round-trip decimal form of a double ("nan"/"inf" for non-finite).
std::string format_double(double value);

void export_dispersion_csv(const std::vector<DispersionPoint>& points,
                           const std::filesystem::path& path);
void export_modes_csv(const std::vector<CavityMode>& modes, const std::filesystem::path& path);
void export_response_csv(const FrequencyResponse& r, const std::filesystem::path& path);
void export_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path);
void export_optimize_csv(const std::vector<ApodizationScore>& table,
                         const std::filesystem::path& path);

struct CompareRow {
    std::string shape;
    std::optional<FilterMetrics> metrics;
    std::string status = "ok";
};
void export_compare_csv(const std::vector<CompareRow>& rows, const std::filesystem::path& path);

/// Two-port Touchstone v1, option line "# HZ S RI R 50", one line per
/// frequency with Re/Im of S11, S21, S12, S22. The model is reciprocal and
/// symmetric: S12 = S21 and S22 = S11.
void export_touchstone(const FrequencyResponse& r, const std::filesystem::path& path);

/// Reads back a file written by export_touchstone (testing aid).
FrequencyResponse parse_touchstone(const std::filesystem::path& path);

struct RunManifest {
    std::string command;
    nlohmann::json config;       ///< fully resolved device configuration
    nlohmann::json args;         ///< resolved CLI arguments
    std::string version;
    std::string input_digest;    ///< FNV-1a over (command, config, args)
    std::string timestamp;       ///< ISO-8601 UTC; excluded from the digest
    std::vector<std::string> notes;
};

RunManifest make_manifest(const std::string& command, const DeviceConfig& cfg,
                          const nlohmann::json& args);

/// Writes `<output>.manifest.json` next to the output file.
void write_manifest(const RunManifest& manifest, const std::filesystem::path& output_path);

}  // namespace magnon
