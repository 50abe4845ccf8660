#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "mcik/monte_carlo.hpp"

namespace mcik {

inline constexpr const char* kCsvHeader =
    "snr_db,ber_bound,ber_sim,stderr_sim,index_bit_errors,symbol_bit_errors,total_bits,blocks";

/// Everything needed to reproduce a run; written as '#' lines above the CSV.
struct RunManifest {
    SystemConfig config;
    std::uint64_t seed = 1;
    StoppingRule stop;
    SweepMode mode = SweepMode::Both;
    AveragingMethod averaging = QuadratureAveraging{};
    CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps;
    std::string tool_version = MCIK_VERSION;
    std::string timestamp;  // ISO-8601 UTC; filled by emit_csv when empty
};

/// Ordered "key: value" pairs of a manifest.
std::vector<std::pair<std::string, std::string>> manifest_entries(const RunManifest& m);

void emit_csv(std::ostream& out, const std::vector<BerPoint>& points, const RunManifest& manifest);

/// Writes to `path`; throws std::runtime_error when the file cannot be written.
void emit_csv(const std::string& path, const std::vector<BerPoint>& points,
              const RunManifest& manifest);

/// Single data row, without trailing newline.
std::string format_csv_row(const BerPoint& p);

struct CsvResult {
    std::vector<std::pair<std::string, std::string>> manifest;
    std::vector<BerPoint> points;
};

/// Parses a file produced by emit_csv. Throws std::runtime_error on a
/// missing or unexpected header or a malformed row.
CsvResult read_csv(std::istream& in);
CsvResult read_csv_file(const std::string& path);

std::string current_utc_timestamp();

}  // namespace mcik
