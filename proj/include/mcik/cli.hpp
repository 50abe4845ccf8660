#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcik/monte_carlo.hpp"

namespace mcik {

struct RunPlan {
    SystemConfig config;
    std::vector<double> snr_db;
    StoppingRule stop;
    std::uint64_t seed = 1;
    SweepOptions sweep;
    std::optional<std::string> out_path;  // empty: CSV on stdout
};

struct ParseResult {
    std::optional<RunPlan> plan;
    int exit_code = 0;
    std::string message;  // help text or error description
};

/// Parses mcik_sim arguments. Values from --config (key=value lines, keys
/// are long flag names) are overridden by flags; MCIK_SEED is consulted when
/// --seed is absent. On help or error `plan` is empty and exit_code/message
/// say what to report.
ParseResult parse_args(int argc, const char* const* argv);

/// start, start+step, ... up to stop inclusive (with a small tolerance).
std::vector<double> snr_grid(double start, double stop, double step);

}  // namespace mcik
