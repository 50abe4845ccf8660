#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcik/averaging.hpp"
#include "mcik/channel.hpp"
#include "mcik/core.hpp"
#include "mcik/modem.hpp"

namespace mcik {

struct StoppingRule {
    std::int64_t min_bit_errors = 500;
    std::int64_t max_blocks = 1'000'000;
};

struct TrialStats {
    std::int64_t blocks = 0;
    std::int64_t total_bits = 0;
    std::int64_t index_bit_errors = 0;
    std::int64_t symbol_bit_errors = 0;
    double ber = 0.0;
    double std_error = 0.0;

    bool operator==(const TrialStats&) const = default;
};

struct RunOptions {
    /// Worker threads; the result does not depend on this.
    unsigned workers = 1;
    /// Stopping is checked only at batch boundaries, in batch order.
    int batch_blocks = 256;
    /// When set, every block sees this channel instead of a fresh draw.
    std::optional<ChannelRealization> frozen_channel;
};

/// Index-bit and symbol-bit mismatches of one block.
struct BlockErrors {
    std::int64_t index_bits = 0;
    std::int64_t symbol_bits = 0;
};

/// Transmits block number `block_index` end to end. Randomness comes from
/// RngStream(seed, block_index): payload bits, then the channel (unless
/// frozen), then noise.
BlockErrors simulate_block(const SystemConfig& cfg, const QamConstellation& c, double n0,
                           std::uint64_t seed, std::uint64_t block_index,
                           const ChannelRealization* frozen_channel = nullptr);

/// Splits the mismatches between two block buffers by bit role.
BlockErrors count_bit_errors(const BitBuffer& sent, const BitBuffer& received,
                             const SystemConfig& cfg);

/// Monte Carlo BER at cfg.snr_db (snr_db = +inf means noiseless).
TrialStats run_point(const SystemConfig& cfg, const StoppingRule& stop, std::uint64_t seed,
                     const RunOptions& options = {});

enum class SweepMode { Analytic, Simulate, Both };

struct SweepOptions {
    SweepMode mode = SweepMode::Both;
    AveragingMethod averaging = QuadratureAveraging{};
    CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps;
    RunOptions run;
};

struct BerPoint {
    double snr_db = 0.0;
    std::optional<double> ber_bound;
    std::optional<TrialStats> sim;
};

/// One BerPoint per SNR. Every simulated point reuses `seed`, so the curve
/// is built from common random numbers and each point equals a standalone
/// run_point call.
std::vector<BerPoint> run_sweep(const SystemConfig& cfg, const std::vector<double>& snr_list,
                                const StoppingRule& stop, std::uint64_t seed,
                                const SweepOptions& options = {});

std::string to_string(SweepMode m);
SweepMode sweep_mode_from_string(const std::string& s);

}  // namespace mcik
