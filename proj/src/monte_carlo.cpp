#include "mcik/monte_carlo.hpp"

#include <cmath>
#include <thread>

#include "mcik/codec.hpp"
#include "mcik/detector.hpp"
#include "mcik/rng.hpp"

namespace mcik {

namespace {

BlockErrors simulate_batch(const SystemConfig& cfg, const QamConstellation& c, double n0,
                           std::uint64_t seed, std::int64_t first, std::int64_t count,
                           const ChannelRealization* frozen) {
    BlockErrors sum;
    for (std::int64_t b = first; b < first + count; ++b) {
        const auto e = simulate_block(cfg, c, n0, seed, static_cast<std::uint64_t>(b), frozen);
        sum.index_bits += e.index_bits;
        sum.symbol_bits += e.symbol_bits;
    }
    return sum;
}

}  // namespace

BlockErrors count_bit_errors(const BitBuffer& sent, const BitBuffer& received,
                             const SystemConfig& cfg) {
    if (sent.size() != received.size()) throw ConfigError("count_bit_errors: length mismatch");
    BlockErrors e;
    for (std::size_t i = 0; i < sent.size(); ++i) {
        if (sent[i] == received[i]) continue;
        if (is_index_bit(static_cast<int>(i), cfg)) {
            ++e.index_bits;
        } else {
            ++e.symbol_bits;
        }
    }
    return e;
}

BlockErrors simulate_block(const SystemConfig& cfg, const QamConstellation& c, double n0,
                           std::uint64_t seed, std::uint64_t block_index,
                           const ChannelRealization* frozen_channel) {
    RngStream rng(seed, block_index);
    const int mt = bits_per_block(cfg).total_bits;

    BitBuffer sent(mt);
    for (int i = 0; i < mt; i += 32) {
        const std::uint32_t word = rng();
        for (int j = 0; j < 32 && i + j < mt; ++j) sent[i + j] = (word >> j) & 1u;
    }
    const auto block = assemble_block(sent, cfg, c);

    ChannelRealization drawn;
    if (frozen_channel == nullptr) drawn = draw_channel(rng, cfg);
    const ChannelRealization& h = frozen_channel != nullptr ? *frozen_channel : drawn;

    const auto y = apply_channel(block, h, n0, rng);
    return count_bit_errors(sent, detect_block(y, h, cfg, c), cfg);
}

TrialStats run_point(const SystemConfig& cfg, const StoppingRule& stop, std::uint64_t seed,
                     const RunOptions& options) {
    validate_config(cfg);
    if (stop.min_bit_errors <= 0 || stop.max_blocks <= 0) {
        throw ConfigError("stopping rule values must be positive");
    }
    if (options.batch_blocks <= 0) throw ConfigError("batch_blocks must be positive");
    if (options.frozen_channel &&
        static_cast<int>(options.frozen_channel->gains.size()) != cfg.n_subcarriers) {
        throw ConfigError("frozen channel must have N_c gains");
    }

    const QamConstellation c(cfg.qam_order);
    const double n0 = noise_power(cfg.snr_db);
    const ChannelRealization* frozen = options.frozen_channel ? &*options.frozen_channel : nullptr;
    const unsigned workers = std::max(1u, options.workers);
    const std::int64_t batch = options.batch_blocks;
    const std::int64_t total_batches = (stop.max_blocks + batch - 1) / batch;
    auto batch_len = [&](std::int64_t id) { return std::min(batch, stop.max_blocks - id * batch); };

    TrialStats stats;
    std::int64_t next_batch = 0;
    bool done = false;
    while (!done && next_batch < total_batches) {
        const std::int64_t wave = std::min<std::int64_t>(4 * workers, total_batches - next_batch);
        std::vector<BlockErrors> results(wave);

        auto work = [&](unsigned w) {
            for (std::int64_t i = w; i < wave; i += workers) {
                const std::int64_t id = next_batch + i;
                results[i] = simulate_batch(cfg, c, n0, seed, id * batch, batch_len(id), frozen);
            }
        };
        if (workers == 1) {
            work(0);
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        }

        // Merge in batch order; anything past the stopping batch is discarded.
        for (std::int64_t i = 0; i < wave; ++i) {
            stats.blocks += batch_len(next_batch + i);
            stats.index_bit_errors += results[i].index_bits;
            stats.symbol_bit_errors += results[i].symbol_bits;
            if (stats.index_bit_errors + stats.symbol_bit_errors >= stop.min_bit_errors) {
                done = true;
                break;
            }
        }
        next_batch += wave;
    }

    stats.total_bits = stats.blocks * bits_per_block(cfg).total_bits;
    const double errors = static_cast<double>(stats.index_bit_errors + stats.symbol_bit_errors);
    stats.ber = errors / static_cast<double>(stats.total_bits);
    stats.std_error = std::sqrt(stats.ber * (1.0 - stats.ber) / static_cast<double>(stats.total_bits));
    return stats;
}

std::vector<BerPoint> run_sweep(const SystemConfig& cfg, const std::vector<double>& snr_list,
                                const StoppingRule& stop, std::uint64_t seed,
                                const SweepOptions& options) {
    if (snr_list.empty()) throw ConfigError("run_sweep: empty SNR list");
    validate_config(cfg);
    const auto constants = qam_ber_constants(cfg.qam_order);

    std::vector<BerPoint> points;
    points.reserve(snr_list.size());
    for (double snr : snr_list) {
        SystemConfig point_cfg = cfg;
        point_cfg.snr_db = snr;
        BerPoint p;
        p.snr_db = snr;
        if (options.mode != SweepMode::Simulate) {
            p.ber_bound = average_ber_bound(snr_linear(snr), point_cfg, constants, options.averaging,
                                            options.model)
                              .value;
        }
        if (options.mode != SweepMode::Analytic) {
            p.sim = run_point(point_cfg, stop, seed, options.run);
        }
        points.push_back(std::move(p));
    }
    return points;
}

std::string to_string(SweepMode m) {
    switch (m) {
        case SweepMode::Analytic:
            return "analytic";
        case SweepMode::Simulate:
            return "simulate";
        case SweepMode::Both:
            break;
    }
    return "both";
}

SweepMode sweep_mode_from_string(const std::string& s) {
    if (s == "analytic") return SweepMode::Analytic;
    if (s == "simulate") return SweepMode::Simulate;
    if (s == "both") return SweepMode::Both;
    throw ConfigError("unknown mode '" + s + "' (expected analytic, simulate or both)");
}

}  // namespace mcik
