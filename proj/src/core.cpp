#include "mcik/core.hpp"

#include <bit>
#include <cmath>

namespace mcik {

bool is_power_of_two(int v) noexcept {
    return v > 0 && std::has_single_bit(static_cast<unsigned>(v));
}

int ilog2(int v) noexcept {
    return std::bit_width(static_cast<unsigned>(v)) - 1;
}

SystemConfig validate_config(const SystemConfig& cfg) {
    std::string problems;
    auto fail = [&](const std::string& msg) {
        if (!problems.empty()) problems += "; ";
        problems += msg;
    };

    if (cfg.n_subcarriers <= 0 || cfg.cluster_size <= 0 || cfg.n_clusters <= 0) {
        fail("n_subcarriers, cluster_size and n_clusters must be positive");
    } else if (static_cast<long long>(cfg.n_clusters) * cfg.cluster_size != cfg.n_subcarriers) {
        fail("dimension mismatch: n_clusters * cluster_size = " +
             std::to_string(static_cast<long long>(cfg.n_clusters) * cfg.cluster_size) +
             " != n_subcarriers = " + std::to_string(cfg.n_subcarriers));
    }
    if (cfg.cluster_size < 2 || !is_power_of_two(cfg.cluster_size)) {
        fail("cluster_size must be a power of two >= 2 (got " + std::to_string(cfg.cluster_size) +
             ")");
    }
    switch (cfg.qam_order) {
        case 4:
        case 16:
        case 64:
        case 256:
            break;
        default:
            fail("unsupported qam_order " + std::to_string(cfg.qam_order) +
                 " (expected 4, 16, 64 or 256)");
    }
    if (std::isnan(cfg.snr_db)) fail("snr_db is NaN");

    if (!problems.empty()) throw ConfigError(problems);
    return cfg;
}

BlockBits bits_per_block(const SystemConfig& cfg) {
    const int m0 = cfg.n_clusters * ilog2(cfg.cluster_size);
    const int m1 = cfg.n_clusters * ilog2(cfg.qam_order);
    return {m0, m1, m0 + m1};
}

double snr_linear(double snr_db) noexcept { return std::pow(10.0, snr_db / 10.0); }

double noise_power(double snr_db) noexcept { return std::pow(10.0, -snr_db / 10.0); }

unsigned bits_to_uint(const std::uint8_t* bits, int count) noexcept {
    unsigned v = 0;
    for (int i = 0; i < count; ++i) v = (v << 1) | (bits[i] & 1u);
    return v;
}

void uint_to_bits(unsigned value, int count, std::uint8_t* out) noexcept {
    for (int i = 0; i < count; ++i) out[i] = (value >> (count - 1 - i)) & 1u;
}

std::string to_string(IndexMapping m) {
    return m == IndexMapping::Gray ? "gray" : "natural";
}

IndexMapping index_mapping_from_string(const std::string& s) {
    if (s == "natural") return IndexMapping::NaturalBinary;
    if (s == "gray") return IndexMapping::Gray;
    throw ConfigError("unknown index mapping '" + s + "' (expected natural or gray)");
}

}  // namespace mcik
