#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcik {

using Complex = std::complex<double>;

/// One bit per element, values 0 or 1.
using BitBuffer = std::vector<std::uint8_t>;

/// Thrown for any configuration or argument outside the supported domain.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// How a cluster's active position alpha is written as log2(N) bits.
enum class IndexMapping { NaturalBinary, Gray };

/// One MCIK-OFDM operating point.
///
/// N_c subcarriers split into `n_clusters` contiguous clusters of
/// `cluster_size` subcarriers; one subcarrier per cluster carries a
/// `qam_order`-QAM symbol. SNR is E_s/N_0 with unit-energy symbols.
struct SystemConfig {
    int n_subcarriers = 128;
    int cluster_size = 2;
    int n_clusters = 64;
    int qam_order = 4;
    double snr_db = 10.0;
    IndexMapping index_mapping = IndexMapping::NaturalBinary;

    bool operator==(const SystemConfig&) const = default;
};

struct BlockBits {
    int index_bits;   // m0 = n log2 N
    int symbol_bits;  // m1 = n log2 M
    int total_bits;   // mt = m0 + m1

    bool operator==(const BlockBits&) const = default;
};

/// Returns `cfg` unchanged, or throws ConfigError naming every violated rule.
SystemConfig validate_config(const SystemConfig& cfg);

BlockBits bits_per_block(const SystemConfig& cfg);

[[nodiscard]] bool is_power_of_two(int v) noexcept;

/// log2 of a positive power of two.
[[nodiscard]] int ilog2(int v) noexcept;

/// Linear SNR rho = 10^(snr_db/10).
[[nodiscard]] double snr_linear(double snr_db) noexcept;

/// Noise power N_0 for unit symbol energy; zero for snr_db = +inf.
[[nodiscard]] double noise_power(double snr_db) noexcept;

/// Packs bits MSB-first into an unsigned integer.
[[nodiscard]] unsigned bits_to_uint(const std::uint8_t* bits, int count) noexcept;

/// Writes the `count` low bits of `value` MSB-first.
void uint_to_bits(unsigned value, int count, std::uint8_t* out) noexcept;

std::string to_string(IndexMapping m);
IndexMapping index_mapping_from_string(const std::string& s);

}  // namespace mcik
