#pragma once

#include <span>
#include <vector>

#include "mcik/core.hpp"
#include "mcik/modem.hpp"

namespace mcik {

/// Active subcarrier of one cluster. All three fields are 1-based:
/// global_index = (cluster_id - 1) * N + alpha.
struct ClusterActivation {
    int cluster_id;
    int alpha;
    int global_index;

    bool operator==(const ClusterActivation&) const = default;
};

ClusterActivation make_activation(int cluster_id, int alpha, int cluster_size);

/// Frequency-domain block s_F: exactly one nonzero sample per cluster.
struct OfdmBlock {
    std::vector<Complex> samples;
    std::vector<ClusterActivation> activations;
    std::vector<int> payload_symbols;
};

/// Index bits (log2 N of them, MSB first) to the 1-based active position.
int map_index_bits(std::span<const std::uint8_t> bits, int cluster_size,
                   IndexMapping mapping = IndexMapping::NaturalBinary);

/// Inverse of map_index_bits.
BitBuffer index_to_binary(int alpha, int cluster_size,
                          IndexMapping mapping = IndexMapping::NaturalBinary);

/// Number of differing bits between the binary images of two positions.
int hamming(int alpha, int alpha_tilde, int cluster_size,
            IndexMapping mapping = IndexMapping::NaturalBinary);

/// Block bit layout: for each cluster in order, log2 N index bits followed
/// by log2 M symbol bits.
OfdmBlock assemble_block(std::span<const std::uint8_t> bits, const SystemConfig& cfg,
                         const QamConstellation& c);

BitBuffer disassemble_block(std::span<const ClusterActivation> activations,
                            std::span<const int> symbol_labels, const SystemConfig& cfg);

/// True when bit `pos` of a block buffer is an index bit under the block layout.
[[nodiscard]] bool is_index_bit(int pos, const SystemConfig& cfg) noexcept;

}  // namespace mcik
