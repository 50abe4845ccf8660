#include "mcik/codec.hpp"

#include <bit>
#include <string>

namespace mcik {

namespace {

unsigned gray_encode(unsigned v) { return v ^ (v >> 1); }

unsigned gray_decode(unsigned g) {
    for (unsigned shift = 1; shift < 32; shift <<= 1) g ^= g >> shift;
    return g;
}

void check_cluster_size(int cluster_size) {
    if (cluster_size < 2 || !is_power_of_two(cluster_size)) {
        throw ConfigError("cluster size must be a power of two >= 2");
    }
}

void check_alpha(int alpha, int cluster_size) {
    if (alpha < 1 || alpha > cluster_size) {
        throw ConfigError("active index " + std::to_string(alpha) + " outside 1.." +
                          std::to_string(cluster_size));
    }
}

unsigned index_code(int alpha, IndexMapping mapping) {
    const auto v = static_cast<unsigned>(alpha - 1);
    return mapping == IndexMapping::Gray ? gray_encode(v) : v;
}

}  // namespace

ClusterActivation make_activation(int cluster_id, int alpha, int cluster_size) {
    check_alpha(alpha, cluster_size);
    return {cluster_id, alpha, (cluster_id - 1) * cluster_size + alpha};
}

int map_index_bits(std::span<const std::uint8_t> bits, int cluster_size, IndexMapping mapping) {
    check_cluster_size(cluster_size);
    const int k = ilog2(cluster_size);
    if (static_cast<int>(bits.size()) != k) {
        throw ConfigError("expected " + std::to_string(k) + " index bits, got " +
                          std::to_string(bits.size()));
    }
    const unsigned code = bits_to_uint(bits.data(), k);
    return 1 + static_cast<int>(mapping == IndexMapping::Gray ? gray_decode(code) : code);
}

BitBuffer index_to_binary(int alpha, int cluster_size, IndexMapping mapping) {
    check_cluster_size(cluster_size);
    check_alpha(alpha, cluster_size);
    const int k = ilog2(cluster_size);
    BitBuffer out(k);
    uint_to_bits(index_code(alpha, mapping), k, out.data());
    return out;
}

int hamming(int alpha, int alpha_tilde, int cluster_size, IndexMapping mapping) {
    check_cluster_size(cluster_size);
    check_alpha(alpha, cluster_size);
    check_alpha(alpha_tilde, cluster_size);
    return std::popcount(index_code(alpha, mapping) ^ index_code(alpha_tilde, mapping));
}

OfdmBlock assemble_block(std::span<const std::uint8_t> bits, const SystemConfig& cfg,
                         const QamConstellation& c) {
    const auto layout = bits_per_block(cfg);
    if (static_cast<int>(bits.size()) != layout.total_bits) {
        throw ConfigError("assemble_block: expected " + std::to_string(layout.total_bits) +
                          " bits, got " + std::to_string(bits.size()));
    }
    const int k_idx = ilog2(cfg.cluster_size);
    const int k_sym = c.bits_per_symbol();

    OfdmBlock block;
    block.samples.assign(cfg.n_subcarriers, Complex{});
    block.activations.reserve(cfg.n_clusters);
    block.payload_symbols.reserve(cfg.n_clusters);

    auto cursor = bits.begin();
    for (int beta = 1; beta <= cfg.n_clusters; ++beta) {
        const int alpha = map_index_bits({cursor, cursor + k_idx}, cfg.cluster_size,
                                         cfg.index_mapping);
        cursor += k_idx;
        const int label = c.label_of({cursor, cursor + k_sym});
        cursor += k_sym;

        const auto act = make_activation(beta, alpha, cfg.cluster_size);
        block.samples[act.global_index - 1] = c.point(label);
        block.activations.push_back(act);
        block.payload_symbols.push_back(label);
    }
    return block;
}

BitBuffer disassemble_block(std::span<const ClusterActivation> activations,
                            std::span<const int> symbol_labels, const SystemConfig& cfg) {
    const int k_idx = ilog2(cfg.cluster_size);
    const int k_sym = ilog2(cfg.qam_order);
    if (activations.size() != symbol_labels.size()) {
        throw ConfigError("disassemble_block: activation and label counts differ");
    }
    BitBuffer out(static_cast<std::size_t>(activations.size()) * (k_idx + k_sym));
    auto* cursor = out.data();
    for (std::size_t i = 0; i < activations.size(); ++i) {
        uint_to_bits(index_code(activations[i].alpha, cfg.index_mapping), k_idx, cursor);
        cursor += k_idx;
        uint_to_bits(static_cast<unsigned>(symbol_labels[i]), k_sym, cursor);
        cursor += k_sym;
    }
    return out;
}

bool is_index_bit(int pos, const SystemConfig& cfg) noexcept {
    const int k_idx = ilog2(cfg.cluster_size);
    const int per_cluster = k_idx + ilog2(cfg.qam_order);
    return pos % per_cluster < k_idx;
}

}  // namespace mcik
