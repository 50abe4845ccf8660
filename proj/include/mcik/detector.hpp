#pragma once

#include <span>
#include <vector>

#include "mcik/channel.hpp"
#include "mcik/codec.hpp"
#include "mcik/modem.hpp"

namespace mcik {

struct ClusterDecision {
    int alpha_hat;         // 1-based
    int symbol_label_hat;  // 0..M-1
    double metric;
};

/// Joint ML over the N*M (position, symbol) hypotheses of one cluster.
///
/// Minimises |y(a) - h(a) s|^2 - |y(a)|^2, which is the full-cluster
/// likelihood sum_k |y(k) - h(k) s_hyp(k)|^2 with the hypothesis-independent
/// sum_k |y(k)|^2 removed. Ties go to the lowest (alpha, label).
ClusterDecision detect_cluster(std::span<const Complex> y_cluster,
                               std::span<const Complex> h_cluster, const QamConstellation& c);

/// Per-cluster decisions for a whole received block.
std::vector<ClusterDecision> detect_clusters(std::span<const Complex> y,
                                             const ChannelRealization& h, const SystemConfig& cfg,
                                             const QamConstellation& c);

/// Detects every cluster independently and rebuilds the block bit buffer.
BitBuffer detect_block(std::span<const Complex> y, const ChannelRealization& h,
                       const SystemConfig& cfg, const QamConstellation& c);

}  // namespace mcik
