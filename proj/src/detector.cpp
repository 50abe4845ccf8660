#include "mcik/detector.hpp"

#include <limits>

namespace mcik {

ClusterDecision detect_cluster(std::span<const Complex> y_cluster,
                               std::span<const Complex> h_cluster, const QamConstellation& c) {
    if (y_cluster.size() != h_cluster.size() || y_cluster.empty()) {
        throw ConfigError("detect_cluster: y and h must be non-empty and of equal length");
    }
    const auto pts = c.points();
    ClusterDecision best{1, 0, std::numeric_limits<double>::infinity()};
    for (std::size_t a = 0; a < y_cluster.size(); ++a) {
        const Complex y = y_cluster[a];
        const Complex h = h_cluster[a];
        const double energy = std::norm(y);
        for (int label = 0; label < c.order(); ++label) {
            const double metric = std::norm(y - h * pts[label]) - energy;
            if (metric < best.metric) best = {static_cast<int>(a) + 1, label, metric};
        }
    }
    return best;
}

std::vector<ClusterDecision> detect_clusters(std::span<const Complex> y,
                                             const ChannelRealization& h, const SystemConfig& cfg,
                                             const QamConstellation& c) {
    const auto nc = static_cast<std::size_t>(cfg.n_subcarriers);
    if (y.size() != nc || h.gains.size() != nc) {
        throw ConfigError("detect_block: received vector and channel must have N_c entries");
    }
    const std::span<const Complex> gains(h.gains);
    const auto n = static_cast<std::size_t>(cfg.cluster_size);
    std::vector<ClusterDecision> out;
    out.reserve(cfg.n_clusters);
    for (std::size_t beta = 0; beta < static_cast<std::size_t>(cfg.n_clusters); ++beta) {
        out.push_back(detect_cluster(y.subspan(beta * n, n), gains.subspan(beta * n, n), c));
    }
    return out;
}

BitBuffer detect_block(std::span<const Complex> y, const ChannelRealization& h,
                       const SystemConfig& cfg, const QamConstellation& c) {
    const auto decisions = detect_clusters(y, h, cfg, c);
    std::vector<ClusterActivation> acts;
    std::vector<int> labels;
    acts.reserve(decisions.size());
    labels.reserve(decisions.size());
    for (std::size_t b = 0; b < decisions.size(); ++b) {
        acts.push_back(make_activation(static_cast<int>(b) + 1, decisions[b].alpha_hat,
                                       cfg.cluster_size));
        labels.push_back(decisions[b].symbol_label_hat);
    }
    return disassemble_block(acts, labels, cfg);
}

}  // namespace mcik
