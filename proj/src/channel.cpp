#include "mcik/channel.hpp"

#include <cmath>

namespace mcik {

ChannelRealization draw_channel(RngStream& rng, const SystemConfig& cfg) {
    ChannelRealization h;
    h.gains.resize(cfg.n_subcarriers);
    for (auto& g : h.gains) g = rng.complex_normal(1.0);
    return h;
}

std::vector<Complex> apply_channel(const OfdmBlock& block, const ChannelRealization& h, double n0,
                                   RngStream& rng) {
    if (!(n0 >= 0.0)) throw ConfigError("apply_channel: noise power must be non-negative");
    if (h.gains.size() != block.samples.size()) {
        throw ConfigError("apply_channel: channel and block lengths differ");
    }
    std::vector<Complex> y(block.samples.size());
    for (std::size_t k = 0; k < y.size(); ++k) {
        y[k] = h.gains[k] * block.samples[k] + rng.complex_normal(n0);
    }
    return y;
}

}  // namespace mcik
