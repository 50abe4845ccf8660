#pragma once

#include <span>
#include <vector>

#include "mcik/codec.hpp"
#include "mcik/core.hpp"
#include "mcik/rng.hpp"

namespace mcik {

/// Per-subcarrier gains h(k) for one quasi-static block interval.
struct ChannelRealization {
    std::vector<Complex> gains;
};

/// Fresh i.i.d. CN(0, 1) gains for all N_c subcarriers, inactive ones included.
ChannelRealization draw_channel(RngStream& rng, const SystemConfig& cfg);

/// y(k) = h(k) s(k) + n(k), n(k) ~ CN(0, n0). Noise is drawn for every
/// subcarrier even when n0 == 0 so stream consumption is SNR-independent.
std::vector<Complex> apply_channel(const OfdmBlock& block, const ChannelRealization& h, double n0,
                                   RngStream& rng);

}  // namespace mcik
