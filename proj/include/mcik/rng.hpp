#pragma once

#include <array>
#include <cstdint>
#include <limits>

#include "mcik/core.hpp"

namespace mcik {

/// Philox4x32-10 block function (Salmon et al., SC'11): maps a 128-bit
/// counter under a 64-bit key to 128 pseudo-random bits.
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key) noexcept;

/// Counter-based random stream identified by (seed, stream_id).
///
/// The seed is the Philox key; the stream id fills the high half of the
/// counter and a per-stream draw index the low half, so every
/// (seed, stream_id) pair is an independent, reproducible sequence that
/// never depends on how other streams were consumed. Satisfies
/// UniformRandomBitGenerator.
class RngStream {
public:
    using result_type = std::uint32_t;

    RngStream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept;

    /// Uniform double in (0, 1], 53 random bits.
    double uniform() noexcept;

    /// Circularly-symmetric complex Gaussian CN(0, variance) via Box-Muller.
    Complex complex_normal(double variance = 1.0) noexcept;

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
    [[nodiscard]] std::uint64_t stream_id() const noexcept { return stream_id_; }

private:
    void refill() noexcept;

    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t block_counter_ = 0;
    std::array<std::uint32_t, 4> buffer_{};
    int used_ = 4;
};

}  // namespace mcik
