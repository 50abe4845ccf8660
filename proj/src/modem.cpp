#include "mcik/modem.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mcik {

namespace {

int gray_decode(unsigned g) {
    unsigned v = g;
    for (unsigned shift = 1; shift < 32; shift <<= 1) v ^= v >> shift;
    return static_cast<int>(v);
}

}  // namespace

QamConstellation::QamConstellation(int order) : order_(order), bits_(0) {
    if (order != 4 && order != 16 && order != 64 && order != 256) {
        throw ConfigError("unsupported QAM order " + std::to_string(order));
    }
    bits_ = ilog2(order);
    const int half = bits_ / 2;
    const int side = 1 << half;
    // E|s|^2 = 2 d^2 (M - 1) / 3 = 1
    const double d = std::sqrt(3.0 / (2.0 * (order - 1)));

    points_.resize(order);
    for (int label = 0; label < order; ++label) {
        const int i_level = gray_decode(static_cast<unsigned>(label) >> half);
        const int q_level = gray_decode(static_cast<unsigned>(label) & (side - 1));
        points_[label] = {(side - 1 - 2 * i_level) * d, (side - 1 - 2 * q_level) * d};
    }
}

BitBuffer QamConstellation::label_bits(int label) const {
    if (label < 0 || label >= order_) throw ConfigError("symbol label out of range");
    BitBuffer bits(bits_);
    uint_to_bits(static_cast<unsigned>(label), bits_, bits.data());
    return bits;
}

int QamConstellation::label_of(std::span<const std::uint8_t> bits) const {
    if (static_cast<int>(bits.size()) != bits_) {
        throw ConfigError("expected " + std::to_string(bits_) + " symbol bits, got " +
                          std::to_string(bits.size()));
    }
    return static_cast<int>(bits_to_uint(bits.data(), bits_));
}

int QamConstellation::hard_demap(Complex s) const noexcept {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (int label = 0; label < order_; ++label) {
        const double dist = std::norm(s - points_[label]);
        if (dist < best_d) {
            best_d = dist;
            best = label;
        }
    }
    return best;
}

QamConstellation build_constellation(int order) { return QamConstellation(order); }

Complex modulate(std::span<const std::uint8_t> bits, const QamConstellation& c) {
    return c.point(c.label_of(bits));
}

SymbolDecision demodulate_ml(Complex y, Complex h, const QamConstellation& c) {
    if (h == Complex{}) throw ConfigError("demodulate_ml: zero channel gain");
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    const auto pts = c.points();
    for (int label = 0; label < c.order(); ++label) {
        const double dist = std::norm(y - h * pts[label]);
        if (dist < best_d) {
            best_d = dist;
            best = label;
        }
    }
    return {best, c.label_bits(best)};
}

}  // namespace mcik
