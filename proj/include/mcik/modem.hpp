#pragma once

#include <span>
#include <vector>

#include "mcik/core.hpp"

namespace mcik {

/// Unit-average-energy square M-QAM with per-axis reflected Gray labels.
///
/// A symbol label is a log2(M)-bit integer. Its high half selects the
/// in-phase level and its low half the quadrature level, each through a
/// reflected Gray code ordered from the most positive level downwards, so
/// label 0 sits in the first quadrant. `points()[label]` is the symbol.
class QamConstellation {
public:
    explicit QamConstellation(int order);

    [[nodiscard]] int order() const noexcept { return order_; }
    [[nodiscard]] int bits_per_symbol() const noexcept { return bits_; }
    [[nodiscard]] std::span<const Complex> points() const noexcept { return points_; }
    [[nodiscard]] const Complex& point(int label) const { return points_.at(label); }

    /// Label bits, MSB first.
    [[nodiscard]] BitBuffer label_bits(int label) const;
    [[nodiscard]] int label_of(std::span<const std::uint8_t> bits) const;

    /// Label of the point nearest to `s` (no channel); ties to the lowest label.
    [[nodiscard]] int hard_demap(Complex s) const noexcept;

private:
    int order_;
    int bits_;
    std::vector<Complex> points_;
};

QamConstellation build_constellation(int order);

Complex modulate(std::span<const std::uint8_t> bits, const QamConstellation& c);

struct SymbolDecision {
    int label;
    BitBuffer bits;
};

/// argmin over s of |y - h s|^2, lowest label on ties. Throws on h == 0.
SymbolDecision demodulate_ml(Complex y, Complex h, const QamConstellation& c);

}  // namespace mcik
