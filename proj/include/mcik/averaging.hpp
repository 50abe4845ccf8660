#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "mcik/analytic.hpp"
#include "mcik/core.hpp"

namespace mcik {

/// Gauss rule for the half-range weight 2t exp(-t^2) on [0, inf).
///
/// With gamma = t^2 this is the unit exponential density, so the rule
/// computes E[f(gamma)] for gamma ~ Exp(1) while treating f as a function of
/// the channel amplitude t. Fading-averaged BER integrands are analytic in t
/// but carry a sqrt(gamma) kink at the origin, which ruins Gauss-Laguerre
/// convergence in gamma.
///
/// Built by a discretised Stieltjes procedure followed by Golub-Welsch.
class HalfRangeGaussRule {
public:
    explicit HalfRangeGaussRule(int nodes);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(nodes_.size()); }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

    /// E[f(gamma)], gamma ~ Exp(1). `decay_rate` is the rate kappa at which f
    /// falls off like exp(-kappa gamma); the rule is stretched by
    /// sigma^2 = 1/(1 + kappa) so high-SNR integrands stay resolved.
    [[nodiscard]] double expectation(const std::function<double(double)>& f,
                                     double decay_rate = 0.0) const;

    /// Shared rule for a node count, built once per process.
    static const HalfRangeGaussRule& cached(int nodes);

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

struct QuadratureAveraging {
    int nodes = 64;
};

struct MonteCarloAveraging {
    std::int64_t samples = 100000;
    std::uint64_t seed = 1;
};

using AveragingMethod = std::variant<QuadratureAveraging, MonteCarloAveraging>;

struct AveragedBound {
    double value = 0.0;
    double std_error = 0.0;  // zero for quadrature
};

/// Expectation of ber_bound over i.i.d. unit-mean exponential gains.
/// Uses `rho` (linear) rather than cfg.snr_db. Every cluster term has the
/// same distribution, so this is n / m_t times a one-dimensional expectation.
AveragedBound average_ber_bound(double rho, const SystemConfig& cfg, const QamBerConstants& k,
                                const AveragingMethod& method = QuadratureAveraging{},
                                CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps);

}  // namespace mcik
