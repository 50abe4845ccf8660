#pragma once

#include <span>
#include <vector>

#include "mcik/core.hpp"

namespace mcik {

/// Gray-coded square M-QAM AWGN bit error rate as a weighted Q-sum:
///   P_b(gamma * rho) = sum_i weights[i] * Q(sqrt(scales[i] * gamma * rho)).
/// The expansion is exact for the per-axis reflected Gray labeling used by
/// QamConstellation. Some weights are negative for M >= 16.
struct QamBerConstants {
    int order = 0;
    int theta = 0;
    std::vector<double> weights;
    std::vector<double> scales;
};

QamBerConstants qam_ber_constants(int order);

/// How the bound weights the symbol errors of a correctly detected index.
enum class CorrectDetectionModel {
    /// (1 - prod_{a' != a} q) as printed in the original derivation.
    ProductOfPeps,
    /// max(0, 1 - sum_{a' != a} q), the union-bound complement.
    UnionComplement,
};

/// Gaussian tail probability Q(x) = erfc(x / sqrt 2) / 2.
[[nodiscard]] double q_function(double x) noexcept;

/// Index-domain pairwise error probability given the active-subcarrier
/// power gain: Q(sqrt(gamma * rho / 2)) with E_s = 1.
double pep_conditional(double gamma, double rho);

/// Expected index-bit errors of one cluster given gamma:
/// (1/N) sum_a sum_{a' != a} q H(a, a') = (N/2) log2(N) q.
double me0_cluster(double gamma, double rho, int cluster_size);

/// Gray M-QAM bit error probability on an AWGN channel of power gain gamma.
double qam_awgn_ber(double gamma, double rho, const QamBerConstants& k);
double qam_awgn_ber(double gamma, double rho, int order);

/// Expected symbol-bit errors of one cluster given gamma:
/// log2(M) [ (N-1)/2 q + (1 - q^(N-1)) P ] for the product model.
double me1_cluster(double gamma, double rho, int cluster_size, const QamBerConstants& k,
                   CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps);

/// me0 + me1 for one cluster; the summand of the full bound.
double cluster_bound_term(double gamma, double rho, int cluster_size, const QamBerConstants& k,
                          CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps);

/// Bound restricted to mis-detection events (no correct-detection term).
/// rho is taken from cfg.snr_db; `gammas` holds one power gain per cluster.
double ber_bound_conditional(std::span<const double> gammas, const SystemConfig& cfg);

/// Full unconditional BER bound: sum_beta (me0 + me1) / m_t.
double ber_bound(std::span<const double> gammas, const SystemConfig& cfg,
                 const QamBerConstants& k,
                 CorrectDetectionModel model = CorrectDetectionModel::ProductOfPeps);

/// Slowest exponential decay rate (in gamma) of any term of the bound.
[[nodiscard]] double bound_decay_rate(double rho, const QamBerConstants& k) noexcept;

}  // namespace mcik
