#include "mcik/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

namespace mcik {

namespace {

void require_non_negative(double gamma, double rho, const char* who) {
    if (!(gamma >= 0.0) || !(rho >= 0.0)) {
        throw ConfigError(std::string(who) + ": gamma and rho must be non-negative");
    }
}

void require_cluster_size(int n) {
    if (n < 2 || !is_power_of_two(n)) throw ConfigError("cluster size must be a power of two >= 2");
}

void require_gammas(std::span<const double> gammas, const SystemConfig& cfg) {
    if (static_cast<int>(gammas.size()) != cfg.n_clusters) {
        throw ConfigError("expected " + std::to_string(cfg.n_clusters) + " fading gains, got " +
                          std::to_string(gammas.size()));
    }
}

}  // namespace

QamBerConstants qam_ber_constants(int order) {
    if (order != 4 && order != 16 && order != 64 && order != 256) {
        throw ConfigError("unsupported QAM order " + std::to_string(order));
    }
    // Exact Gray square-QAM expansion: P_b = (1/K) sum_{k=1..K} P_b(k) with
    // K = log2 sqrt(M) bits per axis and
    //   P_b(k) = (2/sqrt M) sum_{i=0}^{(1-2^-k) sqrt M - 1}
    //            (-1)^floor(i 2^(k-1)/sqrt M) (2^(k-1) - floor(i 2^(k-1)/sqrt M + 1/2))
    //            Q((2i+1) sqrt(3 gamma rho / (M-1))).
    const int side = 1 << (ilog2(order) / 2);
    const int axis_bits = ilog2(side);
    std::map<int, long long> numerators;  // in units of 1 / (side * axis_bits)
    for (int k = 1; k <= axis_bits; ++k) {
        const long long pk = 1LL << (k - 1);
        const int terms = side - (side >> k);
        for (int i = 0; i < terms; ++i) {
            const long long ratio_floor = (i * pk) / side;
            const long long rounded = (2 * i * pk + side) / (2 * side);
            const long long sign = (ratio_floor % 2 == 0) ? 1 : -1;
            numerators[i] += sign * (pk - rounded) * 2;
        }
    }

    QamBerConstants c;
    c.order = order;
    for (const auto& [i, num] : numerators) {
        if (num == 0) continue;
        c.weights.push_back(static_cast<double>(num) / (side * axis_bits));
        c.scales.push_back(3.0 * (2 * i + 1) * (2 * i + 1) / (order - 1));
    }
    c.theta = static_cast<int>(c.weights.size());
    return c;
}

double q_function(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double pep_conditional(double gamma, double rho) {
    require_non_negative(gamma, rho, "pep_conditional");
    return q_function(std::sqrt(gamma * rho / 2.0));
}

double me0_cluster(double gamma, double rho, int cluster_size) {
    require_cluster_size(cluster_size);
    return 0.5 * cluster_size * ilog2(cluster_size) * pep_conditional(gamma, rho);
}

double qam_awgn_ber(double gamma, double rho, const QamBerConstants& k) {
    require_non_negative(gamma, rho, "qam_awgn_ber");
    double sum = 0.0;
    for (int i = 0; i < k.theta; ++i) sum += k.weights[i] * q_function(std::sqrt(k.scales[i] * gamma * rho));
    return sum;
}

double qam_awgn_ber(double gamma, double rho, int order) {
    return qam_awgn_ber(gamma, rho, qam_ber_constants(order));
}

double me1_cluster(double gamma, double rho, int cluster_size, const QamBerConstants& k,
                   CorrectDetectionModel model) {
    require_cluster_size(cluster_size);
    const double q = pep_conditional(gamma, rho);
    const double p = qam_awgn_ber(gamma, rho, k);
    const int others = cluster_size - 1;
    const double correct_weight = model == CorrectDetectionModel::ProductOfPeps
                                      ? 1.0 - std::pow(q, others)
                                      : std::max(0.0, 1.0 - others * q);
    return ilog2(k.order) * (0.5 * others * q + correct_weight * p);
}

double cluster_bound_term(double gamma, double rho, int cluster_size, const QamBerConstants& k,
                          CorrectDetectionModel model) {
    return me0_cluster(gamma, rho, cluster_size) + me1_cluster(gamma, rho, cluster_size, k, model);
}

double ber_bound_conditional(std::span<const double> gammas, const SystemConfig& cfg) {
    require_gammas(gammas, cfg);
    const double rho = snr_linear(cfg.snr_db);
    const double symbol_bits = ilog2(cfg.qam_order);
    double sum = 0.0;
    for (double g : gammas) {
        sum += me0_cluster(g, rho, cfg.cluster_size) +
               symbol_bits * 0.5 * (cfg.cluster_size - 1) * pep_conditional(g, rho);
    }
    return sum / bits_per_block(cfg).total_bits;
}

double ber_bound(std::span<const double> gammas, const SystemConfig& cfg, const QamBerConstants& k,
                 CorrectDetectionModel model) {
    require_gammas(gammas, cfg);
    if (k.order != cfg.qam_order) throw ConfigError("ber_bound: constants do not match qam_order");
    const double rho = snr_linear(cfg.snr_db);
    double sum = 0.0;
    for (double g : gammas) sum += cluster_bound_term(g, rho, cfg.cluster_size, k, model);
    return sum / bits_per_block(cfg).total_bits;
}

double bound_decay_rate(double rho, const QamBerConstants& k) noexcept {
    // Q(sqrt(a gamma)) ~ exp(-a gamma / 2)
    double rate = rho / 4.0;
    for (double s : k.scales) rate = std::min(rate, s * rho / 2.0);
    return rate;
}

}  // namespace mcik
