#include "mcik/averaging.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "mcik/rng.hpp"

namespace mcik {

namespace {

struct LegendreRule {
    std::vector<double> x;
    std::vector<double> w;
};

// Gauss-Legendre on [-1, 1] by Newton iteration from Chebyshev-like guesses.
LegendreRule gauss_legendre(int n) {
    LegendreRule r{std::vector<double>(n), std::vector<double>(n)};
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
            }
            dp = n * (z * p1 - p2) / (z * z - 1.0);
            const double dz = p1 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = w;
        r.w[n - 1 - i] = w;
    }
    return r;
}

}  // namespace

HalfRangeGaussRule::HalfRangeGaussRule(int nodes) {
    if (nodes < 2 || nodes > 256) throw ConfigError("quadrature node count must be in [2, 256]");

    // Discretise the weight on [0, T]; beyond T every p_k^2 w is negligible.
    const double upper = std::sqrt(3.0 * nodes) + 8.0;
    const int disc = std::max(2000, 40 * nodes);
    const auto gl = gauss_legendre(disc);
    std::vector<double> t(disc);
    std::vector<double> w(disc);
    double mass = 0.0;
    for (int i = 0; i < disc; ++i) {
        t[i] = 0.5 * upper * (gl.x[i] + 1.0);
        w[i] = 0.5 * upper * gl.w[i] * 2.0 * t[i] * std::exp(-t[i] * t[i]);
        mass += w[i];
    }

    // Stieltjes with orthonormal polynomials.
    Eigen::VectorXd diag(nodes);
    Eigen::VectorXd offdiag(nodes - 1);
    std::vector<double> p_prev(disc, 0.0);
    std::vector<double> p(disc, 1.0 / std::sqrt(mass));
    std::vector<double> next(disc);
    double beta_sqrt = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double a = 0.0;
        for (int i = 0; i < disc; ++i) a += w[i] * t[i] * p[i] * p[i];
        diag[k] = a;
        if (k + 1 == nodes) break;
        double norm2 = 0.0;
        for (int i = 0; i < disc; ++i) {
            next[i] = (t[i] - a) * p[i] - beta_sqrt * p_prev[i];
            norm2 += w[i] * next[i] * next[i];
        }
        beta_sqrt = std::sqrt(norm2);
        offdiag[k] = beta_sqrt;
        for (int i = 0; i < disc; ++i) {
            p_prev[i] = p[i];
            p[i] = next[i] / beta_sqrt;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, offdiag, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Golub-Welsch eigensolve failed");

    // Christoffel weights 1 / sum_j p_j(t)^2 keep full relative accuracy in
    // the far tail, where eigenvector components do not.
    nodes_.resize(nodes);
    weights_.resize(nodes);
    for (int k = 0; k < nodes; ++k) {
        const double x = solver.eigenvalues()[k];
        double prev = 0.0;
        double cur = 1.0;  // p_0 for unit total mass
        double sum = 1.0;
        for (int j = 0; j + 1 < nodes; ++j) {
            const double next = ((x - diag[j]) * cur - (j > 0 ? offdiag[j - 1] : 0.0) * prev) / offdiag[j];
            prev = cur;
            cur = next;
            sum += cur * cur;
        }
        nodes_[k] = x;
        weights_[k] = 1.0 / sum;
    }
}

double HalfRangeGaussRule::expectation(const std::function<double(double)>& f,
                                       double decay_rate) const {
    if (!(decay_rate >= 0.0)) throw ConfigError("decay rate must be non-negative");
    const double s2 = 1.0 / (1.0 + decay_rate);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
        const double u2 = nodes_[k] * nodes_[k];
        const double value = f(s2 * u2);
        if (value != 0.0) sum += weights_[k] * value * std::exp((1.0 - s2) * u2);
    }
    return s2 * sum;
}

const HalfRangeGaussRule& HalfRangeGaussRule::cached(int nodes) {
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<HalfRangeGaussRule>> rules;
    std::lock_guard lock(mutex);
    auto& slot = rules[nodes];
    if (!slot) slot = std::make_unique<HalfRangeGaussRule>(nodes);
    return *slot;
}

AveragedBound average_ber_bound(double rho, const SystemConfig& cfg, const QamBerConstants& k,
                                const AveragingMethod& method, CorrectDetectionModel model) {
    if (!(rho >= 0.0)) throw ConfigError("average_ber_bound: rho must be non-negative");
    if (k.order != cfg.qam_order) {
        throw ConfigError("average_ber_bound: constants do not match qam_order");
    }
    const double scale = static_cast<double>(cfg.n_clusters) / bits_per_block(cfg).total_bits;
    auto term = [&](double gamma) { return cluster_bound_term(gamma, rho, cfg.cluster_size, k, model); };

    if (const auto* quad = std::get_if<QuadratureAveraging>(&method)) {
        const auto& rule = HalfRangeGaussRule::cached(quad->nodes);
        return {scale * rule.expectation(term, bound_decay_rate(rho, k)), 0.0};
    }

    const auto& mc = std::get<MonteCarloAveraging>(method);
    if (mc.samples < 2) throw ConfigError("average_ber_bound: need at least 2 fading samples");
    RngStream rng(mc.seed, 0);
    double mean = 0.0;
    double m2 = 0.0;
    for (std::int64_t i = 0; i < mc.samples; ++i) {
        const double x = term(std::norm(rng.complex_normal(1.0)));
        const double delta = x - mean;
        mean += delta / static_cast<double>(i + 1);
        m2 += delta * (x - mean);
    }
    const double var = m2 / static_cast<double>(mc.samples - 1);
    return {scale * mean, scale * std::sqrt(var / static_cast<double>(mc.samples))};
}

}  // namespace mcik
