#include <fmt/format.h>

#include <cstdio>
#include <exception>
#include <iostream>

#include "mcik/cli.hpp"
#include "mcik/report.hpp"

namespace {

void print_summary(const mcik::RunPlan& plan, const std::vector<mcik::BerPoint>& points) {
    const auto& c = plan.config;
    fmt::print(stderr, "MCIK-OFDM  N_c={} N={} n={} M={}  seed={}\n", c.n_subcarriers,
               c.cluster_size, c.n_clusters, c.qam_order, plan.seed);
    fmt::print(stderr, "{:>8} {:>12} {:>12} {:>12} {:>10}\n", "SNR(dB)", "bound", "sim", "stderr",
               "blocks");
    for (const auto& p : points) {
        const auto bound = p.ber_bound ? fmt::format("{:.4e}", *p.ber_bound) : std::string("-");
        const auto sim = p.sim ? fmt::format("{:.4e}", p.sim->ber) : std::string("-");
        const auto se = p.sim ? fmt::format("{:.2e}", p.sim->std_error) : std::string("-");
        const auto blocks = p.sim ? std::to_string(p.sim->blocks) : std::string("-");
        fmt::print(stderr, "{:>8.2f} {:>12} {:>12} {:>12} {:>10}\n", p.snr_db, bound, sim, se, blocks);
    }
}

}  // namespace

int main(int argc, char** argv) {
    const auto parsed = mcik::parse_args(argc, argv);
    if (!parsed.plan) {
        (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message;
        return parsed.exit_code;
    }
    const auto& plan = *parsed.plan;

    try {
        const auto points =
            mcik::run_sweep(plan.config, plan.snr_db, plan.stop, plan.seed, plan.sweep);

        mcik::RunManifest manifest;
        manifest.config = plan.config;
        manifest.seed = plan.seed;
        manifest.stop = plan.stop;
        manifest.mode = plan.sweep.mode;
        manifest.averaging = plan.sweep.averaging;
        manifest.model = plan.sweep.model;

        if (plan.out_path) {
            mcik::emit_csv(*plan.out_path, points, manifest);
        } else {
            mcik::emit_csv(std::cout, points, manifest);
        }
        print_summary(plan, points);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
