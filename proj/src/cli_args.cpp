#include "mcik/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <sstream>

namespace mcik {

std::vector<double> snr_grid(double start, double stop, double step) {
    if (!(step > 0.0)) throw ConfigError("--snr-step must be positive");
    if (!(stop >= start)) throw ConfigError("--snr-stop must not be below --snr-start");
    const auto count = static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (int i = 0; i < count; ++i) grid[i] = start + i * step;
    return grid;
}

ParseResult parse_args(int argc, const char* const* argv) {
    CLI::App app{"MCIK-OFDM BER simulator and analytic bound evaluator", "mcik_sim"};
    app.set_config("--config", "", "Read key=value settings from a file; flags take precedence");

    RunPlan plan;
    auto& cfg = plan.config;
    double snr_start = 0.0;
    double snr_stop = 40.0;
    double snr_step = 5.0;
    std::string mode = "both";
    std::string avg = "quadrature";
    std::string mapping = "natural";
    std::string correct = "product";
    int nodes = 64;
    std::int64_t avg_samples = 100000;
    unsigned workers = 1;
    std::string out;

    app.add_option("--nc", cfg.n_subcarriers, "Number of subcarriers N_c")->capture_default_str();
    app.add_option("--cluster-size", cfg.cluster_size, "Subcarriers per cluster N")->capture_default_str();
    app.add_option("--clusters", cfg.n_clusters, "Number of clusters n")->capture_default_str();
    app.add_option("--qam", cfg.qam_order, "QAM order M (4, 16, 64, 256)")->capture_default_str();
    app.add_option("--snr-start", snr_start, "First SNR in dB")->capture_default_str();
    app.add_option("--snr-stop", snr_stop, "Last SNR in dB (inclusive)")->capture_default_str();
    app.add_option("--snr-step", snr_step, "SNR step in dB")->capture_default_str();
    app.add_option("--mode", mode, "analytic, simulate or both")
        ->check(CLI::IsMember({"analytic", "simulate", "both"}))
        ->capture_default_str();
    app.add_option("--min-errors", plan.stop.min_bit_errors, "Stop a point after this many bit errors")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-blocks", plan.stop.max_blocks, "Block cap per point")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", plan.seed, "Random seed")->envname("MCIK_SEED")->capture_default_str();
    app.add_option("--avg", avg, "Fading average: quadrature or mc")
        ->check(CLI::IsMember({"quadrature", "mc"}))
        ->capture_default_str();
    app.add_option("--nodes", nodes, "Quadrature nodes")->check(CLI::Range(2, 256))->capture_default_str();
    app.add_option("--avg-samples", avg_samples, "Fading draws for --avg mc")
        ->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40))
        ->capture_default_str();
    app.add_option("--index-mapping", mapping, "Index bit labeling: natural or gray")
        ->check(CLI::IsMember({"natural", "gray"}))
        ->capture_default_str();
    app.add_option("--correct-detection", correct, "Correct-detection weight: product or union")
        ->check(CLI::IsMember({"product", "union"}))
        ->capture_default_str();
    app.add_option("--workers", workers, "Simulation threads")->check(CLI::Range(1u, 1024u))->capture_default_str();
    app.add_option("--out", out, "Output CSV path (default: stdout)");

    std::ostringstream out_msg;
    std::ostringstream err_msg;
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        ParseResult r;
        r.exit_code = app.exit(e, out_msg, err_msg);
        r.message = out_msg.str() + err_msg.str();
        return r;
    }

    try {
        cfg.index_mapping = index_mapping_from_string(mapping);
        validate_config(cfg);
        plan.snr_db = snr_grid(snr_start, snr_stop, snr_step);
        plan.sweep.mode = sweep_mode_from_string(mode);
        plan.sweep.model = correct == "union" ? CorrectDetectionModel::UnionComplement
                                              : CorrectDetectionModel::ProductOfPeps;
        if (avg == "mc") {
            plan.sweep.averaging = MonteCarloAveraging{avg_samples, plan.seed};
        } else {
            plan.sweep.averaging = QuadratureAveraging{nodes};
        }
        plan.sweep.run.workers = workers;
        if (!out.empty()) plan.out_path = out;
    } catch (const ConfigError& e) {
        return {std::nullopt, 2, std::string("error: ") + e.what() + "\n"};
    }
    return {std::move(plan), 0, {}};
}

}  // namespace mcik
