#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "mcik/cli.hpp"
#include "mcik/report.hpp"

using namespace mcik;

namespace {

ParseResult parse(std::vector<std::string> args) {
    args.insert(args.begin(), "mcik_sim");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return parse_args(static_cast<int>(argv.size()), argv.data());
}

std::vector<std::string> data_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] != '#') rows.push_back(line);
    }
    return rows;
}

}  // namespace

TEST_CASE("parse_args: valid configuration and defaults") {
    const auto r = parse({"--nc", "128", "--cluster-size", "2", "--clusters", "64", "--qam", "4"});
    REQUIRE(r.plan);
    CHECK(r.exit_code == 0);
    const auto& p = *r.plan;
    CHECK(p.config.n_subcarriers == 128);
    CHECK(p.config.cluster_size == 2);
    CHECK(p.config.n_clusters == 64);
    CHECK(p.snr_db.size() == 9);
    CHECK(p.snr_db.back() == 40.0);
    CHECK_FALSE(p.out_path.has_value());
    CHECK(p.sweep.mode == SweepMode::Both);
    CHECK(std::holds_alternative<QuadratureAveraging>(p.sweep.averaging));
    CHECK(p.stop.min_bit_errors == 500);
}

TEST_CASE("parse_args: rejects invalid values with nonzero status") {
    auto bad = parse({"--nc", "128", "--cluster-size", "3", "--clusters", "42"});
    CHECK_FALSE(bad.plan);
    CHECK(bad.exit_code != 0);
    CHECK(bad.message.find("power of two") != std::string::npos);

    CHECK(parse({"--mode", "fast"}).exit_code != 0);
    CHECK(parse({"--snr-step", "0"}).exit_code != 0);
    CHECK(parse({"--snr-start", "10", "--snr-stop", "5"}).exit_code != 0);
    CHECK(parse({"--min-errors", "-3"}).exit_code != 0);
    CHECK(parse({"--qam", "8"}).exit_code != 0);
    CHECK(parse({"--unknown"}).exit_code != 0);
    CHECK_FALSE(parse({"--help"}).plan);
}

TEST_CASE("parse_args: config file values yield to flags") {
    const auto path = std::filesystem::temp_directory_path() / "mcik_cli_test.cfg";
    {
        std::ofstream f(path);
        f << "nc=128\ncluster-size=8\nclusters=16\nqam=16\nseed=11\nmode=analytic\n";
    }
    const auto r = parse({"--config", path.string(), "--qam", "64"});
    std::filesystem::remove(path);
    REQUIRE(r.plan);
    CHECK(r.plan->config.cluster_size == 8);
    CHECK(r.plan->config.n_clusters == 16);
    CHECK(r.plan->config.qam_order == 64);
    CHECK(r.plan->seed == 11);
    CHECK(r.plan->sweep.mode == SweepMode::Analytic);
}

TEST_CASE("parse_args: MCIK_SEED is a fallback seed source") {
    ::setenv("MCIK_SEED", "4242", 1);
    const auto env_only = parse({});
    const auto flag_wins = parse({"--seed", "7"});
    ::unsetenv("MCIK_SEED");
    REQUIRE(env_only.plan);
    REQUIRE(flag_wins.plan);
    CHECK(env_only.plan->seed == 4242);
    CHECK(flag_wins.plan->seed == 7);
}

TEST_CASE("snr_grid") {
    CHECK(snr_grid(0, 40, 5).size() == 9);
    CHECK(snr_grid(0, 1, 0.1).size() == 11);
    CHECK(snr_grid(3, 3, 1) == std::vector<double>{3.0});
}

TEST_CASE("emit_csv: header, manifest, empty columns, row count") {
    const SystemConfig cfg{128, 4, 32, 4, 0.0};
    RunManifest m;
    m.config = cfg;
    m.mode = SweepMode::Analytic;
    SweepOptions analytic;
    analytic.mode = SweepMode::Analytic;
    const auto pts = run_sweep(cfg, snr_grid(0, 40, 5), {100, 100}, 1, analytic);
    std::ostringstream out;
    emit_csv(out, pts, m);
    const auto text = out.str();
    CHECK(text.rfind("# tool: mcik_sim", 0) == 0);
    CHECK(text.find("# config: nc=128 cluster_size=4 clusters=32 qam=4") != std::string::npos);
    const auto rows = data_rows(text);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == kCsvHeader);
    CHECK(rows[1].size() > 10);
    CHECK(rows[1].substr(rows[1].size() - 6) == ",,,,,,");

    CHECK_THROWS(emit_csv(out, {}, m));
    CHECK_THROWS_AS(emit_csv("/nonexistent-dir/x.csv", pts, m), std::runtime_error);
}

TEST_CASE("CSV round-trips every BerPoint value exactly") {
    const SystemConfig cfg{128, 2, 64, 4, 0.0};
    const auto pts = run_sweep(cfg, {0.0, 7.5, 15.0, 22.5}, {200, 4000}, 3);
    std::stringstream io;
    emit_csv(io, pts, RunManifest{});
    const auto back = read_csv(io);
    REQUIRE(back.points.size() == pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        CHECK(back.points[i].snr_db == pts[i].snr_db);
        CHECK(back.points[i].ber_bound == pts[i].ber_bound);
        CHECK(back.points[i].sim == pts[i].sim);
    }
    CHECK(back.manifest.size() == manifest_entries(RunManifest{}).size());

    BerPoint only_sim;
    only_sim.snr_db = 1.0;
    only_sim.sim = TrialStats{1, 3, 0, 1, 1.0 / 3, 0.27};
    std::stringstream io2;
    emit_csv(io2, {only_sim}, RunManifest{});
    const auto back2 = read_csv(io2);
    CHECK_FALSE(back2.points[0].ber_bound.has_value());
    CHECK(back2.points[0].sim == only_sim.sim);
}

TEST_CASE("read_csv rejects malformed input") {
    std::istringstream no_header("1,2,3\n");
    CHECK_THROWS_AS(read_csv(no_header), std::runtime_error);
    std::istringstream short_row(std::string(kCsvHeader) + "\n1.0,2.0\n");
    CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
    std::istringstream bad_number(std::string(kCsvHeader) + "\nx,,,,,,,\n");
    CHECK_THROWS_AS(read_csv(bad_number), std::runtime_error);
}

TEST_CASE("identical manifests reproduce byte-identical data rows") {
    const SystemConfig cfg{128, 8, 16, 4, 0.0};
    auto render = [&](unsigned workers) {
        SweepOptions o;
        o.run.workers = workers;
        std::ostringstream out;
        emit_csv(out, run_sweep(cfg, {5.0, 15.0}, {200, 3000}, 12, o), RunManifest{});
        return data_rows(out.str());
    };
    const auto a = render(1);
    CHECK(render(1) == a);
    CHECK(render(4) == a);
}
