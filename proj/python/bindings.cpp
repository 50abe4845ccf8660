#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include "mcik/analytic.hpp"
#include "mcik/averaging.hpp"
#include "mcik/core.hpp"
#include "mcik/monte_carlo.hpp"
#include "mcik/report.hpp"

namespace py = pybind11;
using namespace mcik;

namespace {

AveragingMethod averaging_of(const std::string& method, int nodes, std::int64_t samples,
                             std::uint64_t seed) {
    if (method == "quadrature") return QuadratureAveraging{nodes};
    if (method == "mc") return MonteCarloAveraging{samples, seed};
    throw ConfigError("averaging must be 'quadrature' or 'mc', got '" + method + "'");
}

RunManifest manifest_of(const SystemConfig& cfg, std::uint64_t seed, const StoppingRule& stop,
                        const std::string& mode) {
    RunManifest m;
    m.config = cfg;
    m.seed = seed;
    m.stop = stop;
    m.mode = sweep_mode_from_string(mode);
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "MCIK-OFDM simulator core";
    m.attr("__version__") = MCIK_VERSION;

    py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

    py::enum_<IndexMapping>(m, "IndexMapping")
        .value("NaturalBinary", IndexMapping::NaturalBinary)
        .value("Gray", IndexMapping::Gray);

    py::enum_<CorrectDetectionModel>(m, "CorrectDetectionModel")
        .value("ProductOfPeps", CorrectDetectionModel::ProductOfPeps)
        .value("UnionComplement", CorrectDetectionModel::UnionComplement);

    py::class_<SystemConfig>(m, "SystemConfig")
        .def(py::init([](int nc, int cluster_size, int clusters, int qam, double snr_db,
                         IndexMapping mapping) {
                 return SystemConfig{nc, cluster_size, clusters, qam, snr_db, mapping};
             }),
             py::arg("n_subcarriers") = 128, py::arg("cluster_size") = 2, py::arg("n_clusters") = 64,
             py::arg("qam_order") = 4, py::arg("snr_db") = 10.0,
             py::arg("index_mapping") = IndexMapping::NaturalBinary)
        .def_readwrite("n_subcarriers", &SystemConfig::n_subcarriers)
        .def_readwrite("cluster_size", &SystemConfig::cluster_size)
        .def_readwrite("n_clusters", &SystemConfig::n_clusters)
        .def_readwrite("qam_order", &SystemConfig::qam_order)
        .def_readwrite("snr_db", &SystemConfig::snr_db)
        .def_readwrite("index_mapping", &SystemConfig::index_mapping)
        .def(py::self == py::self)
        .def("__repr__", [](const SystemConfig& c) {
            return "SystemConfig(n_subcarriers=" + std::to_string(c.n_subcarriers) +
                   ", cluster_size=" + std::to_string(c.cluster_size) +
                   ", n_clusters=" + std::to_string(c.n_clusters) +
                   ", qam_order=" + std::to_string(c.qam_order) +
                   ", snr_db=" + std::to_string(c.snr_db) + ")";
        });

    m.def("validate_config", &validate_config, py::arg("config"));
    m.def(
        "bits_per_block",
        [](const SystemConfig& c) {
            const auto b = bits_per_block(c);
            return py::make_tuple(b.index_bits, b.symbol_bits, b.total_bits);
        },
        py::arg("config"), "(index_bits, symbol_bits, total_bits) per OFDM block.");

    py::class_<QamBerConstants>(m, "QamBerConstants")
        .def_readonly("order", &QamBerConstants::order)
        .def_readonly("theta", &QamBerConstants::theta)
        .def_readonly("weights", &QamBerConstants::weights)
        .def_readonly("scales", &QamBerConstants::scales);

    m.def("qam_ber_constants", &qam_ber_constants, py::arg("order"));
    m.def("q_function", &q_function, py::arg("x"));
    m.def("pep_conditional", &pep_conditional, py::arg("gamma"), py::arg("rho"));
    m.def("me0_cluster", &me0_cluster, py::arg("gamma"), py::arg("rho"), py::arg("cluster_size"));
    m.def(
        "me1_cluster",
        [](double gamma, double rho, int n, int order, CorrectDetectionModel model) {
            return me1_cluster(gamma, rho, n, qam_ber_constants(order), model);
        },
        py::arg("gamma"), py::arg("rho"), py::arg("cluster_size"), py::arg("qam_order"),
        py::arg("model") = CorrectDetectionModel::ProductOfPeps);
    m.def("qam_awgn_ber", py::overload_cast<double, double, int>(&qam_awgn_ber), py::arg("gamma"),
          py::arg("rho"), py::arg("order"));
    m.def(
        "ber_bound",
        [](const std::vector<double>& gammas, const SystemConfig& cfg, CorrectDetectionModel model) {
            return ber_bound(gammas, cfg, qam_ber_constants(cfg.qam_order), model);
        },
        py::arg("gammas"), py::arg("config"), py::arg("model") = CorrectDetectionModel::ProductOfPeps);

    py::class_<AveragedBound>(m, "AveragedBound")
        .def_readonly("value", &AveragedBound::value)
        .def_readonly("std_error", &AveragedBound::std_error);

    m.def(
        "average_ber_bound",
        [](double rho, const SystemConfig& cfg, const std::string& method, int nodes,
           std::int64_t samples, std::uint64_t seed, CorrectDetectionModel model) {
            return average_ber_bound(rho, cfg, qam_ber_constants(cfg.qam_order),
                                     averaging_of(method, nodes, samples, seed), model);
        },
        py::arg("rho"), py::arg("config"), py::arg("method") = "quadrature", py::arg("nodes") = 64,
        py::arg("samples") = 100000, py::arg("seed") = 1,
        py::arg("model") = CorrectDetectionModel::ProductOfPeps);

    py::class_<StoppingRule>(m, "StoppingRule")
        .def(py::init([](std::int64_t min_errors, std::int64_t max_blocks) {
                 return StoppingRule{min_errors, max_blocks};
             }),
             py::arg("min_bit_errors") = 500, py::arg("max_blocks") = 1'000'000)
        .def_readwrite("min_bit_errors", &StoppingRule::min_bit_errors)
        .def_readwrite("max_blocks", &StoppingRule::max_blocks);

    py::class_<TrialStats>(m, "TrialStats")
        .def_readonly("blocks", &TrialStats::blocks)
        .def_readonly("total_bits", &TrialStats::total_bits)
        .def_readonly("index_bit_errors", &TrialStats::index_bit_errors)
        .def_readonly("symbol_bit_errors", &TrialStats::symbol_bit_errors)
        .def_readonly("ber", &TrialStats::ber)
        .def_readonly("std_error", &TrialStats::std_error)
        .def(py::self == py::self);

    py::class_<BerPoint>(m, "BerPoint")
        .def_readonly("snr_db", &BerPoint::snr_db)
        .def_readonly("ber_bound", &BerPoint::ber_bound)
        .def_readonly("sim", &BerPoint::sim);

    m.def(
        "run_point",
        [](const SystemConfig& cfg, const StoppingRule& stop, std::uint64_t seed, unsigned workers) {
            py::gil_scoped_release release;
            return run_point(cfg, stop, seed, RunOptions{workers});
        },
        py::arg("config"), py::arg("stop") = StoppingRule{}, py::arg("seed") = 1,
        py::arg("workers") = 1);

    m.def(
        "run_sweep",
        [](const SystemConfig& cfg, const std::vector<double>& snr_db, const StoppingRule& stop,
           std::uint64_t seed, const std::string& mode, unsigned workers) {
            SweepOptions opt;
            opt.mode = sweep_mode_from_string(mode);
            opt.run.workers = workers;
            py::gil_scoped_release release;
            return run_sweep(cfg, snr_db, stop, seed, opt);
        },
        py::arg("config"), py::arg("snr_db"), py::arg("stop") = StoppingRule{}, py::arg("seed") = 1,
        py::arg("mode") = "both", py::arg("workers") = 1);

    m.def(
        "write_csv",
        [](const std::string& path, const std::vector<BerPoint>& points, const SystemConfig& cfg,
           std::uint64_t seed, const StoppingRule& stop, const std::string& mode) {
            emit_csv(path, points, manifest_of(cfg, seed, stop, mode));
        },
        py::arg("path"), py::arg("points"), py::arg("config"), py::arg("seed") = 1,
        py::arg("stop") = StoppingRule{}, py::arg("mode") = "both");

    m.def(
        "read_csv",
        [](const std::string& path) {
            auto r = read_csv_file(path);
            py::dict manifest;
            for (const auto& [k, v] : r.manifest) manifest[py::str(k)] = v;
            return py::make_tuple(manifest, r.points);
        },
        py::arg("path"), "Returns (manifest dict, list of BerPoint).");
}
