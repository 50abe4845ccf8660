#include "mcik/report.hpp"

#include <fmt/format.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcik {

namespace {

std::string averaging_description(const AveragingMethod& m) {
    if (const auto* q = std::get_if<QuadratureAveraging>(&m)) {
        return fmt::format("quadrature nodes={}", q->nodes);
    }
    const auto& mc = std::get<MonteCarloAveraging>(m);
    return fmt::format("mc samples={} seed={}", mc.samples, mc.seed);
}

std::vector<std::string> split_commas(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_double(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(fmt::format("line {}: bad number '{}'", line_no, s));
    }
}

std::int64_t parse_int(const std::string& s, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(fmt::format("line {}: bad integer '{}'", line_no, s));
    }
}

}  // namespace

std::string current_utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::vector<std::pair<std::string, std::string>> manifest_entries(const RunManifest& m) {
    const auto& c = m.config;
    return {
        {"tool", "mcik_sim " + m.tool_version},
        {"timestamp", m.timestamp.empty() ? current_utc_timestamp() : m.timestamp},
        {"config", fmt::format("nc={} cluster_size={} clusters={} qam={} index_mapping={}",
                               c.n_subcarriers, c.cluster_size, c.n_clusters, c.qam_order,
                               to_string(c.index_mapping))},
        {"seed", std::to_string(m.seed)},
        {"stop", fmt::format("min_errors={} max_blocks={}", m.stop.min_bit_errors, m.stop.max_blocks)},
        {"mode", to_string(m.mode)},
        {"averaging", averaging_description(m.averaging)},
        {"correct_detection",
         m.model == CorrectDetectionModel::ProductOfPeps ? "product" : "union"},
    };
}

std::string format_csv_row(const BerPoint& p) {
    std::string row = fmt::format("{:.16e},", p.snr_db);
    if (p.ber_bound) row += fmt::format("{:.16e}", *p.ber_bound);
    row += ',';
    if (p.sim) {
        const auto& s = *p.sim;
        row += fmt::format("{:.16e},{:.16e},{},{},{},{}", s.ber, s.std_error, s.index_bit_errors,
                           s.symbol_bit_errors, s.total_bits, s.blocks);
    } else {
        row += ",,,,,";
    }
    return row;
}

void emit_csv(std::ostream& out, const std::vector<BerPoint>& points, const RunManifest& manifest) {
    if (points.empty()) throw std::runtime_error("emit_csv: no points to write");
    for (const auto& [key, value] : manifest_entries(manifest)) out << "# " << key << ": " << value << '\n';
    out << kCsvHeader << '\n';
    for (const auto& p : points) out << format_csv_row(p) << '\n';
}

void emit_csv(const std::string& path, const std::vector<BerPoint>& points,
              const RunManifest& manifest) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
    emit_csv(f, points, manifest);
    f.flush();
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

CsvResult read_csv(std::istream& in) {
    CsvResult result;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto colon = line.find(':');
            if (colon != std::string::npos) {
                auto key = line.substr(1, colon - 1);
                auto value = line.substr(colon + 1);
                key.erase(0, key.find_first_not_of(' '));
                value.erase(0, value.find_first_not_of(' '));
                result.manifest.emplace_back(key, value);
            }
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw std::runtime_error(fmt::format("line {}: unexpected header '{}'", line_no, line));
            }
            header_seen = true;
            continue;
        }
        const auto f = split_commas(line);
        if (f.size() != 8) {
            throw std::runtime_error(fmt::format("line {}: expected 8 fields, got {}", line_no, f.size()));
        }
        BerPoint p;
        p.snr_db = parse_double(f[0], line_no);
        if (!f[1].empty()) p.ber_bound = parse_double(f[1], line_no);
        if (!f[2].empty()) {
            TrialStats s;
            s.ber = parse_double(f[2], line_no);
            s.std_error = parse_double(f[3], line_no);
            s.index_bit_errors = parse_int(f[4], line_no);
            s.symbol_bit_errors = parse_int(f[5], line_no);
            s.total_bits = parse_int(f[6], line_no);
            s.blocks = parse_int(f[7], line_no);
            p.sim = s;
        }
        result.points.push_back(std::move(p));
    }
    if (!header_seen) throw std::runtime_error("CSV header not found");
    return result;
}

CsvResult read_csv_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open '" + path + "'");
    return read_csv(f);
}

}  // namespace mcik
