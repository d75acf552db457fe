#include "magnon/exports.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include "magnon/config.hpp"
#include "magnon/version.hpp"

namespace magnon {
namespace {

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);  // binary: LF endings everywhere
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

std::string status_text(CavityMode::Status s) {
    switch (s) {
        case CavityMode::Status::Ok: return "ok";
        case CavityMode::Status::NoSolutionInBand: return "no_solution_in_band";
        case CavityMode::Status::NonConvergence: return "non_convergence";
    }
    return "unknown";
}

std::string metric_cell(const std::optional<FilterMetrics>& m, double FilterMetrics::*field) {
    return m ? format_double((*m).*field) : std::string{};
}

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

void export_dispersion_csv(const std::vector<DispersionPoint>& points,
                           const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "k_x_rad_per_cm,m,f_hz,engine\n";
    for (const auto& pt : points) {
        out << format_double(pt.k_x) << ',' << pt.m << ','
            << (pt.status == DispersionPoint::Status::Ok ? format_double(pt.f) : std::string{})
            << ',' << to_string(pt.engine) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_modes_csv(const std::vector<CavityMode>& modes, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "n,m,label,k_x,k_y,f_hz,status\n";
    for (const auto& mode : modes) {
        out << mode.n << ',' << mode.m << ',' << mode.label << ',' << format_double(mode.k_x)
            << ',' << format_double(mode.k_y) << ','
            << (mode.status == CavityMode::Status::Ok ? format_double(mode.f) : std::string{})
            << ',' << status_text(mode.status) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_response_csv(const FrequencyResponse& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "f_hz,s21_re,s21_im,s11_re,s11_im,s21_db\n";
    for (Eigen::Index i = 0; i < r.f_grid.size(); ++i) {
        const double mag = std::abs(r.s21[i]);
        const double db = mag > 0 ? 20.0 * std::log10(mag)
                                  : -std::numeric_limits<double>::infinity();
        out << format_double(r.f_grid[i]) << ',' << format_double(r.s21[i].real()) << ','
            << format_double(r.s21[i].imag()) << ',' << format_double(r.s11[i].real()) << ','
            << format_double(r.s11[i].imag()) << ',' << format_double(db) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_sweep_csv(const std::vector<SweepRow>& rows, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "h0_gauss,f_center_hz,il_db,bw3_hz,spur_suppression_db,oob_rejection_db,"
           "f_min_hz,f_max_hz\n";
    for (const auto& row : rows) {
        out << format_double(row.h0) << ',' << metric_cell(row.metrics, &FilterMetrics::f_center)
            << ',' << metric_cell(row.metrics, &FilterMetrics::il_db) << ','
            << metric_cell(row.metrics, &FilterMetrics::bw3_hz) << ','
            << metric_cell(row.metrics, &FilterMetrics::spur_suppression_db) << ','
            << metric_cell(row.metrics, &FilterMetrics::oob_rejection_db) << ','
            << format_double(row.f_min) << ',' << format_double(row.f_max) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_optimize_csv(const std::vector<ApodizationScore>& table,
                         const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "hc_x_cm,hc_y_cm,f_center_hz,il_db,bw3_hz,spur_suppression_db,oob_rejection_db,"
           "ripple_db,score,status\n";
    for (const auto& cell : table) {
        out << format_double(cell.hc_x) << ',' << format_double(cell.hc_y) << ','
            << metric_cell(cell.metrics, &FilterMetrics::f_center) << ','
            << metric_cell(cell.metrics, &FilterMetrics::il_db) << ','
            << metric_cell(cell.metrics, &FilterMetrics::bw3_hz) << ','
            << metric_cell(cell.metrics, &FilterMetrics::spur_suppression_db) << ','
            << metric_cell(cell.metrics, &FilterMetrics::oob_rejection_db) << ','
            << format_double(cell.ripple_db) << ',' << format_double(cell.score) << ','
            << cell.status << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_compare_csv(const std::vector<CompareRow>& rows, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "shape,f_center_hz,il_db,bw3_hz,spur_suppression_db,oob_rejection_db\n";
    for (const auto& row : rows) {
        out << row.shape << ',' << metric_cell(row.metrics, &FilterMetrics::f_center) << ','
            << metric_cell(row.metrics, &FilterMetrics::il_db) << ','
            << metric_cell(row.metrics, &FilterMetrics::bw3_hz) << ','
            << metric_cell(row.metrics, &FilterMetrics::spur_suppression_db) << ','
            << metric_cell(row.metrics, &FilterMetrics::oob_rejection_db) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

void export_touchstone(const FrequencyResponse& r, const std::filesystem::path& path) {
    auto out = open_out(path);
    out << "# HZ S RI R 50\n";
    for (Eigen::Index i = 0; i < r.f_grid.size(); ++i) {
        const auto& s21 = r.s21[i];
        const auto& s11 = r.s11[i];
        out << format_double(r.f_grid[i]) << ' ' << format_double(s11.real()) << ' '
            << format_double(s11.imag()) << ' ' << format_double(s21.real()) << ' '
            << format_double(s21.imag()) << ' ' << format_double(s21.real()) << ' '
            << format_double(s21.imag()) << ' ' << format_double(s11.real()) << ' '
            << format_double(s11.imag()) << '\n';
    }
    if (!out) throw IoError("write failure on " + path.string());
}

FrequencyResponse parse_touchstone(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    std::vector<double> f;
    std::vector<std::complex<double>> s21, s11;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '!' || line[0] == '#') continue;
        std::istringstream ss(line);
        double freq, re11, im11, re21, im21, re12, im12, re22, im22;
        if (!(ss >> freq >> re11 >> im11 >> re21 >> im21 >> re12 >> im12 >> re22 >> im22)) {
            throw IoError("malformed Touchstone data line in " + path.string());
        }
        f.push_back(freq);
        s11.emplace_back(re11, im11);
        s21.emplace_back(re21, im21);
    }
    FrequencyResponse r;
    r.f_grid = Eigen::Map<const Eigen::ArrayXd>(f.data(), static_cast<Eigen::Index>(f.size()));
    r.s21 = Eigen::Map<const Eigen::ArrayXcd>(s21.data(), static_cast<Eigen::Index>(s21.size()));
    r.s11 = Eigen::Map<const Eigen::ArrayXcd>(s11.data(), static_cast<Eigen::Index>(s11.size()));
    return r;
}

RunManifest make_manifest(const std::string& command, const DeviceConfig& cfg,
                          const nlohmann::json& args) {
    RunManifest m;
    m.command = command;
    m.config = device_config_to_json(cfg);
    m.args = args;
    m.version = kVersion;

    const std::string canon = command + '\n' + m.config.dump() + '\n' + args.dump();
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : canon) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
    m.input_digest = buf;

    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char ts[32];
    std::strftime(ts, sizeof(ts), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    m.timestamp = ts;
    return m;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& output_path) {
    nlohmann::json j{{"command", manifest.command},
                     {"config", manifest.config},
                     {"args", manifest.args},
                     {"version", manifest.version},
                     {"input_digest", manifest.input_digest},
                     {"timestamp", manifest.timestamp}};
    if (!manifest.notes.empty()) j["notes"] = manifest.notes;
    auto path = output_path;
    path += ".manifest.json";
    auto out = open_out(path);
    out << j.dump(2) << '\n';
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace magnon
