// magnon — command-line surface of the MSSW filter toolkit.
//
// Numeric flags use display units (Gauss, um, GHz; wavenumbers in rad/cm)
// and are converted once at this boundary to the internal CGS system; the
// run manifest records both. Exit codes: 0 success, 2 usage error,
// 3 validation error, 4 numerical failure, 5 I/O error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magnon/config.hpp"
#include "magnon/exports.hpp"
#include "magnon/version.hpp"

namespace {

using namespace magnon;

constexpr double kUm = 1e-4;   // um -> cm
constexpr double kGHz = 1e9;   // GHz -> Hz

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto dots = token.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(token.substr(0, dots));
            const int hi = std::stoi(token.substr(dots + 2));
            if (hi < lo) throw ValidationError("descending range in '" + token + "'");
            for (int v = lo; v <= hi; ++v) out.push_back(v);
        } else if (!token.empty()) {
            out.push_back(std::stoi(token));
        }
    }
    if (out.empty()) throw ValidationError("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (!token.empty()) out.push_back(std::stod(token));
    }
    if (out.empty()) throw ValidationError("empty list");
    return out;
}

// "start:stop:step" in um -> Range in cm.
Range parse_um_range(const std::string& text) {
    std::stringstream ss(text);
    std::string a, b, c;
    if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c)) {
        throw ValidationError("range must be start:stop:step, got '" + text + "'");
    }
    return Range{std::stod(a) * kUm, std::stod(b) * kUm, std::stod(c) * kUm};
}

DeviceConfig load_config(const std::string& path) {
    if (path.empty()) return DeviceConfig{};
    return parse_device_config(path);
}

int resolve_jobs(int flag_jobs) {
    if (flag_jobs > 0) return flag_jobs;
    if (const char* env = std::getenv("MAGNON_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void add_engine_note(RunManifest& manifest, Engine engine, int m_max) {
    if (engine == Engine::Paper && m_max > 1) {
        manifest.notes.push_back(
            "width-mode ordering: the dipole-exchange engine places higher width orders above "
            "the fundamental; the band-anchored de_width engine is the synthesis default (see "
            "README, Model notes)");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thin-film MSSW cavity filter design toolkit"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // -- dispersion ----------------------------------------------------------
    auto* disp = app.add_subcommand("dispersion", "export dispersion curves");
    double d_h0 = 2500.0;
    std::string d_m = "0";
    double d_kmin = 10.0, d_kmax = 2000.0;
    int d_ksteps = 200;
    std::string d_engine = "de";
    std::string d_out;
    disp->add_option("--h0", d_h0, "bias field, Gauss");
    disp->add_option("--m", d_m, "width orders, list or a..b range (default 0)");
    disp->add_option("--k-min", d_kmin, "lowest k_x, rad/cm");
    disp->add_option("--k-max", d_kmax, "highest k_x, rad/cm");
    disp->add_option("--k-steps", d_ksteps, "number of grid points");
    disp->add_option("--engine", d_engine, "paper|de|de_width");
    disp->add_option("--out", d_out, "output CSV")->required();

    // -- modes ---------------------------------------------------------------
    auto* modes_cmd = app.add_subcommand("modes", "enumerate cavity modes");
    std::string m_config;
    double m_h0 = 2500.0;
    int m_nmax = -1, m_mmax = -1;
    std::string m_out;
    modes_cmd->add_option("--config", m_config, "device config JSON");
    modes_cmd->add_option("--h0", m_h0, "bias field, Gauss");
    modes_cmd->add_option("--n-max", m_nmax, "max primary order (default from config)");
    modes_cmd->add_option("--m-max", m_mmax, "max width order (default from config)");
    modes_cmd->add_option("--out", m_out, "output CSV")->required();

    // -- response ------------------------------------------------------------
    auto* resp = app.add_subcommand("response", "synthesize S-parameters");
    std::string r_config;
    double r_h0 = 2500.0;
    double r_fstart = 0.0, r_fstop = 0.0;
    int r_points = 4001;
    std::string r_out, r_touchstone;
    resp->add_option("--config", r_config, "device config JSON");
    resp->add_option("--h0", r_h0, "bias field, Gauss");
    resp->add_option("--f-start", r_fstart, "grid start, GHz (0 = band minus 1.5 GHz)");
    resp->add_option("--f-stop", r_fstop, "grid stop, GHz (0 = band plus 1.5 GHz)");
    resp->add_option("--points", r_points, "grid points");
    resp->add_option("--out", r_out, "output CSV")->required();
    resp->add_option("--touchstone", r_touchstone, "also write a two-port .s2p");

    // -- sweep ----------------------------------------------------------------
    auto* sweep_cmd = app.add_subcommand("sweep", "field sweep with metrics");
    std::string s_config, s_h0_list, s_out;
    int s_points = 4001;
    int s_jobs = 0;
    sweep_cmd->add_option("--config", s_config, "device config JSON");
    sweep_cmd->add_option("--h0-list", s_h0_list, "comma list of fields, Gauss")->required();
    sweep_cmd->add_option("--points", s_points, "grid points per field");
    sweep_cmd->add_option("--jobs", s_jobs, "worker threads (or MAGNON_JOBS)");
    sweep_cmd->add_option("--out", s_out, "output CSV")->required();

    // -- optimize -------------------------------------------------------------
    auto* opt = app.add_subcommand("optimize", "grid-search cone apodization");
    std::string o_config, o_hcx = "40:70:5", o_hcy = "60:140:20", o_out;
    double o_h0 = 7500.0;
    int o_jobs = 0;
    opt->add_option("--config", o_config, "device config JSON");
    opt->add_option("--h0", o_h0, "bias field, Gauss");
    opt->add_option("--hcx", o_hcx, "hc_x grid start:stop:step, um");
    opt->add_option("--hcy", o_hcy, "hc_y grid start:stop:step, um");
    opt->add_option("--jobs", o_jobs, "worker threads (or MAGNON_JOBS)");
    opt->add_option("--out", o_out, "output CSV")->required();

    // -- compare ---------------------------------------------------------------
    auto* cmp = app.add_subcommand("compare", "metrics across transducer shapes");
    std::string c_config, c_shapes = "straight,half_cone,full_cone,extended_cone", c_out;
    double c_h0 = 2500.0;
    int c_points = 4001;
    cmp->add_option("--config", c_config, "device config JSON");
    cmp->add_option("--h0", c_h0, "bias field, Gauss");
    cmp->add_option("--shapes", c_shapes, "comma list of shapes");
    cmp->add_option("--points", c_points, "grid points");
    cmp->add_option("--out", c_out, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (disp->parsed()) {
            DeviceConfig cfg;  // dispersion uses the default film; bias from the flag
            const BiasField bias{d_h0};
            const Engine engine = engine_from_string(d_engine);
            if (d_ksteps < 1 || !(d_kmax > d_kmin) || d_kmin < 0) {
                throw ValidationError("bad k grid specification");
            }
            std::vector<double> k_grid(static_cast<std::size_t>(d_ksteps));
            for (int i = 0; i < d_ksteps; ++i) {
                k_grid[static_cast<std::size_t>(i)] =
                    d_kmin + (d_kmax - d_kmin) * i / std::max(1, d_ksteps - 1);
            }
            std::vector<DispersionPoint> points;
            for (int m : parse_int_list(d_m)) {
                auto curve = dispersion_curve(cfg.film, bias, m, k_grid, engine);
                points.insert(points.end(), curve.begin(), curve.end());
            }
            export_dispersion_csv(points, d_out);
            auto manifest = make_manifest(
                "dispersion", cfg,
                {{"h0_gauss", d_h0}, {"m", d_m}, {"k_min_rad_per_cm", d_kmin},
                 {"k_max_rad_per_cm", d_kmax}, {"k_steps", d_ksteps}, {"engine", d_engine},
                 {"out", d_out}});
            add_engine_note(manifest, engine, 2);
            write_manifest(manifest, d_out);
        } else if (modes_cmd->parsed()) {
            DeviceConfig cfg = load_config(m_config);
            const BiasField bias{m_h0};
            const int n_max = m_nmax > 0 ? m_nmax : cfg.solver.n_max;
            const int m_max = m_mmax > 0 ? m_mmax : cfg.solver.m_max;
            const auto modes = enumerate_modes(cfg.film, bias, n_max, m_max, cfg.solver.engine);
            export_modes_csv(modes, m_out);
            auto manifest = make_manifest(
                "modes", cfg,
                {{"config", m_config}, {"h0_gauss", m_h0}, {"n_max", n_max}, {"m_max", m_max},
                 {"out", m_out}});
            add_engine_note(manifest, cfg.solver.engine, m_max);
            write_manifest(manifest, m_out);
        } else if (resp->parsed()) {
            DeviceConfig cfg = load_config(r_config);
            const BiasField bias{r_h0};
            const auto bounds = resonance_bounds(cfg.film, bias);
            const double f_lo = r_fstart > 0 ? r_fstart * kGHz
                                             : std::max(1.0, bounds.f_min - 1.5e9);
            const double f_hi = r_fstop > 0 ? r_fstop * kGHz : bounds.f_max + 1.5e9;
            if (!(f_hi > f_lo) || r_points < 2) throw ValidationError("bad frequency grid");
            const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(r_points, f_lo, f_hi);
            const auto response = synthesize_response(cfg, bias, grid);
            export_response_csv(response, r_out);
            if (!r_touchstone.empty()) export_touchstone(response, r_touchstone);
            auto manifest = make_manifest(
                "response", cfg,
                {{"config", r_config}, {"h0_gauss", r_h0}, {"f_start_ghz", r_fstart},
                 {"f_stop_ghz", r_fstop}, {"f_start_hz", f_lo}, {"f_stop_hz", f_hi},
                 {"points", r_points}, {"out", r_out}, {"touchstone", r_touchstone}});
            add_engine_note(manifest, cfg.solver.engine, cfg.solver.m_max);
            write_manifest(manifest, r_out);
        } else if (sweep_cmd->parsed()) {
            DeviceConfig cfg = load_config(s_config);
            const auto fields = parse_double_list(s_h0_list);
            SweepRule rule;
            rule.points = s_points;
            const auto rows = field_sweep(cfg, fields, rule, resolve_jobs(s_jobs));
            export_sweep_csv(rows, s_out);
            write_manifest(make_manifest("sweep", cfg,
                                         {{"config", s_config}, {"h0_list_gauss", s_h0_list},
                                          {"points", s_points}, {"out", s_out}}),
                           s_out);
        } else if (opt->parsed()) {
            DeviceConfig cfg = load_config(o_config);
            const BiasField bias{o_h0};
            const Range hcx = parse_um_range(o_hcx);
            const Range hcy = parse_um_range(o_hcy);
            const auto result = optimize_apodization(cfg, hcx, hcy, bias, resolve_jobs(o_jobs));
            export_optimize_csv(result.table, o_out);
            auto manifest = make_manifest(
                "optimize", cfg,
                {{"config", o_config}, {"h0_gauss", o_h0}, {"hcx_um", o_hcx}, {"hcy_um", o_hcy},
                 {"out", o_out},
                 {"best_hc_x_cm", result.best.hc_x}, {"best_hc_y_cm", result.best.hc_y}});
            write_manifest(manifest, o_out);
            std::cout << "best hc_x = " << result.best.hc_x / kUm
                      << " um, hc_y = " << result.best.hc_y / kUm << " um\n";
        } else if (cmp->parsed()) {
            DeviceConfig cfg = load_config(c_config);
            const BiasField bias{c_h0};
            const auto bounds = resonance_bounds(cfg.film, bias);
            const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(
                c_points, std::max(1.0, bounds.f_min - 1.5e9), bounds.f_max + 1.5e9);
            std::vector<CompareRow> rows;
            std::stringstream ss(c_shapes);
            std::string token;
            while (std::getline(ss, token, ',')) {
                if (token.empty()) continue;
                CompareRow row;
                row.shape = token;
                DeviceConfig local = cfg;
                local.transducer.shape = shape_from_string(token);
                if (local.transducer.shape == Shape::ExtendedCone) {
                    if (local.transducer.extended_asymmetry == 0.0) {
                        local.transducer.extended_asymmetry = local.transducer.hc_y / 2.0;
                    }
                } else {
                    local.transducer.extended_asymmetry = 0.0;
                }
                try {
                    local.validate();
                    const auto response = synthesize_response(local, bias, grid);
                    const auto modes = enumerate_modes(local.film, bias, local.solver.n_max,
                                                       local.solver.m_max, local.solver.engine);
                    row.metrics = extract_metrics(response, modes);
                } catch (const Error& e) {
                    row.status = e.what();
                }
                rows.push_back(std::move(row));
            }
            export_compare_csv(rows, c_out);
            write_manifest(make_manifest("compare", cfg,
                                         {{"config", c_config}, {"h0_gauss", c_h0},
                                          {"shapes", c_shapes}, {"points", c_points},
                                          {"out", c_out}}),
                           c_out);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::Validation: return 3;
            case ErrorKind::Numerical: return 4;
            case ErrorKind::Io: return 5;
        }
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
