#include "magnon/response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

namespace magnon {
namespace {

constexpr double kSpurWindowBelowHz = 1e9;
constexpr double kOobPadHz = 1e9;

std::vector<const CavityMode*> solved_modes(const std::vector<CavityMode>& modes) {
    std::vector<const CavityMode*> out;
    for (const auto& m : modes) {
        if (m.status == CavityMode::Status::Ok) out.push_back(&m);
    }
    return out;
}

// Runs fn(i) for i in [0, count) on `jobs` workers, sharded by index so the
// result layout is independent of scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
            for (int i = w; i < count; i += jobs) fn(i);
        });
    }
    for (auto& t : workers) t.join();
}

}  // namespace

void DeviceConfig::validate() const {
    film.validate();
    transducer.validate(film.width);
    if (cavities != 1 && cavities != 2) throw ValidationError("cavities must be 1 or 2");
    if (!(port_impedance > 0)) throw ValidationError("port_impedance must be positive");
    if (electrode_r < 0) throw ValidationError("electrode_r must be non-negative");
    if (electrode_l < 0) throw ValidationError("electrode_l must be non-negative");
    if (solver.n_max < 1 || solver.m_max < 1) {
        throw ValidationError("solver.n_max and solver.m_max must be >= 1");
    }
}

std::complex<double> electrode_impedance(const DeviceConfig& cfg, double f_hz) {
    if (!(f_hz > 0)) throw NonPositiveFrequency(f_hz);
    const std::complex<double> z{cfg.electrode_r, 2.0 * M_PI * f_hz * cfg.electrode_l};
    return z / static_cast<double>(cfg.cavities);
}

double mismatch_factor(std::complex<double> z, double z0) {
    if (!(z0 > 0)) throw ValidationError("mismatch_factor requires z0 > 0");
    const std::complex<double> denom = z + z0;
    if (std::abs(denom) < 1e-12 * z0) throw DegenerateLoad("load equals -z0");
    if (z.real() < 0) throw ValidationError("mismatch_factor requires Re(z) >= 0");
    const std::complex<double> gamma = (z - z0) / denom;
    return 1.0 - std::norm(gamma);
}

FrequencyResponse synthesize_response(const DeviceConfig& cfg, const BiasField& bias,
                                      const Eigen::ArrayXd& f_grid) {
    if (f_grid.size() < 2) throw ValidationError("f_grid needs at least 2 points");
    for (Eigen::Index i = 0; i + 1 < f_grid.size(); ++i) {
        if (!(f_grid[i] < f_grid[i + 1])) throw ValidationError("f_grid must be strictly increasing");
    }

    const auto modes =
        enumerate_modes(cfg.film, bias, cfg.solver.n_max, cfg.solver.m_max, cfg.solver.engine);
    const auto solved = solved_modes(modes);
    if (solved.empty()) throw EmptyModeSet("no cavity mode solved in-band");
    const CouplingSpectrum couplings = mode_coupling(cfg.transducer, cfg.film, modes);

    const Eigen::Index n_pts = f_grid.size();
    Eigen::ArrayXcd sum = Eigen::ArrayXcd::Zero(n_pts);
    const std::complex<double> i_unit{0.0, 1.0};
    for (const CavityMode* mode : solved) {
        const double weight = std::norm(couplings.at(mode->n, mode->m));
        if (weight == 0.0) continue;
        const double f0 = mode->f;
        const double two_q = 2.0 * cfg.film.q_loaded;
        sum += weight / (1.0 + i_unit * (two_q * (f_grid - f0) / f0));
    }

    FrequencyResponse r;
    r.f_grid = f_grid;
    r.s21.resize(n_pts);
    r.s11.resize(n_pts);
    for (Eigen::Index i = 0; i < n_pts; ++i) {
        const std::complex<double> z = electrode_impedance(cfg, f_grid[i]);
        const double mm = mismatch_factor(z, cfg.port_impedance);
        std::complex<double> s21 = mm * sum[i];
        const double mag = std::abs(s21);
        if (mag > 1.0) s21 /= mag;  // passivity clamp
        const std::complex<double> gamma = (z - cfg.port_impedance) / (z + cfg.port_impedance);
        r.s21[i] = s21;
        r.s11[i] = gamma * std::sqrt(std::max(0.0, 1.0 - std::norm(s21)));
    }

    const auto bounds = resonance_bounds(cfg.film, bias);
    r.band_min = bounds.f_min;
    r.band_max = bounds.f_max;
    r.q_loaded = cfg.film.q_loaded;
    r.config_digest = config_digest(cfg);
    return r;
}

FilterMetrics extract_metrics(const FrequencyResponse& r,
                              const std::vector<CavityMode>& passband_modes) {
    const Eigen::ArrayXd mags = r.s21.abs();
    Eigen::Index i_peak = 0;
    const double peak = mags.maxCoeff(&i_peak);
    if (peak < 1e-6) throw NoPassband("max |S21| below 1e-6");

    FilterMetrics out;
    out.f_center = r.f_grid[i_peak];
    out.il_db = -20.0 * std::log10(peak);

    const double thr = peak * std::pow(10.0, -3.0 / 20.0);
    Eigen::Index lo = i_peak;
    while (lo > 0 && mags[lo - 1] >= thr) --lo;
    Eigen::Index hi = i_peak;
    while (hi + 1 < mags.size() && mags[hi + 1] >= thr) ++hi;
    double f_lo = r.f_grid[lo];
    double f_hi = r.f_grid[hi];
    // sub-grid edges by linear interpolation onto the threshold crossing
    if (lo > 0 && mags[lo - 1] < thr) {
        const double t = (thr - mags[lo - 1]) / (mags[lo] - mags[lo - 1]);
        f_lo = r.f_grid[lo - 1] + t * (r.f_grid[lo] - r.f_grid[lo - 1]);
    }
    if (hi + 1 < mags.size() && mags[hi + 1] < thr) {
        const double t = (thr - mags[hi + 1]) / (mags[hi] - mags[hi + 1]);
        f_hi = r.f_grid[hi + 1] + t * (r.f_grid[hi] - r.f_grid[hi + 1]);
    }
    out.bw3_hz = f_hi - f_lo;

    std::vector<double> family;
    for (const auto& mode : passband_modes) {
        if (mode.m == 1 && mode.status == CavityMode::Status::Ok) family.push_back(mode.f);
    }

    const double spur_lo = r.band_min - kSpurWindowBelowHz;
    double spur_peak = 0.0;
    bool spur_seen = false;
    for (Eigen::Index i = 0; i < mags.size(); ++i) {
        const double f = r.f_grid[i];
        if (f < spur_lo || f > r.band_max) continue;
        if (std::abs(f - out.f_center) <= 2.0 * out.bw3_hz) continue;
        bool in_family_footprint = false;
        for (double fj : family) {
            const double radius =
                r.q_loaded > 0 ? std::max(2.0 * out.bw3_hz, 8.0 * fj / r.q_loaded)
                               : 2.0 * out.bw3_hz;
            if (std::abs(f - fj) <= radius) {
                in_family_footprint = true;
                break;
            }
        }
        if (in_family_footprint) continue;
        spur_seen = true;
        spur_peak = std::max(spur_peak, mags[i]);
    }
    out.spur_suppression_db = (spur_seen && spur_peak > 0.0)
                                  ? 20.0 * std::log10(peak / spur_peak)
                                  : std::numeric_limits<double>::infinity();

    std::vector<double> stopband;
    for (Eigen::Index i = 0; i < mags.size(); ++i) {
        const double f = r.f_grid[i];
        if (f < spur_lo || f > r.band_max + kOobPadHz) stopband.push_back(mags[i]);
    }
    if (stopband.empty()) {
        out.oob_rejection_db = std::numeric_limits<double>::infinity();
    } else {
        std::sort(stopband.begin(), stopband.end());
        const auto idx = static_cast<std::size_t>(
            std::floor(0.95 * static_cast<double>(stopband.size() - 1)));
        const double floor_level = std::max(stopband[idx], 1e-30);
        out.oob_rejection_db = 20.0 * std::log10(peak / floor_level);
    }
    return out;
}

std::vector<SweepRow> field_sweep(const DeviceConfig& cfg, const std::vector<double>& h_list,
                                  const SweepRule& rule, int jobs) {
    if (h_list.empty()) throw ValidationError("field sweep needs a non-empty field list");
    for (double h : h_list) {
        if (!(h > 0)) throw NonPositiveField(h);
    }
    if (rule.points < 2) throw ValidationError("sweep rule needs at least 2 grid points");

    std::vector<SweepRow> rows(h_list.size());
    parallel_for(static_cast<int>(h_list.size()), jobs, [&](int i) {
        SweepRow& row = rows[static_cast<std::size_t>(i)];
        row.h0 = h_list[static_cast<std::size_t>(i)];
        const BiasField bias{row.h0};
        const auto bounds = resonance_bounds(cfg.film, bias);
        row.f_min = bounds.f_min;
        row.f_max = bounds.f_max;
        try {
            const Eigen::ArrayXd grid = Eigen::ArrayXd::LinSpaced(
                rule.points, std::max(1.0, bounds.f_min - rule.pad_below_hz),
                bounds.f_max + rule.pad_above_hz);
            const auto response = synthesize_response(cfg, bias, grid);
            const auto modes = enumerate_modes(cfg.film, bias, cfg.solver.n_max,
                                               cfg.solver.m_max, cfg.solver.engine);
            row.metrics = extract_metrics(response, modes);
        } catch (const Error& e) {
            row.status = e.what();
        }
    });
    return rows;
}

std::vector<double> Range::values() const {
    if (!(step > 0)) throw ValidationError("range step must be positive");
    if (stop < start) throw ValidationError("range stop must be >= start");
    std::vector<double> out;
    const double tol = step * 1e-9;
    for (double v = start; v <= stop + tol; v += step) out.push_back(v);
    return out;
}

OptimizationResult optimize_apodization(const DeviceConfig& cfg, const Range& hc_x_range,
                                        const Range& hc_y_range, const BiasField& bias,
                                        int jobs, const SweepRule& rule) {
    const auto xs = hc_x_range.values();
    const auto ys = hc_y_range.values();
    if (xs.empty() || ys.empty()) throw ValidationError("apodization ranges must be non-empty");

    const auto bounds = resonance_bounds(cfg.film, bias);
    const Eigen::ArrayXd grid =
        Eigen::ArrayXd::LinSpaced(rule.points, std::max(1.0, bounds.f_min - rule.pad_below_hz),
                                  bounds.f_max + rule.pad_above_hz);

    std::vector<ApodizationScore> table(xs.size() * ys.size());
    parallel_for(static_cast<int>(table.size()), jobs, [&](int idx) {
        const auto i = static_cast<std::size_t>(idx);
        ApodizationScore& cell = table[i];
        cell.hc_x = xs[i / ys.size()];
        cell.hc_y = ys[i % ys.size()];
        DeviceConfig local = cfg;
        local.transducer.hc_x = cell.hc_x;
        local.transducer.hc_y = cell.hc_y;
        try {
            local.validate();
            const auto response = synthesize_response(local, bias, grid);
            const auto modes = enumerate_modes(local.film, bias, local.solver.n_max,
                                               local.solver.m_max, local.solver.engine);
            const FilterMetrics metrics = extract_metrics(response, modes);

            // Ripple: max deviation from the median passband level in dB.
            const Eigen::ArrayXd mags = response.s21.abs();
            Eigen::Index i_peak = 0;
            const double peak = mags.maxCoeff(&i_peak);
            const double thr = peak * std::pow(10.0, -3.0 / 20.0);
            std::vector<double> levels;
            for (Eigen::Index j = i_peak; j >= 0 && mags[j] >= thr; --j) {
                levels.push_back(20.0 * std::log10(mags[j]));
            }
            for (Eigen::Index j = i_peak + 1; j < mags.size() && mags[j] >= thr; ++j) {
                levels.push_back(20.0 * std::log10(mags[j]));
            }
            std::sort(levels.begin(), levels.end());
            const double median = levels[levels.size() / 2];
            double ripple = 0.0;
            for (double lv : levels) ripple = std::max(ripple, std::abs(lv - median));

            cell.metrics = metrics;
            cell.ripple_db = ripple;
            cell.score = metrics.spur_suppression_db - ripple;
        } catch (const Error& e) {
            cell.status = e.what();
            cell.score = -std::numeric_limits<double>::infinity();
        }
    });

    std::size_t best = 0;
    for (std::size_t i = 1; i < table.size(); ++i) {
        const auto& cand = table[i];
        const auto& incumbent = table[best];
        if (cand.score > incumbent.score ||
            (cand.score == incumbent.score &&
             std::tie(cand.hc_x, cand.hc_y) < std::tie(incumbent.hc_x, incumbent.hc_y))) {
            best = i;
        }
    }

    OptimizationResult result;
    result.best = cfg.transducer;
    result.best.hc_x = table[best].hc_x;
    result.best.hc_y = table[best].hc_y;
    result.table = std::move(table);
    return result;
}

}  // namespace magnon
