// response.hpp — S-parameter synthesis from the cavity mode spectrum,
// electrode impedance and port-mismatch bookkeeping, filter metrics, field
// sweeps and apodization optimization.

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "magnon/cavity.hpp"
#include "magnon/materials.hpp"
#include "magnon/transducer.hpp"

namespace magnon {

struct SolverOptions {
    Engine engine = Engine::DeWidth;  ///< mode-placement engine for synthesis
    int n_max = 10;
    int m_max = 7;
};

struct DeviceConfig {
    FerriteFilm film;
    TransducerPair transducer;
    int cavities = 1;                   ///< parallel cavity count, 1 or 2
    double port_impedance = 50.0;       ///< Ohm
    double electrode_r = 3.0;           ///< series resistance, Ohm
    double electrode_l = 7.138933861237474e-10;  ///< series inductance, H (see tools/fit_electrode)
    SolverOptions solver;

    void validate() const;
};

/// Equivalent electrode impedance Z_s = (R + i*2*pi*f*L) / cavities.
/// Parallel cavities halve the impedance exactly.
std::complex<double> electrode_impedance(const DeviceConfig& cfg, double f_hz);

/// Transmitted-power fraction 1 - |Gamma|^2 with Gamma = (z - z0)/(z + z0).
/// Throws DegenerateLoad at z = -z0.
double mismatch_factor(std::complex<double> z, double z0);

struct FrequencyResponse {
    Eigen::ArrayXd f_grid;   ///< Hz, strictly increasing
    Eigen::ArrayXcd s21;
    Eigen::ArrayXcd s11;
    std::string config_digest;
    double band_min = 0.0;   ///< f_min of the generating bias, Hz
    double band_max = 0.0;   ///< f_max of the generating bias, Hz
    double q_loaded = 0.0;
};

/// S21(f) = mismatch * sum over solved modes of |c_nm|^2 * Lambda_nm(f), with
/// Lambda a unit-peak resonance of 3-dB full width f_nm/q_loaded; the summed
/// magnitude is clamped at 1 so the network stays passive.
/// S11(f) = Gamma(Z_s(f), z0) * sqrt(1 - |S21|^2).
/// Throws EmptyModeSet when no mode of the configured engine lies in-band.
FrequencyResponse synthesize_response(const DeviceConfig& cfg, const BiasField& bias,
                                      const Eigen::ArrayXd& f_grid);

struct FilterMetrics {
    double f_center = 0.0;             ///< Hz, argmax |S21|
    double il_db = 0.0;                ///< insertion loss, -20*log10(max |S21|)
    double bw3_hz = 0.0;               ///< contiguous 3-dB width around f_center
    double spur_suppression_db = 0.0;  ///< passband peak over largest spur peak
    double oob_rejection_db = 0.0;     ///< passband peak over far-stopband floor
};

/// Spur candidates live inside [band_min - 1 GHz, band_max], farther than
/// 2*bw3 from f_center, and outside the footprint of every solved w = 1
/// mode in `passband_modes` (radius max(2*bw3, 8*f/q_loaded) — a passband
/// resonance's skirt is not a spur). The out-of-band floor is the 95th
/// percentile of |S21| outside [band_min - 1 GHz, band_max + 1 GHz].
/// Throws NoPassband when max |S21| < 1e-6.
FilterMetrics extract_metrics(const FrequencyResponse& r,
                              const std::vector<CavityMode>& passband_modes);

struct SweepRule {
    double pad_below_hz = 1.5e9;
    double pad_above_hz = 1.5e9;
    int points = 4001;
};

struct SweepRow {
    double h0 = 0.0;
    std::optional<FilterMetrics> metrics;
    double f_min = 0.0;
    double f_max = 0.0;
    std::string status = "ok";  ///< failure reason when metrics is empty
};

/// One row per field, in input order; per-row failures are recorded and the
/// sweep continues. `jobs` >= 1 sets the number of worker threads; results
/// are identical regardless.
std::vector<SweepRow> field_sweep(const DeviceConfig& cfg, const std::vector<double>& h_list,
                                  const SweepRule& rule, int jobs = 1);

struct Range {
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    [[nodiscard]] std::vector<double> values() const;
};

struct ApodizationScore {
    double hc_x = 0.0;
    double hc_y = 0.0;
    std::optional<FilterMetrics> metrics;
    double ripple_db = 0.0;
    double score = 0.0;  ///< spur_suppression_db - ripple_db
    std::string status = "ok";
};

struct OptimizationResult {
    TransducerPair best;
    std::vector<ApodizationScore> table;  ///< row-major over (hc_x, hc_y)
};

/// Exhaustive grid evaluation of (hc_x, hc_y); score = spur suppression minus
/// the passband ripple (max in-band deviation from the median level, dB).
/// Ties break toward smaller hc_x, then smaller hc_y.
OptimizationResult optimize_apodization(const DeviceConfig& cfg, const Range& hc_x_range,
                                        const Range& hc_y_range, const BiasField& bias,
                                        int jobs = 1, const SweepRule& rule = {});

/// Digest of the resolved configuration (FNV-1a over the canonical JSON
/// form); identical configs share a digest. Implemented in config.cpp.
std::string config_digest(const DeviceConfig& cfg);

}  // namespace magnon
