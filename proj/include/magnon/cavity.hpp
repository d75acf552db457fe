// cavity.hpp — quantized cavity resonances and their p/w labels.
//
// Length quantization fixes k_x = n*pi/L, width quantization k_y = m*pi/W.
// "p{n}w{m}" labels follow the device convention: p2w3 is the third-order
// width mode of the second-order primary mode.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magnon/dispersion.hpp"
#include "magnon/materials.hpp"

namespace magnon {

struct CavityMode {
    enum class Status { Ok, NoSolutionInBand, NonConvergence };

    int n = 1;          ///< primary (length) order, >= 1
    int m = 1;          ///< width order, >= 1
    double k_x = 0.0;   ///< n*pi/L, rad/cm
    double k_y = 0.0;   ///< m*pi/W, rad/cm
    double f = 0.0;     ///< resonance frequency, Hz; NaN when status != Ok
    std::string label;  ///< "p{n}w{m}"
    Status status = Status::Ok;
};

std::string mode_label(int n, int m);

/// Parses "p{n}w{m}"; throws ValidationError on malformed labels.
std::pair<int, int> parse_mode_label(const std::string& label);

/// One entry per (n, m) in [1, n_max] x [1, m_max]. Frequencies come from the
/// requested engine; entries the paper-engine solver cannot place in-band are
/// retained with a NaN frequency and a status, never dropped. Solved entries
/// sort by frequency ascending (ties by (n, m)); failed entries follow, in
/// (n, m) order.
std::vector<CavityMode> enumerate_modes(const FerriteFilm& film, const BiasField& bias, int n_max,
                                        int m_max, Engine engine);

struct ModeSpacing {
    int m;           ///< shared width order
    int n_lo, n_hi;  ///< consecutive primary orders (n_hi = n_lo + 1)
    double delta_f;  ///< f(n_hi) - f(n_lo), Hz
    std::string pair_label;
};

/// Consecutive-n frequency gaps at fixed m, for passband-flatness
/// diagnostics. Throws TooFewModes when no width order has two solved
/// consecutive primaries.
std::vector<ModeSpacing> mode_spacing_report(const std::vector<CavityMode>& modes);

}  // namespace magnon
