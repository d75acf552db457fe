// oracles.hpp — test-only reference implementations, independent of the
// library's solution paths.

#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <optional>

#include "magnon/materials.hpp"
#include "magnon/transducer.hpp"

namespace magnon::test {

// Residual of the self-consistency loop, assembled from scratch (no calls
// into the dispersion module).
inline double scan_residual(const FerriteFilm& film, const BiasField& bias, double k_x, int m,
                            double f) {
    const double om = f / (film.gamma * film.b_sat);
    const double om_h = bias.h0 / film.b_sat;
    const double mu1 = 1.0 - om_h / (om * om - om_h * om_h);
    const double k_ym_sq = std::pow(m * M_PI / film.width, 2) / mu1;
    const double k_z = std::sqrt(k_x * k_x + k_ym_sq);
    const double x = k_z * film.thickness;
    const double p = x < 1e-4 ? x / 2 - x * x / 6 : 1.0 - (1.0 - std::exp(-x)) / x;
    const double b1 = bias.h0 + film.b_sat * (1.0 - p + film.exch * k_z * k_z);
    const double b2 = bias.h0 + film.b_sat * (p * k_ym_sq / (k_z * k_z) + film.exch * k_z * k_z);
    return f - film.gamma * std::sqrt(b1 * b2);
}

// Dense-scan root locator: evaluates the residual on a uniform grid over the
// open band, finds the first sign change and refines it by interval halving.
inline std::optional<double> dense_scan_solve(const FerriteFilm& film, const BiasField& bias,
                                              double k_x, int m, int grid_points = 1000000) {
    const double base = bias.h0 * (bias.h0 + film.b_sat);
    const double f_min = film.gamma * std::sqrt(base);
    const double f_max = film.gamma * std::sqrt(base + film.b_sat * film.b_sat / 4.0);
    const double lo = f_min * (1.0 + 1e-6);
    const double hi = f_max * (1.0 - 1e-6);

    double f_prev = lo;
    double g_prev = scan_residual(film, bias, k_x, m, f_prev);
    double a = 0, b = 0;
    bool found = false;
    for (int i = 1; i <= grid_points; ++i) {
        const double f = lo + (hi - lo) * i / grid_points;
        const double g = scan_residual(film, bias, k_x, m, f);
        if (g_prev == 0.0) {
            a = b = f_prev;
            found = true;
            break;
        }
        if (g_prev * g < 0.0) {
            a = f_prev;
            b = f;
            found = true;
            break;
        }
        f_prev = f;
        g_prev = g;
    }
    if (!found) return std::nullopt;
    for (int step = 0; step < 100 && b - a > 1e-3; ++step) {
        const double mid = 0.5 * (a + b);
        if (scan_residual(film, bias, k_x, m, a) * scan_residual(film, bias, k_x, m, mid) <= 0.0) {
            b = mid;
        } else {
            a = mid;
        }
    }
    return 0.5 * (a + b);
}

// Uniform-trapezoid evaluation of the coupling integrand (quadrature check).
inline std::complex<double> trapezoid_coupling(const TransducerPair& t, const FerriteFilm& film,
                                               double k_xn, int m, int n_points = 1000000) {
    const double w = film.width;
    const double slope = std::tan(t.tilt_deg * M_PI / 180.0);
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i <= n_points; ++i) {
        const double y = w * i / n_points;
        const double phase = k_xn * (gap_profile(t, film, y) - t.gap0 + y * slope);
        const std::complex<double> v = current_weight(t, film, y) *
                                       std::sin(m * M_PI * y / w) *
                                       std::complex<double>(std::cos(phase), std::sin(phase));
        acc += (i == 0 || i == n_points) ? 0.5 * v : v;
    }
    return acc * (w / n_points);
}

}  // namespace magnon::test
