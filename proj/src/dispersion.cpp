#include "magnon/dispersion.hpp"

#include <cmath>
#include <limits>

namespace magnon {
namespace {

constexpr double kBracketEps = 1e-6;
constexpr double kResidualTolHz = 1.0;
constexpr int kMaxBisectionSteps = 200;

// Residual g(f) = f - Eq13(k_z(f)) for the self-consistency loop.
// mu1 > 0 is guaranteed on the open band, so k_z is always real here.
double residual(const FerriteFilm& film, const BiasField& bias, double k_x, int m, double f) {
    const double mu1 = permeability(film, bias, f).mu1;
    const double k_ym_sq = std::pow(m * M_PI / film.width, 2) / mu1;
    const double k_z = std::sqrt(k_x * k_x + k_ym_sq);
    return f - dipole_exchange_frequency(film, bias, k_x, std::sqrt(k_ym_sq), k_z);
}

}  // namespace

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::Paper: return "paper";
        case Engine::DeOracle: return "de";
        case Engine::DeWidth: return "de_width";
    }
    return "unknown";
}

Engine engine_from_string(const std::string& name) {
    if (name == "paper") return Engine::Paper;
    if (name == "de") return Engine::DeOracle;
    if (name == "de_width") return Engine::DeWidth;
    throw ValidationError("unknown engine '" + name + "' (expected paper, de or de_width)");
}

double reduction_factor(double x) {
    if (x < 0) throw NegativeArgument("reduction_factor requires x >= 0");
    if (x < 1e-4) return x / 2.0 - x * x / 6.0;
    return 1.0 - (1.0 - std::exp(-x)) / x;
}

double dipole_exchange_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                 double k_ym, double k_z) {
    if (k_x < 0 || k_ym < 0 || k_z < 0) throw NegativeArgument("wavenumbers must be non-negative");
    const double p = reduction_factor(k_z * film.thickness);
    const double ratio = k_z > 0 ? (k_ym / k_z) * (k_ym / k_z) : 0.0;
    const double exch_term = film.exch * k_z * k_z;
    const double b1 = bias.h0 + film.b_sat * (1.0 - p + exch_term);
    const double b2 = bias.h0 + film.b_sat * (p * ratio + exch_term);
    if (b1 <= 0 || b2 <= 0) throw NegativeRadicand("dipole-exchange bracket non-positive");
    return film.gamma * std::sqrt(b1 * b2);
}

double de_surface_frequency(const FerriteFilm& film, const BiasField& bias, double k_x) {
    if (k_x < 0) throw NegativeArgument("k_x must be non-negative");
    const double base = bias.h0 * (bias.h0 + film.b_sat);
    const double surf = film.b_sat * film.b_sat / 4.0;
    return film.gamma *
           std::sqrt(base + surf * (1.0 - std::exp(-2.0 * k_x * film.thickness)));
}

double oblique_surface_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                 int m) {
    if (k_x < 0) throw NegativeArgument("k_x must be non-negative");
    if (m < 0) throw NegativeArgument("width order must be non-negative");
    const double k_y = m > 0 ? (m - 1) * M_PI / film.width : 0.0;
    const double kt_sq = k_x * k_x + k_y * k_y;
    const double base = bias.h0 * (bias.h0 + film.b_sat);
    if (kt_sq == 0.0) return film.gamma * std::sqrt(base);
    const double cos_sq = k_x * k_x / kt_sq;
    const double cone = cos_sq * cos_sq - 4.0 * (bias.h0 / film.b_sat) * (1.0 - cos_sq);
    const double s = cone > 0.0 ? cone : 0.0;
    const double surf = film.b_sat * film.b_sat / 4.0;
    const double decay = 1.0 - std::exp(-2.0 * std::sqrt(kt_sq) * film.thickness);
    return film.gamma * std::sqrt(base + surf * s * decay);
}

double outside_wavenumber(const FerriteFilm& film, double k_x, int m) {
    const double k_y = m * M_PI / film.width;
    return std::sqrt(k_x * k_x + k_y * k_y);
}

DispersionPoint solve_mode_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                     int m) {
    if (!(k_x > 0)) throw NegativeArgument("solve_mode_frequency requires k_x > 0");
    if (m < 1) throw NegativeArgument("solve_mode_frequency requires m >= 1");

    const auto [f_min, f_max] = resonance_bounds(film, bias);
    double lo = f_min * (1.0 + kBracketEps);
    double hi = f_max * (1.0 - kBracketEps);
    double g_lo = residual(film, bias, k_x, m, lo);
    const double g_hi = residual(film, bias, k_x, m, hi);

    const auto make_point = [&](double f) {
        DispersionPoint pt;
        pt.k_x = k_x;
        pt.m = m;
        pt.f = f;
        const double mu1 = permeability(film, bias, f).mu1;
        pt.k_z = std::sqrt(k_x * k_x + std::pow(m * M_PI / film.width, 2) / mu1);
        pt.engine = Engine::Paper;
        pt.status = DispersionPoint::Status::Ok;
        return pt;
    };

    if (std::abs(g_lo) < kResidualTolHz) return make_point(lo);
    if (std::abs(g_hi) < kResidualTolHz) return make_point(hi);
    if (g_lo * g_hi > 0.0) {
        throw NoSolutionInBand("no sign change of the dispersion residual in (f_min, f_max) for "
                               "k_x = " + std::to_string(k_x) + ", m = " + std::to_string(m));
    }

    for (int step = 0; step < kMaxBisectionSteps; ++step) {
        const double f_mid = 0.5 * (lo + hi);
        const double g_mid = residual(film, bias, k_x, m, f_mid);
        if (std::abs(g_mid) < kResidualTolHz) return make_point(f_mid);
        if (g_lo * g_mid < 0.0) {
            hi = f_mid;
        } else {
            lo = f_mid;
            g_lo = g_mid;
        }
    }
    throw NonConvergence("bisection did not reach |residual| < 1 Hz in 200 steps");
}

double solve_mode_frequency_fixed_point(const FerriteFilm& film, const BiasField& bias, double k_x,
                                        int m) {
    const auto [f_min, f_max] = resonance_bounds(film, bias);
    const double lo = f_min * (1.0 + kBracketEps);
    const double hi = f_max * (1.0 - kBracketEps);
    double f = 0.5 * (lo + hi);
    double g = residual(film, bias, k_x, m, f);
    double damping = 0.5;
    for (int step = 0; step < 20000; ++step) {
        if (std::abs(g) < kResidualTolHz) return f;
        // f - g is the undamped map f <- Eq13(k_z(f)); back off on overshoot
        const double next = std::clamp(f - damping * g, lo, hi);
        const double g_next = residual(film, bias, k_x, m, next);
        if (std::abs(g_next) < std::abs(g)) {
            f = next;
            g = g_next;
            damping = std::min(1.0, damping * 1.2);
        } else {
            damping *= 0.5;
            if (damping < 1e-12) break;
        }
    }
    throw NonConvergence("damped fixed-point iteration did not settle");
}

std::vector<DispersionPoint> dispersion_curve(const FerriteFilm& film, const BiasField& bias, int m,
                                              const std::vector<double>& k_grid, Engine engine) {
    if (m < 0) throw NegativeArgument("width order must be non-negative");
    if (engine == Engine::DeOracle && m != 0) {
        throw ValidationError("the de engine is only valid for m = 0");
    }
    for (std::size_t i = 0; i + 1 < k_grid.size(); ++i) {
        if (!(k_grid[i] < k_grid[i + 1])) {
            throw ValidationError("k_grid must be strictly increasing");
        }
    }
    if (!k_grid.empty() && k_grid.front() < 0) {
        throw ValidationError("k_grid entries must be non-negative");
    }

    std::vector<DispersionPoint> out;
    out.reserve(k_grid.size());
    for (double k : k_grid) {
        DispersionPoint pt;
        pt.k_x = k;
        pt.m = m;
        pt.engine = engine;
        try {
            switch (engine) {
                case Engine::DeOracle:
                    pt.f = de_surface_frequency(film, bias, k);
                    pt.k_z = k;
                    break;
                case Engine::DeWidth:
                    pt.f = oblique_surface_frequency(film, bias, k, m);
                    pt.k_z = std::sqrt(k * k + (m > 0 ? std::pow((m - 1) * M_PI / film.width, 2)
                                                      : 0.0));
                    break;
                case Engine::Paper:
                    if (m == 0) {
                        pt.f = dipole_exchange_frequency(film, bias, k, 0.0, k);
                        pt.k_z = k;
                    } else {
                        pt = solve_mode_frequency(film, bias, k, m);
                    }
                    break;
            }
        } catch (const NoSolutionInBand&) {
            pt.f = std::numeric_limits<double>::quiet_NaN();
            pt.status = DispersionPoint::Status::NoSolutionInBand;
        } catch (const NonConvergence&) {
            pt.f = std::numeric_limits<double>::quiet_NaN();
            pt.status = DispersionPoint::Status::NonConvergence;
        }
        out.push_back(pt);
    }
    return out;
}

}  // namespace magnon
