// dispersion.hpp — spin-wave dispersion engines.
//
// Two families of engines are first-class:
//   * `paper`    — the dipole-exchange relation with self-consistent width-mode
//                  quantization, solved by bisection inside the surface-wave band.
//   * `de`       — a closed-form Damon–Eshbach surface-wave model whose k->0 and
//                  k->inf limits are the band edges; width-blind by design.
//   * `de_width` — the closed form extended to oblique propagation: width modes
//                  carry a transverse wavenumber (m-1)*pi/W and detune toward the
//                  lower band edge, vanishing at the surface-wave cone angle.
//                  Reduces exactly to `de` for the fundamental width mode.
//
// All wavenumbers are rad/cm, frequencies Hz.

#pragma once

#include <string>
#include <vector>

#include "magnon/materials.hpp"

namespace magnon {

enum class Engine { Paper, DeOracle, DeWidth };

std::string to_string(Engine engine);
Engine engine_from_string(const std::string& name);

/// Thickness-averaged dipole reduction factor P = 1 - (1 - exp(-x))/x,
/// series-expanded below 1e-4 for stability. Strictly increasing, range [0, 1).
/// Throws NegativeArgument for x < 0.
double reduction_factor(double x);

/// Dipole-exchange frequency for the given wave-vector decomposition.
/// Pure evaluation (no self-consistency). k_z = 0 defines k_ym^2/k_z^2 = 0.
/// Throws NegativeRadicand if either bracket of the product is non-positive.
double dipole_exchange_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                 double k_ym, double k_z);

/// Closed-form surface-wave frequency
///   f = gamma*sqrt(h0*(h0+b_sat) + (b_sat^2/4)*(1 - exp(-2*k_x*T))),
/// strictly increasing from f_min (k_x = 0) to f_max (k_x -> inf).
double de_surface_frequency(const FerriteFilm& film, const BiasField& bias, double k_x);

/// Oblique extension of the closed form for width mode m >= 1 (m = 0 and
/// m = 1 coincide with de_surface_frequency). The transverse wavenumber
/// (m-1)*pi/W tilts the propagation direction; the surface term is scaled by
///   S = max(0, cos^4(phi) - 4*(h0/b_sat)*sin^2(phi)),
/// which is 1 at phi = 0 and reaches 0 at the angle where the large-k
/// oblique surface-wave limit gamma*(h0 + b_sat/2*cos^2(phi)) meets f_min.
/// Modes beyond that cone sit at f_min.
double oblique_surface_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                 int m);

/// Outside-film total wavenumber sqrt(k_x^2 + (m*pi/W)^2); diagnostic only.
double outside_wavenumber(const FerriteFilm& film, double k_x, int m);

struct DispersionPoint {
    enum class Status { Ok, NoSolutionInBand, NonConvergence };

    double k_x = 0.0;
    int m = 0;
    double f = 0.0;    ///< NaN when status != Ok
    double k_z = 0.0;  ///< total effective wavenumber at the solution
    Engine engine = Engine::Paper;
    Status status = Status::Ok;
};

/// Self-consistent width-mode solve: finds f in (f_min, f_max) with
///   f = Eq13(k_z(f)),   k_z(f)^2 = k_x^2 + (m*pi/W)^2 / mu1(f),
/// by bisection on the residual over the bracket (f_min*(1+1e-6),
/// f_max*(1-1e-6)); converged when |residual| < 1 Hz.
/// Throws NoSolutionInBand when the residual has no sign change on the
/// bracket, NonConvergence after 200 bisection steps.
DispersionPoint solve_mode_frequency(const FerriteFilm& film, const BiasField& bias, double k_x,
                                     int m);

/// Damped fixed-point cross-check for solve_mode_frequency (not the primary
/// method). Throws NonConvergence if it fails to settle.
double solve_mode_frequency_fixed_point(const FerriteFilm& film, const BiasField& bias, double k_x,
                                        int m);

/// One point per grid entry; per-point solver failures become explicit gap
/// markers (NaN frequency + status), never interpolated.
/// `de` is valid only for m = 0; `paper` with m = 0 evaluates Eq13 directly
/// at k_z = k_x.
std::vector<DispersionPoint> dispersion_curve(const FerriteFilm& film, const BiasField& bias, int m,
                                              const std::vector<double>& k_grid, Engine engine);

}  // namespace magnon
