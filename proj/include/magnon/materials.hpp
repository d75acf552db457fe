// materials.hpp — physical constants, film/bias descriptions, and the
// frequency-dependent permeability tensor of an in-plane magnetized
// ferrite film.
//
// Unit system: CGS-Gaussian throughout. Fields in Gauss (Oersted-equivalent),
// lengths in cm, frequencies in Hz. The gyromagnetic ratio is the practical
// one in Hz/Gauss, so all band-edge formulas return plain (not angular)
// frequencies.

#pragma once

#include "magnon/errors.hpp"

namespace magnon {

/// Material constants and cavity geometry of the YIG film. Single source of
/// every physical symbol used downstream.
struct FerriteFilm {
    double b_sat = 1750.0;       ///< saturation induction 4*pi*Ms, Gauss
    double gamma = 2.8e6;        ///< gyromagnetic ratio, Hz/Gauss
    double exch = 5.18e-13;      ///< exchange stiffness, cm^2
    double thickness = 15e-4;    ///< film thickness T, cm
    double length = 280e-4;      ///< cavity length L along propagation (x), cm
    double width = 400e-4;       ///< cavity width W along the transducer (y), cm
    double q_loaded = 2000.0;    ///< loaded quality factor per mode (see README, Model notes)

    /// Throws ValidationError naming the violated invariant.
    void validate() const;
};

/// In-plane bias field, parallel to the transducers (surface-wave
/// configuration). Orientation is a fixed tag; only the magnitude varies.
struct BiasField {
    double h0 = 2500.0;  ///< applied bias magnitude, Gauss

    void validate() const;
};

/// Components of the lossless permeability tensor at one frequency.
/// Outside magnetic material mu1 = 1 and mu2 = 0.
struct PermeabilityTensor {
    double mu1;         ///< diagonal component, dimensionless
    double mu2;         ///< off-diagonal magnitude, dimensionless
    double omega_norm;  ///< Omega = f / (gamma * b_sat)
    double omega_h;     ///< Omega_H = h0 / b_sat
};

/// Band edges of the surface-wave manifold.
struct ResonanceBounds {
    double f_min;  ///< uniform-FMR lower edge, Hz
    double f_max;  ///< large-k convergence frequency, Hz
};

/// Evaluates the permeability tensor components at frequency f.
///
/// Throws NonPositiveFrequency for f <= 0 and SingularPermeability when
/// Omega^2 - Omega_H^2 vanishes to within 1e-12 relative.
PermeabilityTensor permeability(const FerriteFilm& film, const BiasField& bias, double f_hz);

/// f_min = gamma*sqrt(h0*(h0+b_sat)), f_max = gamma*sqrt(h0*(h0+b_sat)+b_sat^2/4).
/// Throws NonPositiveField for h0 <= 0.
ResonanceBounds resonance_bounds(const FerriteFilm& film, const BiasField& bias);

}  // namespace magnon
