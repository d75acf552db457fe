// transducer.hpp — spatially tailored transducer geometry and per-mode
// complex coupling coefficients.
//
// The transducer pair is described along the cavity width coordinate y in
// [0, W]: an electrode width profile (tapered near the film edges for the
// cone shapes), the induced current weight (inverse width), and the
// electrode-to-electrode gap. Coupling to a cavity mode integrates the
// current weight against the mode's width profile with a propagation-phase
// factor for gap deviations and cavity tilt.

#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "magnon/cavity.hpp"
#include "magnon/materials.hpp"

namespace magnon {

enum class Shape { Straight, FullCone, HalfCone, ExtendedCone };

std::string to_string(Shape shape);
Shape shape_from_string(const std::string& name);

struct TransducerPair {
    Shape shape = Shape::HalfCone;
    double base_width = 10e-4;          ///< electrode width in the narrow region, cm
    double hc_x = 65e-4;                ///< cone extent along x, cm
    double hc_y = 100e-4;               ///< cone extent along y at each end, cm
    double gap0 = 140e-4;               ///< nominal transducer spacing, cm (L/2)
    double tilt_deg = 0.0;              ///< cavity tilt relative to the transducers
    double extended_asymmetry = 0.0;    ///< extra cone length on the y = W end, cm

    /// Checks invariants against the cavity width. Throws ValidationError.
    void validate(double cavity_width) const;
};

/// Electrode width at position y. Cone shapes widen from base_width to
/// base_width + hc_x over the last hc_y of each end, along a circular arc
/// through (taper start, base_width), (span midpoint, base_width + hc_x/2)
/// and (end, base_width + hc_x); with symmetric control points the arc
/// degenerates to a straight taper. Throws OutOfDomain for y outside [0, W].
double electrode_width_profile(const TransducerPair& t, const FerriteFilm& film, double y);

/// Inverse-width current-density weight, normalized to 1 in the narrow
/// region: weight(y) = base_width / electrode_width_profile(y).
double current_weight(const TransducerPair& t, const FerriteFilm& film, double y);

/// Transducer-to-transducer spacing at y. Constant (= gap0) except for the
/// full cone, whose widening grows into the gap from both electrodes.
/// Throws NonPhysicalGap when the computed gap is non-positive.
double gap_profile(const TransducerPair& t, const FerriteFilm& film, double y);

/// Complex per-mode coupling coefficients, globally normalized so the
/// strongest magnitude is 1 (a spectrum that is identically zero is
/// returned as-is).
struct CouplingSpectrum {
    std::map<std::pair<int, int>, std::complex<double>> entries;  ///< (n, m) -> c_nm

    [[nodiscard]] std::complex<double> at(int n, int m) const;
    [[nodiscard]] double magnitude(int n, int m) const;
};

/// c_nm ~ integral over [0, W] of
///   weight(y) * sin(m*pi*y/W) * exp(i*k_xn*(gap(y) - gap0 + y*tan(tilt)))
/// by adaptive quadrature with absolute tolerance 1e-10 of the normalization
/// integral of weight. Throws QuadratureFailure if the tolerance is
/// unreachable in 1e4 subdivisions.
CouplingSpectrum mode_coupling(const TransducerPair& t, const FerriteFilm& film,
                               const std::vector<CavityMode>& modes);

}  // namespace magnon
