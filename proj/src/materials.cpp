#include "magnon/materials.hpp"

#include <algorithm>
#include <cmath>

namespace magnon {

void FerriteFilm::validate() const {
    if (!(b_sat > 0)) throw ValidationError("b_sat must be positive");
    if (!(gamma > 0)) throw ValidationError("gamma must be positive");
    if (!(exch > 0)) throw ValidationError("exch must be positive");
    if (!(thickness > 0)) throw ValidationError("thickness must be positive");
    if (!(length > 0)) throw ValidationError("length must be positive");
    if (!(width > 0)) throw ValidationError("width must be positive");
    if (!(q_loaded > 0)) throw ValidationError("q_loaded must be positive");
    if (!(thickness < width)) throw ValidationError("thickness must be smaller than width");
    if (!(thickness < length)) throw ValidationError("thickness must be smaller than length");
}

void BiasField::validate() const {
    if (!(h0 > 0)) throw ValidationError("h0 must be positive");
}

PermeabilityTensor permeability(const FerriteFilm& film, const BiasField& bias, double f_hz) {
    if (!(f_hz > 0)) throw NonPositiveFrequency(f_hz);

    const double omega = f_hz / (film.gamma * film.b_sat);
    const double omega_h = bias.h0 / film.b_sat;
    const double denom = omega * omega - omega_h * omega_h;
    const double scale = std::max(omega * omega, omega_h * omega_h);
    if (std::abs(denom) <= 1e-12 * scale) throw SingularPermeability(f_hz);

    PermeabilityTensor t;
    t.omega_norm = omega;
    t.omega_h = omega_h;
    t.mu2 = omega_h / denom;
    t.mu1 = 1.0 - t.mu2;
    return t;
}

ResonanceBounds resonance_bounds(const FerriteFilm& film, const BiasField& bias) {
    if (!(bias.h0 > 0)) throw NonPositiveField(bias.h0);
    const double base = bias.h0 * (bias.h0 + film.b_sat);
    return {film.gamma * std::sqrt(base),
            film.gamma * std::sqrt(base + film.b_sat * film.b_sat / 4.0)};
}

}  // namespace magnon
