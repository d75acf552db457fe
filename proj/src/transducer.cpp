#include "magnon/transducer.hpp"

#include <algorithm>
#include <cmath>

#include "magnon/quadrature.hpp"

namespace magnon {
namespace {

// Width along one taper, parameterized by s in [0, span] with s = 0 at the
// taper start (narrow) and s = span at the film edge (wide). The arc is the
// circle through (0, w0), (span/2, (w0+w1)/2), (span, w1); collinear control
// points reduce it to the chord.
double arc_width(double s, double span, double w0, double w1) {
    const double x0 = 0.0, y0 = w0;
    const double x1 = 0.5 * span, y1 = 0.5 * (w0 + w1);
    const double x2 = span, y2 = w1;

    const double cross = (x1 - x0) * (y2 - y0) - (y1 - y0) * (x2 - x0);
    const double scale = span * std::max({std::abs(w1 - w0), std::abs(w0), 1e-30});
    if (std::abs(cross) <= 1e-12 * scale) {
        return w0 + (w1 - w0) * (s / span);  // degenerate arc: straight taper
    }

    // Circumcenter of the three control points.
    const double d = 2.0 * (x0 * (y1 - y2) + x1 * (y2 - y0) + x2 * (y0 - y1));
    const double sq0 = x0 * x0 + y0 * y0;
    const double sq1 = x1 * x1 + y1 * y1;
    const double sq2 = x2 * x2 + y2 * y2;
    const double cx = (sq0 * (y1 - y2) + sq1 * (y2 - y0) + sq2 * (y0 - y1)) / d;
    const double cy = (sq0 * (x2 - x1) + sq1 * (x0 - x2) + sq2 * (x1 - x0)) / d;
    const double r = std::hypot(x0 - cx, y0 - cy);
    const double dy = std::sqrt(std::max(0.0, r * r - (s - cx) * (s - cx)));
    return y1 >= cy ? cy + dy : cy - dy;
}

double tilt_slope(const TransducerPair& t) {
    return std::tan(t.tilt_deg * M_PI / 180.0);
}

}  // namespace

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::Straight: return "straight";
        case Shape::FullCone: return "full_cone";
        case Shape::HalfCone: return "half_cone";
        case Shape::ExtendedCone: return "extended_cone";
    }
    return "unknown";
}

Shape shape_from_string(const std::string& name) {
    if (name == "straight") return Shape::Straight;
    if (name == "full_cone") return Shape::FullCone;
    if (name == "half_cone") return Shape::HalfCone;
    if (name == "extended_cone") return Shape::ExtendedCone;
    throw ValidationError("unknown transducer shape '" + name + "'");
}

void TransducerPair::validate(double cavity_width) const {
    if (!(base_width > 0)) throw ValidationError("base_width must be positive");
    if (hc_x < 0) throw ValidationError("hc_x must be non-negative");
    if (hc_y < 0 || hc_y > cavity_width / 2.0) {
        throw ValidationError("hc_y must lie in [0, W/2]");
    }
    if (!(gap0 > 0)) throw ValidationError("gap0 must be positive");
    if (tilt_deg < 0 || tilt_deg >= 90.0) throw ValidationError("tilt_deg must lie in [0, 90)");
    if (extended_asymmetry < 0) throw ValidationError("extended_asymmetry must be non-negative");
    if (shape == Shape::ExtendedCone && hc_y + extended_asymmetry > cavity_width / 2.0) {
        throw ValidationError("hc_y + extended_asymmetry must not exceed W/2");
    }
    if (shape != Shape::ExtendedCone && extended_asymmetry != 0.0) {
        throw ValidationError("extended_asymmetry requires shape = extended_cone");
    }
}

double electrode_width_profile(const TransducerPair& t, const FerriteFilm& film, double y) {
    const double w_cav = film.width;
    if (y < 0 || y > w_cav) throw OutOfDomain("y outside [0, W]");
    if (t.shape == Shape::Straight || t.hc_y == 0.0 || t.hc_x == 0.0) return t.base_width;

    const double wide = t.base_width + t.hc_x;
    const double upper_span =
        t.shape == Shape::ExtendedCone ? t.hc_y + t.extended_asymmetry : t.hc_y;
    if (y < t.hc_y) {
        return arc_width(t.hc_y - y, t.hc_y, t.base_width, wide);
    }
    if (y > w_cav - upper_span) {
        return arc_width(y - (w_cav - upper_span), upper_span, t.base_width, wide);
    }
    return t.base_width;
}

double current_weight(const TransducerPair& t, const FerriteFilm& film, double y) {
    return t.base_width / electrode_width_profile(t, film, y);
}

double gap_profile(const TransducerPair& t, const FerriteFilm& film, double y) {
    const double width = electrode_width_profile(t, film, y);  // also checks the domain
    if (t.shape != Shape::FullCone) return t.gap0;
    const double gap = t.gap0 - 2.0 * (width - t.base_width);
    if (gap <= 0) throw NonPhysicalGap("full-cone widening closes the transducer gap at y = " +
                                       std::to_string(y));
    return gap;
}

std::complex<double> CouplingSpectrum::at(int n, int m) const {
    const auto it = entries.find({n, m});
    return it == entries.end() ? std::complex<double>{0.0, 0.0} : it->second;
}

double CouplingSpectrum::magnitude(int n, int m) const { return std::abs(at(n, m)); }

CouplingSpectrum mode_coupling(const TransducerPair& t, const FerriteFilm& film,
                               const std::vector<CavityMode>& modes) {
    if (modes.empty()) throw ValidationError("mode_coupling requires a non-empty mode list");

    const double w_cav = film.width;
    const double upper_span =
        t.shape == Shape::ExtendedCone ? t.hc_y + t.extended_asymmetry : t.hc_y;
    const std::vector<double> breaks = {t.hc_y, w_cav - upper_span, w_cav - t.hc_y};

    QuadratureOptions norm_opt;
    norm_opt.abs_tol = 1e-14;
    const double norm =
        integrate([&](double y) { return std::complex<double>(current_weight(t, film, y), 0.0); },
                  0.0, w_cav, breaks, norm_opt)
            .real();

    QuadratureOptions opt;
    opt.abs_tol = 1e-10 * norm;

    const double slope = tilt_slope(t);
    // With a constant gap and no tilt the phase term is identically 1, so the
    // integral does not depend on k_xn: one quadrature per width order.
    const bool n_dependent = t.shape == Shape::FullCone || slope != 0.0;

    CouplingSpectrum spectrum;
    std::map<int, std::complex<double>> per_width_cache;
    for (const auto& mode : modes) {
        std::complex<double> value;
        if (!n_dependent && per_width_cache.count(mode.m) != 0) {
            value = per_width_cache.at(mode.m);
        } else {
            const double k_xn = mode.k_x;
            const int m = mode.m;
            value = integrate(
                [&](double y) {
                    const double phase =
                        k_xn * (gap_profile(t, film, y) - t.gap0 + y * slope);
                    return current_weight(t, film, y) * std::sin(m * M_PI * y / w_cav) *
                           std::complex<double>(std::cos(phase), std::sin(phase));
                },
                0.0, w_cav, breaks, opt);
            if (!n_dependent) per_width_cache[mode.m] = value;
        }
        spectrum.entries[{mode.n, mode.m}] = value;
    }

    double max_mag = 0.0;
    for (const auto& [key, c] : spectrum.entries) max_mag = std::max(max_mag, std::abs(c));
    if (max_mag > opt.abs_tol) {
        for (auto& [key, c] : spectrum.entries) c /= max_mag;
    } else {
        // every integral sits below the quadrature tolerance: the spectrum is
        // numerically zero and stays unnormalized
        for (auto& [key, c] : spectrum.entries) c = {0.0, 0.0};
    }
    return spectrum;
}

}  // namespace magnon
