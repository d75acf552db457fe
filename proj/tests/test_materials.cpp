#include <cmath>

#include "doctest.h"
#include "magnon/materials.hpp"

using namespace magnon;

namespace {
const FerriteFilm film{};           // LPE-YIG defaults
const BiasField bias{2500.0};
}  // namespace

TEST_CASE("permeability matches the direct-arithmetic values at 9.3 GHz") {
    const auto t = permeability(film, bias, 9.3e9);
    // Exact rationals: omega = 93/49, omega_h = 10/7, mu2 = 3430/3749.
    CHECK(t.omega_norm == doctest::Approx(93.0 / 49.0).epsilon(1e-14));
    CHECK(t.omega_h == doctest::Approx(10.0 / 7.0).epsilon(1e-14));
    CHECK(t.mu1 == doctest::Approx(0.08508935716190984).epsilon(1e-12));
    CHECK(t.mu2 == doctest::Approx(0.9149106428380902).epsilon(1e-12));
}

TEST_CASE("permeability approaches the free-space tensor at high frequency") {
    const auto t = permeability(film, bias, 1e15);
    CHECK(t.mu1 == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(t.mu2) < 1e-9);
}

TEST_CASE("permeability is singular at the FMR pole") {
    const double f_pole = film.gamma * bias.h0;  // Omega == Omega_H, 7 GHz
    CHECK_THROWS_AS(permeability(film, bias, f_pole), SingularPermeability);
    CHECK_THROWS_AS(permeability(film, bias, 0.0), NonPositiveFrequency);
    CHECK_THROWS_AS(permeability(film, bias, -1.0), NonPositiveFrequency);
}

TEST_CASE("mu1 vanishes at f_min and increases with frequency") {
    const auto [f_min, f_max] = resonance_bounds(film, bias);
    CHECK(std::abs(permeability(film, bias, f_min).mu1) < 1e-9);

    double prev = permeability(film, bias, f_min * (1 + 1e-9)).mu1;
    for (int i = 1; i <= 200; ++i) {
        const double f = f_min * (1 + 1e-9) + (4.0 * f_max - f_min) * i / 200.0;
        const double mu1 = permeability(film, bias, f).mu1;
        CHECK(mu1 > prev);
        prev = mu1;
    }

    for (int i = 1; i < 50; ++i) {
        const double f = f_min + (f_max - f_min) * i / 50.0;
        const double mu1 = permeability(film, bias, f).mu1;
        CHECK(mu1 > 0.0);
        CHECK(mu1 < 1.0);
    }
}

TEST_CASE("resonance bounds reproduce the band-edge arithmetic") {
    const auto b2500 = resonance_bounds(film, bias);
    // sqrt(10,625,000) * 2.8e6; sqrt(11,390,625) = 3375 exactly.
    CHECK(b2500.f_min == doctest::Approx(9126883367.283709).epsilon(1e-12));
    CHECK(b2500.f_max == doctest::Approx(9.45e9).epsilon(1e-12));
    CHECK(b2500.f_min == doctest::Approx(9.1269e9).epsilon(1e-4));

    const auto b1500 = resonance_bounds(film, BiasField{1500.0});
    CHECK(b1500.f_min == doctest::Approx(6.182e9).epsilon(1e-3));
}

TEST_CASE("resonance bounds collapse correctly as h0 -> 0") {
    const auto b = resonance_bounds(film, BiasField{1e-9});
    CHECK(b.f_min < 1e4);
    CHECK(b.f_max == doctest::Approx(film.gamma * film.b_sat / 2.0).epsilon(1e-9));  // 2.45 GHz
    CHECK_THROWS_AS(resonance_bounds(film, BiasField{0.0}), NonPositiveField);
    CHECK_THROWS_AS(resonance_bounds(film, BiasField{-100.0}), NonPositiveField);
}

TEST_CASE("band edges are ordered and increase with field") {
    double prev_min = 0, prev_max = 0;
    for (double h0 = 100; h0 <= 10000; h0 += 177) {
        const auto b = resonance_bounds(film, BiasField{h0});
        CHECK(b.f_min < b.f_max);
        CHECK(b.f_min > prev_min);
        CHECK(b.f_max > prev_max);
        prev_min = b.f_min;
        prev_max = b.f_max;
    }
}

TEST_CASE("film invariants are enforced") {
    FerriteFilm bad = film;
    bad.width = -1.0;
    CHECK_THROWS_WITH_AS(bad.validate(), "width must be positive", ValidationError);

    bad = film;
    bad.thickness = bad.width;  // thin-film assumption broken
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    bad = film;
    bad.thickness = bad.length + 1e-4;
    CHECK_THROWS_AS(bad.validate(), ValidationError);

    CHECK_NOTHROW(film.validate());
}
