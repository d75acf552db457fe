#include <cmath>
#include <random>

#include "doctest.h"
#include "magnon/dispersion.hpp"
#include "oracles.hpp"

using namespace magnon;

namespace {
const FerriteFilm film{};
const BiasField bias{2500.0};
}  // namespace

TEST_CASE("reduction factor limits and golden point") {
    CHECK(reduction_factor(0.0) == 0.0);
    CHECK(reduction_factor(1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(reduction_factor(1e4) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK_THROWS_AS(reduction_factor(-1e-9), NegativeArgument);
}

TEST_CASE("reduction factor is strictly increasing with range [0, 1)") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> dist(0.0, 50.0);
    std::vector<double> xs{0.0, 5e-5, 9.9999e-5, 1e-4, 1.0001e-4, 2e-4};  // series seam
    for (int i = 0; i < 500; ++i) xs.push_back(dist(rng));
    std::sort(xs.begin(), xs.end());
    double prev = -1.0;
    for (double x : xs) {
        const double p = reduction_factor(x);
        CHECK(p >= 0.0);
        CHECK(p < 1.0);
        if (x > xs.front()) CHECK(p > prev);
        prev = p;
    }
}

TEST_CASE("dipole-exchange frequency collapses to the band edge at k = 0") {
    const double f = dipole_exchange_frequency(film, bias, 0.0, 0.0, 0.0);
    const auto bounds = resonance_bounds(film, bias);
    CHECK(f == doctest::Approx(bounds.f_min).epsilon(1e-12));
    CHECK(f == doctest::Approx(9.1269e9).epsilon(1e-4));
}

TEST_CASE("dipole-exchange frequency approaches gamma*h0 for large k without exchange") {
    FerriteFilm no_exch = film;
    no_exch.exch = 1e-30;
    const double f = dipole_exchange_frequency(no_exch, bias, 0.0, 0.0, 1e8);
    CHECK(f == doctest::Approx(film.gamma * bias.h0).epsilon(1e-5));  // 7.0 GHz
}

TEST_CASE("dipole-exchange golden value at k_x = k_z = 500 rad/cm") {
    // Frozen from two independent scalar evaluations of the same expression.
    const double f = dipole_exchange_frequency(film, bias, 500.0, 0.0, 500.0);
    CHECK(f == doctest::Approx(8551634194.2599125).epsilon(1e-12));
}

TEST_CASE("dipole-exchange rejects out-of-model input") {
    CHECK_THROWS_AS(dipole_exchange_frequency(film, BiasField{-5000.0}, 0.0, 0.0, 100.0),
                    NegativeRadicand);
    CHECK_THROWS_AS(dipole_exchange_frequency(film, bias, -1.0, 0.0, 1.0), NegativeArgument);
}

TEST_CASE("closed-form surface frequency hits both band edges") {
    const auto bounds = resonance_bounds(film, bias);
    CHECK(de_surface_frequency(film, bias, 0.0) == doctest::Approx(bounds.f_min).epsilon(1e-14));
    const double k_sat = 10.0 / film.thickness;
    CHECK(de_surface_frequency(film, bias, k_sat) ==
          doctest::Approx(bounds.f_max).epsilon(1e-4));
    CHECK(de_surface_frequency(film, bias, 500.0) ==
          doctest::Approx(9378867800.2043).epsilon(1e-10));
}

TEST_CASE("closed-form surface frequency is increasing and band-bounded") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> h_dist(200.0, 9800.0);
    std::uniform_real_distribution<double> k_dist(0.0, 5000.0);
    for (int i = 0; i < 1000; ++i) {
        const BiasField b{h_dist(rng)};
        const auto bounds = resonance_bounds(film, b);
        double k1 = k_dist(rng), k2 = k_dist(rng);
        if (k1 > k2) std::swap(k1, k2);
        const double f1 = de_surface_frequency(film, b, k1);
        const double f2 = de_surface_frequency(film, b, k2);
        if (k1 < k2) CHECK(f1 < f2);
        CHECK(f1 >= bounds.f_min);
        CHECK(f2 <= bounds.f_max);
    }
}

TEST_CASE("oblique extension reduces to the fundamental closed form") {
    for (double k : {10.0, 112.2, 500.0, 2000.0}) {
        CHECK(oblique_surface_frequency(film, bias, k, 0) == de_surface_frequency(film, bias, k));
        CHECK(oblique_surface_frequency(film, bias, k, 1) == de_surface_frequency(film, bias, k));
    }
}

TEST_CASE("oblique extension detunes width modes downward, within the band") {
    const auto bounds = resonance_bounds(film, bias);
    for (double k : {112.2, 300.0, 600.0, 1122.0}) {
        double prev = oblique_surface_frequency(film, bias, k, 1);
        for (int m = 2; m <= 7; ++m) {
            const double f = oblique_surface_frequency(film, bias, k, m);
            CHECK(f <= prev);
            CHECK(f >= bounds.f_min);
            CHECK(f <= bounds.f_max);
            prev = f;
        }
    }
    // Large k_x restores the fundamental behavior for every width order.
    const double k_big = 50.0 / film.thickness;
    for (int m = 1; m <= 7; ++m) {
        CHECK(oblique_surface_frequency(film, bias, k_big, m) ==
              doctest::Approx(bounds.f_max).epsilon(1e-3));
    }
}

TEST_CASE("Eq13/Eq14 consistency: vanishing wavevector reproduces f_min to 1e-9") {
    const auto bounds = resonance_bounds(film, bias);
    const double k_z = 1e-6;
    const double f = dipole_exchange_frequency(film, bias, 0.0, k_z, k_z);
    CHECK(f == doctest::Approx(bounds.f_min).epsilon(1e-9));
}

TEST_CASE("mode solve satisfies its own contract and the frozen golden value") {
    const auto pt = solve_mode_frequency(film, bias, 300.0, 1);
    CHECK(pt.status == DispersionPoint::Status::Ok);
    // |f - Eq13(k_z(f))| < 1 Hz, re-assembled from scratch
    CHECK(std::abs(test::scan_residual(film, bias, 300.0, 1, pt.f)) < 1.0);
    // dense-scan oracle agreement (frozen: 9174657659.1 Hz)
    CHECK(pt.f == doctest::Approx(9174657659.1).epsilon(1e-6));
    const auto scanned = test::dense_scan_solve(film, bias, 300.0, 1, 200000);
    REQUIRE(scanned.has_value());
    CHECK(pt.f == doctest::Approx(*scanned).epsilon(1e-6));
    // the quantized transverse wavenumber under the hood is (m*pi/W)/sqrt(mu1)
    const double mu1 = permeability(film, bias, pt.f).mu1;
    const double k_ym_sq = std::pow(M_PI / film.width, 2) / mu1;
    CHECK(pt.k_z == doctest::Approx(std::sqrt(300.0 * 300.0 + k_ym_sq)).epsilon(1e-12));
}

TEST_CASE("fixed-point cross-check agrees with bisection") {
    for (double k : {112.2, 300.0, 800.0}) {
        const auto pt = solve_mode_frequency(film, bias, k, 1);
        const double fp = solve_mode_frequency_fixed_point(film, bias, k, 1);
        CHECK(std::abs(pt.f - fp) < 5.0);
    }
}

TEST_CASE("randomized solver instances agree with the dense-scan oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> h_dist(800.0, 9800.0);
    std::uniform_real_distribution<double> k_dist(50.0, 2000.0);
    std::uniform_int_distribution<int> m_dist(1, 5);
    int solved = 0;
    for (int i = 0; i < 10; ++i) {
        const BiasField b{h_dist(rng)};
        const double k = k_dist(rng);
        const int m = m_dist(rng);
        const auto scanned = test::dense_scan_solve(film, b, k, m, 200000);
        try {
            const auto pt = solve_mode_frequency(film, b, k, m);
            REQUIRE(scanned.has_value());
            CHECK(pt.f == doctest::Approx(*scanned).epsilon(1e-6));
            ++solved;
        } catch (const NoSolutionInBand&) {
            CHECK(!scanned.has_value());
        }
    }
    CHECK(solved > 0);
}

TEST_CASE("dispersion curves carry gap markers and preserve grid order") {
    CHECK(dispersion_curve(film, bias, 0, {}, Engine::DeOracle).empty());
    CHECK_THROWS_AS(dispersion_curve(film, bias, 1, {10.0, 20.0}, Engine::DeOracle),
                    ValidationError);
    CHECK_THROWS_AS(dispersion_curve(film, bias, 0, {20.0, 10.0}, Engine::DeOracle),
                    ValidationError);

    std::vector<double> grid;
    for (int i = 0; i <= 50; ++i) grid.push_back(10.0 + 40.0 * i);
    const auto de = dispersion_curve(film, bias, 0, grid, Engine::DeOracle);
    const auto bounds = resonance_bounds(film, bias);
    REQUIRE(de.size() == grid.size());
    for (std::size_t i = 0; i < de.size(); ++i) {
        CHECK(de[i].status == DispersionPoint::Status::Ok);
        CHECK(de[i].k_x == grid[i]);
        CHECK(de[i].f >= bounds.f_min);
        CHECK(de[i].f <= bounds.f_max);
        if (i > 0) CHECK(de[i].f > de[i - 1].f);
    }

    const auto paper = dispersion_curve(film, bias, 1, grid, Engine::Paper);
    REQUIRE(paper.size() == grid.size());
    for (const auto& pt : paper) {
        if (pt.status != DispersionPoint::Status::Ok) CHECK(std::isnan(pt.f));
    }
}

TEST_CASE("engines are deterministic") {
    const auto a = solve_mode_frequency(film, bias, 300.0, 2);
    const auto b = solve_mode_frequency(film, bias, 300.0, 2);
    CHECK(a.f == b.f);
    CHECK(a.k_z == b.k_z);
}

TEST_CASE("engine names round-trip") {
    for (Engine e : {Engine::Paper, Engine::DeOracle, Engine::DeWidth}) {
        CHECK(engine_from_string(to_string(e)) == e);
    }
    CHECK_THROWS_AS(engine_from_string("bogus"), ValidationError);
}
