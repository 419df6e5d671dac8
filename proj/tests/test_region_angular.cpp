#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monopoly/region_integrals.hpp"
#include "monopoly/reinhardt_set.hpp"
#include "oracles.hpp"

using namespace monopoly;
using Catch::Approx;

TEST_CASE("wedge integral closed forms against hand values") {
    const double s = 0.25;
    // d = (0,0): (1/2) s log(1/s)
    CHECK(wedge_region_integral(ExponentVector::from_ints({0, 0}), s) ==
          Approx(0.5 * s * std::log(1.0 / s)).epsilon(1e-12));
    // d = (1,0): s^{3/2} - s^2
    CHECK(wedge_region_integral(ExponentVector::from_ints({1, 0}), s) ==
          Approx(std::pow(s, 1.5) - s * s).epsilon(1e-12));
    // extra coordinate divides by d_3 + 1
    CHECK(wedge_region_integral(ExponentVector::from_ints({0, 0, 1}), s) ==
          Approx(0.25 * s * std::log(1.0 / s)).epsilon(1e-12));
}

TEST_CASE("wedge integral parameter validation") {
    CHECK_THROWS_AS(wedge_region_integral(ExponentVector::from_ints({0, 0}), 0.3), RangeError);
    CHECK_THROWS_AS(wedge_region_integral(ExponentVector::from_ints({0, 0}), 0.0), RangeError);
    CHECK_THROWS_AS(wedge_region_integral(ExponentVector::from_ints({-1, 0}), 0.1), DomainError);
    CHECK_NOTHROW(wedge_region_integral(ExponentVector::from_ints({0, 0}), 0.25));
}

TEST_CASE("wedge integral matches direct nested quadrature") {
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> d_dist(0.0, 5.0), s_dist(0.005, 0.25);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 2);
        std::vector<Rational> d(n);
        std::vector<double> dd(n);
        for (int j = 0; j < n; ++j) {
            dd[j] = d_dist(gen);
            d[j] = Rational(static_cast<std::int64_t>(dd[j] * (1 << 20)), 1 << 20);
            dd[j] = to_double(d[j]);
        }
        const double s = s_dist(gen);
        const double closed = wedge_region_integral(ExponentVector(d), s);
        const double quad = oracles::quad_wedge_integral(dd, s);
        CHECK(closed == Approx(quad).epsilon(1e-6));
    }
}

TEST_CASE("equal-exponent branch is the limit of the generic branch") {
    std::vector<Rational> base{Rational(3, 2), Rational(3, 2), Rational(1, 3)};
    const double s = 1.0 / 32.0;
    const double equal = wedge_region_integral(ExponentVector(base), s);
    for (double sign : {1.0, -1.0}) {
        auto d = base;
        d[0] += Rational(static_cast<std::int64_t>(sign), 1000000);
        const double nearby = wedge_region_integral(ExponentVector(d), s);
        CHECK(std::abs(nearby - equal) / equal < 1e-4);
    }
}

TEST_CASE("angular character integral closed form") {
    const std::vector<std::int64_t> kappa0{1, 1, 0};
    const double full = pow_int(two_pi, 3);

    // kappa = 0: half the torus
    CHECK(angular_character_integral(std::vector<std::int64_t>{0, 0, 0}, kappa0).real() ==
          Approx(full / 2.0));
    // kappa = kappa0 is the m = -1 harmonic: + i (2 pi)^n / pi
    const auto v = angular_character_integral(kappa0, kappa0);
    CHECK(v.real() == Approx(0.0).margin(1e-15));
    CHECK(v.imag() == Approx(full / pi));
    CHECK(v.imag() > 0.0);
    // even harmonics vanish
    CHECK(angular_character_integral(std::vector<std::int64_t>{2, 2, 0}, kappa0) ==
          std::complex<double>(0.0, 0.0));
    // non-multiples vanish
    CHECK(angular_character_integral(std::vector<std::int64_t>{1, 2, 0}, kappa0) ==
          std::complex<double>(0.0, 0.0));
    CHECK(angular_character_integral(std::vector<std::int64_t>{0, 0, 1}, kappa0) ==
          std::complex<double>(0.0, 0.0));

    CHECK_THROWS_AS(angular_character_integral(kappa0, std::vector<std::int64_t>{0, 0, 0}),
                    ZeroDirectionError);
}

TEST_CASE("angular character integral is conjugate-symmetric") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 2);
        std::vector<std::int64_t> kappa0(n), kappa(n);
        bool nz = false;
        for (auto& k : kappa0) {
            k = static_cast<std::int64_t>(gen() % 5) - 2;
            if (k) nz = true;
        }
        if (!nz) kappa0[0] = 1;
        const std::int64_t m = static_cast<std::int64_t>(gen() % 7) - 3;
        for (int j = 0; j < n; ++j) kappa[j] = (gen() % 2) ? -m * kappa0[j] : static_cast<std::int64_t>(gen() % 3) - 1;
        std::vector<std::int64_t> neg(n);
        for (int j = 0; j < n; ++j) neg[j] = -kappa[j];
        const auto a = angular_character_integral(kappa, kappa0);
        const auto b = angular_character_integral(neg, kappa0);
        CHECK(b.real() == Approx(a.real()).margin(1e-12));
        CHECK(b.imag() == Approx(-a.imag()).margin(1e-12));
    }
}

TEST_CASE("angular character integral against the torus Monte Carlo oracle") {
    const std::vector<std::int64_t> kappa0{1, 1, 0};
    const std::vector<std::vector<std::int64_t>> kappas = {
        {0, 0, 0}, {1, 1, 0}, {-1, -1, 0}, {2, 2, 0}, {3, 3, 0}, {1, 0, 0}, {0, 0, 2}};
    for (std::size_t i = 0; i < kappas.size(); ++i) {
        const auto closed = angular_character_integral(kappas[i], kappa0);
        const auto mc = oracles::mc_angular_character(kappas[i], kappa0, 1000000, 5000 + i);
        CHECK(std::abs(closed.real() - mc.value.real()) <= 3.0 * mc.se_re + 1e-9);
        CHECK(std::abs(closed.imag() - mc.value.imag()) <= 3.0 * mc.se_im + 1e-9);
    }
}

TEST_CASE("membership combines radial and angular conditions") {
    const auto full = ReinhardtAngularSet::full(2);
    CHECK(full.member(std::vector<std::complex<double>>{{0.3, 0.2}, {0.9, 0.0}}));

    // blow-up window with s = 1/16 in dimension 3
    const double s = 1.0 / 16.0;
    const auto window =
        ReinhardtAngularSet::blowup_window({1, 1, 0}, {1, 1, 1}, s); // kappa0 = (1,1,0)
    // |z1| in (s, sqrt s), |z1 z2| < s, Arg(z1 z2) in [0, pi]
    std::vector<std::complex<double>> inside{{0.1, 0.0}, {0.05, 0.0}, std::polar(0.5, 0.1)};
    CHECK(window.member(inside));
    std::vector<std::complex<double>> big1{{0.5, 0.0}, {0.05, 0.0}, std::polar(0.5, 0.1)};
    CHECK_FALSE(window.member(big1)); // violates |z1| < sqrt(s)
    std::vector<std::complex<double>> bad_angle{std::polar(0.1, -0.3), std::polar(0.05, -0.3),
                                                std::polar(0.5, 0.1)};
    CHECK_FALSE(window.member(bad_angle)); // sin(theta1 + theta2) < 0
}

TEST_CASE("radial region classification") {
    // full box
    const auto full = ReinhardtAngularSet::full(3);
    CHECK(std::holds_alternative<BoxRegion>(classify_radial_region(full)));

    // coordinate box
    auto box = ReinhardtAngularSet::coordinate(2, 1, 0.5, RadialConstraint::Rel::lt);
    const auto kind = classify_radial_region(box);
    REQUIRE(std::holds_alternative<BoxRegion>(kind));
    CHECK(std::get<BoxRegion>(kind).hi[1] == Approx(0.5));

    // wedge pattern
    const auto wedge = ReinhardtAngularSet::wedge_radial(3, 0.125);
    const auto wk = classify_radial_region(wedge);
    REQUIRE(std::holds_alternative<WedgeRegion>(wk));
    CHECK(std::get<WedgeRegion>(wk).s == Approx(0.125));

    // generic monomial constraint
    std::vector<Rational> c{Rational(1), Rational(2)};
    const auto generic = ReinhardtAngularSet::sublevel(ExponentVector(c), 0.3);
    CHECK(std::holds_alternative<GeneralRegion>(classify_radial_region(generic)));
}

TEST_CASE("general radial integrator agrees with closed forms") {
    QuadratureOptions opt;
    opt.rel_tol = 1e-10;

    // box region computed generically: int over {r2 < 1/2} of r1^2 r2 dr = 1/3 * 1/8
    ReinhardtAngularSet box = ReinhardtAngularSet::coordinate(2, 1, 0.5, RadialConstraint::Rel::lt);
    const double got = radial_region_integral_quad(box, {2.0, 1.0}, opt);
    CHECK(got == Approx(1.0 / 24.0).epsilon(1e-9));

    // wedge region, quadrature path vs closed form
    const double s = 1.0 / 16.0;
    const auto wedge = ReinhardtAngularSet::wedge_radial(2, s);
    const double quad = radial_region_integral_quad(wedge, {1.0, 2.0}, opt);
    CHECK(quad == Approx(wedge_region_integral(ExponentVector::from_ints({1, 2}), s)).epsilon(1e-8));

    // Monte Carlo fallback with the section coordinate handled exactly
    const auto mc = radial_region_integral_mc(wedge, {1.0, 2.0}, {}, 0.0, 40000, 42);
    CHECK(std::abs(mc.value - quad) <= 4.0 * mc.standard_error + 1e-12);
}

TEST_CASE("log-weighted radial Monte Carlo against a hand integral") {
    // int over {r1 < 1/2} of (-log r1) dr1 = (1 + log 2)/2 on [0, 1/2)
    ReinhardtAngularSet strip = ReinhardtAngularSet::coordinate(2, 0, 0.5, RadialConstraint::Rel::lt);
    const auto est = radial_region_integral_mc(strip, {0.0, 0.0}, {1.0, 0.0}, 1.0, 20000, 7);
    const double expect = 0.5 * (1.0 + std::log(2.0));
    CHECK(est.value == Approx(expect).epsilon(1e-6)); // section coordinate is exact here
}
