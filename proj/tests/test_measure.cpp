#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monopoly/measure.hpp"
#include "monopoly/sublevel_volume.hpp"
#include "oracles.hpp"

using namespace monopoly;
using Catch::Approx;

namespace {
std::vector<std::complex<double>> cpt(std::initializer_list<std::complex<double>> l) { return l; }
} // namespace

TEST_CASE("rho basics") {
    CHECK(rho(ExponentVector::from_ints({0, 0}), cpt({{0.9, 0.1}, {0.0, 0.0}})) == 1.0);
    CHECK(rho(ExponentVector::from_ints({1, 1}), cpt({{0.5, 0.0}, {0.5, 0.0}})) == Approx(0.25));
    CHECK(rho(ExponentVector::from_ints({1, 1, 0}), cpt({{0.3, 0.0}, {0.0, 0.4}, {0.9, 0.0}})) ==
          Approx(0.12));
    CHECK_THROWS_AS(rho(ExponentVector::from_ints({-1, 0}), cpt({{0.0, 0.0}, {0.5, 0.0}})), DomainError);
}

TEST_CASE("sublevel volume closed cases") {
    // disc of radius s^{1/2}
    CHECK(sublevel_volume(ExponentVector::from_ints({2}), 0.25) == Approx(pi * 0.25).epsilon(1e-9));
    // n = 2, alpha = (1,1): pi^2 s^2 (1 + 2 log(1/s))
    const double s = 0.25;
    CHECK(sublevel_volume(ExponentVector::from_ints({1, 1}), s) ==
          Approx(pi * pi * s * s * (1.0 + 2.0 * std::log(1.0 / s))).epsilon(1e-7));
    // whole bidisc at s = 1
    CHECK(sublevel_volume(ExponentVector::from_ints({1, 1}), 1.0) == Approx(pi * pi).epsilon(1e-9));
}

TEST_CASE("sublevel volume errors and monotonicity") {
    CHECK_THROWS_AS(sublevel_volume(ExponentVector::from_ints({1, -1}), 0.5), DomainError);
    CHECK_THROWS_AS(sublevel_volume(ExponentVector::from_ints({0, 0}), 0.5), DomainError);
    CHECK_THROWS_AS(sublevel_volume(ExponentVector::from_ints({1, 1}), 0.0), RangeError);
    CHECK_THROWS_AS(sublevel_volume(ExponentVector::from_ints({1, 1}), 1.5), RangeError);

    const ExponentVector alpha = ExponentVector::from_ints({2, 1, 3});
    double prev = 0.0;
    for (double s : {0.001, 0.01, 0.1, 0.3, 0.7, 1.0}) {
        const double v = sublevel_volume(alpha, s);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }
}

TEST_CASE("sublevel volume agrees with the Monte Carlo oracle") {
    std::mt19937_64 gen(555);
    std::uniform_real_distribution<double> s_dist(0.02, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 3);
        std::vector<std::int64_t> a(n);
        bool nonzero = false;
        for (auto& v : a) {
            v = static_cast<std::int64_t>(gen() % 4);
            if (v) nonzero = true;
        }
        if (!nonzero) a[0] = 1;
        const double s = s_dist(gen);
        const double vol = sublevel_volume(ExponentVector::from_ints(a), s);
        std::vector<double> ad(a.begin(), a.end());
        const auto mc = oracles::mc_sublevel_volume(ad, s, 1000000, 1000 + trial);
        CHECK(std::abs(vol - mc.value) <= 3.0 * mc.standard_error + 1e-9);
    }
}

TEST_CASE("monomial L2 norms") {
    CHECK(monomial_l2_norm_sq(std::vector<std::int64_t>{0, 0}) == Approx(pi * pi));
    CHECK(monomial_l2_norm_sq(std::vector<std::int64_t>{1, 0}) == Approx(pi * pi / 2.0));
    CHECK(monomial_l2_norm_sq(std::vector<std::int64_t>{2, 3, 1}) == Approx(pi * pi * pi / 24.0));
}

// A single constant per (decay base, power) controls the sum-vs-largest-term
// comparison over arbitrary index sets; sampled over random sets it must stay
// modest for bases away from 1.
TEST_CASE("sum over an index set is comparable to its largest term") {
    std::mt19937_64 gen(31337);
    std::uniform_real_distribution<double> gdist(0.05, 0.9);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const double g = gdist(gen);
        const int mu = static_cast<int>(gen() % 5);
        std::vector<int> idx;
        for (int j = 0; j <= 200; ++j)
            if (gen() % 2) idx.push_back(j);
        if (idx.empty()) idx.push_back(static_cast<int>(gen() % 200));

        double sum = 0.0, largest = 0.0;
        for (int j : idx) {
            const double c = std::pow(static_cast<double>(j), mu) * std::pow(g, j);
            sum += c;
            largest = std::max(largest, c);
        }
        if (largest == 0.0) continue; // j = 0 with mu > 0 only
        worst = std::max(worst, sum / largest);
    }
    CHECK(worst < 1e3);
    CHECK(std::isfinite(worst));
}
