#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

#include "monopoly/blowup_series.hpp"
#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/rng.hpp"

namespace monopoly {

/// One grid point of the weak-type blow-up experiment.
struct BlowupRow {
    double s = 0.0;
    double lambda = 0.0;             // threshold lambda_s
    EstimateResult superlevel;       // mu{ |h_s| / rho_alpha > lambda_s } on the polydisc
    double denominator = 0.0;        // closed-form int over the window of rho_{2 alpha}
    double ratio = 0.0;              // lambda^{p*} * superlevel / denominator
};

struct BlowupResult {
    std::vector<BlowupRow> rows;
    double fitted_slope = 0.0; // of log(ratio) against log(log(1/s))
    double floor_constant = 0.0; // fitted K of the series lower bound on the probe box
    double probe_box_measure = 0.0;
    double p_star = 0.0;
};

namespace detail {

// 9 grid points per complex coordinate inside the radius-1/8 probe box
inline std::vector<std::vector<std::complex<double>>> probe_box_grid(int n) {
    const double g = 0.088;
    std::vector<std::complex<double>> pts;
    for (double re : {-g, 0.0, g})
        for (double im : {-g, 0.0, g}) pts.emplace_back(re, im);
    std::vector<std::vector<std::complex<double>>> grid;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        std::vector<std::complex<double>> z(n);
        for (int j = 0; j < n; ++j) z[j] = pts[idx[j]];
        grid.push_back(std::move(z));
        int i = n - 1;
        while (i >= 0 && idx[i] == pts.size() - 1) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
    return grid;
}

struct SuperlevelSampler {
    const MonomialSeries& series;
    std::vector<double> alpha_d;
    double lambda;

    bool exceeded(std::span<const std::complex<double>> z) const {
        const double h = std::abs(series.evaluate(z));
        return h > lambda * rho(std::span<const double>(alpha_d), z);
    }
};

// Stratified estimate of mu{ |h| > lambda rho_alpha } over the polydisc:
// the radial coordinate of z_1 is split at sqrt(s) with 4x oversampling of the
// inner shell, where the window mass concentrates.
inline EstimateResult superlevel_measure(const SuperlevelSampler& f, int n, double s, std::size_t samples,
                                         std::uint64_t seed, std::uint64_t stream) {
    const double box = pow_int(pi, n);
    const double frac_a = s; // z-measure fraction of { |z_1| < sqrt(s) }
    std::size_t n_a = static_cast<std::size_t>(4.0 * frac_a * static_cast<double>(samples));
    n_a = std::min(samples / 2, std::max<std::size_t>(1000, n_a));
    const std::size_t n_b = samples - n_a;

    const CounterRng rng_a(seed, 2 * stream);
    const CounterRng rng_b(seed, 2 * stream + 1);
    std::vector<std::complex<double>> z(n);

    auto run = [&](const CounterRng& rng, std::size_t count, bool inner_shell) {
        std::size_t hits = 0;
        for (std::size_t i = 0; i < count; ++i) {
            const std::uint64_t base = i * 2 * n;
            for (int j = 0; j < n; ++j) {
                double u = rng.u01(base + 2 * j);
                double r;
                if (j == 0)
                    r = inner_shell ? std::sqrt(u * frac_a) : std::sqrt(frac_a + u * (1.0 - frac_a));
                else
                    r = std::sqrt(u);
                z[j] = std::polar(r, two_pi * rng.u01(base + 2 * j + 1));
            }
            if (f.exceeded(z)) ++hits;
        }
        return static_cast<double>(hits) / static_cast<double>(count);
    };

    const double pa = run(rng_a, n_a, true);
    const double pb = run(rng_b, n_b, false);
    const double va = box * frac_a, vb = box * (1.0 - frac_a);
    const double value = va * pa + vb * pb;
    const double var = va * va * pa * (1.0 - pa) / static_cast<double>(n_a) +
                       vb * vb * pb * (1.0 - pb) / static_cast<double>(n_b);
    return EstimateResult::monte_carlo(value, std::sqrt(var), samples, seed);
}

} // namespace detail

inline double probe_box_measure(int n) {
    const double r = 0.125;
    return pow_int(pi * r * r, n);
}

/// Weak-type blow-up experiment: for each s in the decreasing grid, build the
/// projected window series h_s, set the threshold
/// lambda_s = (1/4)^{b_2 - 1} K s^{alpha_1 + 2} log(1/s) with K fitted on the
/// probe box at the largest s, estimate the superlevel measure by stratified
/// Monte Carlo, take the closed-form window integral of rho_{2 alpha} as
/// denominator, and fit the growth exponent of the ratio in log log(1/s).
inline BlowupResult blowup_experiment(const DomainAnalysis& an, const ExponentVector& b,
                                      const std::vector<double>& s_grid, int truncation_degree,
                                      std::size_t samples, std::uint64_t seed) {
    check_blowup_hypotheses(an, b);
    if (s_grid.empty()) throw RangeError("empty s grid");
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > 0.0 && s_grid[i] <= 0.0625))
            throw HypothesisViolatedError("grid values must lie in (0, 1/16], below the fitted-bound onset");
        if (i > 0 && s_grid[i] >= s_grid[i - 1]) throw RangeError("s grid must be strictly decreasing");
    }

    const int n = an.dim();
    const auto alpha = an.alpha_cover.as_int64s();
    const double a1 = static_cast<double>(alpha[0]);
    const double p_star = to_double(an.p_star);
    const double b2 = to_double(b[1]);

    BlowupResult out;
    out.p_star = p_star;
    out.probe_box_measure = probe_box_measure(n);

    // fit the series floor constant on the probe box at the largest s
    const auto grid = detail::probe_box_grid(n);
    {
        const double s0 = s_grid.front();
        const MonomialSeries h0 = blowup_series(an, b, s0, truncation_degree);
        double k_min = std::numeric_limits<double>::infinity();
        const double scale = std::pow(s0, a1 + 2.0) * std::log(1.0 / s0);
        for (const auto& z : grid) k_min = std::min(k_min, std::abs(h0.evaluate(z)) / scale);
        out.floor_constant = k_min;
        if (!(out.floor_constant > 0.0))
            throw NonConvergentError("series floor constant vanished on the probe box");
    }

    std::vector<double> log_log_inv_s, log_ratio;
    for (std::size_t i = 0; i < s_grid.size(); ++i) {
        const double s = s_grid[i];
        BlowupRow row;
        row.s = s;
        const MonomialSeries h = blowup_series(an, b, s, truncation_degree);
        row.lambda = std::pow(0.25, b2 - 1.0) * out.floor_constant * std::pow(s, a1 + 2.0) * std::log(1.0 / s);

        detail::SuperlevelSampler sampler{h, an.alpha_cover.as_doubles(), row.lambda};
        row.superlevel = detail::superlevel_measure(sampler, n, s, samples, seed, i);

        std::vector<double> d(n);
        for (int j = 0; j < n; ++j) d[j] = static_cast<double>(2 * alpha[j] + 1);
        row.denominator =
            0.5 * pow_int(two_pi, n) * detail::wedge_closed_form(d, d[0] == d[1], s, 0, 1);
        row.ratio = std::pow(row.lambda, p_star) * row.superlevel.value / row.denominator;

        if (i + 1 == s_grid.size()) {
            const double ci = 3.0 * row.superlevel.standard_error;
            if (row.superlevel.value <= 0.0 || ci > 0.30 * row.superlevel.value)
                throw NonConvergentError("superlevel-measure confidence interval exceeds 30% at the "
                                         "deepest grid point");
        }
        log_log_inv_s.push_back(std::log(std::log(1.0 / s)));
        log_ratio.push_back(std::log(row.ratio));
        out.rows.push_back(std::move(row));
    }
    out.fitted_slope = ols_fit(log_log_inv_s, log_ratio).slope;
    return out;
}

} // namespace monopoly
