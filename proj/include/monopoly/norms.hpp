#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/reinhardt_set.hpp"
#include "monopoly/rng.hpp"

namespace monopoly {

using Evaluable = std::function<std::complex<double>(std::span<const std::complex<double>>)>;

/// Weight rho_{rho_exponent}(z) * (-log rho_{log_base}(z))^{log_power};
/// the log factor is skipped entirely when log_power = 0.
struct WeightSpec {
    std::vector<double> rho_exponent;
    std::vector<double> log_base;
    double log_power = 0.0;

    static WeightSpec none(int n) { return {std::vector<double>(n, 0.0), std::vector<double>(n, 0.0), 0.0}; }

    double operator()(std::span<const std::complex<double>> z) const {
        double w = rho(std::span<const double>(rho_exponent), z);
        if (log_power != 0.0) {
            const double base = std::max(0.0, -std::log(rho(std::span<const double>(log_base), z)));
            w *= std::pow(base, log_power);
        }
        return w;
    }
};

namespace detail {

// heavy-tail detector: more than half of the integrand mass in the top 1% of
// samples, or outright overflow
inline void check_integrable(std::vector<double>& magnitudes, double total) {
    if (!std::isfinite(total))
        throw NonIntegrableError("running estimate overflowed; integrand is not integrable at this power");
    if (total <= 0.0 || magnitudes.size() < 200) return;
    const std::size_t top = std::max<std::size_t>(1, magnitudes.size() / 100);
    std::nth_element(magnitudes.begin(), magnitudes.begin() + top, magnitudes.end(), std::greater<>());
    double top_mass = 0.0;
    for (std::size_t i = 0; i < top; ++i) top_mass += magnitudes[i];
    if (top_mass > 0.5 * total)
        throw NonIntegrableError("running estimate looks divergent: top-1% samples carry " +
                                 std::to_string(top_mass / total) + " of the mass");
}

} // namespace detail

/// Monte Carlo estimate of ( int_region |f|^p * weight dV )^{1/p} by uniform
/// sampling of the ambient polydisc. Reproduces bit-identically per seed.
inline EstimateResult lp_norm(const Evaluable& f, const ReinhardtAngularSet& region, double p,
                              const WeightSpec& weight, std::size_t samples, std::uint64_t seed,
                              std::uint64_t stream = 0) {
    if (p < 1.0) throw RangeError("lp_norm requires p >= 1");
    const int n = region.dim();
    CounterRng rng(seed, stream);
    const double box = pow_int(pi, n);

    double sum = 0.0, sum_sq = 0.0;
    std::vector<double> mags;
    mags.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto z = sample_polydisc(rng, i * 2 * n, n);
        double g = 0.0;
        if (region.member(z)) {
            const double fv = std::abs(f(z));
            if (fv != 0.0) g = std::pow(fv, p) * weight(z);
        }
        sum += g;
        sum_sq += g * g;
        mags.push_back(g);
    }
    detail::check_integrable(mags, sum);

    const double mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq / static_cast<double>(samples) - mean * mean);
    const double integral = box * mean;
    const double integral_se = box * std::sqrt(var / static_cast<double>(samples));
    if (integral <= 0.0) return EstimateResult::monte_carlo(0.0, 0.0, samples, seed);
    const double value = std::pow(integral, 1.0 / p);
    const double se = integral_se * value / (p * integral);
    return EstimateResult::monte_carlo(value, se, samples, seed);
}

/// Weak-L^p quasinorm sup_y y * mu{ |f| > y }^{1/p}, with the supremum taken
/// over a geometric grid spanning the sampled range of |f|. Distribution mass
/// is counted with >= at the grid points, so two-valued functions incur no
/// grid error.
inline EstimateResult weak_quasinorm(const Evaluable& f, const ReinhardtAngularSet& region, double p,
                                     std::size_t samples, std::uint64_t seed, int grid_points = 64,
                                     std::uint64_t stream = 0) {
    if (p <= 1.0) throw RangeError("weak quasinorm requires p > 1");
    const int n = region.dim();
    CounterRng rng(seed, stream);
    const double box = pow_int(pi, n);

    std::vector<double> values;
    values.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) {
        const auto z = sample_polydisc(rng, i * 2 * n, n);
        if (region.member(z)) values.push_back(std::abs(f(z)));
    }
    std::sort(values.begin(), values.end());
    double lo = 0.0, hi = values.empty() ? 0.0 : values.back();
    for (double v : values)
        if (v > 0.0) {
            lo = v;
            break;
        }
    if (hi <= 0.0) return EstimateResult::monte_carlo(0.0, 0.0, samples, seed);

    double best = 0.0, best_frac = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double t = grid_points == 1 ? 0.0 : static_cast<double>(i) / (grid_points - 1);
        const double y = lo * std::pow(hi / lo, t);
        const auto it = std::lower_bound(values.begin(), values.end(), y);
        const double frac =
            static_cast<double>(values.end() - it) / static_cast<double>(samples); // mass of {|f| >= y}
        const double cand = y * std::pow(box * frac, 1.0 / p);
        if (cand > best) {
            best = cand;
            best_frac = frac;
        }
    }
    // standard error of the measure at the attaining level, propagated
    const double mse = box * std::sqrt(best_frac * (1.0 - best_frac) / static_cast<double>(samples));
    const double se = best_frac > 0.0 ? best * mse / (p * box * best_frac) : 0.0;
    return EstimateResult::monte_carlo(best, se, samples, seed);
}

} // namespace monopoly
