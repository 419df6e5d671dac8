#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "monopoly/covering.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/region_integrals.hpp"
#include "monopoly/reinhardt_set.hpp"
#include "monopoly/rng.hpp"

namespace monopoly {

namespace detail {

// int_lo^hi 2 r^{a+1} / (1 - c^2 r^2) dr for integer a >= 0 and 0 <= c < 1.
// Geometric series in c^2 r^2 when c is small; otherwise the power-reduction
// recursion J_m = -(hi^{m-1}-lo^{m-1})/((m-1)c^2) + J_{m-2}/c^2 seeded by the
// atanh / log antiderivatives.
inline double section_kernel_moment(std::int64_t a, double c, double lo, double hi) {
    if (hi <= lo) return 0.0;
    if (c < 0.6) {
        double acc = 0.0;
        const double c2 = c * c;
        double c2k = 1.0;
        for (int k = 0;; ++k) {
            const double m = static_cast<double>(a) + 2.0 * k + 2.0;
            const double term = c2k * 2.0 * (std::pow(hi, m) - std::pow(lo, m)) / m;
            acc += term;
            if (std::abs(term) < 1e-16 * std::abs(acc) + 1e-300) break;
            c2k *= c2;
            if (k > 10000) throw QuadratureError("kernel moment series failed to converge");
        }
        return acc;
    }
    const double c2 = c * c;
    const std::int64_t target = a + 1;
    double jm2 = (std::atanh(c * hi) - std::atanh(c * lo)) / c;                            // J_0
    double jm1 = -(std::log1p(-c2 * hi * hi) - std::log1p(-c2 * lo * lo)) / (2.0 * c2);    // J_1
    if (target == 0) return 2.0 * jm2;
    if (target == 1) return 2.0 * jm1;
    for (std::int64_t m = 2; m <= target; ++m) {
        const double jm = -(std::pow(hi, m - 1) - std::pow(lo, m - 1)) / ((m - 1) * c2) + jm2 / c2;
        jm2 = jm1;
        jm1 = jm;
    }
    return 2.0 * jm1;
}

} // namespace detail

/// Estimator for L^p norms of the positive Bergman operator applied to a
/// radial source, P+(rho_alpha 1_R) on the polydisc.
///
/// For a Reinhardt source the kernel's angular integrals collapse
/// (int dtheta / |1 - a e^{i theta}|^2 = 2 pi / (1 - a^2)), so
///   P+(rho_alpha 1_R)(z) = G(|z|),
///   G(x) = int_R prod_j 2 r_j^{alpha_j + 1} / (1 - x_j^2 r_j^2) dr.
/// G is estimated by Monte Carlo over all but one radial coordinate; the
/// section coordinate is integrated in closed form against its
/// constraint-resolved interval, which keeps the variance uniform as the
/// source region shrinks. Outer points sample the target measure; the inner
/// sample count is sqrt(outer).
class PositiveBergmanEstimator {
public:
    PositiveBergmanEstimator(std::vector<std::int64_t> alpha, const ReinhardtAngularSet& source)
        : alpha_(std::move(alpha)), source_(source), j0_(detail::pick_section_coordinate(source)),
          sc_(detail::SectionedConstraints::build(source, j0_)) {
        if (source.has_angular())
            throw UnsupportedSetError("reduced positive-operator estimator needs a radial source set");
        for (auto a : alpha_)
            if (a < 0) throw DomainError("kernel weight exponent must be nonnegative");
        for (int j = 0; j < source.dim(); ++j)
            if (j != j0_) outer_dims_.push_back(j);
    }

    // G(x) by inner Monte Carlo; deterministic in (rng, outer_index).
    double radial_value(std::span<const double> x, const CounterRng& inner_rng, std::uint64_t outer_index,
                        std::size_t inner_samples) const {
        const int n = source_.dim();
        std::vector<double> r(n, 0.0);
        double sum = 0.0;
        const std::uint64_t base = outer_index * inner_samples * std::max<std::size_t>(1, outer_dims_.size());
        for (std::size_t t = 0; t < inner_samples; ++t) {
            for (std::size_t k = 0; k < outer_dims_.size(); ++k)
                r[outer_dims_[k]] = inner_rng.u01(base + t * outer_dims_.size() + k);
            double lo, hi;
            if (!sc_.interval(r, lo, hi)) continue;
            double g = detail::section_kernel_moment(alpha_[j0_], x[j0_], lo, hi);
            for (int j : outer_dims_) {
                const double rj = r[j];
                g *= 2.0 * std::pow(rj, static_cast<double>(alpha_[j] + 1)) / (1.0 - x[j] * x[j] * rj * rj);
            }
            sum += g;
        }
        return sum / static_cast<double>(inner_samples);
    }

    /// || P+(rho_alpha 1_R) ||_{L^p(D^n)}^p
    EstimateResult norm_power(double p, std::size_t outer_samples, std::uint64_t seed,
                              std::uint64_t stream = 0) const {
        const int n = source_.dim();
        const CounterRng outer_rng(seed, 2 * stream);
        const CounterRng inner_rng(seed, 2 * stream + 1);
        const std::size_t inner = std::max<std::size_t>(
            16, static_cast<std::size_t>(std::sqrt(static_cast<double>(outer_samples))));
        const double box = pow_int(pi, n);

        double sum = 0.0, sum_sq = 0.0;
        std::vector<double> x(n);
        for (std::size_t i = 0; i < outer_samples; ++i) {
            for (int j = 0; j < n; ++j) x[j] = std::sqrt(outer_rng.u01(i * n + j));
            const double g = radial_value(x, inner_rng, i, inner);
            const double v = std::pow(g, p);
            sum += v;
            sum_sq += v * v;
        }
        const double mean = sum / static_cast<double>(outer_samples);
        const double var = std::max(0.0, sum_sq / static_cast<double>(outer_samples) - mean * mean);
        return EstimateResult::monte_carlo(box * mean, box * std::sqrt(var / static_cast<double>(outer_samples)),
                                           outer_samples, seed);
    }

private:
    std::vector<std::int64_t> alpha_;
    const ReinhardtAngularSet& source_;
    int j0_;
    detail::SectionedConstraints sc_;
    std::vector<int> outer_dims_;
};

/// Raw nested Monte Carlo for sources with an angular constraint: outer points
/// in the target polydisc, inner expectation of rho_alpha |K(z, .)| over the
/// source indicator.
inline EstimateResult pplus_norm_power_raw(const std::vector<std::int64_t>& alpha,
                                           const ReinhardtAngularSet& source, double p,
                                           std::size_t outer_samples, std::uint64_t seed,
                                           std::uint64_t stream = 0) {
    const int n = source.dim();
    const CounterRng outer_rng(seed, 2 * stream);
    const CounterRng inner_rng(seed, 2 * stream + 1);
    const std::size_t inner =
        std::max<std::size_t>(16, static_cast<std::size_t>(std::sqrt(static_cast<double>(outer_samples))));
    const double box = pow_int(pi, n);
    std::vector<double> alpha_d(n);
    for (int j = 0; j < n; ++j) alpha_d[j] = static_cast<double>(alpha[j]);

    double sum = 0.0, sum_sq = 0.0;
    for (std::size_t i = 0; i < outer_samples; ++i) {
        const auto z = sample_polydisc(outer_rng, i * 2 * n, n);
        double acc = 0.0;
        for (std::size_t t = 0; t < inner; ++t) {
            const auto w = sample_polydisc(inner_rng, (i * inner + t) * 2 * n, n);
            if (!source.member(w)) continue;
            acc += rho(std::span<const double>(alpha_d), w) * std::abs(polydisc_kernel(z, w));
        }
        const double g = box * acc / static_cast<double>(inner);
        const double v = std::pow(g, p);
        sum += v;
        sum_sq += v * v;
    }
    const double mean = sum / static_cast<double>(outer_samples);
    const double var = std::max(0.0, sum_sq / static_cast<double>(outer_samples) - mean * mean);
    return EstimateResult::monte_carlo(box * mean, box * std::sqrt(var / static_cast<double>(outer_samples)),
                                       outer_samples, seed);
}

} // namespace monopoly
