#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/positive_bergman.hpp"
#include "monopoly/region_integrals.hpp"

namespace monopoly {

struct SuiteRow {
    std::string label;
    EstimateResult lhs;
    EstimateResult rhs;
    double ratio = 0.0;
};

namespace detail {

inline EstimateResult power_to_norm(EstimateResult power, double p) {
    if (power.value <= 0.0) return power;
    EstimateResult out = power;
    out.value = std::pow(power.value, 1.0 / p);
    out.standard_error = power.standard_error * out.value / (p * power.value);
    return out;
}

inline EstimateResult scaled(EstimateResult e, double c) {
    e.value *= c;
    e.standard_error *= c;
    return e;
}

} // namespace detail

/// Restricted-type ratio on the domain: for each image-side set E,
///   lhs = || P+_{D^n}( rho_{1A-1} 1_{phi^{-1} E} ) ||_{L^{p*}(D^n)}   (pullback form)
///   rhs = || 1_E ||_{L^{p*}(U_B, (-log w)^{(m-1)(p*-1)})}.
/// The rhs integral is transported to the covering side by the change of
/// variables w o phi = rho_{1A-1}, an exact identity, where it is evaluated
/// with variance uniform over shrinking sets.
inline std::vector<SuiteRow> restricted_ratio_suite(const DomainAnalysis& an,
                                                    const std::vector<ReinhardtAngularSet>& sets,
                                                    std::size_t samples, std::uint64_t seed) {
    if (an.trivial) throw TrivialDomainError("estimator suites reject the trivial domain (p* = 1)");
    const int n = an.dim();
    const double p_star = to_double(an.p_star);
    const double eta = (an.m - 1) * (p_star - 1.0);
    const auto alpha = an.alpha_cover.as_int64s();
    std::vector<double> alpha_d(n), d2(n);
    for (int j = 0; j < n; ++j) {
        alpha_d[j] = static_cast<double>(alpha[j]);
        d2[j] = static_cast<double>(2 * alpha[j] + 1);
    }
    const double det_a = static_cast<double>(to_int64(determinant(an.A)));
    const double deg = static_cast<double>(to_int64(an.degree));
    const double transport = det_a * det_a / deg * pow_int(two_pi, n);

    std::vector<SuiteRow> rows;
    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
        const ReinhardtAngularSet pulled = sets[idx].pullback(an.A);
        SuiteRow row;
        row.label = "set" + std::to_string(idx);
        if (pulled.has_angular()) {
            row.lhs = detail::power_to_norm(
                pplus_norm_power_raw(alpha, pulled, p_star, samples, seed, 2 * idx), p_star);
        } else {
            PositiveBergmanEstimator est(alpha, pulled);
            row.lhs = detail::power_to_norm(est.norm_power(p_star, samples, seed, 2 * idx), p_star);
        }
        const EstimateResult raw =
            radial_region_integral_mc(pulled, d2, alpha_d, eta, samples, seed, 2 * idx + 1);
        row.rhs = detail::power_to_norm(detail::scaled(raw, transport), p_star);
        row.ratio = row.rhs.value > 0.0 ? row.lhs.value / row.rhs.value : 0.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

enum class PolydiscMode {
    projection_endpoint, // || P+(rho_a 1_F) ||_{p*}^{p*} vs weighted log integral
    projection_interior, // same operator norm at p in (p*, 2] vs plain integral
    holder_endpoint,     // int_F rho_a vs (weighted log integral)^{1/p*}
    holder_interior,     // int_F rho_a vs (plain integral)^{1/(p*+eps)}
};

struct PolydiscSuiteReport {
    double p_star = 0.0;
    double p_used = 0.0;
    int m_alpha = 0;
    std::vector<SuiteRow> rows;
};

/// Polydisc inequality suite for a nonnegative integer weight exponent alpha;
/// p* = (2 ||alpha||_inf + 2) / (||alpha||_inf + 2) and the log-weight carries
/// the exponent (p-1)(m(alpha)-1).
inline PolydiscSuiteReport polydisc_inequality_suite(const ExponentVector& alpha,
                                                     const std::vector<ReinhardtAngularSet>& sets,
                                                     PolydiscMode mode, double p_supplied, double eps,
                                                     std::size_t samples, std::uint64_t seed) {
    if (!alpha.is_nonnegative() || alpha.is_zero())
        throw DomainError("suite weight exponent must be nonnegative and nonzero");
    const int n = alpha.size();
    const auto alpha_i = alpha.as_int64s();
    const auto alpha_d = alpha.as_doubles();
    const double amax = to_double(alpha.max_entry());
    const int m_alpha = alpha.count_max();

    PolydiscSuiteReport report;
    report.p_star = (2.0 * amax + 2.0) / (amax + 2.0);
    report.m_alpha = m_alpha;

    double p = report.p_star;
    if (mode == PolydiscMode::projection_interior) {
        p = p_supplied;
        if (!(p > report.p_star && p <= 2.0))
            throw RangeError("interior mode requires p in (p*, 2]");
    }
    report.p_used = p;
    const double eta = (p - 1.0) * (m_alpha - 1);

    std::vector<double> d1(n), d2(n);
    for (int j = 0; j < n; ++j) {
        d1[j] = alpha_d[j] + 1.0;
        d2[j] = 2.0 * alpha_d[j] + 1.0;
    }
    const double torus = pow_int(two_pi, n);

    for (std::size_t idx = 0; idx < sets.size(); ++idx) {
        const auto& F = sets[idx];
        SuiteRow row;
        row.label = "set" + std::to_string(idx);
        switch (mode) {
        case PolydiscMode::projection_endpoint:
        case PolydiscMode::projection_interior: {
            PositiveBergmanEstimator est(alpha_i, F);
            row.lhs = est.norm_power(p, samples, seed, 2 * idx);
            const double log_power = mode == PolydiscMode::projection_endpoint ? eta : 0.0;
            row.rhs = detail::scaled(
                radial_region_integral_mc(F, d2, alpha_d, log_power, samples, seed, 2 * idx + 1), torus);
            break;
        }
        case PolydiscMode::holder_endpoint: {
            row.lhs =
                detail::scaled(radial_region_integral_mc(F, d1, {}, 0.0, samples, seed, 2 * idx), torus);
            row.rhs = detail::power_to_norm(
                detail::scaled(radial_region_integral_mc(F, d2, alpha_d, eta, samples, seed, 2 * idx + 1),
                               torus),
                p);
            break;
        }
        case PolydiscMode::holder_interior: {
            if (!(eps > 0.0)) throw RangeError("holder interior mode requires eps > 0");
            row.lhs =
                detail::scaled(radial_region_integral_mc(F, d1, {}, 0.0, samples, seed, 2 * idx), torus);
            row.rhs = detail::power_to_norm(
                detail::scaled(radial_region_integral_mc(F, d2, {}, 0.0, samples, seed, 2 * idx + 1), torus),
                p + eps);
            break;
        }
        }
        row.ratio = row.rhs.value > 0.0 ? row.lhs.value / row.rhs.value : 0.0;
        report.rows.push_back(std::move(row));
    }
    return report;
}

/// Trend statistics over a shrinking family: OLS slope of log(ratio) against
/// the dyadic index, plus the max-to-median spread.
struct FamilyTrend {
    double slope = 0.0;
    double max_over_median = 0.0;
};

inline FamilyTrend family_trend(const std::vector<SuiteRow>& rows, const std::vector<double>& index) {
    std::vector<double> logs;
    std::vector<double> xs;
    std::vector<double> ratios;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].ratio <= 0.0) continue;
        logs.push_back(std::log(rows[i].ratio));
        xs.push_back(index[i]);
        ratios.push_back(rows[i].ratio);
    }
    FamilyTrend t;
    if (logs.size() >= 2) t.slope = ols_fit(xs, logs).slope;
    if (!ratios.empty()) {
        std::vector<double> sorted = ratios;
        std::sort(sorted.begin(), sorted.end());
        const double median = sorted[sorted.size() / 2];
        t.max_over_median = median > 0.0 ? sorted.back() / median : 0.0;
    }
    return t;
}

} // namespace monopoly
