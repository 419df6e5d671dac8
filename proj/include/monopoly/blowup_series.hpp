#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "monopoly/covering.hpp"
#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/monomial_series.hpp"
#include "monopoly/projection.hpp"
#include "monopoly/region_integrals.hpp"

namespace monopoly {

/// Checks the standing hypotheses for the blow-up construction: nontrivial
/// domain, at least two maximal column sums sitting in the first two
/// coordinates, and a deck-invariant multi-index b >= 1 with b_1 = b_2 = 1.
inline void check_blowup_hypotheses(const DomainAnalysis& an, const ExponentVector& b) {
    if (an.trivial) throw HypothesisViolatedError("blow-up construction requires a nontrivial domain");
    if (an.m < 2) throw HypothesisViolatedError("blow-up construction requires m >= 2");
    const Rational amax = an.alpha_cover.max_entry();
    if (an.alpha_cover[0] != amax || an.alpha_cover[1] != amax)
        throw HypothesisViolatedError("coordinates must be arranged so the first two entries of 1A - 1 "
                                      "are maximal");
    if (b.size() != an.dim() || !b.is_integral())
        throw HypothesisViolatedError("b must be an integer multi-index of the domain dimension");
    if (!b.all_at_least(1)) throw HypothesisViolatedError("b must satisfy b >= 1 entrywise");
    if (b[0] != 1 || b[1] != 1) throw HypothesisViolatedError("b must have b_1 = b_2 = 1");
    if (!is_deck_invariant(b, an)) throw HypothesisViolatedError("b must be deck-invariant");
}

/// The projected series h = P_{D^n}(det phi' * 1_{W(s)}), where W(s) is the
/// deck-invariant blow-up window. Per the orthogonal expansion, the support
/// lies on { beta - 1 : beta deck-invariant, beta >= 1 }; each coefficient is
/// the closed-form wedge radial integral times the exact character integral
/// with direction alpha - b + 1.
inline MonomialSeries blowup_series(const DomainAnalysis& an, const ExponentVector& b, double s,
                                    int truncation_degree) {
    check_blowup_hypotheses(an, b);
    if (!(s > 0.0 && s < 0.25)) throw HypothesisViolatedError("window parameter s must lie in (0, 1/4)");

    const int n = an.dim();
    const auto alpha = an.alpha_cover.as_int64s();
    const auto b_i = b.as_int64s();
    const double det_a = static_cast<double>(to_int64(determinant(an.A)));
    const double pi_n = pow_int(pi, n);

    std::vector<std::int64_t> kappa0(n);
    for (int j = 0; j < n; ++j) kappa0[j] = alpha[j] - b_i[j] + 1;

    MonomialSeries series(n, truncation_degree);
    std::vector<std::int64_t> kappa(n);
    std::vector<double> d(n);
    for (const auto& beta : deck_invariant_exponents(an, truncation_degree + 1)) {
        const auto beta_i = beta.as_int64s();
        for (int j = 0; j < n; ++j) kappa[j] = alpha[j] - (beta_i[j] - 1);
        const std::complex<double> ang = angular_character_integral(kappa, kappa0);
        if (ang == std::complex<double>(0.0, 0.0)) continue;

        std::vector<int> gamma(n);
        double norm_factor = det_a / pi_n;
        for (int j = 0; j < n; ++j) {
            gamma[j] = static_cast<int>(beta_i[j] - 1);
            d[j] = static_cast<double>(gamma[j] + alpha[j] + 1);
            norm_factor *= static_cast<double>(gamma[j] + 1);
        }
        const bool equal = d[0] == d[1];
        const double rad = detail::wedge_closed_form(d, equal, s, 0, 1);
        series.set(std::move(gamma), norm_factor * rad * ang);
    }
    return series;
}

} // namespace monopoly
