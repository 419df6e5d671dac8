#pragma once

#include <complex>
#include <span>
#include <vector>

#include "monopoly/covering.hpp"
#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/monomial_series.hpp"
#include "monopoly/region_integrals.hpp"

namespace monopoly {

/// Both sides of Bell's transformation identity
///   (P_U(1_E) o phi) * det phi'  =  P_{D^n}(det phi' * 1_{phi^{-1} E}),
/// evaluated at a covering point z, each side written as a monomial series in
/// the covering coordinates.
struct BellCheck {
    std::complex<double> lhs = 0.0;
    std::complex<double> rhs = 0.0;
    MonomialSeries lhs_series; // image-side expansion pushed through phi
    MonomialSeries rhs_series; // covering-side projection
};

/// E must be a Reinhardt (purely radial) subset of the image domain; its
/// preimage under z -> z^A is then again a radial set.
///
/// The right side is the covering-side projection series of det phi' over the
/// pulled-back region. The left side is computed independently from the
/// image-domain kernel expansion: the Bergman space of the image has an
/// orthogonal basis of monomials w^delta whose pullbacks z^{delta A + alpha}
/// run over the deck-invariant exponents; basis norms come from the covering
/// change of variables and the moments of E are integrated on the image side.
inline BellCheck bell_identity_check(const DomainAnalysis& an, const ReinhardtAngularSet& E,
                                     std::span<const std::complex<double>> z, int truncation_degree,
                                     const QuadratureOptions& qopt = {}) {
    if (E.has_angular())
        throw UnsupportedSetError("Bell identity check needs a radial set; an angular constraint has no "
                                  "radial preimage description");
    const int n = an.dim();
    for (auto& zj : z)
        if (zj == std::complex<double>(0.0, 0.0))
            throw std::invalid_argument("evaluation point must avoid the coordinate axes");

    const CoveringMap map = CoveringMap::from_analysis(an);
    const auto& alpha = map.alpha_cover;
    for (auto a : alpha)
        if (a > truncation_degree)
            throw RangeError("truncation degree must be at least the Jacobian exponent");
    const double det_a = static_cast<double>(map.det_A);
    const double deg = static_cast<double>(map.degree);
    const double pi_n = pow_int(pi, n);

    BellCheck out;

    // Right side: P_{D^n}(det phi' 1_{phi^{-1} E}). Over a radial region only
    // gamma = alpha survives the full-torus character integral.
    {
        const ReinhardtAngularSet pulled = E.pullback(an.A);
        std::vector<double> d(n);
        double norm_factor = det_a / pi_n * pow_int(two_pi, n);
        for (int j = 0; j < n; ++j) {
            d[j] = static_cast<double>(2 * alpha[j] + 1);
            norm_factor *= static_cast<double>(alpha[j] + 1);
        }
        const double rad = radial_region_integral_quad(pulled, d, qopt);
        out.rhs_series = MonomialSeries(n, truncation_degree);
        std::vector<int> gamma(n);
        for (int j = 0; j < n; ++j) gamma[j] = static_cast<int>(alpha[j]);
        out.rhs_series.set(std::move(gamma), norm_factor * rad);
        out.rhs = out.rhs_series.evaluate(z);
    }

    // Left side: image kernel expansion. Basis exponents delta = (gamma - alpha) A^{-1}
    // with ||w^delta||^2 = (det A)^2/deg * pi^n / (gamma + 1)^1; the moment of a
    // Reinhardt E against conj(w^delta) vanishes unless delta = 0.
    {
        const ReinhardtAngularSet region = E.intersect(ReinhardtAngularSet::from_matrix_rows(an.B));
        const std::vector<double> ones(n, 1.0);

        out.lhs_series = MonomialSeries(n, truncation_degree);
        std::vector<int> gamma(n, 0);
        std::vector<std::int64_t> delta(n);
        while (true) {
            bool integral = true;
            for (int j = 0; j < n && integral; ++j) {
                Rational s(0);
                for (int i = 0; i < n; ++i) s += (Rational(gamma[i]) - Rational(alpha[i])) * an.C(i, j);
                if (is_integer(s))
                    delta[j] = to_int64(s);
                else
                    integral = false;
            }
            if (integral) {
                const std::complex<double> ang = full_torus_character_integral(delta);
                if (ang != std::complex<double>(0.0, 0.0)) {
                    const double mom = radial_region_integral_quad(region, ones, qopt);
                    double inv_norm_sq = deg / (det_a * det_a * pi_n);
                    for (int j = 0; j < n; ++j) inv_norm_sq *= static_cast<double>(gamma[j] + 1);
                    // (coeff * w^delta) o phi * det phi' = det_a * coeff * z^{delta A + alpha} = ... z^gamma
                    out.lhs_series.set(gamma, det_a * ang * mom * inv_norm_sq);
                }
            }
            int i = n - 1;
            while (i >= 0 && gamma[i] == truncation_degree) {
                gamma[i] = 0;
                --i;
            }
            if (i < 0) break;
            ++gamma[i];
        }
        out.lhs = out.lhs_series.evaluate(z);
    }
    return out;
}

} // namespace monopoly
