#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/monomial_series.hpp"
#include "monopoly/region_integrals.hpp"
#include "monopoly/reinhardt_set.hpp"

namespace monopoly {

/// One separable polar factor c * r^{radial} * e^{i harmonic . theta} folded
/// into the projected integrand. The plain monomial z^beta has radial = beta
/// and harmonic = beta; conj(z_j) has radial = e_j and harmonic = -e_j.
struct PolarTerm {
    std::vector<double> radial;
    std::vector<std::int64_t> harmonic;
    std::complex<double> coeff{1.0, 0.0};

    static PolarTerm unit(int n) { return {std::vector<double>(n, 0.0), std::vector<std::int64_t>(n, 0), 1.0}; }
    static PolarTerm monomial(const std::vector<std::int64_t>& beta, std::complex<double> c = 1.0) {
        std::vector<double> rad(beta.size());
        for (std::size_t j = 0; j < beta.size(); ++j) rad[j] = static_cast<double>(beta[j]);
        return {std::move(rad), beta, c};
    }
    static PolarTerm conj_coordinate(int n, int j) {
        PolarTerm t = unit(n);
        t.radial[j] = 1.0;
        t.harmonic[j] = -1;
        return t;
    }
};

struct ProjectionOptions {
    std::size_t mc_samples = 200000; // fallback radial Monte Carlo per coefficient
    std::uint64_t seed = 0x6d6f6e6f;
    // when both are set, certify that the truncated tail stays below the
    // tolerance on the closed polydisc of these radii
    std::optional<double> tail_tolerance;
    std::vector<double> eval_radii;
};

/// Bergman projection on the polydisc of rho_alpha * p * 1_F, truncated at the
/// given degree per dimension. Each coefficient is the normalized inner
/// product against a monomial; it splits into a radial integral over the
/// region of F (closed form for boxes and for the blow-up wedge, seeded Monte
/// Carlo otherwise) and a torus character integral (exact, via the square-wave
/// expansion when F carries a character-sign condition).
inline MonomialSeries project_weighted_indicator(const ExponentVector& alpha, const ReinhardtAngularSet& F,
                                                 int truncation_degree,
                                                 const std::vector<PolarTerm>& folded,
                                                 const ProjectionOptions& opts = {}) {
    const int n = F.dim();
    if (alpha.size() != n) throw std::invalid_argument("weight exponent dimension mismatch");
    if (!alpha.is_nonnegative()) throw DomainError("projection weight exponent must be nonnegative");

    const std::vector<double> alpha_d = alpha.as_doubles();
    RadialIntegrator radial(F, opts.mc_samples, opts.seed);
    const double pi_n = pow_int(pi, n);

    auto angular = [&](const std::vector<std::int64_t>& kappa) -> std::complex<double> {
        if (F.has_angular()) return angular_character_integral(kappa, *F.kappa0());
        return full_torus_character_integral(kappa);
    };

    MonomialSeries series(n, truncation_degree);
    std::vector<int> gamma(n, 0);
    std::vector<std::int64_t> kappa(n);
    std::vector<double> d(n);
    while (true) {
        double norm_factor = 1.0;
        for (int j = 0; j < n; ++j) norm_factor *= static_cast<double>(gamma[j] + 1);
        norm_factor /= pi_n;

        std::complex<double> acc = 0.0;
        for (const auto& term : folded) {
            for (int j = 0; j < n; ++j) kappa[j] = term.harmonic[j] - gamma[j];
            const std::complex<double> ang = angular(kappa);
            if (ang == std::complex<double>(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) d[j] = alpha_d[j] + term.radial[j] + gamma[j] + 1.0;
            acc += term.coeff * radial(d) * ang;
        }
        const std::complex<double> a = norm_factor * acc;
        if (a != std::complex<double>(0.0, 0.0)) series.set(std::vector<int>(gamma.begin(), gamma.end()), a);

        int i = n - 1;
        while (i >= 0 && gamma[i] == truncation_degree) {
            gamma[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++gamma[i];
    }

    if (opts.tail_tolerance && !opts.eval_radii.empty()) {
        // |a_gamma| <= (gamma+1)^1 * M * R^gamma with
        // M = (2/pi)^n * sum_t |c_t| * int_F r^{alpha + radial_t + 1} dr
        double m_env = 0.0;
        for (const auto& term : folded) {
            for (int j = 0; j < n; ++j) d[j] = alpha_d[j] + term.radial[j] + 1.0;
            m_env += std::abs(term.coeff) * radial(d);
        }
        m_env *= pow_int(2.0, n);
        const std::vector<double> R = radial.sup_radii();
        std::vector<double> x(n);
        for (int j = 0; j < n; ++j) x[j] = R[j] * opts.eval_radii[j];
        const double tail = geometric_tail_bound(m_env, x, truncation_degree);
        if (tail > *opts.tail_tolerance)
            throw TruncationTooSmallError("certified tail bound " + std::to_string(tail) +
                                          " exceeds the requested tolerance");
    }
    return series;
}

inline MonomialSeries project_weighted_indicator(const ExponentVector& alpha, const ReinhardtAngularSet& F,
                                                 int truncation_degree, const ProjectionOptions& opts = {}) {
    return project_weighted_indicator(alpha, F, truncation_degree, {PolarTerm::unit(F.dim())}, opts);
}

/// Projection of a polynomial given by its coefficient series (integrand
/// p * 1_{D^n}); reproduces the polynomial up to quadrature error.
inline MonomialSeries project_polynomial(const MonomialSeries& p, int truncation_degree,
                                         const ProjectionOptions& opts = {}) {
    const int n = p.dim();
    std::vector<PolarTerm> folded;
    folded.reserve(p.size());
    for (const auto& [g, c] : p.terms()) {
        std::vector<std::int64_t> beta(g.begin(), g.end());
        folded.push_back(PolarTerm::monomial(beta, c));
    }
    return project_weighted_indicator(ExponentVector::zeros(n), ReinhardtAngularSet::full(n),
                                      truncation_degree, folded, opts);
}

} // namespace monopoly
