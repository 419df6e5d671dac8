#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "monopoly/domain_analysis.hpp"
#include "monopoly/measure.hpp"

namespace monopoly {

/// The monomial branched covering z -> z^A from the punctured polydisc onto
/// the domain, with its Jacobian data.
struct CoveringMap {
    std::vector<std::vector<std::int64_t>> A; // rows of the exponent matrix
    std::vector<std::int64_t> alpha_cover;    // 1*A - 1
    std::int64_t det_A = 1;                   // positive after normalization
    std::int64_t degree = 1;                  // |det A|

    static CoveringMap from_analysis(const DomainAnalysis& an) {
        CoveringMap m;
        m.A = an.A.rows_int64();
        m.alpha_cover = an.alpha_cover.as_int64s();
        m.det_A = to_int64(determinant(an.A));
        m.degree = to_int64(an.degree);
        return m;
    }

    int dim() const { return static_cast<int>(A.size()); }

    // w_j = prod_k z_k^{A_{jk}}
    std::vector<std::complex<double>> apply(std::span<const std::complex<double>> z) const {
        const int n = dim();
        std::vector<std::complex<double>> w(n, 1.0);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (std::int64_t p = 0; p < A[j][k]; ++p) w[j] *= z[k];
        return w;
    }
};

/// det phi'(z) = det A * z^{1A - 1} for the monomial map phi(z) = z^A.
inline std::complex<double> det_phi_prime(const CoveringMap& map, std::span<const std::complex<double>> z) {
    std::complex<double> v = static_cast<double>(map.det_A);
    for (int j = 0; j < map.dim(); ++j)
        for (std::int64_t p = 0; p < map.alpha_cover[j]; ++p) v *= z[j];
    return v;
}

/// Bergman kernel of the unit polydisc: prod_j 1 / (pi (1 - z_j conj(w_j))^2).
inline std::complex<double> polydisc_kernel(std::span<const std::complex<double>> z,
                                            std::span<const std::complex<double>> w) {
    std::complex<double> v = 1.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
        const std::complex<double> d = 1.0 - z[j] * std::conj(w[j]);
        v *= pi * d * d;
    }
    return 1.0 / v;
}

/// Deck transformation sigma_nu: multiplies coordinate j by e^{2 pi i c^j nu},
/// where c^j are the rows of C = A^{-1}.
inline std::vector<std::complex<double>> deck_rotation(const RatMatrix& C, std::span<const std::int64_t> nu,
                                                       std::span<const std::complex<double>> z) {
    const int n = C.size();
    std::vector<std::complex<double>> out(n);
    for (int j = 0; j < n; ++j) {
        Rational phase(0);
        for (int k = 0; k < n; ++k) phase += C(j, k) * Rational(nu[k]);
        out[j] = z[j] * std::polar(1.0, two_pi * to_double(phase));
    }
    return out;
}

} // namespace monopoly
