#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/measure.hpp"

namespace monopoly {

/// Sparse holomorphic monomial series: map from integer multi-indices gamma >= 0
/// to complex coefficients, with truncation metadata. Immutable by convention
/// once built.
class MonomialSeries {
public:
    using Index = std::vector<int>;
    using Terms = std::map<Index, std::complex<double>>;

    MonomialSeries() = default;
    MonomialSeries(int dim, int truncation_degree) : dim_(dim), trunc_(truncation_degree) {}

    int dim() const { return dim_; }
    int truncation_degree() const { return trunc_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    void set(Index gamma, std::complex<double> coeff) {
        if (static_cast<int>(gamma.size()) != dim_) throw std::invalid_argument("series index dimension mismatch");
        for (int g : gamma) {
            if (g < 0) throw std::invalid_argument("series index must be nonnegative");
            if (g > trunc_) throw std::invalid_argument("series index exceeds the truncation degree");
        }
        if (coeff == std::complex<double>(0.0, 0.0))
            terms_.erase(gamma);
        else
            terms_[std::move(gamma)] = coeff;
    }

    std::complex<double> at(const Index& gamma) const {
        auto it = terms_.find(gamma);
        return it == terms_.end() ? std::complex<double>(0.0, 0.0) : it->second;
    }

    /// sum of a_gamma z^gamma over the stored terms, with per-dimension power
    /// tables so each term costs n multiplications.
    std::complex<double> evaluate(std::span<const std::complex<double>> z) const {
        if (static_cast<int>(z.size()) != dim_) throw std::invalid_argument("evaluation point dimension mismatch");
        std::vector<std::vector<std::complex<double>>> pow_table(dim_);
        for (int j = 0; j < dim_; ++j) {
            int max_deg = 0;
            for (const auto& [g, c] : terms_) max_deg = std::max(max_deg, g[j]);
            auto& t = pow_table[j];
            t.resize(max_deg + 1);
            t[0] = 1.0;
            for (int k = 1; k <= max_deg; ++k) t[k] = t[k - 1] * z[j];
        }
        std::complex<double> acc = 0.0;
        for (const auto& [g, c] : terms_) {
            std::complex<double> term = c;
            for (int j = 0; j < dim_; ++j) term *= pow_table[j][g[j]];
            acc += term;
        }
        return acc;
    }

private:
    int dim_ = 0;
    int trunc_ = 0;
    Terms terms_;
};

/// Upper bound on sum_{gamma not in [0,T]^n} (gamma+1)^1 x^gamma for
/// x_j = envelope_radius_j * |z_j|: the full product of 1/(1-x)^2 factors minus
/// the boxed partial sums. Certifies series truncation error for coefficient
/// envelopes |a_gamma| <= M (gamma+1)^1 R^gamma.
inline double geometric_tail_bound(double envelope_m, std::span<const double> x, int truncation_degree) {
    double full = 1.0, boxed = 1.0;
    for (double xi : x) {
        if (!(xi >= 0.0 && xi < 1.0)) throw RangeError("tail bound requires radii in [0, 1)");
        full *= 1.0 / ((1.0 - xi) * (1.0 - xi));
        double s = 0.0, p = 1.0;
        for (int k = 0; k <= truncation_degree; ++k) {
            s += (k + 1) * p;
            p *= xi;
        }
        boxed *= s;
    }
    return envelope_m * (full - boxed);
}

} // namespace monopoly
