#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "monopoly/domain_analysis.hpp"
#include "monopoly/errors.hpp"
#include "monopoly/exponent_vector.hpp"

namespace monopoly {

/// One monomial modulus inequality on the radius vector r in [0,1)^n:
/// prod_j r_j^{c_j}  <  bound   or   >= bound.
struct RadialConstraint {
    enum class Rel { lt, ge };
    ExponentVector c;
    double bound = 1.0;
    Rel rel = Rel::lt;
};

/// Test region of the polydisc: monomial modulus inequalities on the radii
/// plus an optional character-sign condition sin(kappa0 . theta) >= 0,
/// i.e. 0 <= Arg(z^kappa0) <= pi. With no constraints the set is the whole
/// polydisc.
class ReinhardtAngularSet {
public:
    ReinhardtAngularSet() = default;
    explicit ReinhardtAngularSet(int dim) : dim_(dim) {}

    int dim() const { return dim_; }
    const std::vector<RadialConstraint>& radial() const { return radial_; }
    const std::optional<std::vector<std::int64_t>>& kappa0() const { return kappa0_; }
    bool has_angular() const { return kappa0_.has_value(); }

    void add_radial(RadialConstraint c) {
        if (c.c.size() != dim_) throw std::invalid_argument("constraint dimension mismatch");
        radial_.push_back(std::move(c));
    }
    void set_angular(std::vector<std::int64_t> kappa0) {
        if (static_cast<int>(kappa0.size()) != dim_) throw std::invalid_argument("kappa0 dimension mismatch");
        bool all_zero = true;
        for (auto k : kappa0)
            if (k != 0) all_zero = false;
        if (all_zero) throw ZeroDirectionError("angular constraint direction must be nonzero");
        kappa0_ = std::move(kappa0);
    }

    bool radial_member(std::span<const double> r) const {
        for (const auto& rc : radial_) {
            double v = 1.0;
            for (int j = 0; j < dim_; ++j) {
                const double e = to_double(rc.c[j]);
                if (e == 0.0) continue;
                if (r[j] == 0.0 && e < 0.0) {
                    v = std::numeric_limits<double>::infinity();
                    break;
                }
                v *= std::pow(r[j], e);
            }
            const bool lt = v < rc.bound;
            if (rc.rel == RadialConstraint::Rel::lt ? !lt : lt) return false;
        }
        return true;
    }

    bool member(std::span<const std::complex<double>> z) const {
        std::vector<double> r(dim_);
        for (int j = 0; j < dim_; ++j) r[j] = std::abs(z[j]);
        if (!radial_member(r)) return false;
        if (kappa0_) {
            double phase = 0.0;
            for (int j = 0; j < dim_; ++j)
                if ((*kappa0_)[j] != 0) phase += static_cast<double>((*kappa0_)[j]) * std::arg(z[j]);
            if (std::sin(phase) < 0.0) return false;
        }
        return true;
    }

    static ReinhardtAngularSet full(int n) { return ReinhardtAngularSet(n); }

    // { rho_c(r) < bound }
    static ReinhardtAngularSet sublevel(ExponentVector c, double bound) {
        ReinhardtAngularSet s(c.size());
        s.add_radial({std::move(c), bound, RadialConstraint::Rel::lt});
        return s;
    }

    // { r_j rel bound } on a single coordinate
    static ReinhardtAngularSet coordinate(int n, int j, double bound, RadialConstraint::Rel rel) {
        ReinhardtAngularSet s(n);
        std::vector<Rational> c(n, Rational(0));
        c[j] = 1;
        s.add_radial({ExponentVector(std::move(c)), bound, rel});
        return s;
    }

    // Radial region { r1 r2 < s, s <= r1 < sqrt(s) } of the blow-up window.
    static ReinhardtAngularSet wedge_radial(int n, double s) {
        if (!(s > 0.0 && s <= 0.25)) throw RangeError("wedge parameter must lie in (0, 1/4]");
        ReinhardtAngularSet set(n);
        std::vector<Rational> prod(n, Rational(0));
        prod[0] = 1;
        prod[1] = 1;
        set.add_radial({ExponentVector(prod), s, RadialConstraint::Rel::lt});
        std::vector<Rational> first(n, Rational(0));
        first[0] = 1;
        set.add_radial({ExponentVector(first), s, RadialConstraint::Rel::ge});
        set.add_radial({ExponentVector(first), std::sqrt(s), RadialConstraint::Rel::lt});
        return set;
    }

    /// The deck-invariant window used by the blow-up experiment:
    /// wedge radial region plus the character sign condition with
    /// kappa0 = alpha - b + 1.
    static ReinhardtAngularSet blowup_window(const std::vector<std::int64_t>& alpha_cover,
                                             const std::vector<std::int64_t>& b, double s) {
        const int n = static_cast<int>(alpha_cover.size());
        ReinhardtAngularSet set = wedge_radial(n, s);
        std::vector<std::int64_t> kappa0(n);
        for (int j = 0; j < n; ++j) kappa0[j] = alpha_cover[j] - b[j] + 1;
        set.set_angular(std::move(kappa0));
        return set;
    }

    // The domain's own radial region: one constraint per row of B, bound 1.
    static ReinhardtAngularSet from_matrix_rows(const IntMatrix& B) {
        const int n = B.size();
        ReinhardtAngularSet s(n);
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> c(n);
            for (int j = 0; j < n; ++j) c[j] = Rational(B(i, j));
            s.add_radial({ExponentVector(std::move(c)), 1.0, RadialConstraint::Rel::lt});
        }
        return s;
    }

    /// Preimage under the covering map z -> z^A: a constraint rho_c(|w|) rel b
    /// pulls back to rho_{c A}(|z|) rel b, and an angular direction kappa0
    /// pulls back to kappa0 A.
    ReinhardtAngularSet pullback(const IntMatrix& A) const {
        const int n = A.size();
        if (n != dim_) throw std::invalid_argument("pullback dimension mismatch");
        ReinhardtAngularSet out(n);
        for (const auto& rc : radial_) {
            std::vector<Rational> c(n, Rational(0));
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) c[j] += rc.c[i] * Rational(A(i, j));
            out.add_radial({ExponentVector(std::move(c)), rc.bound, rc.rel});
        }
        if (kappa0_) {
            std::vector<std::int64_t> k(n, 0);
            for (int j = 0; j < n; ++j)
                for (int i = 0; i < n; ++i) k[j] += (*kappa0_)[i] * to_int64(A(i, j));
            out.set_angular(std::move(k));
        }
        return out;
    }

    ReinhardtAngularSet intersect(const ReinhardtAngularSet& o) const {
        if (o.dim_ != dim_) throw std::invalid_argument("intersection dimension mismatch");
        if (kappa0_ && o.kappa0_ && *kappa0_ != *o.kappa0_)
            throw UnsupportedSetError("cannot intersect two different angular constraints");
        ReinhardtAngularSet out = *this;
        for (const auto& rc : o.radial_) out.radial_.push_back(rc);
        if (!out.kappa0_ && o.kappa0_) out.kappa0_ = o.kappa0_;
        return out;
    }

private:
    int dim_ = 0;
    std::vector<RadialConstraint> radial_;
    std::optional<std::vector<std::int64_t>> kappa0_;
};

} // namespace monopoly
