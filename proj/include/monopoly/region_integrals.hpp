#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/estimate.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/quadrature.hpp"
#include "monopoly/reinhardt_set.hpp"
#include "monopoly/rng.hpp"

namespace monopoly {

namespace detail {

inline double safe_pow(double b, double e) { return e == 0.0 ? 1.0 : std::pow(b, e); }

// (hi^{d+1} - lo^{d+1}) / (d+1), the plain dr integral of r^d over [lo, hi)
inline double power_segment(double d, double lo, double hi) {
    if (hi <= lo) return 0.0;
    return (std::pow(hi, d + 1.0) - std::pow(lo, d + 1.0)) / (d + 1.0);
}

inline double wedge_closed_form(const std::vector<double>& d, bool equal, double s, int i, int j) {
    double denom = 1.0;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (static_cast<int>(k) != i) denom *= d[k] + 1.0;
    const double log_inv_s = std::log(1.0 / s);
    if (equal) return std::pow(s, d[i] + 1.0) * log_inv_s / (2.0 * denom);
    // s^{(di+dj)/2+1} - s^{di+1} = s^{di+1} * expm1(((dj-di)/2) log s), with no
    // cancellation as dj -> di
    return std::pow(s, d[i] + 1.0) * std::expm1(0.5 * (d[j] - d[i]) * std::log(s)) / ((d[i] - d[j]) * denom);
}

} // namespace detail

/// Integral of the monomial r^d over the radial wedge
/// { r in [0,1)^n : r_1 r_2 < s, s <= r_1 < sqrt(s) }, plain dV(r) with no
/// polar Jacobian. Closed form in both branches d_1 = d_2 and d_1 != d_2;
/// branch selection is exact on the rational exponents.
inline double wedge_region_integral(const ExponentVector& d, double s) {
    if (d.size() < 2) throw std::invalid_argument("wedge integral needs dimension >= 2");
    if (!d.is_nonnegative()) throw DomainError("wedge integral requires nonnegative exponents");
    if (!(s > 0.0 && s <= 0.25)) throw RangeError("wedge parameter must lie in (0, 1/4]");
    return detail::wedge_closed_form(d.as_doubles(), d[0] == d[1], s, 0, 1);
}

// --- radial region classification ------------------------------------------

struct BoxRegion {
    std::vector<double> lo, hi;
};
struct WedgeRegion {
    int i = 0, j = 1;
    double s = 0.0;
};
struct GeneralRegion {};

using RadialRegionKind = std::variant<BoxRegion, WedgeRegion, GeneralRegion>;

namespace detail {

inline std::optional<BoxRegion> try_box(const ReinhardtAngularSet& set) {
    const int n = set.dim();
    BoxRegion box{std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
    for (const auto& rc : set.radial()) {
        int support = -1;
        for (int j = 0; j < n; ++j) {
            if (rc.c[j] == 0) continue;
            if (support >= 0) return std::nullopt;
            support = j;
        }
        if (support < 0) return std::nullopt;
        const double e = to_double(rc.c[support]);
        const double t = std::pow(rc.bound, 1.0 / e);
        const bool upper = (e > 0) == (rc.rel == RadialConstraint::Rel::lt);
        if (upper)
            box.hi[support] = std::min(box.hi[support], t);
        else
            box.lo[support] = std::max(box.lo[support], t);
    }
    return box;
}

inline std::optional<WedgeRegion> try_wedge(const ReinhardtAngularSet& set) {
    if (set.radial().size() != 3) return std::nullopt;
    const int n = set.dim();
    int prod_idx = -1;
    for (int k = 0; k < 3; ++k) {
        const auto& rc = set.radial()[k];
        int nonzero = 0;
        bool unit = true;
        for (int j = 0; j < n; ++j) {
            if (rc.c[j] == 0) continue;
            ++nonzero;
            if (rc.c[j] != 1) unit = false;
        }
        if (nonzero == 2 && unit && rc.rel == RadialConstraint::Rel::lt) prod_idx = k;
    }
    if (prod_idx < 0) return std::nullopt;
    const auto& prod = set.radial()[prod_idx];
    WedgeRegion w;
    w.s = prod.bound;
    if (!(w.s > 0.0 && w.s <= 0.25)) return std::nullopt;
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k)
        if (prod.c[k] == 1) (i < 0 ? i : j) = k;

    // the two remaining constraints must pin one of the product coordinates
    // to [s, sqrt(s))
    auto matches_single = [&](const RadialConstraint& rc, int coord, RadialConstraint::Rel rel, double b) {
        for (int k = 0; k < n; ++k)
            if (rc.c[k] != (k == coord ? 1 : 0)) return false;
        return rc.rel == rel && std::abs(rc.bound - b) <= 1e-9 * std::max(b, 1e-300);
    };
    const double sq = std::sqrt(w.s);
    for (int coord : {i, j}) {
        bool found_lo = false, found_hi = false;
        for (int k = 0; k < 3; ++k) {
            if (k == prod_idx) continue;
            if (matches_single(set.radial()[k], coord, RadialConstraint::Rel::ge, w.s)) found_lo = true;
            if (matches_single(set.radial()[k], coord, RadialConstraint::Rel::lt, sq)) found_hi = true;
        }
        if (found_lo && found_hi) {
            w.i = coord;
            w.j = coord == i ? j : i;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace detail

inline RadialRegionKind classify_radial_region(const ReinhardtAngularSet& set) {
    if (auto w = detail::try_wedge(set)) return *w;
    if (auto b = detail::try_box(set)) return *b;
    return GeneralRegion{};
}

// --- section machinery for general monomial regions ------------------------

namespace detail {

// Coordinate appearing in the most constraints; ties go to the lowest index.
inline int pick_section_coordinate(const ReinhardtAngularSet& set) {
    const int n = set.dim();
    std::vector<int> count(n, 0);
    for (const auto& rc : set.radial())
        for (int j = 0; j < n; ++j)
            if (rc.c[j] != 0) ++count[j];
    int best = 0;
    for (int j = 1; j < n; ++j)
        if (count[j] > count[best]) best = j;
    return best;
}

struct SectionedConstraints {
    int j0 = 0;
    // constraints involving r_{j0}: exponent of r_{j0}, exponents of the rest, bound, rel
    struct Sec {
        double e0;
        std::vector<double> rest; // exponent per coordinate, entry at j0 unused
        double bound;
        RadialConstraint::Rel rel;
    };
    std::vector<Sec> sections;
    std::vector<RadialConstraint> outer_only;

    static SectionedConstraints build(const ReinhardtAngularSet& set, int j0) {
        SectionedConstraints s;
        s.j0 = j0;
        for (const auto& rc : set.radial()) {
            if (rc.c[j0] == 0) {
                s.outer_only.push_back(rc);
                continue;
            }
            Sec sec;
            sec.e0 = to_double(rc.c[j0]);
            sec.rest = rc.c.as_doubles();
            sec.rest[j0] = 0.0;
            sec.bound = rc.bound;
            sec.rel = rc.rel;
            s.sections.push_back(std::move(sec));
        }
        return s;
    }

    // Section interval of r_{j0} over the fixed outer radii; false when the
    // outer-only constraints already exclude the point.
    bool interval(std::span<const double> r, double& lo, double& hi) const {
        for (const auto& rc : outer_only) {
            double v = 1.0;
            for (std::size_t j = 0; j < r.size(); ++j) {
                const double e = to_double(rc.c[static_cast<int>(j)]);
                if (e != 0.0) v *= safe_pow(r[j], e);
            }
            const bool lt = v < rc.bound;
            if (rc.rel == RadialConstraint::Rel::lt ? !lt : lt) return false;
        }
        lo = 0.0;
        hi = 1.0;
        for (const auto& sec : sections) {
            double rest = 1.0;
            for (std::size_t j = 0; j < r.size(); ++j)
                if (sec.rest[j] != 0.0) rest *= safe_pow(r[j], sec.rest[j]);
            const double ratio = sec.bound / rest;
            const double t = ratio > 0.0 ? std::pow(ratio, 1.0 / sec.e0) : 0.0;
            const bool upper = (sec.e0 > 0) == (sec.rel == RadialConstraint::Rel::lt);
            if (upper)
                hi = std::min(hi, t);
            else
                lo = std::max(lo, t);
        }
        return hi > lo;
    }
};

} // namespace detail

/// Deterministic integral of r^d (plain dr) over a general monomial-constraint
/// region in [0,1)^n: one coordinate is integrated in closed form on its
/// constraint-resolved section, the rest by nested adaptive quadrature.
inline double radial_region_integral_quad(const ReinhardtAngularSet& set, const std::vector<double>& d,
                                          const QuadratureOptions& opt = {}) {
    const int n = set.dim();
    const int j0 = detail::pick_section_coordinate(set);
    const auto sc = detail::SectionedConstraints::build(set, j0);
    std::vector<int> outer;
    for (int j = 0; j < n; ++j)
        if (j != j0) outer.push_back(j);

    std::vector<double> r(n, 0.0);
    std::function<double(std::size_t, const QuadratureOptions&)> eval =
        [&](std::size_t level, const QuadratureOptions& o) -> double {
        if (level == outer.size()) {
            double lo, hi;
            if (!sc.interval(r, lo, hi)) return 0.0;
            double v = detail::power_segment(d[j0], lo, hi);
            for (int j : outer) v *= detail::safe_pow(r[j], d[j]);
            return v;
        }
        QuadratureOptions inner = o;
        inner.rel_tol = o.rel_tol * 0.5;
        return integrate(
            [&](double x) {
                r[outer[level]] = x;
                return eval(level + 1, inner);
            },
            0.0, 1.0, o);
    };
    return eval(0, opt);
}

/// Monte Carlo integral over a monomial-constraint radial region of
///     r^d * ( -sum_k logbase_k log r_k )^{log_power},
/// plain dr measure. The section coordinate is integrated exactly (closed form
/// when log_power = 0, 1-D quadrature otherwise); the remaining coordinates are
/// sampled uniformly, which keeps the variance uniform over shrinking regions.
inline EstimateResult radial_region_integral_mc(const ReinhardtAngularSet& set, const std::vector<double>& d,
                                                const std::vector<double>& logbase, double log_power,
                                                std::size_t samples, std::uint64_t seed,
                                                std::uint64_t stream = 0) {
    const int n = set.dim();
    const int j0 = detail::pick_section_coordinate(set);
    const auto sc = detail::SectionedConstraints::build(set, j0);
    std::vector<int> outer;
    for (int j = 0; j < n; ++j)
        if (j != j0) outer.push_back(j);

    const bool with_log = log_power != 0.0;
    CounterRng rng(seed, stream);
    QuadratureOptions qopt;
    qopt.rel_tol = 1e-9;

    double sum = 0.0, sum_sq = 0.0;
    std::vector<double> r(n, 0.0);
    for (std::size_t i = 0; i < samples; ++i) {
        for (std::size_t k = 0; k < outer.size(); ++k)
            r[outer[k]] = rng.u01(i * outer.size() + k);
        double lo, hi;
        double g = 0.0;
        if (sc.interval(r, lo, hi)) {
            double outer_factor = 1.0;
            for (int j : outer) outer_factor *= detail::safe_pow(r[j], d[j]);
            double section;
            if (!with_log) {
                section = detail::power_segment(d[j0], lo, hi);
            } else {
                double c = 0.0;
                for (int j : outer)
                    if (logbase[j] != 0.0) c -= logbase[j] * std::log(r[j]);
                const double l0 = logbase[j0];
                section = integrate(
                    [&](double x) {
                        const double base = std::max(0.0, c - l0 * std::log(x));
                        return std::pow(x, d[j0]) * std::pow(base, log_power);
                    },
                    lo, hi, qopt);
            }
            g = outer_factor * section;
        }
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / static_cast<double>(samples);
    const double var = std::max(0.0, sum_sq / static_cast<double>(samples) - mean * mean);
    const double se = std::sqrt(var / static_cast<double>(samples));
    return EstimateResult::monte_carlo(mean, se, samples, seed);
}

/// Integral of r^d over the radial part of a set, dispatching to the closed
/// forms when the region is a box or the blow-up wedge. `mc_*` configure the
/// Monte Carlo fallback for general regions.
class RadialIntegrator {
public:
    RadialIntegrator(const ReinhardtAngularSet& set, std::size_t mc_samples, std::uint64_t seed,
                     std::uint64_t stream = 0)
        : set_(set), kind_(classify_radial_region(set)), mc_samples_(mc_samples), seed_(seed),
          stream_(stream) {}

    bool closed_form() const { return !std::holds_alternative<GeneralRegion>(kind_); }

    double operator()(const std::vector<double>& d) const {
        if (const auto* box = std::get_if<BoxRegion>(&kind_)) {
            double v = 1.0;
            for (std::size_t j = 0; j < d.size(); ++j) v *= detail::power_segment(d[j], box->lo[j], box->hi[j]);
            return v;
        }
        if (const auto* w = std::get_if<WedgeRegion>(&kind_)) {
            const bool equal = std::abs(d[w->i] - d[w->j]) <= 1e-12;
            return detail::wedge_closed_form(d, equal, w->s, w->i, w->j);
        }
        return radial_region_integral_mc(set_, d, {}, 0.0, mc_samples_, seed_, stream_).value;
    }

    // largest radius per coordinate, for tail envelopes
    std::vector<double> sup_radii() const {
        std::vector<double> R(set_.dim(), 1.0);
        if (const auto* box = std::get_if<BoxRegion>(&kind_))
            for (int j = 0; j < set_.dim(); ++j) R[j] = box->hi[j];
        if (const auto* w = std::get_if<WedgeRegion>(&kind_)) R[w->i] = std::sqrt(w->s);
        return R;
    }

private:
    const ReinhardtAngularSet& set_;
    RadialRegionKind kind_;
    std::size_t mc_samples_;
    std::uint64_t seed_;
    std::uint64_t stream_;
};

} // namespace monopoly
