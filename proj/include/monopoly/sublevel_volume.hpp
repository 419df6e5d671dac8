#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/exponent_vector.hpp"
#include "monopoly/measure.hpp"
#include "monopoly/quadrature.hpp"

namespace monopoly {

namespace detail {

// Volume of { z in D^k : rho_alpha(z) < t } for alpha >= 0, by peeling the
// largest exponent: the slab { |z_j|^{a} < t } lies inside the sublevel set,
// and outside it the remaining coordinates satisfy a rescaled constraint.
inline double sublevel_volume_rec(std::vector<double> alpha, double t, const QuadratureOptions& opt) {
    // zero exponents contribute a full disc factor each
    double prefix = 1.0;
    std::vector<double> pos;
    pos.reserve(alpha.size());
    for (double a : alpha) {
        if (a == 0.0)
            prefix *= pi;
        else
            pos.push_back(a);
    }
    if (pos.empty()) return t > 1.0 ? prefix : 0.0; // rho_0 = 1
    if (t >= 1.0) return prefix * pow_int(pi, static_cast<int>(pos.size()));
    if (t <= 0.0) return 0.0;

    const std::size_t k = pos.size();
    const double amax = *std::max_element(pos.begin(), pos.end());
    if (k == 1) return prefix * pi * std::pow(t, 2.0 / amax);

    std::vector<double> rest;
    rest.reserve(k - 1);
    bool removed = false;
    for (double a : pos) {
        if (!removed && a == amax) {
            removed = true;
            continue;
        }
        rest.push_back(a);
    }

    const double r0 = std::pow(t, 1.0 / amax);
    const double slab = pow_int(pi, static_cast<int>(k)) * std::pow(t, 2.0 / amax);
    QuadratureOptions inner = opt;
    inner.rel_tol = opt.rel_tol * 0.3;
    const double outside = two_pi * integrate(
                                        [&](double r) {
                                            return sublevel_volume_rec(rest, t / std::pow(r, amax), inner) * r;
                                        },
                                        r0, 1.0, opt);
    return prefix * (slab + outside);
}

} // namespace detail

/// Lebesgue volume of { z in D^n : rho_alpha(z) < s } for alpha >= 0, alpha != 0
/// and s in (0, 1]. Computed by recursive reduction to nested 1-D integrals
/// with adaptive quadrature; volumes are measured in z-space (each angular
/// factor contributes 2 pi, each radial integrand carries the polar Jacobian).
inline double sublevel_volume(const ExponentVector& alpha, double s, const QuadratureOptions& opt = {}) {
    if (!alpha.is_nonnegative()) throw DomainError("sublevel volume requires a nonnegative exponent tuple");
    if (alpha.is_zero()) throw DomainError("sublevel volume requires a nonzero exponent tuple");
    if (!(s > 0.0 && s <= 1.0)) throw RangeError("sublevel volume parameter must lie in (0, 1]");
    return detail::sublevel_volume_rec(alpha.as_doubles(), s, opt);
}

} // namespace monopoly
