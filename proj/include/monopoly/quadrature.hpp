#pragma once

#include <array>
#include <cmath>
#include <functional>

#include "monopoly/errors.hpp"

namespace monopoly {

struct QuadratureOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-14;
    int max_depth = 40;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
inline constexpr std::array<double, 8> gk_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> gk_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gk_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int i = 0; i < 7; ++i) {
        const double x = h * gk_nodes[i];
        const double fv = f(c - x) + f(c + x);
        resk += gk_wk[i] * fv;
        if (i % 2 == 1) resg += gk_wg[i / 2] * fv;
    }
    const double fc = f(c);
    resk += gk_wk[7] * fc;
    resg += gk_wg[3] * fc;
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

template <class F>
double adapt(const F& f, double a, double b, double tol, int depth, const QuadratureOptions& opt,
             double& err_accum) {
    double r, e;
    gk15(f, a, b, r, e);
    if (e <= tol || depth >= opt.max_depth) {
        err_accum += e;
        return r;
    }
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, 0.5 * tol, depth + 1, opt, err_accum) +
           adapt(f, c, b, 0.5 * tol, depth + 1, opt, err_accum);
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b]. Throws QuadratureError
/// when the requested tolerance is certifiably missed at the depth limit.
template <class F>
double integrate(const F& f, double a, double b, const QuadratureOptions& opt = {}) {
    if (!(b > a)) return 0.0;
    double coarse, coarse_err;
    detail::gk15(f, a, b, coarse, coarse_err);
    const double scale = std::max(std::abs(coarse), 1e-300);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * scale);
    double err_accum = 0.0;
    const double r = detail::adapt(f, a, b, tol, 0, opt, err_accum);
    const double allowed = 10.0 * std::max(opt.abs_tol, opt.rel_tol * std::abs(r));
    if (err_accum > allowed && err_accum > 1e-12 * std::abs(r))
        throw QuadratureError("adaptive quadrature hit the depth limit with estimated error " +
                              std::to_string(err_accum));
    return r;
}

} // namespace monopoly
