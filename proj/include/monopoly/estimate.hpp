#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

namespace monopoly {

/// A numerical value with its provenance: either a deterministic quadrature
/// result or a seeded Monte Carlo estimate with a standard error.
struct EstimateResult {
    enum class Method { quadrature, montecarlo };

    double value = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    Method method = Method::quadrature;

    static EstimateResult quadrature(double v) { return {v, 0.0, 0, 0, Method::quadrature}; }
    static EstimateResult monte_carlo(double v, double se, std::size_t n, std::uint64_t seed) {
        return {v, se, n, seed, Method::montecarlo};
    }

    double relative_error() const { return value != 0.0 ? standard_error / std::abs(value) : standard_error; }
};

inline const char* method_name(EstimateResult::Method m) {
    return m == EstimateResult::Method::quadrature ? "quadrature" : "montecarlo";
}

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

inline LineFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double d = n * sxx - sx * sx;
    LineFit f;
    f.slope = (n * sxy - sx * sy) / d;
    f.intercept = (sy - f.slope * sx) / n;
    return f;
}

struct PlaneFit {
    double a = 0.0; // coefficient of x1
    double b = 0.0; // coefficient of x2
    double c = 0.0; // intercept
};

// least squares for y = a x1 + b x2 + c via the 3x3 normal equations
inline PlaneFit ols_fit2(const std::vector<double>& x1, const std::vector<double>& x2,
                         const std::vector<double>& y) {
    double m[3][3] = {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}};
    double r[3] = {0, 0, 0};
    const std::size_t n = x1.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double v[3] = {x1[i], x2[i], 1.0};
        for (int a = 0; a < 3; ++a) {
            for (int b = 0; b < 3; ++b) m[a][b] += v[a] * v[b];
            r[a] += v[a] * y[i];
        }
    }
    // Gaussian elimination with partial pivoting
    int idx[3] = {0, 1, 2};
    for (int k = 0; k < 3; ++k) {
        int p = k;
        for (int i = k + 1; i < 3; ++i)
            if (std::abs(m[idx[i]][k]) > std::abs(m[idx[p]][k])) p = i;
        std::swap(idx[k], idx[p]);
        for (int i = k + 1; i < 3; ++i) {
            const double f = m[idx[i]][k] / m[idx[k]][k];
            for (int j = k; j < 3; ++j) m[idx[i]][j] -= f * m[idx[k]][j];
            r[idx[i]] -= f * r[idx[k]];
        }
    }
    double sol[3];
    for (int k = 2; k >= 0; --k) {
        double s = r[idx[k]];
        for (int j = k + 1; j < 3; ++j) s -= m[idx[k]][j] * sol[j];
        sol[k] = s / m[idx[k]][k];
    }
    return {sol[0], sol[1], sol[2]};
}

} // namespace monopoly
