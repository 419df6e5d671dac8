#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/exponent_vector.hpp"

namespace monopoly {

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

inline double pow_int(double base, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= base;
    return r;
}

/// rho_alpha(z) = prod_j |z_j|^{alpha_j} with the convention 0^0 = 1.
inline double rho(std::span<const double> alpha, std::span<const std::complex<double>> z) {
    double v = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        const double a = alpha[j];
        if (a == 0.0) continue;
        const double r = std::abs(z[j]);
        if (r == 0.0 && a < 0.0) throw DomainError("rho: zero coordinate raised to a negative power");
        v *= std::pow(r, a);
    }
    return v;
}

inline double rho(const ExponentVector& alpha, std::span<const std::complex<double>> z) {
    const auto a = alpha.as_doubles();
    return rho(std::span<const double>(a), z);
}

// rho on the radius vector directly.
inline double rho_radial(std::span<const double> alpha, std::span<const double> r) {
    double v = 1.0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        const double a = alpha[j];
        if (a == 0.0) continue;
        if (r[j] == 0.0 && a < 0.0) throw DomainError("rho: zero radius raised to a negative power");
        v *= std::pow(r[j], a);
    }
    return v;
}

/// Squared L^2(D^n) norm of the monomial z^gamma: pi^n / prod(gamma_j + 1).
inline double monomial_l2_norm_sq(std::span<const std::int64_t> gamma) {
    double denom = 1.0;
    for (auto g : gamma) {
        if (g < 0) throw DomainError("monomial exponent must be nonnegative");
        denom *= static_cast<double>(g + 1);
    }
    return pow_int(pi, static_cast<int>(gamma.size())) / denom;
}

namespace detail {

/// kappa = -m * kappa0 for an integer m? Returns true and sets m if so.
inline bool multiple_of_direction(std::span<const std::int64_t> kappa, std::span<const std::int64_t> kappa0,
                                  std::int64_t& m_out) {
    int pivot = -1;
    for (std::size_t j = 0; j < kappa0.size(); ++j)
        if (kappa0[j] != 0) {
            pivot = static_cast<int>(j);
            break;
        }
    if (pivot < 0) return false;
    if (kappa[pivot] % kappa0[pivot] != 0) return false;
    const std::int64_t m = -kappa[pivot] / kappa0[pivot];
    for (std::size_t j = 0; j < kappa.size(); ++j)
        if (kappa[j] != -m * kappa0[j]) return false;
    m_out = m;
    return true;
}

} // namespace detail

/// Integral over the n-torus of the character e^{i kappa . theta} against the
/// indicator of { sin(kappa0 . theta) >= 0 }.
///
/// The indicator is the square wave with Fourier coefficients c_0 = 1/2,
/// c_m = -i/(pi m) for odd m and 0 for even m != 0, so the integral is
/// (2 pi)^n c_m when kappa = -m kappa0 and 0 otherwise.
inline std::complex<double> angular_character_integral(std::span<const std::int64_t> kappa,
                                                       std::span<const std::int64_t> kappa0) {
    bool zero_dir = true;
    for (auto k : kappa0)
        if (k != 0) zero_dir = false;
    if (zero_dir) throw ZeroDirectionError("angular direction kappa0 must be nonzero");
    if (kappa.size() != kappa0.size()) throw std::invalid_argument("kappa dimension mismatch");

    std::int64_t m = 0;
    if (!detail::multiple_of_direction(kappa, kappa0, m)) return {0.0, 0.0};
    const double full = pow_int(two_pi, static_cast<int>(kappa.size()));
    if (m == 0) return {0.5 * full, 0.0};
    if (m % 2 == 0) return {0.0, 0.0};
    return {0.0, -full / (pi * static_cast<double>(m))};
}

// Full-torus character integral: (2 pi)^n when kappa = 0, else 0.
inline std::complex<double> full_torus_character_integral(std::span<const std::int64_t> kappa) {
    for (auto k : kappa)
        if (k != 0) return {0.0, 0.0};
    return {pow_int(two_pi, static_cast<int>(kappa.size())), 0.0};
}

} // namespace monopoly
