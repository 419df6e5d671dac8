#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace monopoly {

namespace detail {

// splitmix64 finalizer; good avalanche for counter-based use.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

} // namespace detail

/// Counter-based generator: the i-th draw is a pure function of
/// (seed, stream, i). Draws can be made in any order, from any thread, and
/// always reproduce bit-identically.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(detail::mix64(seed ^ detail::mix64(stream + 0x51ED2700DEADBEEFULL))) {}

    std::uint64_t bits(std::uint64_t counter) const { return detail::mix64(key_ ^ detail::mix64(counter)); }

    // uniform in [0, 1)
    double u01(std::uint64_t counter) const {
        return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t key_;
};

/// Sequential view over a CounterRng stream.
class RngSequence {
public:
    explicit RngSequence(CounterRng rng, std::uint64_t start = 0) : rng_(rng), ctr_(start) {}
    double next_u01() { return rng_.u01(ctr_++); }
    std::uint64_t next_bits() { return rng_.bits(ctr_++); }

private:
    CounterRng rng_;
    std::uint64_t ctr_;
};

// Uniform point of the unit disc in polar form: radius density 2r, angle uniform.
inline void sample_disc(double u_r, double u_theta, double& r, double& theta) {
    r = std::sqrt(u_r);
    theta = 2.0 * 3.14159265358979323846 * u_theta;
}

/// Uniform sample of the unit polydisc; consumes 2n counters starting at `base`.
inline std::vector<std::complex<double>> sample_polydisc(const CounterRng& rng, std::uint64_t base, int n) {
    std::vector<std::complex<double>> z(n);
    for (int j = 0; j < n; ++j) {
        double r, th;
        sample_disc(rng.u01(base + 2 * j), rng.u01(base + 2 * j + 1), r, th);
        z[j] = std::polar(r, th);
    }
    return z;
}

} // namespace monopoly
