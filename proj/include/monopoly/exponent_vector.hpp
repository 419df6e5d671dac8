#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "monopoly/rational.hpp"

namespace monopoly {

/// Tuple of exact rationals used both as a multi-index and as the exponent of a
/// radial monomial weight. Arithmetic is exact; callers convert to doubles at
/// the floating-point boundary.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<Rational> e) : e_(std::move(e)) {}

    static ExponentVector zeros(int n) { return ExponentVector(std::vector<Rational>(n, Rational(0))); }
    static ExponentVector ones(int n) { return ExponentVector(std::vector<Rational>(n, Rational(1))); }

    static ExponentVector from_ints(const std::vector<std::int64_t>& v) {
        std::vector<Rational> e;
        e.reserve(v.size());
        for (auto x : v) e.emplace_back(x);
        return ExponentVector(std::move(e));
    }

    int size() const { return static_cast<int>(e_.size()); }
    const Rational& operator[](int i) const { return e_[i]; }
    Rational& operator[](int i) { return e_[i]; }
    const std::vector<Rational>& entries() const { return e_; }

    bool operator==(const ExponentVector& o) const { return e_ == o.e_; }

    bool is_integral() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return is_integer(r); });
    }
    bool is_nonnegative() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return r >= 0; });
    }
    bool is_zero() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& r) { return r == 0; });
    }
    bool all_at_least(const Rational& c) const {
        return std::all_of(e_.begin(), e_.end(), [&](const Rational& r) { return r >= c; });
    }

    // Largest entry (not the largest absolute value).
    Rational max_entry() const { return *std::max_element(e_.begin(), e_.end()); }

    // Number of entries equal to the largest one.
    int count_max() const {
        const Rational mx = max_entry();
        return static_cast<int>(std::count(e_.begin(), e_.end(), mx));
    }

    std::vector<double> as_doubles() const {
        std::vector<double> d(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) d[i] = to_double(e_[i]);
        return d;
    }

    std::vector<std::int64_t> as_int64s() const {
        std::vector<std::int64_t> v(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) v[i] = to_int64(e_[i]);
        return v;
    }

    ExponentVector operator+(const ExponentVector& o) const {
        std::vector<Rational> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] + o.e_[i];
        return ExponentVector(std::move(r));
    }
    ExponentVector operator-(const ExponentVector& o) const {
        std::vector<Rational> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = e_[i] - o.e_[i];
        return ExponentVector(std::move(r));
    }
    ExponentVector scaled(const Rational& c) const {
        std::vector<Rational> r(e_.size());
        for (std::size_t i = 0; i < e_.size(); ++i) r[i] = c * e_[i];
        return ExponentVector(std::move(r));
    }

private:
    std::vector<Rational> e_;
};

} // namespace monopoly
