#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/rational.hpp"

namespace monopoly {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Int(0)) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
        const int n = static_cast<int>(rows.size());
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw std::invalid_argument("matrix rows must form a square matrix");
            for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int size() const { return n_; }
    Int& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const IntMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    IntMatrix operator*(const IntMatrix& o) const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    IntMatrix with_rows_permuted(const std::vector<int>& perm) const {
        IntMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(i, j) = (*this)(perm[i], j);
        return r;
    }

    bool is_nonnegative() const {
        return std::all_of(e_.begin(), e_.end(), [](const Int& v) { return v >= 0; });
    }

    bool is_permutation_matrix() const {
        for (int i = 0; i < n_; ++i) {
            int ones = 0;
            for (int j = 0; j < n_; ++j) {
                const Int& v = (*this)(i, j);
                if (v == 1)
                    ++ones;
                else if (v != 0)
                    return false;
            }
            if (ones != 1) return false;
        }
        for (int j = 0; j < n_; ++j) {
            int ones = 0;
            for (int i = 0; i < n_; ++i)
                if ((*this)(i, j) == 1) ++ones;
            if (ones != 1) return false;
        }
        return true;
    }

    std::vector<std::vector<std::int64_t>> rows_int64() const {
        std::vector<std::vector<std::int64_t>> rows(n_, std::vector<std::int64_t>(n_));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) rows[i][j] = to_int64((*this)(i, j));
        return rows;
    }

private:
    int n_ = 0;
    std::vector<Int> e_;
};

// Dense square matrix of exact rationals, row-major.
class RatMatrix {
public:
    RatMatrix() = default;
    explicit RatMatrix(int n) : n_(n), e_(static_cast<std::size_t>(n) * n, Rational(0)) {}

    static RatMatrix identity(int n) {
        RatMatrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static RatMatrix from_int(const IntMatrix& m) {
        RatMatrix r(m.size());
        for (int i = 0; i < m.size(); ++i)
            for (int j = 0; j < m.size(); ++j) r(i, j) = Rational(m(i, j));
        return r;
    }

    int size() const { return n_; }
    Rational& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const Rational& operator()(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    bool operator==(const RatMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

    RatMatrix operator*(const RatMatrix& o) const {
        RatMatrix r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const Rational& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    bool is_nonnegative() const {
        return std::all_of(e_.begin(), e_.end(), [](const Rational& v) { return v >= 0; });
    }

private:
    int n_ = 0;
    std::vector<Rational> e_;
};

// Fraction-free (Bareiss) determinant; exact for arbitrary-precision entries.
inline Int determinant(const IntMatrix& m) {
    const int n = m.size();
    if (n == 0) return Int(1);
    IntMatrix a = m;
    Int sign(1), prev(1);
    for (int k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return Int(0);
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                a(i, j) = t / prev; // exact division in Bareiss elimination
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace detail {

inline IntMatrix minor_of(const IntMatrix& m, int row, int col) {
    const int n = m.size();
    IntMatrix mm(n - 1);
    int r = 0;
    for (int i = 0; i < n; ++i) {
        if (i == row) continue;
        int c = 0;
        for (int j = 0; j < n; ++j) {
            if (j == col) continue;
            mm(r, c) = m(i, j);
            ++c;
        }
        ++r;
    }
    return mm;
}

} // namespace detail

// Adjugate: transpose of the cofactor matrix, so M * adjugate(M) = det(M) * I exactly.
inline IntMatrix adjugate(const IntMatrix& m) {
    const int n = m.size();
    if (n == 1) {
        IntMatrix r(1);
        r(0, 0) = 1;
        return r;
    }
    IntMatrix adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int c = determinant(detail::minor_of(m, i, j));
            if ((i + j) % 2 != 0) c = -c;
            adj(j, i) = c;
        }
    return adj;
}

// Exact inverse by Gauss-Jordan elimination; throws on a singular input.
inline RatMatrix inverse(const RatMatrix& m) {
    const int n = m.size();
    RatMatrix a = m;
    RatMatrix inv = RatMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int p = -1;
        for (int i = k; i < n; ++i)
            if (a(i, k) != 0) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrixError("matrix is singular");
        if (p != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a(k, j), a(p, j));
                std::swap(inv(k, j), inv(p, j));
            }
        const Rational piv = a(k, k);
        for (int j = 0; j < n; ++j) {
            a(k, j) /= piv;
            inv(k, j) /= piv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a(i, k) == 0) continue;
            const Rational f = a(i, k);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(k, j);
                inv(i, j) -= f * inv(k, j);
            }
        }
    }
    return inv;
}

inline RatMatrix inverse(const IntMatrix& m) { return inverse(RatMatrix::from_int(m)); }

} // namespace monopoly
