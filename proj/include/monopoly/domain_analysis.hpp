#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "monopoly/errors.hpp"
#include "monopoly/exponent_vector.hpp"
#include "monopoly/int_matrix.hpp"

namespace monopoly {

/// Every exact invariant of a monomial polyhedron derived from its defining
/// integer matrix B. All fields are computed in exact arithmetic; no floating
/// point enters this module.
struct DomainAnalysis {
    IntMatrix B;     // defining matrix after the normalizing row permutation
    IntMatrix Delta; // adjugate of B
    std::vector<Int> column_gcds;
    IntMatrix A; // Delta with each column divided by its gcd; covering symbol
    RatMatrix C; // exact inverse of A
    std::vector<Int> ones_A; // column sums of A
    int m = 0;               // number of maximal entries of ones_A
    Rational p_star;
    std::optional<Rational> q_star; // absent for the trivial domain (p_star = 1)
    ExponentVector weight_exponent; // 1 - 1*A^{-1}
    ExponentVector alpha_cover;     // 1*A - 1, integer entries
    Int degree;                     // |det A|, the covering degree
    bool trivial = false;           // true iff the domain is the unit polydisc

    std::vector<int> row_permutation; // permutation applied to the input rows
    bool permutation_ambiguous = false;

    int dim() const { return B.size(); }
};

namespace detail {

inline Int column_gcd(const IntMatrix& m, int j) {
    Int g(0);
    for (int i = 0; i < m.size(); ++i) g = boost::multiprecision::gcd(g, m(i, j));
    return g;
}

} // namespace detail

/// Normalizes B (rows permuted so that det B > 0 and B^{-1} is entrywise
/// nonnegative) and derives the full set of domain invariants.
///
/// The permutation search is exhaustive over all n! row orders, n <= 8. A row
/// permutation only reorders the columns of the inverse and flips the sign of
/// the determinant with the permutation parity, so each candidate is tested in
/// O(1) after one exact inverse.
inline DomainAnalysis analyze_domain(const IntMatrix& input) {
    const int n = input.size();
    if (n < 2) throw std::invalid_argument("domain matrix must be at least 2x2");
    if (n > 8) throw RangeError("row-permutation search supports n <= 8");

    const Int det = determinant(input);
    if (det == 0) throw SingularMatrixError("det B = 0: input does not define a domain");

    const RatMatrix inv = inverse(input);
    const bool inv_nonneg = inv.is_nonnegative();

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::optional<std::vector<int>> chosen;
    int qualifying = 0;
    do {
        // parity of perm
        int swaps = 0;
        std::vector<int> p = perm;
        for (int i = 0; i < n; ++i)
            while (p[i] != i) {
                std::swap(p[i], p[p[i]]);
                ++swaps;
            }
        const bool det_positive = (swaps % 2 == 0) ? (det > 0) : (det < 0);
        if (det_positive && inv_nonneg) {
            ++qualifying;
            if (!chosen) chosen = perm;
            if (qualifying > 1) break; // enough to know the choice is ambiguous
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    if (!chosen)
        throw NotBoundedError("no row permutation yields det > 0 with a nonnegative inverse; "
                              "the input does not define a bounded monomial polyhedron");

    DomainAnalysis an;
    an.row_permutation = *chosen;
    an.permutation_ambiguous = qualifying > 1;
    an.B = input.with_rows_permuted(*chosen);
    an.Delta = adjugate(an.B);
    if (!an.Delta.is_nonnegative())
        throw NotBoundedError("adjugate has a negative entry after normalization");

    an.column_gcds.resize(n);
    an.A = IntMatrix(n);
    for (int j = 0; j < n; ++j) {
        an.column_gcds[j] = detail::column_gcd(an.Delta, j);
        for (int i = 0; i < n; ++i) an.A(i, j) = an.Delta(i, j) / an.column_gcds[j];
    }

    const Int detA = determinant(an.A);
    an.degree = detA >= 0 ? detA : Int(-detA);
    an.C = inverse(an.A);

    an.ones_A.resize(n);
    Int max_sum(0);
    for (int j = 0; j < n; ++j) {
        Int s(0);
        for (int i = 0; i < n; ++i) s += an.A(i, j);
        an.ones_A[j] = s;
        max_sum = std::max(max_sum, s);
    }
    an.m = static_cast<int>(std::count(an.ones_A.begin(), an.ones_A.end(), max_sum));

    an.p_star = Rational(0);
    for (int j = 0; j < n; ++j) {
        Rational cand = Rational(2 * an.ones_A[j], an.ones_A[j] + 1);
        an.p_star = std::max(an.p_star, cand);
    }
    if (an.p_star > 1)
        an.q_star = an.p_star / (an.p_star - 1);
    else
        an.q_star = std::nullopt; // conjugate exponent of 1 is unbounded

    std::vector<Rational> we(n), ac(n);
    for (int j = 0; j < n; ++j) {
        Rational col_sum(0);
        for (int i = 0; i < n; ++i) col_sum += an.C(i, j);
        we[j] = Rational(1) - col_sum;
        ac[j] = Rational(an.ones_A[j] - 1);
    }
    an.weight_exponent = ExponentVector(std::move(we));
    an.alpha_cover = ExponentVector(std::move(ac));

    an.trivial = an.A.is_permutation_matrix();
    return an;
}

/// True iff beta * A^{-1} is an integer row vector, i.e. the monomial with
/// exponent beta is fixed by every deck transformation of the covering map.
inline bool is_deck_invariant(const ExponentVector& beta, const DomainAnalysis& an) {
    if (!beta.is_integral()) throw std::invalid_argument("deck-invariance test requires an integer multi-index");
    const int n = an.dim();
    if (beta.size() != n) throw std::invalid_argument("multi-index dimension mismatch");
    for (int j = 0; j < n; ++j) {
        Rational s(0);
        for (int i = 0; i < n; ++i) s += beta[i] * an.C(i, j);
        if (!is_integer(s)) return false;
    }
    return true;
}

/// All integer multi-indices beta with 1 <= beta_j <= max_degree that are
/// deck-invariant, in lexicographic order. A covering of degree 1 has a trivial
/// deck group, so the whole box qualifies.
inline std::vector<ExponentVector> deck_invariant_exponents(const DomainAnalysis& an, int max_degree) {
    const int n = an.dim();
    std::vector<ExponentVector> out;
    if (max_degree < 1) return out;
    const bool all_invariant = an.degree == 1;

    std::vector<std::int64_t> beta(n, 1);
    while (true) {
        ExponentVector ev = ExponentVector::from_ints(beta);
        if (all_invariant || is_deck_invariant(ev, an)) out.push_back(std::move(ev));
        int i = n - 1;
        while (i >= 0 && beta[i] == max_degree) {
            beta[i] = 1;
            --i;
        }
        if (i < 0) break;
        ++beta[i];
    }
    return out;
}

} // namespace monopoly
