#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "monopoly/covering.hpp"
#include "monopoly/domain_analysis.hpp"
#include "monopoly/rng.hpp"

using namespace monopoly;

namespace {

IntMatrix hartogs() { return IntMatrix::from_rows({{1, -1}, {0, 1}}); }
IntMatrix example3d() { return IntMatrix::from_rows({{1, 0, 0}, {-1, 1, 0}, {1, -1, 1}}); }

// Z-matrix construction (positive diagonal, nonpositive strict upper triangle)
// followed by a random row shuffle; such matrices always define a bounded
// domain, and the shuffle exercises the normalizing permutation search.
IntMatrix random_valid_b(std::mt19937_64& gen, int n) {
    std::uniform_int_distribution<int> diag(1, 3), upper(-3, 0);
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(n, 0));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = diag(gen);
        for (int j = i + 1; j < n; ++j) rows[i][j] = upper(gen);
    }
    std::shuffle(rows.begin(), rows.end(), gen);
    return IntMatrix::from_rows(rows);
}

// Independent route to the invariant exponents: enumerate integer row vectors
// mu and keep beta = mu A inside the box, instead of testing beta A^{-1}.
std::vector<std::vector<std::int64_t>> invariant_exponents_by_generation(const DomainAnalysis& an,
                                                                         int max_degree) {
    const int n = an.dim();
    // mu_i = sum_j beta_j C(j, i), so the box bound on mu comes from column sums of |C|
    std::int64_t bound = 0;
    for (int i = 0; i < n; ++i) {
        double col_sum = 0.0;
        for (int j = 0; j < n; ++j) col_sum += std::abs(to_double(an.C(j, i)));
        bound = std::max<std::int64_t>(bound, static_cast<std::int64_t>(std::ceil(col_sum * max_degree)) + 1);
    }
    std::vector<std::vector<std::int64_t>> found;
    std::vector<std::int64_t> mu(n, -bound);
    while (true) {
        std::vector<std::int64_t> beta(n, 0);
        bool in_box = true;
        for (int j = 0; j < n && in_box; ++j) {
            for (int i = 0; i < n; ++i) beta[j] += mu[i] * to_int64(an.A(i, j));
            if (beta[j] < 1 || beta[j] > max_degree) in_box = false;
        }
        if (in_box) found.push_back(beta);
        int i = n - 1;
        while (i >= 0 && mu[i] == bound) {
            mu[i] = -bound;
            --i;
        }
        if (i < 0) break;
        ++mu[i];
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace

TEST_CASE("adjugate on hand-checked matrices") {
    CHECK(adjugate(hartogs()) == IntMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(adjugate(IntMatrix::identity(4)) == IntMatrix::identity(4));
    CHECK(adjugate(example3d()) == IntMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));

    // defining identity M adj(M) = det(M) I
    const IntMatrix m = IntMatrix::from_rows({{2, -1, 3}, {0, 4, 1}, {-2, 5, 7}});
    const Int det = determinant(m);
    IntMatrix expect = IntMatrix::identity(3);
    for (int i = 0; i < 3; ++i) expect(i, i) = det;
    CHECK(m * adjugate(m) == expect);
}

TEST_CASE("analyze_domain: Hartogs triangle") {
    const DomainAnalysis an = analyze_domain(hartogs());
    CHECK(an.A == IntMatrix::from_rows({{1, 1}, {0, 1}}));
    CHECK(an.ones_A == std::vector<Int>{1, 2});
    CHECK(an.m == 1);
    CHECK(an.p_star == Rational(4, 3));
    REQUIRE(an.q_star.has_value());
    CHECK(*an.q_star == Rational(4));
    CHECK(an.degree == 1);
    CHECK_FALSE(an.trivial);
    CHECK(an.weight_exponent == ExponentVector::from_ints({0, 1}));
    CHECK(an.alpha_cover == ExponentVector::from_ints({0, 1}));
}

TEST_CASE("analyze_domain: 3-d example domain") {
    const DomainAnalysis an = analyze_domain(example3d());
    CHECK(an.A == IntMatrix::from_rows({{1, 0, 0}, {1, 1, 0}, {0, 1, 1}}));
    CHECK(an.ones_A == std::vector<Int>{2, 2, 1});
    CHECK(an.m == 2);
    CHECK(an.p_star == Rational(4, 3));
    CHECK(an.degree == 1);
    CHECK_FALSE(an.trivial);
    CHECK(an.alpha_cover == ExponentVector::from_ints({1, 1, 0}));
}

TEST_CASE("analyze_domain: trivial polydisc and degree-2 wedge") {
    const DomainAnalysis triv = analyze_domain(IntMatrix::identity(3));
    CHECK(triv.trivial);
    CHECK(triv.ones_A == std::vector<Int>{1, 1, 1});
    CHECK(triv.p_star == Rational(1));
    CHECK_FALSE(triv.q_star.has_value());

    const DomainAnalysis an = analyze_domain(IntMatrix::from_rows({{2, -1}, {0, 1}}));
    CHECK(an.A == IntMatrix::from_rows({{1, 1}, {0, 2}}));
    CHECK(an.ones_A == std::vector<Int>{1, 3});
    CHECK(an.m == 1);
    CHECK(an.p_star == Rational(3, 2));
    CHECK(*an.q_star == Rational(3));
    CHECK(an.degree == 2);
}

TEST_CASE("analyze_domain error paths") {
    CHECK_THROWS_AS(analyze_domain(IntMatrix::from_rows({{1, 1}, {1, 1}})), SingularMatrixError);
    // second row demands |z_2| > 1: unbounded
    CHECK_THROWS_AS(analyze_domain(IntMatrix::from_rows({{1, 0}, {0, -1}})), NotBoundedError);
    CHECK_THROWS_AS(analyze_domain(IntMatrix::from_rows({{5}})), std::invalid_argument);
}

TEST_CASE("analyze_domain normalizes row order") {
    // Hartogs rows swapped: det = -1, so the lexicographically first odd
    // permutation must restore det > 0
    const DomainAnalysis an = analyze_domain(IntMatrix::from_rows({{0, 1}, {1, -1}}));
    CHECK(determinant(an.B) > 0);
    CHECK(inverse(an.B).is_nonnegative());
    CHECK(an.p_star == Rational(4, 3));
    CHECK(an.row_permutation == std::vector<int>{1, 0});
}

TEST_CASE("deck invariance on hand-checked cases") {
    const DomainAnalysis ex3 = analyze_domain(example3d());
    CHECK(is_deck_invariant(ExponentVector::from_ints({1, 1, 1}), ex3));
    CHECK(is_deck_invariant(ExponentVector::from_ints({0, 0, 0}), ex3));

    const DomainAnalysis wedge = analyze_domain(IntMatrix::from_rows({{2, -1}, {0, 1}}));
    CHECK_FALSE(is_deck_invariant(ExponentVector::from_ints({0, 1}), wedge));
    CHECK(is_deck_invariant(ExponentVector::from_ints({0, 0}), wedge));
}

TEST_CASE("invariant exponent boxes") {
    const DomainAnalysis triv = analyze_domain(IntMatrix::identity(3));
    const auto only_ones = deck_invariant_exponents(triv, 1);
    REQUIRE(only_ones.size() == 1);
    CHECK(only_ones[0] == ExponentVector::from_ints({1, 1, 1}));

    // beta A^{-1} = (beta_1, (beta_2 - beta_1)/2) for A = [[1,1],[0,2]]:
    // integral iff beta_2 - beta_1 is even; frozen from the generation oracle
    const DomainAnalysis wedge = analyze_domain(IntMatrix::from_rows({{2, -1}, {0, 1}}));
    const auto found = deck_invariant_exponents(wedge, 2);
    REQUIRE(found.size() == 2);
    CHECK(found[0] == ExponentVector::from_ints({1, 1}));
    CHECK(found[1] == ExponentVector::from_ints({2, 2}));

    // degree 1: the whole box qualifies
    const DomainAnalysis ex3 = analyze_domain(example3d());
    CHECK(deck_invariant_exponents(ex3, 2).size() == 8);
}

TEST_CASE("invariant lattice agrees with generation by the covering symbol") {
    std::mt19937_64 gen(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 3);
        const DomainAnalysis an = analyze_domain(random_valid_b(gen, n));
        const int max_degree = 2 + static_cast<int>(gen() % 5);
        const auto direct = deck_invariant_exponents(an, max_degree);
        const auto generated = invariant_exponents_by_generation(an, max_degree);
        REQUIRE(direct.size() == generated.size());
        for (std::size_t i = 0; i < direct.size(); ++i) CHECK(direct[i].as_int64s() == generated[i]);
    }
}

TEST_CASE("exact identities over random valid matrices") {
    std::mt19937_64 gen(987654321);
    int nontrivial_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 3);
        const IntMatrix b = random_valid_b(gen, n);
        const DomainAnalysis an = analyze_domain(b);

        // B Delta = det(B) I exactly
        const Int det = determinant(an.B);
        IntMatrix det_id = IntMatrix::identity(n);
        for (int i = 0; i < n; ++i) det_id(i, i) = det;
        REQUIRE(an.B * an.Delta == det_id);

        // Delta = diag(column gcds) A entrywise
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) REQUIRE(an.Delta(i, j) == an.column_gcds[j] * an.A(i, j));

        // A C = I exactly
        REQUIRE(RatMatrix::from_int(an.A) * an.C == RatMatrix::identity(n));

        REQUIRE(an.Delta.is_nonnegative());
        REQUIRE(an.A.is_nonnegative());

        if (!an.trivial) {
            ++nontrivial_seen;
            REQUIRE(an.p_star > 1);
            REQUIRE(an.p_star < 2);
            REQUIRE(an.q_star.has_value());
            REQUIRE(*an.q_star >= 2);
            REQUIRE(Rational(1) / an.p_star + Rational(1) / *an.q_star == 1);
        }
    }
    CHECK(nontrivial_seen > 500);
}

TEST_CASE("invariant exponents form an additive semigroup") {
    std::mt19937_64 gen(424242);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 3);
        const DomainAnalysis an = analyze_domain(random_valid_b(gen, n));
        const auto lattice = deck_invariant_exponents(an, 5);
        if (lattice.size() < 2) continue;
        for (int pick = 0; pick < 10; ++pick) {
            const auto& b1 = lattice[gen() % lattice.size()];
            const auto& b2 = lattice[gen() % lattice.size()];
            CHECK(is_deck_invariant(b1 + b2, an));
        }
    }
}

TEST_CASE("weight exponent stays in [0,1] on the domain") {
    std::mt19937_64 gen(777);
    const CounterRng rng(99, 0);
    std::uint64_t ctr = 0;
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(gen() % 3);
        const DomainAnalysis an = analyze_domain(random_valid_b(gen, n));
        const CoveringMap map = CoveringMap::from_analysis(an);
        for (int pt = 0; pt < 200; ++pt) {
            // push a covering point forward; its image lies in the domain
            const auto z = sample_polydisc(rng, ctr, n);
            ctr += 2 * n;
            const auto w = map.apply(z);
            const double v = rho(an.weight_exponent, w);
            REQUIRE(v >= 0.0);
            REQUIRE(v <= 1.0 + 1e-12);
        }
    }
}
