#include <doctest.h>

#include <random>

#include "knotdef/error.hpp"
#include "knotdef/exactalg.hpp"
#include "oracles.hpp"

using namespace knotdef;

TEST_CASE("det of small matrices") {
    CHECK(det(IntMatrix()) == 1);
    CHECK(det(IntMatrix::from_rows({{-1, 1}, {0, -1}})) == 1);
    CHECK(det(IntMatrix::from_rows({{2, 1}, {1, 2}})) == 3);
    CHECK(det(IntMatrix::from_rows({{0, 1, 2}, {3, 4, 5}, {6, 7, 9}})) == -3);
    CHECK(det(IntMatrix::from_rows({{0, 0}, {0, 5}})) == 0);
}

TEST_CASE("det matches cofactor expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 6;
        IntMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) m(i, k) = d(rng);
        CHECK(det(m) == oracle::cofactor_det(m));
    }
}

TEST_CASE("det is exact beyond 64 bits") {
    const BigInt big = BigInt(1) << 70;
    IntMatrix m(2);
    m(0, 0) = big;
    m(1, 1) = big;
    CHECK(det(m) == big * big);
}

TEST_CASE("det_rational agrees with integer det") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const IntMatrix m = oracle::random_symmetric(rng, 1 + trial % 5, 6);
        std::vector<Rational> e;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t k = 0; k < m.size(); ++k) e.emplace_back(m(i, k));
        CHECK(det_rational(e, m.size()) == Rational(det(m)));
    }
}

TEST_CASE("inertia examples") {
    CHECK(inertia(IntMatrix::from_rows({{2}})) == Inertia{1, 0, 0});
    const Inertia neg = inertia(IntMatrix::from_rows({{-2, 1}, {1, -2}}));
    CHECK(neg == Inertia{0, 0, 2});
    CHECK(neg.signature() == -2);
    const Inertia hyp = inertia(IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(hyp == Inertia{1, 0, 1});
    CHECK(hyp.signature() == 0);
    CHECK(inertia(IntMatrix()) == Inertia{0, 0, 0});
    CHECK(inertia(IntMatrix::from_rows({{0, 0, 3}, {0, 0, 0}, {3, 0, 0}})) == Inertia{1, 1, 1});
}

TEST_CASE("inertia rejects non-symmetric input") {
    CHECK_THROWS_AS(inertia(IntMatrix::from_rows({{1, 2}, {0, 1}})), Error);
    try {
        (void)inertia(IntMatrix::from_rows({{1, 2}, {0, 1}}));
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSymmetric);
    }
}

TEST_CASE("from_rows rejects ragged input") {
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2}, {3}}), Error);
}

TEST_CASE("classify_form") {
    CHECK(classify_form(IntMatrix::from_rows({{-2, 1}, {1, -2}})) == FormClass::Negative);
    CHECK(classify_form(IntMatrix::from_rows({{2, 1}, {1, -2}})) == FormClass::Indefinite);
    CHECK(classify_form(IntMatrix::from_rows({{0}})) == FormClass::Degenerate);
    CHECK(classify_form(IntMatrix::from_rows({{2, 1}, {1, 2}})) == FormClass::Positive);
    CHECK(classify_form(IntMatrix()) == FormClass::Positive);
    CHECK(is_definite(IntMatrix::from_rows({{1, 0}, {0, 0}})) == FormClass::Degenerate);
}

TEST_CASE("inertia matches characteristic polynomial sign variations") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const IntMatrix s = oracle::random_symmetric(rng, 1 + trial % 7, 9);
        CHECK(inertia(s) == oracle::descartes_inertia(s));
    }
}

TEST_CASE("inertia of low-rank matrices") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + trial % 5;
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) a(i, 0) = d(rng), a(i, 1) = d(rng);
        IntMatrix diag(n);
        diag(0, 0) = 1;
        diag(1, 1) = -1;
        const IntMatrix low = a * diag * a.transposed();
        CHECK(inertia(low) == oracle::descartes_inertia(low));
        CHECK(inertia(low).n_zero >= n - 2);
    }
}

TEST_CASE("Sylvester: inertia is a congruence invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + trial % 6;
        const IntMatrix s = oracle::random_symmetric(rng, n, 5);
        const IntMatrix u = oracle::random_unimodular(rng, n);
        CHECK(abs(det(u)) == 1);
        CHECK(inertia(congruent(s, u)) == inertia(s));
    }
}

TEST_CASE("direct sums") {
    const IntMatrix a = IntMatrix::from_rows({{-1}});
    const IntMatrix b = IntMatrix::from_rows({{3}});
    CHECK(direct_sum(a, b) == IntMatrix::from_rows({{-1, 0}, {0, 3}}));
    const IntMatrix m = IntMatrix::from_rows({{-1, 1}, {0, -1}});
    CHECK(direct_sum(m, IntMatrix()) == m);
    CHECK(direct_sum(IntMatrix(), m) == m);
    const IntMatrix p2 = direct_power(m, 2);
    CHECK(p2 == IntMatrix::from_rows({{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}));
    CHECK(direct_power(m, 0) == IntMatrix());
    const std::vector<IntMatrix> parts{a, m, b};
    CHECK(direct_sum(parts).size() == 4);
}

TEST_CASE("inertia is additive and det multiplicative over direct sums") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        const IntMatrix a = oracle::random_symmetric(rng, trial % 4, 5);
        const IntMatrix b = oracle::random_symmetric(rng, 1 + trial % 3, 5);
        CHECK(inertia(direct_sum(a, b)) == inertia(a) + inertia(b));
        CHECK(det(direct_sum(a, b)) == det(a) * det(b));
    }
}

TEST_CASE("matrix arithmetic") {
    const IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(a.transposed() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(a + a == BigInt(2) * a);
    CHECK(a - a == IntMatrix(2));
    CHECK(a * IntMatrix::identity(2) == a);
    CHECK(!a.is_symmetric());
    CHECK((a + a.transposed()).is_symmetric());
}
