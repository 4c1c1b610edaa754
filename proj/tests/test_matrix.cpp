#include "howe/matrix.hpp"
#include "howe/oracle.hpp"

#include "doctest.h"

using namespace howe;

namespace {

Matrix random_matrix(Sampler& rng, std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = rng.entry();
    return m;
}

} // namespace

TEST_CASE("rationals parse and print canonically") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(format_rational(Rational(-2, 4)) == "-1/2");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rank and null space agree") {
    Sampler rng(3);
    for (int s = 0; s < 40; ++s) {
        const std::size_t r = 1 + rng.index(5), c = 1 + rng.index(5);
        Matrix a = random_matrix(rng, r, c);
        if (s % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                a(r - 1, j) = a(0, j) * 2;
        const Matrix n = null_space(a);
        CHECK(rank(a) + n.cols() == c);
        CHECK((a * n).is_zero());
        CHECK(rank(n) == n.cols());
    }
}

TEST_CASE("solve and inverse") {
    Sampler rng(5);
    for (int s = 0; s < 20; ++s) {
        const Matrix a = random_matrix(rng, 4, 4);
        const Matrix b = random_matrix(rng, 4, 2);
        if (rank(a) < 4)
            continue;
        CHECK(a * inverse(a) == Matrix::identity(4));
        const auto x = solve(a, b);
        REQUIRE(x);
        CHECK(a * *x == b);
    }
    const Matrix singular = Matrix::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(solve(singular, Matrix::from_rows({{1}, {0}})));
}

TEST_CASE("inertia is invariant under congruence") {
    Sampler rng(11);
    const Matrix d = Matrix::diagonal({3, -1, 0, 2, -5});
    for (int s = 0; s < 20; ++s) {
        const Matrix p = random_matrix(rng, 5, 5);
        if (rank(p) < 5)
            continue;
        const auto in = inertia(p.transpose() * d * p);
        CHECK(in.positive == 2);
        CHECK(in.negative == 2);
        CHECK(in.zero == 1);
    }
    const auto hyperbolic = inertia(Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(hyperbolic.positive == 1);
    CHECK(hyperbolic.negative == 1);
}

TEST_CASE("kron and commutator") {
    const Matrix a = Matrix::from_rows({{0, 1}, {0, 0}});
    const Matrix b = Matrix::from_rows({{0, 0}, {1, 0}});
    CHECK(commutator(a, b) == Matrix::diagonal({1, -1}));
    CHECK(kron(Matrix::identity(2), a).rows() == 4);
    CHECK(kron(a, b).power(1) == kron(a, b));
    CHECK(kron(a, b).power(2).is_zero());
}
