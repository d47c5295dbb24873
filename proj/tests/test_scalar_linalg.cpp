#include <catch_amalgamated.hpp>

#include <random>

#include "acv/polynomial.hpp"
#include "oracles.hpp"

using namespace acv;

TEST_CASE("rationals parse and print canonically", "[rational]")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(parse_rational("0/9") == 0);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK_THROWS_AS(parse_rational("3/-4"), Error);
    CHECK(is_integer(make_rational(8, 4)));
}

TEST_CASE("rank examples", "[linalg]")
{
    CHECK(rank(ExactMatrix::identity(4)) == 4);
    CHECK(rank(ExactMatrix::zero(3, 5)) == 0);
    CHECK(rank(ExactMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(ExactMatrix(0, 3)) == 0);
}

TEST_CASE("rank agrees with naive elimination and rank-nullity holds", "[linalg][property]")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t rows = 1 + trial % 6;
        const std::size_t cols = 1 + (trial / 6) % 7;
        const ExactMatrix m = trial % 3 == 0 ? oracle::random_low_rank(rng, rows, cols, 1 + trial % 2, 3)
                                             : oracle::random_matrix(rng, rows, cols, 3);
        const std::size_t r = rank(m);
        CHECK(r == oracle::naive_rank(m));
        const auto ker = nullspace(m);
        CHECK(r + ker.size() == cols);
        for (const auto& v : ker) CHECK(is_zero(m * v));
        if (!ker.empty()) CHECK(oracle::naive_rank(ExactMatrix::from_columns(ker, cols)) == ker.size());
    }
}

TEST_CASE("rational entries are handled exactly", "[linalg]")
{
    const ExactMatrix m{{make_rational(1, 2), make_rational(1, 3)}, {make_rational(1, 4), make_rational(1, 6)}};
    CHECK(rank(m) == 1);
    const auto inv = inverse(ExactMatrix{{make_rational(1, 2), 1}, {0, make_rational(2, 3)}});
    REQUIRE(inv);
    CHECK(*inv * ExactMatrix{{make_rational(1, 2), 1}, {0, make_rational(2, 3)}} == ExactMatrix::identity(2));
    CHECK_FALSE(inverse(m));
}

TEST_CASE("nullspace examples", "[linalg]")
{
    CHECK(nullspace(ExactMatrix::identity(3)).empty());
    CHECK(nullspace(ExactMatrix::zero(2, 2)).size() == 2);
    const auto ker = nullspace(ExactMatrix{{1, 1}});
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == -ker[0][1]);
    CHECK(ker[0][0] != 0);
}

TEST_CASE("solve_affine examples", "[linalg]")
{
    const ExactVector b{3, make_rational(-1, 2), 7};
    auto s = solve_affine(ExactMatrix::identity(3), b);
    REQUIRE(s);
    CHECK(s->particular == b);
    CHECK(s->kernel.empty());

    s = solve_affine(ExactMatrix::zero(2, 2), ExactVector{0, 0});
    REQUIRE(s);
    CHECK(is_zero(s->particular));
    CHECK(s->kernel.size() == 2);

    CHECK_FALSE(solve_affine(ExactMatrix{{1, 0}, {0, 0}}, ExactVector{0, 1}));
    CHECK_THROWS_AS(solve_affine(ExactMatrix::identity(2), ExactVector{1}), Error);
}

TEST_CASE("solve_affine solutions satisfy the system", "[linalg][property]")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const ExactMatrix a = oracle::random_low_rank(rng, 4, 5, 3, 3);
        const ExactVector x = oracle::random_matrix(rng, 5, 1, 4).col(0);
        const ExactVector b = a * x;
        const auto s = solve_affine(a, b);
        REQUIRE(s);
        CHECK(a * s->particular == b);
        CHECK(s->kernel.size() == 5 - rank(a));
    }
}

TEST_CASE("char_poly examples", "[poly]")
{
    CHECK(char_poly(ExactMatrix{{1, 0}, {0, 2}}) == UniPolynomial({2, -3, 1}));
    CHECK(char_poly(ExactMatrix{{0, 1}, {0, 0}}) == UniPolynomial::monomial(2));
    CHECK(char_poly(ExactMatrix{{3, 0}, {0, -3}}) == UniPolynomial({-9, 0, 1}));
    CHECK(char_poly(ExactMatrix(0, 0)) == UniPolynomial::constant(1));
}

TEST_CASE("char_poly agrees with cofactor determinants of tI - M", "[poly][property]")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 5;
        const ExactMatrix m = oracle::random_matrix(rng, n, n, 4);
        const UniPolynomial p = char_poly(m);
        CHECK(p.degree() == static_cast<long>(n));
        for (long t = -2; t <= static_cast<long>(n); ++t) {
            CHECK(p(Rational(t)) == oracle::cofactor_det(Rational(t) * ExactMatrix::identity(n) - m));
        }
    }
}

TEST_CASE("Cayley-Hamilton on random 6x6 matrices", "[poly][property]")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        const ExactMatrix m = oracle::random_matrix(rng, 6, 6, 5);
        CHECK(char_poly(m)(m).is_zero());
        const UniPolynomial mp = minimal_poly(m);
        CHECK(mp(m).is_zero());
        CHECK(divmod(char_poly(m), mp).remainder.is_zero());
    }
}

TEST_CASE("minimal_poly examples", "[poly]")
{
    CHECK(minimal_poly(ExactMatrix::identity(3)) == UniPolynomial::linear(1));
    const ExactVector d{1, 1, 2};
    CHECK(minimal_poly(ExactMatrix::diagonal(d)) == UniPolynomial::linear(1) * UniPolynomial::linear(2));
    CHECK(minimal_poly(ExactMatrix{{0, 1}, {0, 0}}) == UniPolynomial::monomial(2));
}

TEST_CASE("is_semisimple examples", "[poly]")
{
    const ExactVector d{5, -1, 5, 0};
    CHECK(is_semisimple(ExactMatrix::diagonal(d)));
    CHECK_FALSE(is_semisimple(ExactMatrix{{0, 1}, {0, 0}}));
    CHECK(is_semisimple(ExactMatrix{{0, -1}, {1, 0}})); // companion of t^2 + 1
    CHECK_FALSE(is_semisimple(ExactMatrix{{2, 1}, {0, 2}}));
}

TEST_CASE("polynomial arithmetic", "[poly]")
{
    const UniPolynomial a = UniPolynomial::linear(1) * UniPolynomial::linear(2) * UniPolynomial::linear(2);
    const UniPolynomial b = UniPolynomial::linear(2) * UniPolynomial::linear(-3);
    CHECK(gcd(a, b) == UniPolynomial::linear(2));
    const auto qr = divmod(a, b);
    CHECK(qr.quotient * b + qr.remainder == a);
    CHECK(qr.remainder.degree() < b.degree());
    CHECK_FALSE(is_squarefree(a));
    CHECK(is_squarefree(b));
    CHECK(to_string(UniPolynomial({2, -3, 1})) == "t^2 - 3t + 2");
    CHECK(UniPolynomial().degree() == -1);
}

TEST_CASE("rational roots with multiplicity", "[poly]")
{
    // (t - 1/2)^2 (t + 3) (t^2 + 1)
    const UniPolynomial p = UniPolynomial::linear(make_rational(1, 2)) * UniPolynomial::linear(make_rational(1, 2)) *
                            UniPolynomial::linear(-3) * UniPolynomial({1, 0, 1});
    const auto rr = rational_roots(p);
    CHECK(rr.roots.size() == 2);
    CHECK(rr.roots.at(make_rational(1, 2)) == 2);
    CHECK(rr.roots.at(Rational(-3)) == 1);
    CHECK(rr.cofactor == UniPolynomial({1, 0, 1}));
    CHECK(rational_roots(UniPolynomial::monomial(3)).roots.at(Rational(0)) == 3);
    CHECK(detail::divisors(Integer(12)) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("rational_eigensystem examples", "[poly]")
{
    const ExactVector d{1, 2, 2};
    const auto es = rational_eigensystem(ExactMatrix::diagonal(d));
    REQUIRE(es.size() == 2);
    CHECK(es[0].eigenvalue == 1);
    CHECK(es[0].basis.size() == 1);
    CHECK(es[1].eigenvalue == 2);
    CHECK(es[1].basis.size() == 2);

    CHECK_THROWS_MATCHES(rational_eigensystem(ExactMatrix{{0, 1}, {-1, 0}}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NonSplitSpectrum;
                         }));

    const auto z = rational_eigensystem(ExactMatrix::zero(4, 4));
    REQUIRE(z.size() == 1);
    CHECK(z[0].eigenvalue == 0);
    CHECK(z[0].basis.size() == 4);
}

TEST_CASE("shape errors are reported", "[linalg]")
{
    CHECK_THROWS_AS(ExactMatrix::identity(2) * ExactMatrix::identity(3), Error);
    CHECK_THROWS_AS(char_poly(ExactMatrix(2, 3)), Error);
    CHECK_THROWS_AS(inverse(ExactMatrix(2, 3)), Error);
}
