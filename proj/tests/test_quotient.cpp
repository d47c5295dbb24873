#include <catch_amalgamated.hpp>

#include <map>
#include <random>
#include <set>

#include "acv/quotient.hpp"
#include "acv/sampling.hpp"

using namespace acv;

namespace {

CartanPoint cp(std::initializer_list<long> t)
{
    CartanPoint h;
    for (long v : t) h.t.push_back(v);
    return h;
}

MultiPolynomial random_poly(std::mt19937_64& rng, std::size_t n, unsigned max_degree, int terms)
{
    MultiPolynomial f(n);
    for (int k = 0; k < terms; ++k) {
        Exponent e(2 * n, 0);
        unsigned left = static_cast<unsigned>(uniform(rng, 0, max_degree));
        while (left > 0) {
            ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(2 * n) - 1))];
            --left;
        }
        f.add_term(e, uniform_nonzero(rng, 5));
    }
    return f;
}

/*
 * Invariant dimension in degree d by orbit counting: W permutes monomials up to
 * sign, and an orbit contributes one invariant iff no stabilizer element acts
 * by -1 on it.
 */
std::size_t orbit_count_invariants(std::size_t n, unsigned d)
{
    const auto group = weyl_group(n);
    std::set<Exponent> done;
    std::size_t count = 0;
    for (const auto& e : monomials_of_degree(n, d)) {
        if (done.count(e)) continue;
        bool killed = false;
        for (const auto& w : group) {
            Exponent g(2 * n, 0);
            int sign = 1;
            for (std::size_t a = 0; a < n; ++a) {
                g[w.perm[a]] = e[a];
                g[n + w.perm[a]] = e[n + a];
                if (w.signs[a] == -1 && (e[a] + e[n + a]) % 2 == 1) sign = -sign;
            }
            done.insert(g);
            if (g == e && sign == -1) killed = true;
        }
        if (!killed) ++count;
    }
    return count;
}

} // namespace

TEST_CASE("joint spectrum examples", "[quotient]")
{
    const SpElement x = cartan_embed(cp({2, -1}));
    const SpElement y = cartan_embed(cp({3, 4}));
    CHECK(joint_spectrum(x, y) == weyl_canonical_form(CartanPair{cp({2, -1}), cp({3, 4})}));

    const SpElement z = SpElement::zero(SymplecticSpace(2));
    CHECK(joint_spectrum(z, y) == weyl_canonical_form(CartanPair{cp({0, 0}), cp({3, 4})}));

    const SymplecticSpace space(2);
    for (std::uint64_t trial = 0; trial < 5; ++trial) {
        auto rng = trial_rng(61, trial);
        const ExactMatrix g = random_symplectic(rng, 2);
        const ExactMatrix g_inv = symplectic_inverse(g, space);
        CHECK(joint_spectrum(conjugate(g, x, g_inv), conjugate(g, y, g_inv)) == joint_spectrum(x, y));
    }

    const SpElement e(SymplecticSpace(1), ExactMatrix{{0, 1}, {0, 0}});
    CHECK_THROWS_AS(joint_spectrum(e, SpElement::zero(SymplecticSpace(1))), Error);
    CHECK_THROWS_AS(joint_spectrum(cartan_embed(cp({1})), e), Error);
}

TEST_CASE("joint spectrum with repeated and zero eigenvalues", "[quotient]")
{
    const SpElement x = cartan_embed(cp({0, 0, 2}));
    const SpElement y = cartan_embed(cp({1, -1, 0}));
    CHECK(joint_spectrum(x, y) == weyl_canonical_form(CartanPair{cp({0, 0, 2}), cp({1, -1, 0})}));
    CHECK(joint_spectrum(SpElement::zero(SymplecticSpace(2)), SpElement::zero(SymplecticSpace(2))) ==
          CartanPair{cp({0, 0}), cp({0, 0})});
}

TEST_CASE("trace word examples", "[quotient]")
{
    std::mt19937_64 rng(71);
    const SymplecticSpace space(2);
    for (int k = 0; k < 5; ++k) {
        ExactVector c(space.algebra_dim());
        for (auto& v : c) v = uniform(rng, -3, 3);
        const SpElement x = sp_from_coords(space, c);
        CHECK(trace_word_invariant(x, x, TraceWord{{{1, 0}}}) == 0);
    }
    const SpElement h = cartan_embed(cp({2, 3}));
    CHECK(trace_word_invariant(h, h, TraceWord{{{2, 0}}}) == 2 * (4 + 9));
    CHECK(TraceWord::from_letters("xxyxy").word == std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {1, 1}});
    CHECK(TraceWord::from_letters("yx").letters() == "yx");
    CHECK_THROWS_AS(TraceWord::from_letters("xz"), Error);
}

TEST_CASE("trace words enumerate binary necklaces", "[quotient]")
{
    // necklaces of length 1..6 over two letters: 2, 3, 4, 6, 8, 14
    CHECK(trace_words(1).size() == 2);
    CHECK(trace_words(2).size() == 5);
    CHECK(trace_words(6).size() == 37);
}

TEST_CASE("odd single-variable words vanish on split semisimple inputs", "[quotient][property]")
{
    for (std::uint64_t trial = 0; trial < 6; ++trial) {
        auto rng = trial_rng(73, trial);
        const std::size_t n = 1 + trial % 3;
        const SymplecticSpace space(n);
        const ExactMatrix g = random_symplectic(rng, n);
        const SpElement x = conjugate(g, cartan_embed(random_cartan(rng, n, 5)), symplectic_inverse(g, space));
        const SpElement z = SpElement::zero(space);
        for (unsigned a : {1u, 3u, 5u}) {
            CHECK(trace_word_invariant(x, z, TraceWord{{{a, 0}}}) == 0);
            CHECK(trace_word_invariant(z, x, TraceWord{{{0, a}}}) == 0);
        }
    }
}

TEST_CASE("quotient consistency examples", "[quotient]")
{
    const SymplecticSpace space(2);
    const std::pair<SpElement, SpElement> p1{cartan_embed(cp({1, 3})), cartan_embed(cp({-2, 5}))};
    auto rng = trial_rng(83, 0);
    const ExactMatrix g = random_symplectic(rng, 2);
    const ExactMatrix g_inv = symplectic_inverse(g, space);
    const auto conj = quotient_consistency_check(p1, {conjugate(g, p1.first, g_inv), conjugate(g, p1.second, g_inv)}, 6);
    CHECK(conj.spectra_equal);
    CHECK(conj.invariants_equal);
    CHECK(conj.consistent());
    CHECK(conj.words_checked == 37);

    for (const auto& w : weyl_group(2)) {
        const CartanPair moved = weyl_act(w, CartanPair{cp({1, 3}), cp({-2, 5})});
        const auto rep = quotient_consistency_check(p1, {cartan_embed(moved.first), cartan_embed(moved.second)}, 6);
        CHECK(rep.spectra_equal);
        CHECK(rep.invariants_equal);
    }

    const auto diff = quotient_consistency_check({cartan_embed(cp({1})), cartan_embed(cp({0}))},
                                                 {cartan_embed(cp({2})), cartan_embed(cp({0}))}, 2);
    CHECK_FALSE(diff.spectra_equal);
    CHECK_FALSE(diff.invariants_equal);
    REQUIRE(diff.separating_word);
    CHECK(diff.separating_word->letters() == "xx");
}

TEST_CASE("diagonal flips alone are not enough: (t, s) and (t, -s) differ", "[quotient]")
{
    // W acts diagonally, so flipping only the second coordinate is a different point.
    const auto rep = quotient_consistency_check({cartan_embed(cp({1, 2})), cartan_embed(cp({3, 5}))},
                                                {cartan_embed(cp({1, 2})), cartan_embed(cp({-3, 5}))}, 6);
    CHECK_FALSE(rep.spectra_equal);
    CHECK_FALSE(rep.invariants_equal);
}

TEST_CASE("restriction examples", "[quotient]")
{
    const auto r = restriction_check(cartan_embed(cp({1, 2})));
    CHECK(r.pass);
    CHECK(r.char_poly == UniPolynomial({-1, 0, 1}) * UniPolynomial({-4, 0, 1}));

    const SymplecticSpace space(2);
    auto rng = trial_rng(89, 0);
    const ExactMatrix g = random_symplectic(rng, 2);
    const auto rc = restriction_check(conjugate(g, cartan_embed(cp({1, 2})), symplectic_inverse(g, space)));
    CHECK(rc.pass);
    CHECK(rc.char_poly == r.char_poly);

    for (std::size_t n = 1; n <= 3; ++n) {
        const auto rz = restriction_check(SpElement::zero(SymplecticSpace(n)));
        CHECK(rz.pass);
        CHECK(rz.char_poly == UniPolynomial::monomial(2 * n));
    }
    CHECK_THROWS_AS(restriction_check(SpElement(SymplecticSpace(1), ExactMatrix{{0, 1}, {0, 0}})), Error);
}

TEST_CASE("multipolynomial basics", "[poly]")
{
    const auto h = MultiPolynomial::variable_h(1, 0);
    const auto k = MultiPolynomial::variable_k(1, 0);
    CHECK(poisson_bracket(h, k) == MultiPolynomial::constant(1, 1));
    CHECK(poisson_bracket(h * h, k * k) == Rational(4) * (h * k));
    const auto f = h * h * k + Rational(3) * k;
    CHECK(f.evaluate({2, 5}) == 20 + 15);
    CHECK(f.partial(0) == Rational(2) * (h * k));
    CHECK(f.degree() == 3);
    CHECK_FALSE(f.is_homogeneous());
    CHECK(power_sum(2, 4, true).evaluate({1, 1, 2, 3}) == 16 + 81);
    CHECK(exponent_key({1, 0, 2}) == "1,0,2");
    CHECK(parse_exponent_key("1,0,2") == Exponent{1, 0, 2});
    CHECK_THROWS_AS(parse_exponent_key("1,,2"), Error);
    CHECK_THROWS_AS(parse_exponent_key("a"), Error);
}

TEST_CASE("Poisson bracket: antisymmetry, Leibniz, Jacobi on cubics", "[poly][property]")
{
    std::mt19937_64 rng(97);
    for (std::size_t n = 1; n <= 2; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const auto f = random_poly(rng, n, 3, 4);
            const auto g = random_poly(rng, n, 3, 4);
            const auto h = random_poly(rng, n, 3, 4);
            CHECK(poisson_bracket(f, g) == Rational(-1) * poisson_bracket(g, f));
            CHECK(poisson_bracket(f, g * h) == poisson_bracket(f, g) * h + g * poisson_bracket(f, h));
            const auto jacobi = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                                poisson_bracket(h, poisson_bracket(f, g));
            CHECK(jacobi.is_zero());
        }
    }
}

TEST_CASE("invariant space dimensions", "[quotient]")
{
    const auto s2 = invariant_space(1, 2);
    CHECK(s2.dim_by_degree == std::vector<std::size_t>{1, 0, 3});
    CHECK(invariant_space(1, 4).dim() == 9);
    for (unsigned d = 0; d <= 8; ++d) CHECK(invariant_space(1, d).dim_by_degree.back() == (d % 2 == 0 ? d + 1 : 0));

    const auto group2 = weyl_group(2);
    const auto s = invariant_space(2, 6);
    for (unsigned d = 0; d <= 6; ++d) CHECK(s.dim_by_degree[d] == orbit_count_invariants(2, d));
    for (const auto& p : s.basis) CHECK(is_weyl_invariant(p, group2));
    const auto s3 = invariant_space(3, 4);
    for (unsigned d = 0; d <= 4; ++d) CHECK(s3.dim_by_degree[d] == orbit_count_invariants(3, d));
}

TEST_CASE("Wallach closure reaches the invariant space", "[quotient]")
{
    const auto r12 = wallach_generation_check(1, 2);
    CHECK(r12.pass());
    CHECK(r12.reached_by_degree[2] == 3);
    for (unsigned d : {4u, 6u, 8u}) CHECK(wallach_generation_check(1, d).pass());
    for (unsigned d : {2u, 4u, 6u}) {
        const auto r = wallach_generation_check(2, d);
        CHECK(r.pass());
        CHECK(r.closure_invariant);
        CHECK(r.reached_by_degree == r.full_by_degree);
    }
}

TEST_CASE("products alone do not generate: brackets are needed", "[quotient]")
{
    // Without brackets only polynomials in h^2 and k^2 appear, missing hk.
    PolynomialSpan span(1);
    span.insert(power_sum(1, 2, false));
    span.insert(power_sum(1, 2, true));
    CHECK_FALSE(span.contains(MultiPolynomial::variable_h(1, 0) * MultiPolynomial::variable_k(1, 0)));
    span.insert(poisson_bracket(power_sum(1, 2, false), power_sum(1, 2, true)));
    CHECK(span.contains(MultiPolynomial::variable_h(1, 0) * MultiPolynomial::variable_k(1, 0)));
    CHECK(span.dim() == invariant_space(1, 2).dim_by_degree[2]);
}

TEST_CASE("weyl_substitute is an action", "[quotient][property]")
{
    std::mt19937_64 rng(101);
    const auto group = weyl_group(2);
    const auto f = random_poly(rng, 2, 4, 6);
    for (const auto& a : group) {
        for (const auto& b : group) {
            const auto lhs = weyl_substitute(compose(a, b), f);
            const auto via = weyl_substitute(a, weyl_substitute(b, f));
            const auto via_rev = weyl_substitute(b, weyl_substitute(a, f));
            CHECK((lhs == via || lhs == via_rev));
        }
    }
}
