#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/multipoly.hpp"
#include "acv/polynomial.hpp"
#include "acv/symplectic.hpp"
#include "acv/weyl.hpp"

namespace acv {

// ---------------------------------------------------------------------------
// Joint spectra of commuting semisimple pairs

using SpectralPairs = CartanPair;

namespace detail {

inline void require_commuting_semisimple(const SpElement& x, const SpElement& y)
{
    x.require_same(y);
    if (!bracket(x, y).is_zero()) throw Error(ErrorCode::NotCommuting, "[x, y] != 0");
    if (!is_semisimple(x.mat())) throw Error(ErrorCode::NotSemisimple, "x is not semisimple");
    if (!is_semisimple(y.mat())) throw Error(ErrorCode::NotSemisimple, "y is not semisimple");
}

// Picks one representative per +- class from a +--symmetric multiset of 2n pairs.
inline std::vector<std::pair<Rational, Rational>>
halve_symmetric(const std::map<std::pair<Rational, Rational>, std::size_t>& mult, std::size_t n)
{
    const std::pair<Rational, Rational> origin{0, 0};
    std::vector<std::pair<Rational, Rational>> reps;
    for (const auto& [pair, count] : mult) {
        const std::pair<Rational, Rational> neg{-pair.first, -pair.second};
        const auto it = mult.find(neg);
        if (it == mult.end() || it->second != count) {
            throw Error(ErrorCode::SchemaError, "joint spectrum is not symmetric under negation");
        }
        if (pair == origin) {
            if (count % 2 != 0) throw Error(ErrorCode::SchemaError, "odd multiplicity of the zero pair");
            reps.insert(reps.end(), count / 2, pair);
        } else if (pair > origin) {
            reps.insert(reps.end(), count, pair);
        }
    }
    if (reps.size() != n) throw Error(ErrorCode::SchemaError, "joint spectrum has the wrong size");
    return reps;
}

} // namespace detail

/*
 * Canonical W-orbit representative of the joint eigenvalues of a commuting
 * semisimple pair. Joint multiplicities are dim ker(x - a) cap ker(y - b).
 */
inline SpectralPairs joint_spectrum(const SpElement& x, const SpElement& y)
{
    detail::require_commuting_semisimple(x, y);
    const auto ex = rational_eigensystem(x.mat());
    const auto ey = rational_eigensystem(y.mat());
    const std::size_t d = x.space().dim();
    const ExactMatrix id = ExactMatrix::identity(d);

    std::map<std::pair<Rational, Rational>, std::size_t> mult;
    std::size_t total = 0;
    for (const auto& a : ex) {
        for (const auto& b : ey) {
            const std::size_t dim =
                nullspace((x.mat() - a.eigenvalue * id).vstack(y.mat() - b.eigenvalue * id)).size();
            if (dim) {
                mult[{a.eigenvalue, b.eigenvalue}] += dim;
                total += dim;
            }
        }
    }
    if (total != d) throw Error(ErrorCode::NotSemisimple, "joint eigenspaces do not span");

    const auto reps = detail::halve_symmetric(mult, x.n());
    SpectralPairs out{CartanPoint{ExactVector(x.n())}, CartanPoint{ExactVector(x.n())}};
    for (std::size_t k = 0; k < reps.size(); ++k) {
        out.first.t[k] = reps[k].first;
        out.second.t[k] = reps[k].second;
    }
    return weyl_canonical_form(out);
}

// ---------------------------------------------------------------------------
// Trace words

// tr(x^{a_1} y^{b_1} x^{a_2} y^{b_2} ...)
struct TraceWord {
    std::vector<std::pair<unsigned, unsigned>> word;

    unsigned total_degree() const
    {
        unsigned d = 0;
        for (auto [a, b] : word) d += a + b;
        return d;
    }

    std::string letters() const
    {
        std::string s;
        for (auto [a, b] : word) s += std::string(a, 'x') + std::string(b, 'y');
        return s;
    }

    static TraceWord from_letters(const std::string& s)
    {
        TraceWord w;
        std::size_t pos = 0;
        while (pos < s.size()) {
            unsigned a = 0, b = 0;
            while (pos < s.size() && s[pos] == 'x') ++a, ++pos;
            while (pos < s.size() && s[pos] == 'y') ++b, ++pos;
            if (a == 0 && b == 0) throw Error(ErrorCode::ParseError, "trace word letters must be x or y");
            w.word.emplace_back(a, b);
        }
        return w;
    }

    friend bool operator==(const TraceWord&, const TraceWord&) = default;
};

inline Rational trace_word_invariant(const SpElement& x, const SpElement& y, const TraceWord& w)
{
    x.require_same(y);
    if (w.total_degree() == 0) throw Error(ErrorCode::SchemaError, "trace word must have positive degree");
    const std::size_t d = x.space().dim();
    ExactMatrix acc = ExactMatrix::identity(d);
    for (auto [a, b] : w.word) {
        for (unsigned k = 0; k < a; ++k) acc = acc * x.mat();
        for (unsigned k = 0; k < b; ++k) acc = acc * y.mat();
    }
    return acc.trace();
}

// One word per cyclic class of x/y strings of length 1..max_degree.
inline std::vector<TraceWord> trace_words(unsigned max_degree)
{
    std::vector<TraceWord> out;
    for (unsigned len = 1; len <= max_degree; ++len) {
        std::set<std::string> seen;
        for (unsigned long mask = 0; mask < (1UL << len); ++mask) {
            std::string s(len, 'x');
            for (unsigned k = 0; k < len; ++k)
                if (mask & (1UL << k)) s[k] = 'y';
            std::string canon = s;
            for (unsigned r = 1; r < len; ++r) canon = std::min(canon, s.substr(r) + s.substr(0, r));
            if (seen.insert(canon).second) out.push_back(TraceWord::from_letters(canon));
        }
    }
    return out;
}

struct ConsistencyReport {
    SpectralPairs spectrum1;
    SpectralPairs spectrum2;
    bool spectra_equal = false;
    bool invariants_equal = false;
    std::size_t words_checked = 0;
    std::optional<TraceWord> separating_word;

    // (spectra equal) <=> (all invariants equal)
    bool consistent() const noexcept { return spectra_equal == invariants_equal; }
};

inline ConsistencyReport quotient_consistency_check(const std::pair<SpElement, SpElement>& p1,
                                                    const std::pair<SpElement, SpElement>& p2,
                                                    unsigned degree_bound)
{
    ConsistencyReport rep;
    rep.spectrum1 = joint_spectrum(p1.first, p1.second);
    rep.spectrum2 = joint_spectrum(p2.first, p2.second);
    rep.spectra_equal = rep.spectrum1 == rep.spectrum2;
    rep.invariants_equal = true;
    for (const auto& w : trace_words(degree_bound)) {
        ++rep.words_checked;
        if (trace_word_invariant(p1.first, p1.second, w) != trace_word_invariant(p2.first, p2.second, w)) {
            rep.invariants_equal = false;
            rep.separating_word = w;
            break;
        }
    }
    return rep;
}

struct RestrictionReport {
    CartanPoint t; // nonnegative representatives of the +- eigenvalue pairs
    UniPolynomial char_poly;
    UniPolynomial expected; // prod_k (lambda^2 - t_k^2)
    bool pass = false;
};

inline RestrictionReport restriction_check(const SpElement& x)
{
    if (!is_semisimple(x.mat())) throw Error(ErrorCode::NotSemisimple, "restriction_check needs semisimple x");
    const SpElement zero = SpElement::zero(x.space());
    const SpectralPairs js = joint_spectrum(x, zero);
    RestrictionReport rep;
    rep.t = js.first;
    rep.char_poly = char_poly(x.mat());
    rep.expected = UniPolynomial::constant(1);
    for (const auto& tk : rep.t.t) rep.expected = rep.expected * UniPolynomial({-tk * tk, Rational(0), Rational(1)});
    rep.pass = rep.char_poly == rep.expected;
    return rep;
}

// ---------------------------------------------------------------------------
// W-invariant polynomials on h + h and the Poisson closure

// f o w, where w acts diagonally: h_a -> s_a h_{perm(a)}, k_a -> s_a k_{perm(a)}.
inline MultiPolynomial weyl_substitute(const SignedPermutation& w, const MultiPolynomial& f)
{
    const std::size_t n = f.n();
    MultiPolynomial out(n);
    for (const auto& [e, c] : f.terms()) {
        Exponent g(2 * n, 0);
        Rational coeff = c;
        for (std::size_t a = 0; a < n; ++a) {
            g[w.perm[a]] += e[a];
            g[n + w.perm[a]] += e[n + a];
            if (w.signs[a] == -1 && (e[a] + e[n + a]) % 2 == 1) coeff = -coeff;
        }
        out.add_term(g, coeff);
    }
    return out;
}

inline bool is_weyl_invariant(const MultiPolynomial& f, const std::vector<SignedPermutation>& group)
{
    return std::all_of(group.begin(), group.end(), [&](const SignedPermutation& w) { return weyl_substitute(w, f) == f; });
}

/*
 * Incrementally maintained echelon basis of a space of polynomials. Each stored
 * element has a distinct leading (largest) monomial.
 */
class PolynomialSpan {
public:
    explicit PolynomialSpan(std::size_t n) : n_(n) {}

    // Returns true when p was not already in the span.
    bool insert(const MultiPolynomial& p)
    {
        MultiPolynomial r = reduce(p);
        if (r.is_zero()) return false;
        const auto lead = r.terms().rbegin();
        const Exponent key = lead->first;
        r = (Rational(1) / lead->second) * r;
        basis_.emplace(key, std::move(r));
        return true;
    }

    bool contains(const MultiPolynomial& p) const { return reduce(p).is_zero(); }

    std::size_t dim() const noexcept { return basis_.size(); }

    std::vector<MultiPolynomial> elements() const
    {
        std::vector<MultiPolynomial> out;
        for (const auto& [k, p] : basis_) out.push_back(p);
        return out;
    }

private:
    MultiPolynomial reduce(MultiPolynomial p) const
    {
        // Subtracting a basis element only touches monomials below its pivot.
        for (const auto& [pivot, b] : basis_) {
            const auto it = p.terms().find(pivot);
            if (it == p.terms().end()) continue;
            p -= it->second * b;
        }
        return p;
    }

    std::size_t n_;
    std::map<Exponent, MultiPolynomial, std::greater<>> basis_;
};

// Monomials in 2n variables of total degree exactly d.
inline std::vector<Exponent> monomials_of_degree(std::size_t n, unsigned d)
{
    std::vector<Exponent> out;
    Exponent e(2 * n, 0);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t var, unsigned left) {
        if (var + 1 == e.size()) {
            e[var] = left;
            out.push_back(e);
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            e[var] = k;
            rec(var + 1, left - k);
        }
        e[var] = 0;
    };
    if (n == 0) return out;
    rec(0, d);
    return out;
}

struct InvariantSpace {
    std::size_t n = 0;
    unsigned max_degree = 0;
    std::vector<std::size_t> dim_by_degree;
    std::vector<MultiPolynomial> basis;

    std::size_t dim() const noexcept { return basis.size(); }
};

// Reynolds averages of all monomials of degree <= max_degree over W, reduced to a basis.
inline InvariantSpace invariant_space(std::size_t n, unsigned max_degree)
{
    const auto group = weyl_group(n);
    InvariantSpace out;
    out.n = n;
    out.max_degree = max_degree;
    for (unsigned d = 0; d <= max_degree; ++d) {
        PolynomialSpan span(n);
        for (const auto& e : monomials_of_degree(n, d)) {
            MultiPolynomial m(n);
            m.add_term(e, 1);
            MultiPolynomial avg(n);
            for (const auto& w : group) avg += weyl_substitute(w, m);
            span.insert(avg);
        }
        out.dim_by_degree.push_back(span.dim());
        for (auto& p : span.elements()) out.basis.push_back(std::move(p));
    }
    return out;
}

struct WallachReport {
    std::size_t n = 0;
    unsigned max_degree = 0;
    std::size_t reached_dim = 0;
    std::size_t full_dim = 0;
    std::vector<std::size_t> reached_by_degree;
    std::vector<std::size_t> full_by_degree;
    std::size_t passes = 0;
    bool closure_invariant = true; // every closure element is W-invariant

    bool pass() const noexcept { return closure_invariant && reached_dim == full_dim; }
};

/*
 * Closes {1} + {sum h^{2m}} + {sum k^{2m}}, m = 1..n, under products and the
 * Poisson bracket, discarding anything above max_degree. Seeds and operations
 * preserve homogeneity, so the closure is tracked one degree at a time.
 * Stops once a full pass adds nothing.
 */
inline WallachReport wallach_generation_check(std::size_t n, unsigned max_degree)
{
    WallachReport rep;
    rep.n = n;
    rep.max_degree = max_degree;

    std::vector<PolynomialSpan> spans(max_degree + 1, PolynomialSpan(n));
    std::vector<std::pair<unsigned, MultiPolynomial>> elements;
    auto add = [&](const MultiPolynomial& p) {
        if (p.is_zero()) return false;
        const long d = p.degree();
        if (d > static_cast<long>(max_degree)) return false;
        if (!spans[static_cast<std::size_t>(d)].insert(p)) return false;
        elements.emplace_back(static_cast<unsigned>(d), p);
        return true;
    };

    add(MultiPolynomial::constant(n, 1));
    for (unsigned m = 1; m <= n; ++m) {
        add(power_sum(n, 2 * m, false));
        add(power_sum(n, 2 * m, true));
    }

    std::size_t done = 0; // pairs (a, b) with both a, b < done were already combined
    while (true) {
        ++rep.passes;
        const std::size_t size = elements.size();
        std::vector<MultiPolynomial> candidates;
        for (std::size_t a = 0; a < size; ++a) {
            for (std::size_t b = std::max(a, done); b < size; ++b) {
                const auto& [da, fa] = elements[a];
                const auto& [db, fb] = elements[b];
                if (da == 0 || db == 0) continue; // constants add nothing
                if (da + db <= max_degree) candidates.push_back(fa * fb);
                if (da + db - 2 <= max_degree) candidates.push_back(poisson_bracket(fa, fb));
            }
        }
        for (const auto& c : candidates) add(c);
        done = size;
        if (elements.size() == size) break;
    }

    const auto group = weyl_group(n);
    for (const auto& [d, p] : elements)
        if (!is_weyl_invariant(p, group)) rep.closure_invariant = false;

    const auto full = invariant_space(n, max_degree);
    rep.full_by_degree = full.dim_by_degree;
    rep.full_dim = full.dim();
    for (const auto& s : spans) {
        rep.reached_by_degree.push_back(s.dim());
        rep.reached_dim += s.dim();
    }
    return rep;
}

} // namespace acv
