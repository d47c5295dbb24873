#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/rational.hpp"

namespace acv {

// Univariate polynomial over Q, coefficients lowest degree first.
class UniPolynomial {
public:
    UniPolynomial() = default;

    explicit UniPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UniPolynomial constant(const Rational& c) { return UniPolynomial({c}); }

    // t - root
    static UniPolynomial linear(const Rational& root) { return UniPolynomial({-root, Rational(1)}); }

    static UniPolynomial monomial(std::size_t degree)
    {
        std::vector<Rational> c(degree + 1);
        c[degree] = 1;
        return UniPolynomial(std::move(c));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    Rational leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

    UniPolynomial monic() const
    {
        if (is_zero()) return *this;
        UniPolynomial out = *this;
        const Rational lead = leading();
        for (auto& c : out.coeffs_) c /= lead;
        return out;
    }

    UniPolynomial derivative() const
    {
        if (coeffs_.size() <= 1) return {};
        std::vector<Rational> d(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
        return UniPolynomial(std::move(d));
    }

    Rational operator()(const Rational& t) const
    {
        Rational acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
        return acc;
    }

    // Horner evaluation at a square matrix.
    ExactMatrix operator()(const ExactMatrix& m) const
    {
        if (!m.is_square()) throw Error(ErrorCode::NotSquare, "polynomial evaluation");
        ExactMatrix acc = ExactMatrix::zero(m.rows(), m.cols());
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * m + coeffs_[k] * ExactMatrix::identity(m.rows());
        }
        return acc;
    }

    friend UniPolynomial operator+(const UniPolynomial& a, const UniPolynomial& b)
    {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
        return UniPolynomial(std::move(c));
    }

    friend UniPolynomial operator-(const UniPolynomial& a, const UniPolynomial& b)
    {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
        return UniPolynomial(std::move(c));
    }

    friend UniPolynomial operator*(const UniPolynomial& a, const UniPolynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPolynomial(std::move(c));
    }

    friend bool operator==(const UniPolynomial& a, const UniPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim()
    {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rational> coeffs_;
};

struct PolyDivision {
    UniPolynomial quotient;
    UniPolynomial remainder;
};

inline PolyDivision divmod(const UniPolynomial& num, const UniPolynomial& den)
{
    if (den.is_zero()) throw Error(ErrorCode::DimensionMismatch, "polynomial division by zero");
    std::vector<Rational> rem = num.coefficients();
    const auto& d = den.coefficients();
    const std::size_t dd = d.size() - 1;
    if (rem.size() < d.size()) return {UniPolynomial(), num};
    std::vector<Rational> quo(rem.size() - dd);
    for (std::size_t k = rem.size(); k-- > dd;) {
        const Rational factor = rem[k] / d[dd];
        quo[k - dd] = factor;
        if (factor == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= factor * d[j];
    }
    rem.resize(dd);
    return {UniPolynomial(std::move(quo)), UniPolynomial(std::move(rem))};
}

// Monic gcd; gcd(0, 0) = 0.
inline UniPolynomial gcd(UniPolynomial a, UniPolynomial b)
{
    while (!b.is_zero()) {
        UniPolynomial r = divmod(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

inline std::string to_string(const UniPolynomial& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Rational mag = abs(c[k]);
        out += out.empty() ? (c[k] < 0 ? "-" : "") : (c[k] < 0 ? " - " : " + ");
        if (mag != 1 || k == 0) out += to_string(mag);
        if (k >= 1) out += "t";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

/*
 * Characteristic polynomial det(t*I - m) by the Faddeev-LeVerrier recurrence:
 *   M_1 = I, c_{n-1} = -tr(m)
 *   M_k = m*M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(m*M_k)/k
 * Division by k is exact over Q.
 */
inline UniPolynomial char_poly(const ExactMatrix& m)
{
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "char_poly");
    const std::size_t n = m.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    ExactMatrix mk = ExactMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        ExactMatrix am = m * mk;
        c[n - k] = -am.trace() / static_cast<long>(k);
        mk = am + c[n - k] * ExactMatrix::identity(n);
    }
    return UniPolynomial(std::move(c));
}

// First linear dependency among I, m, m^2, ...
inline UniPolynomial minimal_poly(const ExactMatrix& m)
{
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "minimal_poly");
    const std::size_t n = m.rows();
    if (n == 0) return UniPolynomial::constant(1);

    std::vector<ExactVector> powers;
    ExactMatrix pk = ExactMatrix::identity(n);
    for (std::size_t k = 0; k <= n; ++k) {
        if (!powers.empty()) {
            const ExactMatrix basis = ExactMatrix::from_columns(powers, n * n);
            if (auto sol = solve_affine(basis, pk.entries())) {
                std::vector<Rational> coeffs(k + 1);
                for (std::size_t j = 0; j < k; ++j) coeffs[j] = -sol->particular[j];
                coeffs[k] = 1;
                return UniPolynomial(std::move(coeffs));
            }
        }
        powers.push_back(pk.entries());
        pk = pk * m;
    }
    // Cayley-Hamilton guarantees a dependency by degree n.
    throw Error(ErrorCode::NotFound, "minimal polynomial search exceeded degree n");
}

inline bool is_squarefree(const UniPolynomial& p) { return gcd(p, p.derivative()).degree() <= 0; }

inline bool is_semisimple(const ExactMatrix& m) { return is_squarefree(minimal_poly(m)); }

namespace detail {

// Positive divisors of |v|, v != 0, ascending.
inline std::vector<Integer> divisors(const Integer& v)
{
    Integer a = abs(v);
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            small.push_back(d);
            if (d * d != a) large.push_back(a / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace detail

struct RationalRoots {
    std::map<Rational, std::size_t> roots; // root -> multiplicity
    UniPolynomial cofactor;                // no rational roots; constant iff p splits over Q
};

// Rational-root test on the integer-cleared polynomial, with multiplicity.
inline RationalRoots rational_roots(const UniPolynomial& p)
{
    if (p.is_zero()) throw Error(ErrorCode::DimensionMismatch, "roots of the zero polynomial");
    RationalRoots out;
    UniPolynomial rest = p.monic();

    while (rest.degree() >= 1 && rest.coefficient(0) == 0) {
        ++out.roots[Rational(0)];
        rest = divmod(rest, UniPolynomial::monomial(1)).quotient;
    }

    bool found = true;
    while (found && rest.degree() >= 1) {
        found = false;
        Integer l = 1;
        for (const auto& c : rest.coefficients()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
        const Integer a0 = Rational(rest.coefficient(0) * l).get_num();
        const Integer an = Rational(rest.leading() * l).get_num();
        for (const auto& num : detail::divisors(a0)) {
            for (const auto& den : detail::divisors(an)) {
                for (int sign : {1, -1}) {
                    const Rational cand = make_rational(num * sign, den);
                    if (rest(cand) == 0) {
                        ++out.roots[cand];
                        rest = divmod(rest, UniPolynomial::linear(cand)).quotient;
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
    }
    out.cofactor = rest;
    return out;
}

struct Eigenspace {
    Rational eigenvalue;
    std::vector<ExactVector> basis;
};

// One entry per distinct eigenvalue, ascending. Throws NonSplitSpectrum when the
// characteristic polynomial keeps a nonconstant factor without rational roots.
inline std::vector<Eigenspace> rational_eigensystem(const ExactMatrix& m)
{
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "rational_eigensystem");
    const RationalRoots rr = rational_roots(char_poly(m));
    if (rr.cofactor.degree() >= 1) {
        throw Error(ErrorCode::NonSplitSpectrum, "characteristic polynomial factor " + to_string(rr.cofactor) +
                                                     " has no rational root");
    }
    std::vector<Eigenspace> out;
    for (const auto& [lambda, mult] : rr.roots) {
        (void)mult;
        out.push_back({lambda, nullspace(m - lambda * ExactMatrix::identity(m.rows()))});
    }
    return out;
}

} // namespace acv
