#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/rational.hpp"

namespace acv {

using Exponent = std::vector<unsigned>;

/*
 * Polynomial in h_1..h_n, k_1..k_n. Exponent vectors have length 2n with the
 * h-exponents first. Zero coefficients are never stored.
 */
class MultiPolynomial {
public:
    MultiPolynomial() = default;
    explicit MultiPolynomial(std::size_t n) : n_(n) {}

    static MultiPolynomial constant(std::size_t n, const Rational& c)
    {
        MultiPolynomial p(n);
        p.add_term(Exponent(2 * n, 0), c);
        return p;
    }

    static MultiPolynomial variable_h(std::size_t n, std::size_t a)
    {
        Exponent e(2 * n, 0);
        e.at(a) = 1;
        MultiPolynomial p(n);
        p.add_term(e, 1);
        return p;
    }

    static MultiPolynomial variable_k(std::size_t n, std::size_t a)
    {
        Exponent e(2 * n, 0);
        e.at(n + a) = 1;
        MultiPolynomial p(n);
        p.add_term(e, 1);
        return p;
    }

    std::size_t n() const noexcept { return n_; }
    const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (e.size() != 2 * n_) throw Error(ErrorCode::DimensionMismatch, "exponent length must be 2n");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // -1 for the zero polynomial.
    long degree() const
    {
        long d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
        return d;
    }

    bool is_homogeneous() const
    {
        if (terms_.empty()) return true;
        const long d = total_degree(terms_.begin()->first);
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != d) return false;
        return true;
    }

    static long total_degree(const Exponent& e)
    {
        long d = 0;
        for (auto x : e) d += static_cast<long>(x);
        return d;
    }

    // d/dh_a for var < n, d/dk_{var-n} otherwise.
    MultiPolynomial partial(std::size_t var) const
    {
        MultiPolynomial out(n_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exponent f = e;
            --f[var];
            out.add_term(f, c * static_cast<long>(e[var]));
        }
        return out;
    }

    Rational evaluate(const std::vector<Rational>& point) const
    {
        if (point.size() != 2 * n_) throw Error(ErrorCode::DimensionMismatch, "evaluation point must have length 2n");
        Rational acc = 0;
        for (const auto& [e, c] : terms_) {
            Rational term = c;
            for (std::size_t v = 0; v < e.size(); ++v)
                for (unsigned p = 0; p < e[v]; ++p) term *= point[v];
            acc += term;
        }
        return acc;
    }

    MultiPolynomial& operator+=(const MultiPolynomial& o)
    {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    MultiPolynomial& operator-=(const MultiPolynomial& o)
    {
        require_same(o);
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend MultiPolynomial operator+(MultiPolynomial a, const MultiPolynomial& b) { return a += b; }
    friend MultiPolynomial operator-(MultiPolynomial a, const MultiPolynomial& b) { return a -= b; }

    friend MultiPolynomial operator*(const Rational& s, const MultiPolynomial& a)
    {
        MultiPolynomial out(a.n_);
        for (const auto& [e, c] : a.terms_) out.add_term(e, s * c);
        return out;
    }

    friend MultiPolynomial operator*(const MultiPolynomial& a, const MultiPolynomial& b)
    {
        a.require_same(b);
        MultiPolynomial out(a.n_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                for (std::size_t v = 0; v < e.size(); ++v) e[v] += eb[v];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const MultiPolynomial& a, const MultiPolynomial& b)
    {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    void require_same(const MultiPolynomial& o) const
    {
        if (o.n_ != n_) throw Error(ErrorCode::DimensionMismatch, "polynomials in different variable sets");
    }

    std::size_t n_ = 0;
    std::map<Exponent, Rational> terms_;
};

// {f, g} = sum_a (df/dh_a dg/dk_a - df/dk_a dg/dh_a)
inline MultiPolynomial poisson_bracket(const MultiPolynomial& f, const MultiPolynomial& g)
{
    if (f.n() != g.n()) throw Error(ErrorCode::DimensionMismatch, "poisson_bracket: variable mismatch");
    const std::size_t n = f.n();
    MultiPolynomial out(n);
    for (std::size_t a = 0; a < n; ++a) {
        out += f.partial(a) * g.partial(n + a);
        out -= f.partial(n + a) * g.partial(a);
    }
    return out;
}

// sum_a h_a^power (or k_a^power)
inline MultiPolynomial power_sum(std::size_t n, unsigned power, bool second_copy)
{
    MultiPolynomial p(n);
    for (std::size_t a = 0; a < n; ++a) {
        Exponent e(2 * n, 0);
        e[(second_copy ? n : 0) + a] = power;
        p.add_term(e, 1);
    }
    return p;
}

// "e1,e2,..." as used for JSON keys.
inline std::string exponent_key(const Exponent& e)
{
    std::string s;
    for (std::size_t v = 0; v < e.size(); ++v) {
        if (v) s += ',';
        s += std::to_string(e[v]);
    }
    return s;
}

inline Exponent parse_exponent_key(const std::string& key)
{
    Exponent e;
    std::size_t pos = 0;
    while (pos <= key.size()) {
        const auto comma = key.find(',', pos);
        const std::string part = key.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos) {
            throw Error(ErrorCode::ParseError, "malformed exponent key '" + key + "'");
        }
        e.push_back(static_cast<unsigned>(std::stoul(part)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return e;
}

} // namespace acv
