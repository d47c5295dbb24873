#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/symplectic.hpp"

namespace acv {

/*
 * Element of the type C_n Weyl group S_n x| {+-1}^n.
 *
 * perm is 0-based internally (perm[k] in [0, n)); JSON uses 1-based indices.
 * Action on a Cartan vector: (w.t)_k = signs[k] * t[perm[k]].
 */
struct SignedPermutation {
    std::vector<std::size_t> perm;
    std::vector<int> signs;

    std::size_t n() const noexcept { return perm.size(); }

    static SignedPermutation identity(std::size_t n)
    {
        SignedPermutation w{std::vector<std::size_t>(n), std::vector<int>(n, 1)};
        std::iota(w.perm.begin(), w.perm.end(), std::size_t{0});
        return w;
    }

    static SignedPermutation flip(std::size_t n, std::size_t k)
    {
        SignedPermutation w = identity(n);
        w.signs.at(k) = -1;
        return w;
    }

    bool is_valid() const
    {
        if (signs.size() != perm.size()) return false;
        std::vector<bool> seen(perm.size(), false);
        for (auto p : perm) {
            if (p >= perm.size() || seen[p]) return false;
            seen[p] = true;
        }
        return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1 || s == -1; });
    }

    bool is_identity() const { return *this == identity(n()); }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

// (a * b).t = a.(b.t)
inline SignedPermutation compose(const SignedPermutation& a, const SignedPermutation& b)
{
    if (a.n() != b.n()) throw Error(ErrorCode::DimensionMismatch, "compose: rank mismatch");
    SignedPermutation out{std::vector<std::size_t>(a.n()), std::vector<int>(a.n())};
    for (std::size_t k = 0; k < a.n(); ++k) {
        out.perm[k] = b.perm[a.perm[k]];
        out.signs[k] = a.signs[k] * b.signs[a.perm[k]];
    }
    return out;
}

// All 2^n n! elements in a fixed order: permutations lexicographically, then sign masks.
inline std::vector<SignedPermutation> weyl_group(std::size_t n)
{
    std::vector<SignedPermutation> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    do {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            SignedPermutation w{perm, std::vector<int>(n, 1)};
            for (std::size_t k = 0; k < n; ++k)
                if (mask & (std::size_t{1} << k)) w.signs[k] = -1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline CartanPoint weyl_act(const SignedPermutation& w, const CartanPoint& h)
{
    if (w.n() != h.n()) throw Error(ErrorCode::DimensionMismatch, "weyl_act: rank mismatch");
    CartanPoint out{ExactVector(h.n())};
    for (std::size_t k = 0; k < h.n(); ++k) out.t[k] = w.signs[k] * h.t[w.perm[k]];
    return out;
}

using CartanPair = std::pair<CartanPoint, CartanPoint>;

// Diagonal action on h + h.
inline CartanPair weyl_act(const SignedPermutation& w, const CartanPair& pair)
{
    return {weyl_act(w, pair.first), weyl_act(w, pair.second)};
}

/*
 * Orbit representative of the diagonal W-action: each (a_k, b_k) is replaced by
 * the lexicographically larger of +-(a_k, b_k), then the pairs are sorted in
 * descending lexicographic order.
 */
inline CartanPair weyl_canonical_form(const CartanPair& pair)
{
    const std::size_t n = pair.first.n();
    if (pair.second.n() != n) throw Error(ErrorCode::DimensionMismatch, "canonical form: rank mismatch");
    std::vector<std::pair<Rational, Rational>> cols(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::pair<Rational, Rational> plus{pair.first.t[k], pair.second.t[k]};
        std::pair<Rational, Rational> minus{-pair.first.t[k], -pair.second.t[k]};
        cols[k] = plus >= minus ? plus : minus;
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    CartanPair out{CartanPoint{ExactVector(n)}, CartanPoint{ExactVector(n)}};
    for (std::size_t k = 0; k < n; ++k) {
        out.first.t[k] = cols[k].first;
        out.second.t[k] = cols[k].second;
    }
    return out;
}

/*
 * Monomial symplectic matrix g_w with g_w diag(t, -t) g_w^{-1} = diag(w.t, -w.t).
 *
 * Permutation part: P (+) P with P(k, perm[k]) = 1. A sign flip at k acts on the
 * (e_k, e_{n+k}) plane by [[0, 1], [-1, 0]], so (p_k, q_k) -> (q_k, -p_k).
 */
inline ExactMatrix weyl_matrix(const SignedPermutation& w)
{
    const std::size_t n = w.n();
    ExactMatrix perm(2 * n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        perm(k, w.perm[k]) = 1;
        perm(n + k, n + w.perm[k]) = 1;
    }
    ExactMatrix flip = ExactMatrix::identity(2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (w.signs[k] == -1) {
            flip(k, k) = 0;
            flip(n + k, n + k) = 0;
            flip(k, n + k) = 1;
            flip(n + k, k) = -1;
        }
    }
    return flip * perm;
}

inline PhaseVector weyl_act(const SignedPermutation& w, const PhaseVector& i)
{
    return PhaseVector::from_vector(i.space(), weyl_matrix(w) * i.vector());
}

} // namespace acv
