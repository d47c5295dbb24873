#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "acv/error.hpp"
#include "acv/scheme.hpp"
#include "acv/symplectic.hpp"
#include "acv/weyl.hpp"

namespace acv {

// Y_n = { i : p_k q_k = 0 for all k }. Ties (p_k = q_k = 0) are reported as P.
inline std::optional<SignVector> yn_membership(const PhaseVector& i)
{
    SignVector s{std::vector<Side>(i.n(), Side::P)};
    for (std::size_t k = 0; k < i.n(); ++k) {
        if (i.p()[k] != 0 && i.q()[k] != 0) return std::nullopt;
        if (i.p()[k] == 0 && i.q()[k] != 0) s.choice[k] = Side::Q;
    }
    return s;
}

// All 2^n components; bit k of the index selects Q at position k.
inline std::vector<SignVector> yn_components(std::size_t n)
{
    std::vector<SignVector> out;
    out.reserve(std::size_t{1} << n);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        SignVector s{std::vector<Side>(n, Side::P)};
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) s.choice[k] = Side::Q;
        out.push_back(std::move(s));
    }
    return out;
}

// Sign flip at k exchanges P and Q at k; the permutation part moves positions.
inline SignVector weyl_act(const SignedPermutation& w, const SignVector& s)
{
    if (w.n() != s.n()) throw Error(ErrorCode::DimensionMismatch, "weyl_act: rank mismatch");
    SignVector out{std::vector<Side>(s.n())};
    for (std::size_t k = 0; k < s.n(); ++k) {
        Side c = s.choice[w.perm[k]];
        if (w.signs[k] == -1) c = c == Side::P ? Side::Q : Side::P;
        out.choice[k] = c;
    }
    return out;
}

struct TransitivityReport {
    std::size_t n = 0;
    std::size_t component_count = 0;
    std::size_t group_order = 0;
    bool closed = false;           // every image lands in the component list
    bool simply_transitive = false; // exactly one element maps any component to any other
    bool free = false;             // nonidentity elements fix no component
    std::string detail;

    bool pass() const noexcept { return closed && simply_transitive && free; }
};

/*
 * Checks that the sign-flip subgroup {+-1}^n acts simply transitively on the
 * given component list by building the full action table.
 */
inline TransitivityReport check_simple_transitivity(std::size_t n, const std::vector<SignVector>& components)
{
    TransitivityReport rep;
    rep.n = n;
    rep.component_count = components.size();

    std::vector<SignedPermutation> flips;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        SignedPermutation w = SignedPermutation::identity(n);
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) w.signs[k] = -1;
        flips.push_back(std::move(w));
    }
    rep.group_order = flips.size();

    std::map<SignVector, std::size_t> index;
    for (std::size_t c = 0; c < components.size(); ++c) index.emplace(components[c], c);
    if (index.size() != components.size()) {
        rep.detail = "duplicate components";
        return rep;
    }

    rep.closed = true;
    rep.free = true;
    std::vector<std::vector<std::size_t>> hits(components.size(), std::vector<std::size_t>(components.size(), 0));
    for (const auto& w : flips) {
        for (std::size_t c = 0; c < components.size(); ++c) {
            const SignVector image = weyl_act(w, components[c]);
            auto it = index.find(image);
            if (it == index.end()) {
                rep.closed = false;
                rep.detail = "image " + to_string(image) + " of " + to_string(components[c]) + " is not listed";
                continue;
            }
            ++hits[c][it->second];
            if (it->second == c && !w.is_identity()) rep.free = false;
        }
    }
    rep.simply_transitive = rep.closed;
    for (const auto& row : hits)
        for (auto h : row)
            if (h != 1) rep.simply_transitive = false;
    if (rep.detail.empty() && !rep.pass()) rep.detail = "action table is not a bijection";
    return rep;
}

inline TransitivityReport weyl_transitivity_check(std::size_t n)
{
    return check_simple_transitivity(n, yn_components(n));
}

// Certified: sigma(i) lies outside image(ad x), by a rank jump of one.
inline bool escapes_ad_image(const SpElement& x, const PhaseVector& i)
{
    const ExactMatrix ad = ad_matrix(x);
    const std::size_t base = rank(ad);
    ExactMatrix extended(ad.rows(), ad.cols() + 1);
    const ExactVector s = sp_coords(sigma(i));
    for (std::size_t r = 0; r < ad.rows(); ++r) {
        for (std::size_t c = 0; c < ad.cols(); ++c) extended(r, c) = ad(r, c);
        extended(r, ad.cols()) = s[r];
    }
    return rank(extended) == base + 1;
}

/*
 * For regular Cartan x the image of ad(x) is the trace-orthogonal complement of
 * the Cartan, and sigma(i) pairs with diag(t, -t) to -2 sum t_k p_k q_k. Taking
 * p_1 = q_1 = 1 and everything else zero gives -2 t_1 != 0.
 */
inline PhaseVector min_orbit_escape_witness(const SpElement& x)
{
    const auto h = cartan_part(x);
    if (!h || !is_regular(*h)) {
        throw Error(ErrorCode::NotRegularCartan, "escape witness needs x = diag(t, -t) with t regular");
    }
    const std::size_t n = x.n();
    ExactVector p(n), q(n);
    p[0] = 1;
    q[0] = 1;
    PhaseVector i(x.space(), std::move(p), std::move(q));
    if (!escapes_ad_image(x, i)) {
        throw Error(ErrorCode::NotFound, "escape certificate failed for a regular Cartan element");
    }
    return i;
}

} // namespace acv
