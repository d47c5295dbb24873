#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/polynomial.hpp"
#include "acv/scheme.hpp"
#include "acv/symplectic.hpp"

namespace acv {

inline std::size_t commutator_rank(const ExactMatrix& x, const ExactMatrix& y) { return rank(x * y - y * x); }

/*
 * Common eigenvector of x and y when rank [x, y] <= 1.
 *
 * Intersects ker(x - lambda) with ker(y - mu) over all pairs of rational
 * eigenvalues, in lexicographic order of (lambda, mu), and returns the first
 * kernel basis vector found. Existence for rank <= 1 commutators is a known
 * lemma; failing to find one is reported as NotFound.
 */
inline ExactVector common_eigenvector(const ExactMatrix& x, const ExactMatrix& y)
{
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows()) {
        throw Error(ErrorCode::NotSquare, "common_eigenvector expects square matrices of equal size");
    }
    if (commutator_rank(x, y) > 1) throw Error(ErrorCode::RankTooHigh, "rank [x, y] exceeds 1");

    const auto ex = rational_eigensystem(x);
    const auto ey = rational_eigensystem(y);
    const std::size_t d = x.rows();
    const ExactMatrix id = ExactMatrix::identity(d);
    for (const auto& a : ex) {
        for (const auto& b : ey) {
            const ExactMatrix stacked = (x - a.eigenvalue * id).vstack(y - b.eigenvalue * id);
            auto ker = nullspace(stacked);
            if (!ker.empty()) return ker.front();
        }
    }
    throw Error(ErrorCode::NotFound, "no common eigenvector for a pair with rank <= 1 commutator");
}

// Symplectic basis (e_1..e_m, f_1..f_m) of the span of `vectors`, which must be nondegenerate.
inline std::pair<std::vector<ExactVector>, std::vector<ExactVector>>
symplectic_gram_schmidt(const SymplecticSpace& space, std::vector<ExactVector> vectors)
{
    std::vector<ExactVector> es;
    std::vector<ExactVector> fs;
    while (!vectors.empty()) {
        ExactVector a = vectors.front();
        vectors.erase(vectors.begin());
        auto partner = std::find_if(vectors.begin(), vectors.end(),
                                    [&](const ExactVector& b) { return space.omega(a, b) != 0; });
        if (partner == vectors.end()) {
            throw Error(ErrorCode::SchemaError, "degenerate subspace in symplectic Gram-Schmidt");
        }
        ExactVector b = scaled(*partner, Rational(1) / space.omega(a, *partner));
        vectors.erase(partner);
        // u <- u + omega(b, u) a - omega(a, u) b makes u orthogonal to a and b.
        for (auto& u : vectors) {
            const Rational wb = space.omega(b, u);
            const Rational wa = space.omega(a, u);
            u = added(added(u, scaled(a, wb)), scaled(b, -wa));
        }
        es.push_back(std::move(a));
        fs.push_back(std::move(b));
    }
    return {std::move(es), std::move(fs)};
}

// Coordinates of u in the symplectic basis (e_1..e_m, f_1..f_m); u may carry an
// extra component along vectors orthogonal to the basis, which is dropped.
inline ExactVector symplectic_coords(const SymplecticSpace& space, const std::vector<ExactVector>& es,
                                     const std::vector<ExactVector>& fs, std::span<const Rational> u)
{
    const std::size_t m = es.size();
    ExactVector c(2 * m);
    for (std::size_t k = 0; k < m; ++k) {
        c[k] = space.omega(u, fs[k]);
        c[m + k] = -space.omega(u, es[k]);
    }
    return c;
}

struct SkewReduction {
    ExactMatrix x1;
    ExactMatrix y1;
    ExactVector partner;           // w with omega(v, w) = 1, orthogonal to the complement basis
    std::vector<ExactVector> sub_e; // symplectic basis of v^perp / <v>, realized inside v^perp
    std::vector<ExactVector> sub_f;
};

/*
 * Given a common eigenvector v of x, y in sp(J_m), realize v^perp / <v> as the
 * symplectic subspace {v, w}^perp for a partner w with omega(v, w) = 1, choose a
 * standard symplectic basis there, and return the induced operators.
 */
inline SkewReduction skew_reduce(const SymplecticSpace& space, const ExactMatrix& x, const ExactMatrix& y,
                                 const ExactVector& v)
{
    if (is_zero(v)) throw Error(ErrorCode::NotCommonEigenvector, "zero vector");
    auto eigen_check = [&](const ExactMatrix& m) {
        const ExactVector mv = m * v;
        std::size_t lead = 0;
        while (v[lead] == 0) ++lead;
        const Rational lambda = mv[lead] / v[lead];
        return mv == scaled(v, lambda);
    };
    if (!eigen_check(x) || !eigen_check(y)) {
        throw Error(ErrorCode::NotCommonEigenvector, "v is not an eigenvector of both operators");
    }

    const std::size_t d = space.dim();
    SkewReduction out;
    // Deterministic partner: first standard basis vector pairing nontrivially with v.
    for (std::size_t k = 0; k < d; ++k) {
        ExactVector e(d);
        e[k] = 1;
        const Rational w = space.omega(v, e);
        if (w != 0) {
            out.partner = scaled(e, Rational(1) / w);
            break;
        }
    }

    const ExactMatrix j = space.form();
    ExactMatrix constraints(2, d);
    const ExactVector vj = j.transpose() * v; // row v^T J as a column
    const ExactVector wj = j.transpose() * out.partner;
    for (std::size_t c = 0; c < d; ++c) {
        constraints(0, c) = vj[c];
        constraints(1, c) = wj[c];
    }
    auto [es, fs] = symplectic_gram_schmidt(space, nullspace(constraints));

    const std::size_t m = es.size();
    out.x1 = ExactMatrix(2 * m, 2 * m);
    out.y1 = ExactMatrix(2 * m, 2 * m);
    for (std::size_t c = 0; c < 2 * m; ++c) {
        const ExactVector& b = c < m ? es[c] : fs[c - m];
        const ExactVector xc = symplectic_coords(space, es, fs, x * b);
        const ExactVector yc = symplectic_coords(space, es, fs, y * b);
        for (std::size_t r = 0; r < 2 * m; ++r) {
            out.x1(r, c) = xc[r];
            out.y1(r, c) = yc[r];
        }
    }
    const SymplecticSpace sub(m);
    if (!satisfies_sp_relation(out.x1, sub) || !satisfies_sp_relation(out.y1, sub)) {
        throw Error(ErrorCode::SchemaError, "induced operators left sp for the reduced form");
    }
    if (commutator_rank(out.x1, out.y1) > commutator_rank(x, y)) {
        throw Error(ErrorCode::RankTooHigh, "commutator rank grew under reduction");
    }
    out.sub_e = std::move(es);
    out.sub_f = std::move(fs);
    return out;
}

// Standard Borel: [[A, B], [0, -A^T]], A upper triangular, B symmetric.
inline bool is_in_standard_borel(const SpElement& x)
{
    const std::size_t n = x.n();
    const ExactMatrix& m = x.mat();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (m(n + a, b) != 0) return false;
            if (a > b && m(a, b) != 0) return false;
        }
    }
    return true;
}

// dim of the standard Borel: n^2 + n.
inline std::size_t standard_borel_dim(std::size_t n)
{
    std::size_t count = 0;
    for (const auto& z : sp_basis(SymplecticSpace(n)))
        if (is_in_standard_borel(z)) ++count;
    return count;
}

struct BorelCertificate {
    ExactMatrix g; // x_conj = g x g^{-1}
    SpElement x_conj;
    SpElement y_conj;
    std::vector<ExactVector> flag; // v_1..v_n, the lagrangian flag preserved by x and y
};

namespace detail {

// Columns of the returned matrix form a symplectic basis (e_1..e_m, f_1..f_m) of the
// current space in which x and y are in the standard Borel.
inline ExactMatrix triangularizing_basis(const SymplecticSpace& space, const ExactMatrix& x, const ExactMatrix& y)
{
    const std::size_t m = space.n();
    if (m == 0) return ExactMatrix();
    const ExactVector v = common_eigenvector(x, y);
    const SkewReduction red = skew_reduce(space, x, y, v);
    const ExactMatrix sub = triangularizing_basis(SymplecticSpace(m - 1), red.x1, red.y1);

    // Lift the sub-basis: column c of `sub` holds coordinates in (sub_e, sub_f).
    const std::size_t d = space.dim();
    ExactMatrix basis(d, d);
    auto lift = [&](std::size_t c) {
        ExactVector u(d);
        for (std::size_t k = 0; k < m - 1; ++k) {
            u = added(u, scaled(red.sub_e[k], sub(k, c)));
            u = added(u, scaled(red.sub_f[k], sub(m - 1 + k, c)));
        }
        return u;
    };
    auto set_col = [&](std::size_t c, const ExactVector& u) {
        for (std::size_t r = 0; r < d; ++r) basis(r, c) = u[r];
    };
    set_col(0, v);
    set_col(m, red.partner);
    for (std::size_t k = 0; k + 1 < m; ++k) {
        set_col(1 + k, lift(k));
        set_col(m + 1 + k, lift(m - 1 + k));
    }
    return basis;
}

} // namespace detail

/*
 * Conjugates a pair with rank [x, y] <= 1 into the standard Borel by a rational
 * symplectic matrix. The flag is built from successive common eigenvectors in
 * the skew-orthogonal reductions.
 */
inline BorelCertificate symplectic_triangularize(const SpElement& x, const SpElement& y)
{
    x.require_same(y);
    if (commutator_rank(x.mat(), y.mat()) > 1) throw Error(ErrorCode::RankTooHigh, "rank [x, y] exceeds 1");
    const SymplecticSpace& space = x.space();
    const ExactMatrix basis = detail::triangularizing_basis(space, x.mat(), y.mat());
    if (!is_symplectic_matrix(basis, space)) {
        throw Error(ErrorCode::SchemaError, "constructed basis is not symplectic");
    }
    BorelCertificate cert;
    cert.g = symplectic_inverse(basis, space);
    cert.x_conj = conjugate(cert.g, x, basis);
    cert.y_conj = conjugate(cert.g, y, basis);
    for (std::size_t k = 0; k < space.n(); ++k) cert.flag.push_back(basis.col(k));
    if (!is_in_standard_borel(cert.x_conj) || !is_in_standard_borel(cert.y_conj)) {
        throw Error(ErrorCode::NotFound, "conjugates are not in the standard Borel");
    }
    return cert;
}

struct CertificateCheck {
    bool ok = true;
    std::vector<std::string> violations;

    void fail(std::string what)
    {
        ok = false;
        violations.push_back(std::move(what));
    }
};

/*
 * Re-checks a certificate from scratch. When x and y are given, the conjugation
 * relation x_conj = g x g^{-1} is checked too.
 */
inline CertificateCheck verify_borel_certificate(const SymplecticSpace& space, const ExactMatrix& g,
                                                 const ExactMatrix& x_conj, const ExactMatrix& y_conj,
                                                 const std::vector<ExactVector>& flag,
                                                 const ExactMatrix* x = nullptr, const ExactMatrix* y = nullptr)
{
    CertificateCheck check;
    if (!is_symplectic_matrix(g, space)) {
        check.fail("g is not symplectic: g^T J g != J");
        return check;
    }
    const ExactMatrix g_inv = symplectic_inverse(g, space);
    for (const auto* m : {&x_conj, &y_conj}) {
        const char* name = m == &x_conj ? "x_conj" : "y_conj";
        if (!satisfies_sp_relation(*m, space)) {
            check.fail(std::string(name) + " is not in sp_2n");
            continue;
        }
        if (!is_in_standard_borel(SpElement(space, *m))) check.fail(std::string(name) + " is not in the standard Borel");
    }
    if (x && g * *x * g_inv != x_conj) check.fail("x_conj != g x g^-1");
    if (y && g * *y * g_inv != y_conj) check.fail("y_conj != g y g^-1");

    if (flag.size() != space.n()) {
        check.fail("flag must have n vectors");
        return check;
    }
    for (std::size_t k = 0; k < flag.size(); ++k) {
        if (flag[k].size() != space.dim()) {
            check.fail("flag vector has wrong length");
            return check;
        }
        if (flag[k] != g_inv.col(k)) check.fail("flag vector " + std::to_string(k + 1) + " is not g^-1 e_k");
        for (std::size_t l = 0; l < flag.size(); ++l) {
            if (space.omega(flag[k], flag[l]) != 0) check.fail("flag is not isotropic");
        }
    }
    if (rank(ExactMatrix::from_columns(flag, space.dim())) != flag.size()) check.fail("flag vectors are dependent");
    return check;
}

inline CertificateCheck verify_borel_certificate(const BorelCertificate& cert, const SpElement& x, const SpElement& y)
{
    return verify_borel_certificate(x.space(), cert.g, cert.x_conj.mat(), cert.y_conj.mat(), cert.flag, &x.mat(),
                                    &y.mat());
}

enum class OrbitReason { IsNonzero, NotCommuting, XNotSemisimple, YNotSemisimple };

inline const char* to_string(OrbitReason r)
{
    switch (r) {
    case OrbitReason::IsNonzero: return "i != 0";
    case OrbitReason::NotCommuting: return "[x,y] != 0";
    case OrbitReason::XNotSemisimple: return "x not semisimple";
    case OrbitReason::YNotSemisimple: return "y not semisimple";
    }
    return "?";
}

struct OrbitClassification {
    bool closed = false;
    std::vector<OrbitReason> reasons; // empty iff closed
};

// Closed iff i = 0, [x, y] = 0 and both x and y are semisimple.
inline OrbitClassification classify_closed_orbit(const ACVPoint& pt)
{
    if (!is_member(pt)) throw Error(ErrorCode::NotOnVariety, "classify_closed_orbit needs a point of X_n");
    OrbitClassification out;
    if (!pt.i.is_zero()) out.reasons.push_back(OrbitReason::IsNonzero);
    if (!bracket(pt.x, pt.y).is_zero()) out.reasons.push_back(OrbitReason::NotCommuting);
    if (!is_semisimple(pt.x.mat())) out.reasons.push_back(OrbitReason::XNotSemisimple);
    if (!is_semisimple(pt.y.mat())) out.reasons.push_back(OrbitReason::YNotSemisimple);
    out.closed = out.reasons.empty();
    return out;
}

} // namespace acv
