#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/rational.hpp"

namespace acv {

/*
 * C^{2n} with the fixed form J = [[0, I_n], [-I_n, 0]], omega(u, v) = u^T J v.
 *
 * Coordinates are (p_1..p_n, q_1..q_n): the first n basis vectors span a
 * lagrangian subspace, as do the last n.
 */
class SymplecticSpace {
public:
    SymplecticSpace() = default;
    explicit SymplecticSpace(std::size_t n) : n_(n) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t dim() const noexcept { return 2 * n_; }

    // dim sp_2n
    std::size_t algebra_dim() const noexcept { return 2 * n_ * n_ + n_; }

    ExactMatrix form() const
    {
        ExactMatrix j(dim(), dim());
        for (std::size_t k = 0; k < n_; ++k) {
            j(k, n_ + k) = 1;
            j(n_ + k, k) = -1;
        }
        return j;
    }

    Rational omega(std::span<const Rational> u, std::span<const Rational> v) const
    {
        if (u.size() != dim() || v.size() != dim()) {
            throw Error(ErrorCode::DimensionMismatch, "omega expects vectors of length 2n");
        }
        Rational s = 0;
        for (std::size_t k = 0; k < n_; ++k) s += u[k] * v[n_ + k] - u[n_ + k] * v[k];
        return s;
    }

    friend bool operator==(const SymplecticSpace&, const SymplecticSpace&) = default;

private:
    std::size_t n_ = 0;
};

inline bool is_symplectic_matrix(const ExactMatrix& g, const SymplecticSpace& space)
{
    if (g.rows() != space.dim() || g.cols() != space.dim()) return false;
    const ExactMatrix j = space.form();
    return g.transpose() * j * g == j;
}

// Inverse of a symplectic matrix: -J g^T J.
inline ExactMatrix symplectic_inverse(const ExactMatrix& g, const SymplecticSpace& space)
{
    const ExactMatrix j = space.form();
    return -(j * g.transpose() * j);
}

inline bool satisfies_sp_relation(const ExactMatrix& m, const SymplecticSpace& space)
{
    if (m.rows() != space.dim() || m.cols() != space.dim()) return false;
    const ExactMatrix j = space.form();
    return (m.transpose() * j + j * m).is_zero();
}

// An element of sp_2n: a 2n x 2n matrix with mat^T J + J mat = 0.
class SpElement {
public:
    SpElement() = default;

    SpElement(SymplecticSpace space, ExactMatrix mat) : space_(space), mat_(std::move(mat))
    {
        if (!satisfies_sp_relation(mat_, space_)) {
            throw Error(ErrorCode::SchemaError, "matrix is not in sp_2n for the standard form");
        }
    }

    static SpElement zero(SymplecticSpace space)
    {
        return SpElement(space, ExactMatrix::zero(space.dim(), space.dim()), Unchecked{});
    }

    const SymplecticSpace& space() const noexcept { return space_; }
    const ExactMatrix& mat() const noexcept { return mat_; }
    std::size_t n() const noexcept { return space_.n(); }
    bool is_zero() const { return mat_.is_zero(); }

    friend SpElement operator+(const SpElement& a, const SpElement& b)
    {
        a.require_same(b);
        return SpElement(a.space_, a.mat_ + b.mat_, Unchecked{});
    }

    friend SpElement operator-(const SpElement& a, const SpElement& b)
    {
        a.require_same(b);
        return SpElement(a.space_, a.mat_ - b.mat_, Unchecked{});
    }

    friend SpElement operator*(const Rational& s, const SpElement& a) { return SpElement(a.space_, s * a.mat_, Unchecked{}); }

    friend bool operator==(const SpElement& a, const SpElement& b) { return a.space_ == b.space_ && a.mat_ == b.mat_; }

    void require_same(const SpElement& o) const
    {
        if (!(o.space_ == space_)) throw Error(ErrorCode::SpaceMismatch, "sp elements live in different spaces");
    }

    // Closed operations (sums, brackets, conjugates) skip the membership check.
    struct Unchecked {};
    SpElement(SymplecticSpace space, ExactMatrix mat, Unchecked) : space_(space), mat_(std::move(mat)) {}

private:
    SymplecticSpace space_;
    ExactMatrix mat_;
};

// The vector i in Darboux coordinates (p, q).
class PhaseVector {
public:
    PhaseVector() = default;

    PhaseVector(SymplecticSpace space, ExactVector p, ExactVector q) : space_(space), p_(std::move(p)), q_(std::move(q))
    {
        if (p_.size() != space_.n() || q_.size() != space_.n()) {
            throw Error(ErrorCode::DimensionMismatch, "phase vector halves must have length n");
        }
    }

    static PhaseVector zero(SymplecticSpace space)
    {
        return PhaseVector(space, ExactVector(space.n()), ExactVector(space.n()));
    }

    static PhaseVector from_vector(SymplecticSpace space, std::span<const Rational> v)
    {
        if (v.size() != space.dim()) throw Error(ErrorCode::DimensionMismatch, "expected a vector of length 2n");
        const auto n = static_cast<std::ptrdiff_t>(space.n());
        return PhaseVector(space, ExactVector(v.begin(), v.begin() + n), ExactVector(v.begin() + n, v.end()));
    }

    const SymplecticSpace& space() const noexcept { return space_; }
    const ExactVector& p() const noexcept { return p_; }
    const ExactVector& q() const noexcept { return q_; }
    std::size_t n() const noexcept { return space_.n(); }

    ExactVector vector() const
    {
        ExactVector v = p_;
        v.insert(v.end(), q_.begin(), q_.end());
        return v;
    }

    bool is_zero() const { return acv::is_zero(p_) && acv::is_zero(q_); }

    friend bool operator==(const PhaseVector&, const PhaseVector&) = default;

private:
    SymplecticSpace space_;
    ExactVector p_;
    ExactVector q_;
};

// t = (t_1..t_n) standing for diag(t_1..t_n, -t_1..-t_n).
struct CartanPoint {
    ExactVector t;

    std::size_t n() const noexcept { return t.size(); }
    friend bool operator==(const CartanPoint&, const CartanPoint&) = default;
    friend auto operator<=>(const CartanPoint& a, const CartanPoint& b) { return a.t <=> b.t; }
};

// A Levi subgroup GL_{n_1} x ... x GL_{n_k} x Sp_{2 n_0}.
struct LeviType {
    std::size_t n0 = 0;
    std::vector<std::size_t> parts;

    std::size_t n() const noexcept
    {
        std::size_t s = n0;
        for (auto p : parts) s += p;
        return s;
    }
    std::size_t k() const noexcept { return parts.size(); }
};

/*
 * Basis of sp_2n, size 2n^2 + n. Elements have block form [[A, B], [C, -A^T]]
 * with B, C symmetric. Ordering:
 *   A-units E_ab (row-major),
 *   B-units for a <= b (upper triangle, row-major),
 *   C-units for a <= b (upper triangle, row-major).
 * Coordinates in this basis are read straight off the entries A_ab, B_ab, C_ab.
 */
inline std::vector<SpElement> sp_basis(const SymplecticSpace& space)
{
    const std::size_t n = space.n();
    const std::size_t d = space.dim();
    std::vector<SpElement> basis;
    basis.reserve(space.algebra_dim());
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            ExactMatrix m(d, d);
            m(a, b) = 1;
            m(n + b, n + a) = -1;
            basis.emplace_back(space, std::move(m), SpElement::Unchecked{});
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            ExactMatrix m(d, d);
            m(a, n + b) = 1;
            m(b, n + a) = 1;
            basis.emplace_back(space, std::move(m), SpElement::Unchecked{});
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            ExactMatrix m(d, d);
            m(n + a, b) = 1;
            m(n + b, a) = 1;
            basis.emplace_back(space, std::move(m), SpElement::Unchecked{});
        }
    }
    return basis;
}

inline ExactVector sp_coords(const SpElement& x)
{
    const std::size_t n = x.n();
    const ExactMatrix& m = x.mat();
    ExactVector c;
    c.reserve(x.space().algebra_dim());
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) c.push_back(m(a, b));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) c.push_back(m(a, n + b));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) c.push_back(m(n + a, b));
    return c;
}

inline SpElement sp_from_coords(const SymplecticSpace& space, std::span<const Rational> coords)
{
    if (coords.size() != space.algebra_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "coordinate vector must have length 2n^2+n");
    }
    const std::size_t n = space.n();
    ExactMatrix m(space.dim(), space.dim());
    std::size_t k = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b, ++k) {
            m(a, b) = coords[k];
            m(n + b, n + a) = -coords[k];
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b, ++k) {
            m(a, n + b) = coords[k];
            m(b, n + a) = coords[k];
        }
    }
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b, ++k) {
            m(n + a, b) = coords[k];
            m(n + b, a) = coords[k];
        }
    }
    return SpElement(space, std::move(m), SpElement::Unchecked{});
}

inline SpElement bracket(const SpElement& x, const SpElement& y)
{
    x.require_same(y);
    return SpElement(x.space(), x.mat() * y.mat() - y.mat() * x.mat(), SpElement::Unchecked{});
}

// v -> omega(u, v) w + omega(w, v) u, i.e. the polarization of sigma.
inline SpElement sigma_polar(const PhaseVector& u, const PhaseVector& w)
{
    if (!(u.space() == w.space())) throw Error(ErrorCode::SpaceMismatch, "sigma_polar");
    const SymplecticSpace& space = u.space();
    const ExactMatrix j = space.form();
    const ExactMatrix uc = ExactMatrix::column(u.vector());
    const ExactMatrix wc = ExactMatrix::column(w.vector());
    ExactMatrix m = wc * (uc.transpose() * j) + uc * (wc.transpose() * j);
    return SpElement(space, std::move(m), SpElement::Unchecked{});
}

// i^2 viewed in sp_2n: the rank <= 1 operator v -> omega(i, v) i, no extra scale.
inline SpElement sigma(const PhaseVector& i)
{
    const ExactMatrix j = i.space().form();
    const ExactMatrix ic = ExactMatrix::column(i.vector());
    return SpElement(i.space(), ic * (ic.transpose() * j), SpElement::Unchecked{});
}

inline Rational trace_form(const SpElement& a, const SpElement& b)
{
    a.require_same(b);
    Rational t = 0;
    const std::size_t d = a.space().dim();
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) t += a.mat()(r, c) * b.mat()(c, r);
    return t;
}

inline SpElement cartan_embed(const CartanPoint& h)
{
    const SymplecticSpace space(h.n());
    ExactMatrix m(space.dim(), space.dim());
    for (std::size_t k = 0; k < h.n(); ++k) {
        m(k, k) = h.t[k];
        m(h.n() + k, h.n() + k) = -h.t[k];
    }
    return SpElement(space, std::move(m), SpElement::Unchecked{});
}

// No root of type C_n vanishes: t_k != 0 and t_k != +-t_l for k != l.
inline bool is_regular(const CartanPoint& h)
{
    for (std::size_t k = 0; k < h.n(); ++k) {
        if (h.t[k] == 0) return false;
        for (std::size_t l = k + 1; l < h.n(); ++l) {
            if (h.t[k] == h.t[l] || h.t[k] == -h.t[l]) return false;
        }
    }
    return true;
}

// Recovers t when x = diag(t, -t), otherwise nothing.
inline std::optional<CartanPoint> cartan_part(const SpElement& x)
{
    const std::size_t n = x.n();
    const ExactMatrix& m = x.mat();
    CartanPoint h{ExactVector(n)};
    for (std::size_t r = 0; r < 2 * n; ++r) {
        for (std::size_t c = 0; c < 2 * n; ++c) {
            if (r != c && m(r, c) != 0) return std::nullopt;
        }
    }
    for (std::size_t k = 0; k < n; ++k) h.t[k] = m(k, k);
    return h;
}

// Matrix of z -> [x, z] in sp_basis coordinates.
inline ExactMatrix ad_matrix(const SpElement& x)
{
    const auto basis = sp_basis(x.space());
    std::vector<ExactVector> cols;
    cols.reserve(basis.size());
    for (const auto& z : basis) cols.push_back(sp_coords(bracket(x, z)));
    return ExactMatrix::from_columns(cols, basis.size());
}

// Gram matrix of trace_form on sp_basis.
inline ExactMatrix trace_gram(const SymplecticSpace& space)
{
    const auto basis = sp_basis(space);
    ExactMatrix g(basis.size(), basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b) g(a, b) = trace_form(basis[a], basis[b]);
    return g;
}

inline SpElement conjugate(const ExactMatrix& g, const SpElement& x, const ExactMatrix& g_inv)
{
    return SpElement(x.space(), g * x.mat() * g_inv, SpElement::Unchecked{});
}

} // namespace acv
