#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/matrix.hpp"
#include "acv/symplectic.hpp"

namespace acv {

// A triple (x, y, i) in sp_2n + sp_2n + C^2n.
struct ACVPoint {
    SpElement x;
    SpElement y;
    PhaseVector i;

    ACVPoint() = default;

    ACVPoint(SpElement x_, SpElement y_, PhaseVector i_) : x(std::move(x_)), y(std::move(y_)), i(std::move(i_))
    {
        if (!(x.space() == y.space()) || !(x.space() == i.space())) {
            throw Error(ErrorCode::SpaceMismatch, "point components live in different spaces");
        }
    }

    static ACVPoint origin(const SymplecticSpace& space)
    {
        return ACVPoint(SpElement::zero(space), SpElement::zero(space), PhaseVector::zero(space));
    }

    const SymplecticSpace& space() const noexcept { return x.space(); }
    std::size_t n() const noexcept { return x.n(); }

    friend bool operator==(const ACVPoint&, const ACVPoint&) = default;
};

// mu(x, y, i) = [x, y] + sigma(i)
inline SpElement moment_residual(const ACVPoint& pt)
{
    pt.x.require_same(pt.y);
    if (!(pt.x.space() == pt.i.space())) throw Error(ErrorCode::SpaceMismatch, "moment_residual");
    return bracket(pt.x, pt.y) + sigma(pt.i);
}

inline bool is_member(const ACVPoint& pt) { return moment_residual(pt).is_zero(); }

// A point whose membership has been checked exactly. Only certify() makes one.
class CertifiedPoint {
public:
    const ACVPoint& point() const noexcept { return pt_; }

    friend std::optional<CertifiedPoint> certify(const ACVPoint& pt);

private:
    explicit CertifiedPoint(ACVPoint pt) : pt_(std::move(pt)) {}
    ACVPoint pt_;
};

inline std::optional<CertifiedPoint> certify(const ACVPoint& pt)
{
    if (!is_member(pt)) return std::nullopt;
    return CertifiedPoint(pt);
}

/*
 * Differential of mu at pt in sp_basis coordinates:
 *   (dx, dy, di) -> [dx, y] + [x, dy] + sigma_polar(i, di).
 * Columns: dx over sp_basis, then dy over sp_basis, then di over e_1..e_2n.
 */
inline ExactMatrix jacobian_mu(const ACVPoint& pt)
{
    const SymplecticSpace& space = pt.space();
    const auto basis = sp_basis(space);
    std::vector<ExactVector> cols;
    cols.reserve(2 * basis.size() + space.dim());
    for (const auto& z : basis) cols.push_back(sp_coords(bracket(z, pt.y)));
    for (const auto& z : basis) cols.push_back(sp_coords(bracket(pt.x, z)));
    for (std::size_t k = 0; k < space.dim(); ++k) {
        ExactVector e(space.dim());
        e[k] = 1;
        cols.push_back(sp_coords(sigma_polar(pt.i, PhaseVector::from_vector(space, e))));
    }
    return ExactMatrix::from_columns(cols, basis.size());
}

// Dimension of {z in sp_2n : [z, x] = 0, [z, y] = 0, z i = 0}.
inline std::size_t stabilizer_dim(const ACVPoint& pt)
{
    const SymplecticSpace& space = pt.space();
    const auto basis = sp_basis(space);
    const std::size_t dim = basis.size();
    const ExactVector iv = pt.i.vector();
    ExactMatrix system(2 * dim + space.dim(), dim);
    for (std::size_t c = 0; c < dim; ++c) {
        const ExactVector cx = sp_coords(bracket(basis[c], pt.x));
        const ExactVector cy = sp_coords(bracket(basis[c], pt.y));
        const ExactVector zi = basis[c].mat() * iv;
        for (std::size_t r = 0; r < dim; ++r) {
            system(r, c) = cx[r];
            system(dim + r, c) = cy[r];
        }
        for (std::size_t r = 0; r < space.dim(); ++r) system(2 * dim + r, c) = zi[r];
    }
    return dim - rank(system);
}

struct DimensionCertificate {
    ACVPoint point;
    std::size_t jacobian_rank = 0;
    std::size_t ambient_dim = 0;
    std::size_t expected_variety_dim = 0;
    std::size_t stabilizer_dim = 0;

    std::size_t algebra_dim() const noexcept { return point.space().algebra_dim(); }

    // Full-rank differential: a smooth point of a complete intersection.
    bool is_smooth() const noexcept { return jacobian_rank == algebra_dim(); }

    // ambient - rank; meaningful as the local dimension only when is_smooth().
    std::size_t local_dim() const noexcept { return ambient_dim - jacobian_rank; }
};

inline DimensionCertificate dimension_certificate(const ACVPoint& pt)
{
    if (!is_member(pt)) {
        throw Error(ErrorCode::NotOnVariety, "moment map residual [x,y]+i^2 is nonzero");
    }
    const std::size_t n = pt.n();
    DimensionCertificate cert;
    cert.point = pt;
    cert.jacobian_rank = rank(jacobian_mu(pt));
    cert.ambient_dim = 2 * pt.space().algebra_dim() + 2 * n;
    cert.expected_variety_dim = 2 * n * n + 3 * n;
    cert.stabilizer_dim = stabilizer_dim(pt);
    return cert;
}

enum class Side { P, Q };

// For each k, which Darboux coordinate is allowed to be nonzero on the component.
struct SignVector {
    std::vector<Side> choice;

    std::size_t n() const noexcept { return choice.size(); }

    static SignVector all_p(std::size_t n) { return SignVector{std::vector<Side>(n, Side::P)}; }

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend auto operator<=>(const SignVector&, const SignVector&) = default;
};

inline std::string to_string(const SignVector& s)
{
    std::string out;
    for (auto c : s.choice) out += c == Side::P ? 'P' : 'Q';
    return out;
}

// Solves [x, y] = -sigma(i) for y with zero Cartan component.
inline std::optional<SpElement> solve_for_y(const SpElement& x, const PhaseVector& i)
{
    const ExactVector rhs = sp_coords(Rational(-1) * sigma(i));
    const auto sol = solve_affine(ad_matrix(x), rhs);
    if (!sol) return std::nullopt;
    return sp_from_coords(x.space(), sol->particular);
}

/*
 * Point of X_n over a regular Cartan x = diag(t, -t):
 *   i has free_coords[k] in p_k (sign P) or q_k (sign Q), the other coordinate 0;
 *   y = y0 + cartan_embed(fiber), where [x, y0] = -sigma(i) and y0 has no Cartan part.
 * The Cartan shift parametrizes the n-dimensional affine fiber over (x, i).
 */
inline ACVPoint sample_regular_point(std::size_t n, const CartanPoint& t, const SignVector& sign,
                                     std::span<const Rational> free_coords, const CartanPoint& fiber)
{
    if (t.n() != n || sign.n() != n || free_coords.size() != n || fiber.n() != n) {
        throw Error(ErrorCode::DimensionMismatch, "sampler arguments must all have length n");
    }
    if (!is_regular(t)) throw Error(ErrorCode::NotRegular, "Cartan parameter is not regular");

    const SymplecticSpace space(n);
    ExactVector p(n), q(n);
    for (std::size_t k = 0; k < n; ++k) {
        (sign.choice[k] == Side::P ? p : q)[k] = free_coords[k];
    }
    const PhaseVector i(space, std::move(p), std::move(q));
    const SpElement x = cartan_embed(t);
    auto y0 = solve_for_y(x, i);
    if (!y0) {
        // Image of ad(x) is the trace-orthogonal complement of the Cartan, which
        // contains sigma(i) whenever every p_k q_k vanishes.
        throw Error(ErrorCode::NoSolution, "[x, y] = -sigma(i) unsolvable for regular x and i in Y_n");
    }
    return ACVPoint(x, *y0 + cartan_embed(fiber), i);
}

// x = diag(t, -t), all p_k = 1, all q_k = 0, y solved with zero Cartan part.
inline ACVPoint witness_point(std::size_t n, const CartanPoint& t)
{
    const std::vector<Rational> ones(n, Rational(1));
    return sample_regular_point(n, t, SignVector::all_p(n), ones, CartanPoint{ExactVector(n)});
}

} // namespace acv
