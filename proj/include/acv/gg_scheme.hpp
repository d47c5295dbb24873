#pragma once

#include <cstddef>
#include <utility>

#include "acv/error.hpp"
#include "acv/matrix.hpp"

namespace acv {

/*
 * The GL-side scheme M_n = { (x, y, i, j) : [x, y] + i j = 0 } with x, y
 * traceless n x n, i a column and j a row. Only membership and the dimension
 * constants are provided here.
 */
struct GGPoint {
    std::size_t n = 0;
    ExactMatrix x;
    ExactMatrix y;
    ExactVector i;
    ExactVector j;

    GGPoint() = default;

    GGPoint(ExactMatrix x_, ExactMatrix y_, ExactVector i_, ExactVector j_)
        : n(x_.rows()), x(std::move(x_)), y(std::move(y_)), i(std::move(i_)), j(std::move(j_))
    {
        if (!x.is_square() || y.rows() != n || y.cols() != n || i.size() != n || j.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "GG point components must be n x n, n, n");
        }
        if (x.trace() != 0 || y.trace() != 0) {
            throw Error(ErrorCode::SchemaError, "x and y must be traceless");
        }
    }
};

inline ExactMatrix gg_moment_residual(const GGPoint& pt)
{
    ExactMatrix r = pt.x * pt.y - pt.y * pt.x;
    for (std::size_t a = 0; a < pt.n; ++a)
        for (std::size_t b = 0; b < pt.n; ++b) r(a, b) += pt.i[a] * pt.j[b];
    return r;
}

inline bool gg_is_member(const GGPoint& pt) { return gg_moment_residual(pt).is_zero(); }

// Every irreducible component of M_n has this dimension.
constexpr long gg_component_dim(long n) { return n * n + 2 * n - 2; }

constexpr long gg_component_count(long n) { return n + 1; }

// rank [x, y] >= 2 means no rank <= 1 term i j can cancel the commutator.
inline bool gg_commutator_uncancellable(const ExactMatrix& x, const ExactMatrix& y)
{
    return rank(x * y - y * x) >= 2;
}

} // namespace acv
