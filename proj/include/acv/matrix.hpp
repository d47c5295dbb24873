#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "acv/error.hpp"
#include "acv/rational.hpp"

namespace acv {

using ExactVector = std::vector<Rational>;

/*
 * Dense row-major matrix over Q.
 *
 * Everything in the library (sp_2n elements, ad-matrices, Jacobians, change of
 * basis) is carried by this type. No attempt is made at asymptotic efficiency:
 * the sizes seen here are at most a few dozen rows.
 */
class ExactMatrix {
public:
    ExactMatrix() = default;

    ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries))
    {
        if (entries_.size() != rows_ * cols_) {
            throw Error(ErrorCode::DimensionMismatch, "entry count does not match rows x cols");
        }
    }

    ExactMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
        : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
    {
        entries_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) {
                throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
            }
            entries_.insert(entries_.end(), row.begin(), row.end());
        }
    }

    static ExactMatrix zero(std::size_t rows, std::size_t cols) { return ExactMatrix(rows, cols); }

    static ExactMatrix identity(std::size_t n)
    {
        ExactMatrix m(n, n);
        for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
        return m;
    }

    static ExactMatrix diagonal(std::span<const Rational> d)
    {
        ExactMatrix m(d.size(), d.size());
        for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
        return m;
    }

    static ExactMatrix column(std::span<const Rational> v)
    {
        return ExactMatrix(v.size(), 1, std::vector<Rational>(v.begin(), v.end()));
    }

    // Columns of the result are the given vectors.
    static ExactMatrix from_columns(std::span<const ExactVector> cols, std::size_t rows)
    {
        ExactMatrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].size() != rows) {
                throw Error(ErrorCode::DimensionMismatch, "column length mismatch");
            }
            for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    const std::vector<Rational>& entries() const noexcept { return entries_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    ExactVector row(std::size_t r) const
    {
        return ExactVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                           entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    }

    ExactVector col(std::size_t c) const
    {
        ExactVector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }

    bool is_zero() const
    {
        return std::all_of(entries_.begin(), entries_.end(), [](const Rational& q) { return q == 0; });
    }

    Rational trace() const
    {
        require_square("trace");
        Rational t = 0;
        for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
        return t;
    }

    ExactMatrix transpose() const
    {
        ExactMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    // Stacks `below` under this matrix.
    ExactMatrix vstack(const ExactMatrix& below) const
    {
        if (below.cols_ != cols_ && rows_ != 0 && below.rows_ != 0) {
            throw Error(ErrorCode::DimensionMismatch, "vstack column mismatch");
        }
        ExactMatrix out(rows_ + below.rows_, rows_ == 0 ? below.cols_ : cols_);
        std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
        std::copy(below.entries_.begin(), below.entries_.end(),
                  out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
        return out;
    }

    ExactMatrix& operator+=(const ExactMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
        return *this;
    }

    ExactMatrix& operator-=(const ExactMatrix& o)
    {
        require_same_shape(o);
        for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
        return *this;
    }

    ExactMatrix& operator*=(const Rational& s)
    {
        for (auto& e : entries_) e *= s;
        return *this;
    }

    friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
    friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
    friend ExactMatrix operator*(ExactMatrix a, const Rational& s) { return a *= s; }
    friend ExactMatrix operator*(const Rational& s, ExactMatrix a) { return a *= s; }
    friend ExactMatrix operator-(ExactMatrix a) { return a *= Rational(-1); }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b)
    {
        if (a.cols_ != b.rows_) {
            throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
        }
        ExactMatrix out(a.rows_, b.cols_);
        Rational tmp;
        for (std::size_t r = 0; r < a.rows_; ++r) {
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& lhs = a(r, k);
                if (lhs == 0) continue;
                for (std::size_t c = 0; c < b.cols_; ++c) {
                    if (b(k, c) == 0) continue;
                    tmp = lhs * b(k, c);
                    out(r, c) += tmp;
                }
            }
        }
        return out;
    }

    friend ExactVector operator*(const ExactMatrix& a, std::span<const Rational> v)
    {
        if (a.cols_ != v.size()) {
            throw Error(ErrorCode::DimensionMismatch, "matrix-vector shape mismatch");
        }
        ExactVector out(a.rows_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c)
                if (v[c] != 0) out[r] += a(r, c) * v[c];
        return out;
    }

    friend ExactVector operator*(const ExactMatrix& a, const ExactVector& v)
    {
        return a * std::span<const Rational>(v);
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    void require_same_shape(const ExactMatrix& o) const
    {
        if (o.rows_ != rows_ || o.cols_ != cols_) {
            throw Error(ErrorCode::DimensionMismatch, "shape mismatch");
        }
    }

    void require_square(const char* what) const
    {
        if (!is_square()) throw Error(ErrorCode::NotSquare, what);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

inline bool is_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q == 0; });
}

inline ExactVector scaled(std::span<const Rational> v, const Rational& s)
{
    ExactVector out(v.begin(), v.end());
    for (auto& e : out) e *= s;
    return out;
}

inline ExactVector added(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    ExactVector out(a.begin(), a.end());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += b[k];
    return out;
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b)
{
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector length mismatch");
    Rational s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Reduced row echelon form together with its pivot columns.
struct Echelon {
    ExactMatrix rref;
    std::vector<std::size_t> pivots;

    std::size_t rank() const noexcept { return pivots.size(); }
};

namespace detail {

// Multiply each row by the lcm of its denominators so elimination runs over Z.
inline std::vector<std::vector<Integer>> clear_denominators(const ExactMatrix& m)
{
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Integer l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
        }
    }
    return out;
}

} // namespace detail

/*
 * Fraction-free (Bareiss) forward elimination over the integers, followed by
 * rational back-substitution to reach reduced row echelon form.
 *
 * Every Bareiss division is exact, so intermediate entries stay bounded by
 * minors of the input.
 */
inline Echelon echelon(const ExactMatrix& m)
{
    auto a = detail::clear_denominators(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    std::vector<std::size_t> pivots;
    Integer prev = 1;
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && a[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);

        const Integer& piv = a[pivot_row][c];
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            const Integer factor = a[r][c];
            for (std::size_t k = c + 1; k < cols; ++k) {
                a[r][k] = (a[r][k] * piv - factor * a[pivot_row][k]);
                mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][c] = 0;
        }
        prev = a[pivot_row][c];
        pivots.push_back(c);
        ++pivot_row;
    }

    ExactMatrix rref(rows, cols);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const Integer& lead = a[r][pivots[r]];
        for (std::size_t c = pivots[r]; c < cols; ++c) {
            if (a[r][c] != 0) rref(r, c) = make_rational(a[r][c], lead);
        }
    }
    for (std::size_t r = pivots.size(); r-- > 0;) {
        const std::size_t pc = pivots[r];
        for (std::size_t above = 0; above < r; ++above) {
            const Rational factor = rref(above, pc);
            if (factor == 0) continue;
            for (std::size_t c = pc; c < cols; ++c) {
                if (rref(r, c) != 0) rref(above, c) -= factor * rref(r, c);
            }
        }
    }
    return Echelon{std::move(rref), std::move(pivots)};
}

inline std::size_t rank(const ExactMatrix& m) { return echelon(m).rank(); }

// Basis of the right kernel, one vector per free column (that entry set to 1).
inline std::vector<ExactVector> nullspace(const ExactMatrix& m)
{
    const Echelon e = echelon(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;

    std::vector<ExactVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ExactVector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.rref(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct AffineSolution {
    ExactVector particular;
    std::vector<ExactVector> kernel;
};

// Solves a * x = b. The particular solution has every free variable set to zero.
inline std::optional<AffineSolution> solve_affine(const ExactMatrix& a, std::span<const Rational> b)
{
    if (b.size() != a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "right-hand side length mismatch");
    }
    ExactMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const Echelon e = echelon(aug);
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) {
        return std::nullopt;
    }
    AffineSolution sol;
    sol.particular.assign(a.cols(), Rational(0));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        sol.particular[e.pivots[r]] = e.rref(r, a.cols());
    }
    sol.kernel = nullspace(a);
    return sol;
}

inline std::optional<ExactMatrix> inverse(const ExactMatrix& m)
{
    if (!m.is_square()) throw Error(ErrorCode::NotSquare, "inverse");
    const std::size_t n = m.rows();
    if (n == 0) return ExactMatrix();
    ExactMatrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    const Echelon e = echelon(aug);
    if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
    ExactMatrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.rref(r, n + c);
    return inv;
}

} // namespace acv
