#pragma once

// Independent reference implementations used only by tests.

#include <random>
#include <vector>

#include "acv/matrix.hpp"
#include "acv/rational.hpp"

namespace oracle {

using acv::ExactMatrix;
using acv::Rational;

// Textbook Gaussian elimination directly over Q.
inline std::size_t naive_rank(ExactMatrix m)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(r, k), m(p, k));
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            const Rational f = m(i, c) / m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k) m(i, k) -= f * m(r, k);
        }
        ++r;
    }
    return r;
}

// Laplace expansion along the first row. Exponential; small matrices only.
inline Rational cofactor_det(const ExactMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m(0, 0);
    Rational det = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        ExactMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t k = 0, kk = 0; k < n; ++k)
                if (k != c) minor(r - 1, kk++) = m(r, k);
        const Rational term = m(0, c) * cofactor_det(minor);
        det += (c % 2 == 0) ? term : Rational(-term);
    }
    return det;
}

inline ExactMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound)
{
    std::uniform_int_distribution<long> dist(-bound, bound);
    ExactMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    return m;
}

// Rank-deficient by construction: product of rows x k and k x cols factors.
inline ExactMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t k, long bound)
{
    return random_matrix(rng, rows, k, bound) * random_matrix(rng, k, cols, bound);
}

} // namespace oracle
