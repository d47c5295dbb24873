#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "acv/symplectic.hpp"

namespace acv {

/*
 * Dimension bookkeeping for the slice G x^L (C^{2k} x prod M_{n_i} x X_{n_0})
 * at a closed orbit with Levi L = prod GL_{n_i} x Sp_{2 n_0}.
 */
struct LeviBookkeeping {
    long group_dim = 0;    // dim G = 2n^2 + n
    long levi_dim = 0;     // sum n_i^2 + 2 n_0^2 + n_0
    long center_dim = 0;   // 2k
    long gg_dims = 0;      // sum (n_i^2 + 2 n_i - 2)
    long x_n0_dim = 0;     // 2 n_0^2 + 3 n_0
    long total = 0;        // dim G/L + 2k + gg_dims + x_n0_dim
    long target = 0;       // 2n^2 + 3n
    long nilpotent_bound = 0; // same sum with each factor dimension lowered by one
};

inline LeviBookkeeping levi_bookkeeping(const LeviType& lt)
{
    const long n = static_cast<long>(lt.n());
    const long n0 = static_cast<long>(lt.n0);
    const long k = static_cast<long>(lt.k());
    LeviBookkeeping b;
    b.group_dim = 2 * n * n + n;
    b.levi_dim = 2 * n0 * n0 + n0;
    for (auto part : lt.parts) {
        const long m = static_cast<long>(part);
        b.levi_dim += m * m;
        b.gg_dims += m * m + 2 * m - 2;
    }
    b.center_dim = 2 * k;
    b.x_n0_dim = 2 * n0 * n0 + 3 * n0;
    b.total = (b.group_dim - b.levi_dim) + b.center_dim + b.gg_dims + b.x_n0_dim;
    b.target = 2 * n * n + 3 * n;
    b.nilpotent_bound = b.total - k - 1;
    return b;
}

inline bool levi_dimension_identity(const LeviType& lt)
{
    const auto b = levi_bookkeeping(lt);
    return b.total == b.target;
}

// The bound obtained by forcing every factor into its nilpotent locus stays below dim X_n.
inline bool levi_nilpotent_bound_holds(const LeviType& lt)
{
    const auto b = levi_bookkeeping(lt);
    return b.nilpotent_bound <= b.target - 1;
}

// Every (n0, partition of n - n0), parts in non-increasing order.
inline std::vector<LeviType> levi_types(std::size_t n)
{
    std::vector<LeviType> out;
    std::vector<std::size_t> parts;
    for (std::size_t n0 = 0; n0 <= n; ++n0) {
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t remaining, std::size_t max_part) {
            if (remaining == 0) {
                out.push_back(LeviType{n0, parts});
                return;
            }
            for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
                parts.push_back(p);
                rec(remaining - p, p);
                parts.pop_back();
            }
        };
        rec(n - n0, n - n0);
    }
    return out;
}

} // namespace acv
