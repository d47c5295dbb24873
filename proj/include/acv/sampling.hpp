#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "acv/components.hpp"
#include "acv/scheme.hpp"
#include "acv/symplectic.hpp"

namespace acv {

// Integer ranges used for every random draw. Small ranges keep coefficients small.
struct SamplingRanges {
    long cartan = 6;      // t_k in [-6, 6], rejected until regular
    long free_coord = 4;  // nonzero, in [-4, 4]
    long fiber = 4;       // [-4, 4]
    long conjugator = 2;  // entries of symmetric/unipotent factors, [-2, 2]
};

inline constexpr SamplingRanges default_ranges{};

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Per-trial generator; depends only on (seed, trial).
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial)
{
    return std::mt19937_64(splitmix64(seed ^ splitmix64(trial + 1)));
}

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline long uniform_nonzero(std::mt19937_64& rng, long bound)
{
    long v = 0;
    while (v == 0) v = uniform(rng, -bound, bound);
    return v;
}

inline CartanPoint random_cartan(std::mt19937_64& rng, std::size_t n, long bound)
{
    CartanPoint h{ExactVector(n)};
    for (auto& t : h.t) t = uniform(rng, -bound, bound);
    return h;
}

inline CartanPoint random_regular_cartan(std::mt19937_64& rng, std::size_t n, long bound = default_ranges.cartan)
{
    while (true) {
        CartanPoint h = random_cartan(rng, n, bound);
        if (is_regular(h)) return h;
    }
}

inline SignVector random_sign_vector(std::mt19937_64& rng, std::size_t n)
{
    SignVector s{std::vector<Side>(n)};
    for (auto& c : s.choice) c = uniform(rng, 0, 1) == 0 ? Side::P : Side::Q;
    return s;
}

struct SampleParams {
    CartanPoint t;
    SignVector sign;
    ExactVector free_coords;
    CartanPoint fiber;
};

inline SampleParams random_sample_params(std::mt19937_64& rng, std::size_t n,
                                         const SamplingRanges& ranges = default_ranges)
{
    SampleParams p;
    p.t = random_regular_cartan(rng, n, ranges.cartan);
    p.sign = random_sign_vector(rng, n);
    p.free_coords.resize(n);
    for (auto& c : p.free_coords) c = uniform_nonzero(rng, ranges.free_coord);
    p.fiber = random_cartan(rng, n, ranges.fiber);
    return p;
}

inline ACVPoint sample_point(std::size_t n, const SampleParams& p)
{
    return sample_regular_point(n, p.t, p.sign, p.free_coords, p.fiber);
}

/*
 * Random integral symplectic matrix with integral inverse: a product
 * [[I, S1], [0, I]] [[I, 0], [S2, I]] [[U, 0], [0, U^-T]] [[I, S3], [0, I]]
 * with S_i symmetric and U unipotent upper triangular.
 */
inline ExactMatrix random_symplectic(std::mt19937_64& rng, std::size_t n, long bound = default_ranges.conjugator)
{
    auto symmetric_block = [&](bool upper) {
        ExactMatrix m = ExactMatrix::identity(2 * n);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a; b < n; ++b) {
                const long v = uniform(rng, -bound, bound);
                if (upper) {
                    m(a, n + b) = v;
                    m(b, n + a) = v;
                } else {
                    m(n + a, b) = v;
                    m(n + b, a) = v;
                }
            }
        }
        return m;
    };
    ExactMatrix u = ExactMatrix::identity(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) u(a, b) = uniform(rng, -bound, bound);
    const ExactMatrix u_inv_t = inverse(u)->transpose();
    ExactMatrix levi(2 * n, 2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            levi(a, b) = u(a, b);
            levi(n + a, n + b) = u_inv_t(a, b);
        }
    }
    return symmetric_block(true) * symmetric_block(false) * levi * symmetric_block(true);
}

} // namespace acv
