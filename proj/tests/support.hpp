#pragma once

#include "heightlab/common.hpp"
#include "heightlab/poly.hpp"
#include "heightlab/snfun.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using heightlab::CenteredVector;
using heightlab::ExponentVector;
using heightlab::IntPoly;

inline std::mt19937_64 make_rng(std::uint64_t seed)
{
    return std::mt19937_64(seed);
}

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small random rationals shifted to sum to zero; never the zero vector.
inline CenteredVector random_centered(std::mt19937_64& rng, std::size_t n)
{
    while (true) {
        std::vector<mpq_class> v;
        mpq_class sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mpq_class q(uniform(rng, -12, 12), static_cast<unsigned long>(uniform(rng, 1, 6)));
            q.canonicalize();
            sum += q;
            v.push_back(q);
        }
        const mpq_class mean = sum / static_cast<unsigned long>(n);
        bool nonzero = false;
        for (auto& q : v) {
            q -= mean;
            nonzero = nonzero || q != 0;
        }
        if (nonzero) {
            return CenteredVector(std::move(v));
        }
    }
}

inline ExponentVector random_exponents(std::mt19937_64& rng, std::size_t n, long lo = -6, long hi = 6)
{
    std::vector<long> v(n);
    for (auto& x : v) {
        x = uniform(rng, lo, hi);
    }
    return ExponentVector(std::move(v));
}

/// Squarefree polynomials used across the numeric tests.
inline std::vector<IntPoly> polynomial_battery()
{
    return {
        IntPoly{-1, -1, 1},                 // golden ratio
        IntPoly{1, 0, 1},                   // x^2 + 1
        IntPoly{-2, 0, 0, 1},               // x^3 - 2
        IntPoly{-1, 0, 0, 0, 1},            // x^4 - 1
        IntPoly{24, 24, 12, 4, 1},          // truncated exponential, n = 4
        IntPoly{-3, 2},                     // 2x - 3
        IntPoly{-1, 1, 0, 0, 0, 1},         // x^5 + x - 1
        IntPoly{1, -1, 0, 1, 0, -1, 1},     // mixed signs, degree 6
        IntPoly{-3, 0, 2},                  // 2x^2 - 3
        IntPoly{1, 1, 1, 1, 1},             // fifth cyclotomic
        IntPoly{7, -3, 0, 5, 2},            // non-monic quartic
    };
}

} // namespace testing_support
