// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>

#include "pepin/rand.hpp"

namespace pepin {

/// Exact non-negative integer count.
using BigCount = mpz_class;

/// Sampling probability p = 2^-k, held as the exponent only. k never
/// decreases over a counter run.
struct DyadicProb {
    int64_t k = 0;
    void halve() { ++k; }
};

/// True iff 2^t_exp * 2^-k >= thresh, decided by exact integer comparison
/// (never floating point). t_exp may be any sign once k is subtracted.
inline bool mean_exceeds(int64_t t_exp, int64_t k, int thresh) {
    assert(thresh >= 1);
    const int64_t d = t_exp - k;
    if (d < 0) return false;
    if (d >= 63) return true;
    return (uint64_t(1) << d) >= uint64_t(thresh);
}

/// size * 2^k as an exact big integer.
BigCount estimate(int64_t size, int64_t k);

/// Draw from Poisson(2^e). Statistical distance from the exact distribution
/// is below 2^-50 per call; see poisson.cpp for the scheme.
uint64_t poisson_pow2(int64_t e, RandomSource& rng);

}  // namespace pepin
