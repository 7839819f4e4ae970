// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

// Poisson sampling for power-of-two means, by inverse-CDF lookup in fixed
// point. The mean 2^e is dyadic, so the pmf recurrence
//     pmf(0) = e^(-2^e),   pmf(i+1) = pmf(i) * 2^e / (i+1)
// needs only shifts and small divisions on big integers, and CDF prefixes
// can be cached and reused across draws.
//
// Draw procedure for -64 < e <= 6:
//   * take 64 bits of a uniform U, scanned as a binary fraction;
//   * walk i = 0, 1, ... and return the first i whose CDF prefix exceeds U;
//   * when U falls within 2^-60 of a CDF prefix, extend U to 256 bits and
//     recompute the prefixes at 256 fractional bits; if still unresolved,
//     accept the lower index.
// For e <= -64 the draw reduces to a Bernoulli with success probability the
// 64-significant-bit truncation of 1 - e^(-2^e), decided by lazy bitwise
// comparison; Pr[N >= 2] < 2^-127 is folded into the error budget. For
// e > 6, Poisson(2^e) is drawn as a sum of 2^(e-6) independent Poisson(2^6)
// draws, which preserves the distribution exactly.

#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pepin/arith.hpp"
#include "pepin/errors.hpp"

namespace pepin {

namespace {

constexpr int64_t kTinyExponent = -64;
constexpr int64_t kDirectMaxExponent = 6;
constexpr unsigned kBasePrecision = 128;
constexpr unsigned kMaxPrecision = 256;
constexpr unsigned kTieBits = 60;

// e^(-2^e) at frac_bits fractional bits, truncated. Requires e <= 6 so the
// value stays well above one ulp at 128 fractional bits.
mpz_class exp_neg_pow2_fixed(int64_t e, unsigned frac_bits) {
    const unsigned work = frac_bits + 64;
    if (e <= 0) {
        // alternating series over (-2^e)^j / j!
        const unsigned shift = unsigned(-e);
        mpz_class term = mpz_class(1) << work;
        mpz_class acc = term;
        for (unsigned long j = 1; term != 0; ++j) {
            term >>= shift;
            mpz_tdiv_q_ui(term.get_mpz_t(), term.get_mpz_t(), j);
            if (j & 1)
                acc -= term;
            else
                acc += term;
        }
        return acc >> 64;
    }
    // e^(-2^e) = (e^-1)^(2^e): square e times
    mpz_class y = exp_neg_pow2_fixed(0, work);
    for (int64_t i = 0; i < e; ++i) {
        y *= y;
        y >>= work;
    }
    return y >> 64;
}

// CDF prefixes of Poisson(2^e) in fixed point, grown on demand and cached
// across draws (the prefixes do not depend on the consumed randomness).
class CdfTable {
 public:
    CdfTable(int64_t e, unsigned frac_bits) : e_(e) {
        pmf_ = exp_neg_pow2_fixed(e, frac_bits);
        cdf_.push_back(pmf_);
    }

    // Prefix at index i, or nullptr once the pmf underflows the fixed point.
    const mpz_class* prefix(size_t i) {
        while (cdf_.size() <= i) {
            if (pmf_ == 0) return nullptr;
            if (e_ >= 0)
                pmf_ <<= unsigned(e_);
            else
                pmf_ >>= unsigned(-e_);
            mpz_tdiv_q_ui(pmf_.get_mpz_t(), pmf_.get_mpz_t(),
                          static_cast<unsigned long>(cdf_.size()));
            cdf_.push_back(cdf_.back() + pmf_);
        }
        return &cdf_[i];
    }

 private:
    int64_t e_;
    mpz_class pmf_;
    std::vector<mpz_class> cdf_;
};

CdfTable& table_for(int64_t e, unsigned frac_bits) {
    thread_local std::map<std::pair<int64_t, unsigned>, CdfTable> cache;
    const auto key = std::make_pair(e, frac_bits);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache
                 .emplace(std::piecewise_construct, std::forward_as_tuple(key),
                          std::forward_as_tuple(e, frac_bits))
                 .first;
    return it->second;
}

uint64_t poisson_inverse_cdf(int64_t e, RandomSource& rng) {
    unsigned prec = kBasePrecision;
    CdfTable* tab = &table_for(e, prec);

    mpz_class uniform(static_cast<unsigned long>(rng.next_uniform_bits(64)));
    unsigned uniform_bits = 64;
    mpz_class scaled = uniform << (prec - uniform_bits);
    mpz_class band = mpz_class(1) << (prec - kTieBits);

    for (uint64_t i = 0;; ++i) {
        for (;;) {
            const mpz_class* c = tab->prefix(size_t(i));
            if (c == nullptr) return i;  // tail mass below resolution
            if (*c > scaled + band) return i;
            if (*c < scaled - band) break;  // clearly above; next index
            // within 2^-60 of the boundary: raise precision once, then
            // accept the lower index if still unresolved
            if (prec == kMaxPrecision) return i;
            prec = kMaxPrecision;
            tab = &table_for(e, prec);
            while (uniform_bits < prec) {
                uniform <<= 64;
                uniform |= mpz_class(static_cast<unsigned long>(rng.next_uniform_bits(64)));
                uniform_bits += 64;
            }
            scaled = uniform << (prec - uniform_bits);
            band = mpz_class(1) << (prec - kTieBits);
        }
    }
}

// For e <= -64 the success probability, truncated to 64 significant bits,
// is exactly 2^e - 2^(e-64): -e zero bits followed by 64 one bits. Compare
// a lazily drawn uniform against that pattern; expected cost is two bits.
uint64_t poisson_tiny(int64_t e, RandomSource& rng) {
    for (int64_t j = 0; j < -e; ++j)
        if (rng.next_bit()) return 0;  // uniform above the pattern
    for (int j = 0; j < 64; ++j)
        if (!rng.next_bit()) return 1;  // uniform below the pattern
    return 0;                           // equal: not below
}

}  // namespace

uint64_t poisson_pow2(int64_t e, RandomSource& rng) {
    if (e <= kTinyExponent) return poisson_tiny(e, rng);
    if (e <= kDirectMaxExponent) return poisson_inverse_cdf(e, rng);
    if (e - kDirectMaxExponent > 40)
        throw InternalError("poisson_pow2: mean 2^" + std::to_string(e) +
                            " out of supported range");
    // sum of independent Poisson(2^6) components; exact by additivity
    uint64_t total = 0;
    for (uint64_t c = uint64_t(1) << (e - kDirectMaxExponent); c > 0; --c)
        total += poisson_inverse_cdf(kDirectMaxExponent, rng);
    return total;
}

}  // namespace pepin
