// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <array>
#include <cassert>
#include <cstdint>

namespace pepin {

/// Deterministic bit source. Every random decision in the library flows
/// through next_bit()/next_uniform_bits(), so a run is reproducible from its
/// 64-bit seed alone, on any platform.
///
/// Words come from xoshiro256** seeded via splitmix64. The words form a
/// single bit stream, most significant bit of each word first.
/// next_uniform_bits(b) returns the next b stream bits with the earliest bit
/// in the most significant position, i.e. the first b binary-fraction digits
/// of a uniform value in [0,1).
class RandomSource {
 public:
    explicit RandomSource(uint64_t seed) {
        uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
    }

    RandomSource(const RandomSource&) = delete;
    RandomSource& operator=(const RandomSource&) = delete;

    /// Next stream bit, 0 or 1.
    uint32_t next_bit() {
        if (avail_ == 0) refill();
        ++consumed_;
        return uint32_t(buf_ >> --avail_) & 1u;
    }

    /// Next `bits` stream bits (bits <= 64), earliest bit most significant.
    uint64_t next_uniform_bits(unsigned bits) {
        assert(bits <= 64);
        uint64_t out = 0;
        unsigned need = bits;
        while (need > 0) {
            if (avail_ == 0) refill();
            const unsigned take = need < avail_ ? need : avail_;
            avail_ -= take;
            const uint64_t chunk = (buf_ >> avail_) & low_mask(take);
            out = take == 64 ? chunk : (out << take) | chunk;
            need -= take;
        }
        consumed_ += bits;
        return out;
    }

    /// Total bits handed out so far; used to pin down bit-consumption
    /// contracts in tests.
    uint64_t bits_consumed() const { return consumed_; }

 private:
    static uint64_t splitmix64(uint64_t& x) {
        x += 0x9e3779b97f4a7c15ULL;
        uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static uint64_t rotl(uint64_t v, int s) { return (v << s) | (v >> (64 - s)); }

    static uint64_t low_mask(unsigned bits) {
        return bits >= 64 ? ~uint64_t(0) : (uint64_t(1) << bits) - 1;
    }

    uint64_t next_word() {
        const uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    void refill() {
        buf_ = next_word();
        avail_ = 64;
    }

    std::array<uint64_t, 4> state_{};
    uint64_t buf_ = 0;
    unsigned avail_ = 0;
    uint64_t consumed_ = 0;
};

}  // namespace pepin
