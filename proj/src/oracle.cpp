// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/oracle.hpp"

#include <bit>
#include <cassert>
#include <functional>
#include <vector>

#include "pepin/errors.hpp"

namespace pepin {

BigCount exact_brute(const DnfFormula& f) {
    if (!brute_feasible(f))
        throw ParamError("exact_brute: more than 30 variables");
    const uint64_t space = uint64_t(1) << f.n;
    std::vector<uint64_t> sat((space + 63) / 64, 0);
    for (const Cube& c : f.cubes) {
        uint64_t pattern = 0, care = 0;
        for (Lit l : c.lits) {
            care |= uint64_t(1) << (l.var() - 1);
            if (l.positive()) pattern |= uint64_t(1) << (l.var() - 1);
        }
        const uint64_t free_mask = (space - 1) & ~care;
        uint64_t sub = 0;
        for (;;) {  // all submasks of free_mask
            const uint64_t a = pattern | sub;
            sat[a >> 6] |= uint64_t(1) << (a & 63);
            if (sub == free_mask) break;
            sub = (sub - free_mask) & free_mask;
        }
    }
    uint64_t total = 0;
    for (uint64_t w : sat) total += uint64_t(std::popcount(w));
    return BigCount(static_cast<unsigned long>(total));
}

BigCount exact_incexc(const DnfFormula& f) {
    if (!incexc_feasible(f))
        throw ParamError("exact_incexc: more than 22 cubes");
    std::vector<uint8_t> pos(f.n + 1, 0), neg(f.n + 1, 0);
    mpz_class sum = 0;
    uint32_t distinct = 0;
    int depth = 0;

    // DFS over cube subsets; an inconsistent partial subset prunes all its
    // supersets (they keep the clash and contribute 0)
    std::function<void(size_t)> go = [&](size_t i) {
        if (i == f.cubes.size()) {
            if (depth == 0) return;
            mpz_class term = mpz_class(1) << (f.n - distinct);
            if (depth & 1)
                sum += term;
            else
                sum -= term;
            return;
        }
        go(i + 1);  // exclude cube i

        const Cube& c = f.cubes[i];
        size_t added = 0;
        bool consistent = true;
        for (Lit l : c.lits) {
            auto& same = l.positive() ? pos : neg;
            auto& opp = l.positive() ? neg : pos;
            if (opp[l.var()]) {
                consistent = false;
                break;
            }
            if (!pos[l.var()] && !neg[l.var()]) ++distinct;
            ++same[l.var()];
            ++added;
        }
        if (consistent) {
            ++depth;
            go(i + 1);
            --depth;
        }
        for (size_t j = 0; j < added; ++j) {
            Lit l = c.lits[j];
            (l.positive() ? pos : neg)[l.var()] -= 1;
            if (!pos[l.var()] && !neg[l.var()]) --distinct;
        }
    };
    go(0);
    assert(sum >= 0);
    return sum;
}

ExactCount exact_count(const DnfFormula& f) {
    const bool brute_ok = brute_feasible(f);
    const bool incexc_ok = incexc_feasible(f);
    if (!brute_ok && !incexc_ok)
        throw ParamError("no feasible exact method (n > 30 and m > 22)");
    ExactMethod method;
    if (brute_ok && incexc_ok)
        method = f.m() <= f.n ? ExactMethod::inclusion_exclusion
                              : ExactMethod::brute;
    else
        method = brute_ok ? ExactMethod::brute : ExactMethod::inclusion_exclusion;
    BigCount cnt = method == ExactMethod::brute ? exact_brute(f) : exact_incexc(f);
    return ExactCount{std::move(cnt), method};
}

}  // namespace pepin
