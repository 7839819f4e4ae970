// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include "pepin/arith.hpp"
#include "pepin/dnf.hpp"

namespace pepin {

// Two independent exact #DNF counters with complementary cost profiles
// (2^n enumeration vs 2^m inclusion-exclusion); their overlap is used to
// cross-validate both.

enum class ExactMethod { brute, inclusion_exclusion };

struct ExactCount {
    BigCount count;
    ExactMethod method;
};

constexpr uint32_t kBruteMaxVars = 30;
constexpr uint32_t kIncExcMaxCubes = 22;

inline bool brute_feasible(const DnfFormula& f) { return f.n <= kBruteMaxVars; }
inline bool incexc_feasible(const DnfFormula& f) {
    return f.m() <= kIncExcMaxCubes;
}

/// Enumerate all 2^n assignments; count those satisfying some cube.
BigCount exact_brute(const DnfFormula& f);

/// Inclusion-exclusion over cube subsets: a consistent subset S (no variable
/// in both polarities) contributes (-1)^(|S|+1) * 2^(n - |vars(S)|). Exact
/// for any n.
BigCount exact_incexc(const DnfFormula& f);

/// Pick a feasible method (the cheaper-looking one when both apply); throws
/// ParamError when neither is feasible.
ExactCount exact_count(const DnfFormula& f);

}  // namespace pepin
