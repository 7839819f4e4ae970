// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pepin {

/// A variable or its negation, packed as a nonzero signed code: +v / -v.
struct Lit {
    int32_t code = 0;

    Lit() = default;
    Lit(uint32_t var, bool positive)
        : code(positive ? int32_t(var) : -int32_t(var)) {}

    uint32_t var() const { return uint32_t(code < 0 ? -code : code); }
    bool positive() const { return code > 0; }
    bool operator==(const Lit&) const = default;
};

/// A conjunction of literals; one disjunct of a DNF formula. Normalized
/// cubes hold distinct variables in ascending order. A cube of width w over
/// n variables has 2^(n-w) satisfying assignments.
struct Cube {
    std::vector<Lit> lits;

    uint32_t width() const { return uint32_t(lits.size()); }
    bool operator==(const Cube&) const = default;
};

/// A DNF formula over variables 1..n. `dropped_contradictions` counts cubes
/// removed during normalization because they contained x and -x; it is
/// bookkeeping and does not take part in equality.
struct DnfFormula {
    uint32_t n = 0;
    std::vector<Cube> cubes;
    uint32_t dropped_contradictions = 0;

    uint32_t m() const { return uint32_t(cubes.size()); }
    bool has_empty_cube() const {
        for (const Cube& c : cubes)
            if (c.lits.empty()) return true;
        return false;
    }
};

inline bool operator==(const DnfFormula& a, const DnfFormula& b) {
    return a.n == b.n && a.cubes == b.cubes;
}

/// Whether an empty cube (bare "0" line, a tautology) is accepted.
enum class TautologyPolicy { reject, allow };

/// Parse the DIMACS-style DNF format:
///   c comment lines
///   p dnf <n> <m>
///   <lit> ... <lit> 0        (one cube; m such cubes)
/// Tokens are separated by any whitespace run; LF and CRLF both work. The
/// header m is authoritative: a mismatch with the actual cube count is an
/// error. The result is normalized and preserves cube order.
DnfFormula parse_dnf(std::istream& in,
                     TautologyPolicy policy = TautologyPolicy::reject);
DnfFormula parse_dnf(const std::string& text,
                     TautologyPolicy policy = TautologyPolicy::reject);
DnfFormula parse_dnf_file(const std::string& path,
                          TautologyPolicy policy = TautologyPolicy::reject);

/// Sort each cube by variable, drop duplicate literals, and drop cubes that
/// contain both polarities of a variable (they have no solutions). Returns
/// the retained cubes, in order, and the number dropped. Idempotent.
std::pair<std::vector<Cube>, uint32_t> normalize(std::vector<Cube> cubes,
                                                 uint32_t n);

/// m cubes over n variables, each with `width` distinct variables chosen
/// uniformly and independent fair-coin polarities. A pure function of its
/// arguments.
///
/// Bit consumption per cube: variables are drawn by rejection from
/// ceil(log2 n)-bit indices until `width` distinct ones are found, then one
/// polarity bit per variable in ascending variable order (1 = positive).
DnfFormula generate_random(uint32_t n, uint32_t m, uint32_t width,
                           uint64_t seed);

/// Inverse of parse_dnf on normalized formulas.
std::string serialize(const DnfFormula& f);

}  // namespace pepin
