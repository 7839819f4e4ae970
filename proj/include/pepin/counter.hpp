// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <cstdint>
#include <memory>

#include "pepin/arith.hpp"
#include "pepin/dnf.hpp"
#include "pepin/rand.hpp"
#include "pepin/store.hpp"

namespace pepin {

struct CounterConfig {
    double epsilon = 0.8;   ///< tolerance, in (0,1)
    double delta = 0.36;    ///< confidence, in (0,1)
    uint64_t seed = 1;
    StoreBackend backend = StoreBackend::dense;

    /// Test hook: pin the starting exponent of p = 2^-k. Distribution tests
    /// use it to isolate the sampling law from the adaptive halving.
    int64_t initial_k = 0;
};

/// Result of one counter run. count == final_size * 2^final_k, exactly.
struct CountEstimate {
    BigCount count;
    int64_t final_k = 0;
    int final_size = 0;
    int thresh = 0;
    uint64_t seed = 0;
    double elapsed_seconds = 0.0;
};

/// Sample-set capacity: ceil(max(12 ln(24/delta)/epsilon^2,
/// 6 (ln(6/delta) + ln m))), evaluated in double precision.
int compute_thresh(double epsilon, double delta, uint64_t m);

/// Mutable state threaded through the per-cube passes.
struct CounterState {
    uint32_t n_vars = 0;
    int thresh = 0;
    DyadicProb prob;
    std::unique_ptr<SampleStore> store;
    uint64_t cubes_processed = 0;
    RandomSource rng;
    int64_t k_cap = 0;

    CounterState(const DnfFormula& f, const CounterConfig& cfg);
};

struct CubeStats {
    int removed = 0;
    uint64_t appended = 0;
};

/// One streaming pass over a cube, in order: remove satisfying samples;
/// halve p while the cube's expected sample count 2^(n-w) * 2^-k still
/// reaches thresh; draw N ~ Poisson(2^(n-w-k)); while N + |X| > thresh,
/// halve p again and redraw N fresh; append N lazy samples.
///
/// Random bits are consumed in exactly that order: scan materialization
/// bits in slot-then-variable order, pre-halving thinning bits, the Poisson
/// draw, then overflow-loop bits alternating thinning and redraw.
CubeStats process_cube(CounterState& state, const Cube& cube);

/// Append `count` lazy samples of the cube. Consumes no random bits.
void generate_samples(CounterState& state, const Cube& cube, uint64_t count);

/// Run the counter over the whole formula and return |X| * 2^k. The result
/// lands within (1 +- epsilon) of the exact solution count with probability
/// at least 1 - delta. A formula containing an empty cube short-circuits to
/// exactly 2^n; an empty formula returns exactly 0.
CountEstimate count(const DnfFormula& f, const CounterConfig& cfg);

}  // namespace pepin
