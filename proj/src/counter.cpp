// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/counter.hpp"

#include <chrono>
#include <cmath>

#include "pepin/errors.hpp"

namespace pepin {

namespace {

void validate(const CounterConfig& cfg, uint32_t n_vars) {
    if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
        throw ParamError("epsilon must be in (0,1)");
    if (!(cfg.delta > 0.0 && cfg.delta < 1.0))
        throw ParamError("delta must be in (0,1)");
    if (cfg.initial_k < 0 || cfg.initial_k > int64_t(n_vars) + 64)
        throw ParamError("initial_k out of range");
}

void bump_k(CounterState& st) {
    st.prob.halve();
    if (st.prob.k > st.k_cap)
        throw InternalError("sampling exponent k exceeded cap n + 64");
}

}  // namespace

int compute_thresh(double epsilon, double delta, uint64_t m) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw ParamError("epsilon must be in (0,1)");
    if (!(delta > 0.0 && delta < 1.0))
        throw ParamError("delta must be in (0,1)");
    if (m < 1) throw ParamError("thresh needs m >= 1");
    const double a = 12.0 * std::log(24.0 / delta) / (epsilon * epsilon);
    const double b = 6.0 * (std::log(6.0 / delta) + std::log(double(m)));
    const double t = std::ceil(std::max(a, b));
    if (!(t >= 1.0 && t < 2147483647.0))
        throw ParamError("threshold out of range for these parameters");
    return int(t);
}

CounterState::CounterState(const DnfFormula& f, const CounterConfig& cfg)
    : n_vars(f.n),
      thresh(compute_thresh(cfg.epsilon, cfg.delta,
                            f.m() > 0 ? uint64_t(f.m()) : 1)),
      store(make_store(cfg.backend, thresh, f.n)),
      rng(cfg.seed),
      k_cap(int64_t(f.n) + 64) {
    validate(cfg, f.n);
    prob.k = cfg.initial_k;
}

CubeStats process_cube(CounterState& st, const Cube& cube) {
    assert(cube.width() >= 1);
    const int64_t t_exp = int64_t(st.n_vars) - cube.width();

    CubeStats stats;
    stats.removed = st.store->scan_remove_satisfying(cube, st.rng);

    while (mean_exceeds(t_exp, st.prob.k, st.thresh)) {
        st.store->thin_half(st.rng);
        bump_k(st);
    }

    uint64_t n_new = poisson_pow2(t_exp - st.prob.k, st.rng);
    while (n_new + uint64_t(st.store->size()) > uint64_t(st.thresh)) {
        st.store->thin_half(st.rng);
        bump_k(st);
        n_new = poisson_pow2(t_exp - st.prob.k, st.rng);
    }

    generate_samples(st, cube, n_new);
    stats.appended = n_new;
    ++st.cubes_processed;
    return stats;
}

void generate_samples(CounterState& st, const Cube& cube, uint64_t count) {
    assert(count + uint64_t(st.store->size()) <= uint64_t(st.thresh));
    for (uint64_t j = 0; j < count; ++j) st.store->append_lazy(cube);
}

CountEstimate count(const DnfFormula& f, const CounterConfig& cfg) {
    const auto start = std::chrono::steady_clock::now();
    validate(cfg, f.n);

    CountEstimate out;
    out.seed = cfg.seed;
    out.thresh = compute_thresh(cfg.epsilon, cfg.delta,
                                f.m() > 0 ? uint64_t(f.m()) : 1);

    if (f.has_empty_cube()) {
        // a tautological cube makes the answer exactly 2^n
        out.final_size = 1;
        out.final_k = int64_t(f.n);
        out.count = estimate(out.final_size, out.final_k);
    } else if (f.cubes.empty()) {
        out.final_size = 0;
        out.final_k = 0;
        out.count = 0;
    } else {
        CounterState st(f, cfg);
        for (const Cube& c : f.cubes) process_cube(st, c);
        out.final_k = st.prob.k;
        out.final_size = st.store->size();
        out.count = estimate(out.final_size, out.final_k);
    }

    out.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    return out;
}

}  // namespace pepin
