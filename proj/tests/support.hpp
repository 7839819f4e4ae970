// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

// Shared helpers for the test suites: reference distributions, chi-square
// machinery, and small formula builders. Everything here is independent of
// the library's sampling path so it can serve as an oracle for it.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "pepin/dnf.hpp"

namespace testsup {

// Reference Poisson pmf via lgamma; independent of the library's fixed-point
// CDF route.
inline double poisson_pmf(uint64_t i, double lambda) {
    return std::exp(-lambda + double(i) * std::log(lambda) -
                    std::lgamma(double(i) + 1.0));
}

// Wilson-Hilferty approximation of the chi-square quantile at 0.999
// (slightly above the exact value for the df used here, so tests only get
// more lenient by well under 2%).
inline double chi2_quantile_999(double df) {
    constexpr double z = 3.090232306167813;  // Phi^-1(0.999)
    const double t = 2.0 / (9.0 * df);
    const double c = 1.0 - t + z * std::sqrt(t);
    return df * c * c * c;
}

// Equal-size two-sample chi-square statistic with greedy pooling of sparse
// bins; returns (statistic, degrees of freedom).
inline std::pair<double, int> two_sample_chi2(const std::vector<uint64_t>& a,
                                              const std::vector<uint64_t>& b,
                                              uint64_t min_bin_total = 20) {
    const size_t bins = std::max(a.size(), b.size());
    auto at = [](const std::vector<uint64_t>& h, size_t i) -> uint64_t {
        return i < h.size() ? h[i] : 0;
    };
    std::vector<std::pair<uint64_t, uint64_t>> pooled;
    uint64_t acc_a = 0, acc_b = 0;
    for (size_t i = 0; i < bins; ++i) {
        acc_a += at(a, i);
        acc_b += at(b, i);
        if (acc_a + acc_b >= min_bin_total) {
            pooled.emplace_back(acc_a, acc_b);
            acc_a = acc_b = 0;
        }
    }
    if (acc_a + acc_b > 0) {  // fold a sparse tail into the previous bin
        if (pooled.empty())
            pooled.emplace_back(acc_a, acc_b);
        else {
            pooled.back().first += acc_a;
            pooled.back().second += acc_b;
        }
    }
    double stat = 0.0;
    for (auto [pa, pb] : pooled) {
        const double d = double(pa) - double(pb);
        stat += d * d / double(pa + pb);
    }
    return {stat, pooled.size() > 1 ? int(pooled.size()) - 1 : 1};
}

// Total variation between an empirical histogram and Poisson(lambda) over
// masses [0, masses); tail beyond is ignored on both sides.
inline double tv_first_masses(const std::vector<uint64_t>& hist,
                              uint64_t draws, double lambda,
                              uint64_t masses) {
    double tv = 0.0;
    for (uint64_t i = 0; i < masses; ++i) {
        const double emp =
            i < hist.size() ? double(hist[i]) / double(draws) : 0.0;
        tv += std::fabs(emp - poisson_pmf(i, lambda));
    }
    return tv / 2.0;
}

// Total variation over the full support, lumping the tail beyond the
// histogram into one bin.
inline double tv_full(const std::vector<uint64_t>& hist, uint64_t draws,
                      double lambda) {
    double tv = 0.0;
    double tail = 1.0;
    for (size_t i = 0; i < hist.size(); ++i) {
        const double p = poisson_pmf(i, lambda);
        tail -= p;
        tv += std::fabs(double(hist[i]) / double(draws) - p);
    }
    tv += std::fabs(std::max(tail, 0.0));
    return tv / 2.0;
}

inline pepin::Cube make_cube(std::initializer_list<int32_t> codes) {
    pepin::Cube c;
    for (int32_t v : codes)
        c.lits.push_back(pepin::Lit(uint32_t(v < 0 ? -v : v), v > 0));
    return c;
}

}  // namespace testsup
