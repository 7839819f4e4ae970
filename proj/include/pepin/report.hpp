// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#pragma once

#include <string>

#include "json.hpp"
#include "pepin/counter.hpp"
#include "pepin/dnf.hpp"

namespace pepin {

/// One counter run as reported by the CLI. `count` is the exact decimal
/// value of final_size * 2^final_k.
struct RunReport {
    std::string file;
    uint32_t n = 0;
    uint32_t m = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    int thresh = 0;
    uint64_t seed = 0;
    std::string count;
    int64_t final_k = 0;
    int final_size = 0;
    double elapsed_seconds = 0.0;
    std::string backend;

    bool operator==(const RunReport&) const = default;
};

RunReport make_report(std::string file, const DnfFormula& f,
                      const CounterConfig& cfg, const CountEstimate& est);

nlohmann::ordered_json report_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

/// Human-readable form: metadata comment lines plus the count in both exact
/// decimal and d.dddde+xx approximation.
std::string report_human(const RunReport& r);

/// "d.dddde+xx" approximation (truncated) of a non-negative decimal string.
std::string sci_approx(const std::string& decimal);

}  // namespace pepin
