// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/report.hpp"

#include <cstdio>

namespace pepin {

RunReport make_report(std::string file, const DnfFormula& f,
                      const CounterConfig& cfg, const CountEstimate& est) {
    RunReport r;
    r.file = std::move(file);
    r.n = f.n;
    r.m = f.m();
    r.epsilon = cfg.epsilon;
    r.delta = cfg.delta;
    r.thresh = est.thresh;
    r.seed = est.seed;
    r.count = est.count.get_str();
    r.final_k = est.final_k;
    r.final_size = est.final_size;
    r.elapsed_seconds = est.elapsed_seconds;
    r.backend = to_string(cfg.backend);
    return r;
}

nlohmann::ordered_json report_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["file"] = r.file;
    j["n"] = r.n;
    j["m"] = r.m;
    j["epsilon"] = r.epsilon;
    j["delta"] = r.delta;
    j["thresh"] = r.thresh;
    j["seed"] = r.seed;
    j["count"] = r.count;
    j["final_k"] = r.final_k;
    j["final_size"] = r.final_size;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["backend"] = r.backend;
    return j;
}

RunReport report_from_json(const nlohmann::json& j) {
    RunReport r;
    r.file = j.at("file").get<std::string>();
    r.n = j.at("n").get<uint32_t>();
    r.m = j.at("m").get<uint32_t>();
    r.epsilon = j.at("epsilon").get<double>();
    r.delta = j.at("delta").get<double>();
    r.thresh = j.at("thresh").get<int>();
    r.seed = j.at("seed").get<uint64_t>();
    r.count = j.at("count").get<std::string>();
    r.final_k = j.at("final_k").get<int64_t>();
    r.final_size = j.at("final_size").get<int>();
    r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    r.backend = j.at("backend").get<std::string>();
    return r;
}

std::string sci_approx(const std::string& decimal) {
    if (decimal.empty() || decimal == "0") return "0.0000e+00";
    const int exp10 = int(decimal.size()) - 1;
    std::string mant = decimal.substr(0, 5);
    while (mant.size() < 5) mant += '0';
    char buf[40];
    std::snprintf(buf, sizeof buf, "%c.%se+%02d", mant[0], mant.c_str() + 1,
                  exp10);
    return buf;
}

std::string report_human(const RunReport& r) {
    char buf[256];
    std::string out;
    out += "c file " + r.file + "\n";
    out += "c n " + std::to_string(r.n) + " m " + std::to_string(r.m) + "\n";
    std::snprintf(buf, sizeof buf,
                  "c epsilon %g delta %g thresh %d seed %llu backend %s\n",
                  r.epsilon, r.delta, r.thresh,
                  static_cast<unsigned long long>(r.seed), r.backend.c_str());
    out += buf;
    std::snprintf(buf, sizeof buf,
                  "c final-size %d final-k %lld elapsed-seconds %.6f\n",
                  r.final_size, static_cast<long long>(r.final_k),
                  r.elapsed_seconds);
    out += buf;
    out += "s " + r.count + " (~" + sci_approx(r.count) + ")\n";
    return out;
}

}  // namespace pepin
