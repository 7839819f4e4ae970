// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pepin/counter.hpp"
#include "pepin/dnf.hpp"
#include "pepin/errors.hpp"
#include "pepin/oracle.hpp"
#include "pepin/report.hpp"

namespace {

using namespace pepin;

// exit codes: 0 success, 1 input error, 2 parameter error,
// 3 internal invariant violation, 4 verification threshold not met
constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitParam = 2;
constexpr int kExitInternal = 3;
constexpr int kExitVerifyFail = 4;

struct CountArgs {
    std::string file;
    double epsilon = 0.8;
    double delta = 0.36;
    uint64_t seed = 1;
    std::string backend = "dense";
    bool json = false;
    bool allow_tautology = false;
};

struct ExactArgs {
    std::string file;
    std::string method = "auto";
    bool allow_tautology = false;
};

struct GenArgs {
    uint32_t vars = 0;
    uint32_t cubes = 0;
    uint32_t width = 0;
    uint64_t seed = 1;
    std::string out;
};

struct VerifyArgs {
    std::string file;
    uint64_t runs = 200;
    double epsilon = 0.8;
    double delta = 0.36;
    uint64_t seed_base = 1;
    unsigned jobs = 1;
    std::string backend = "dense";
    bool json = false;
    bool allow_tautology = false;
};

int cmd_count(const CountArgs& a) {
    const auto policy = a.allow_tautology ? TautologyPolicy::allow
                                          : TautologyPolicy::reject;
    const DnfFormula f = parse_dnf_file(a.file, policy);
    CounterConfig cfg;
    cfg.epsilon = a.epsilon;
    cfg.delta = a.delta;
    cfg.seed = a.seed;
    cfg.backend = backend_from_string(a.backend);
    const CountEstimate est = count(f, cfg);
    const RunReport r = make_report(a.file, f, cfg, est);
    if (a.json)
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << report_human(r);
    return kExitOk;
}

int cmd_exact(const ExactArgs& a) {
    const auto policy = a.allow_tautology ? TautologyPolicy::allow
                                          : TautologyPolicy::reject;
    const DnfFormula f = parse_dnf_file(a.file, policy);
    BigCount c;
    std::string method_name;
    if (a.method == "auto") {
        ExactCount ec = exact_count(f);
        c = std::move(ec.count);
        method_name =
            ec.method == ExactMethod::brute ? "brute" : "inclusion-exclusion";
    } else if (a.method == "brute") {
        c = exact_brute(f);
        method_name = "brute";
    } else if (a.method == "incexc") {
        c = exact_incexc(f);
        method_name = "inclusion-exclusion";
    } else {
        throw ParamError("unknown method '" + a.method +
                         "' (auto|brute|incexc)");
    }
    std::cerr << "c method " << method_name << "\n";
    std::cout << c.get_str() << "\n";
    return kExitOk;
}

int cmd_gen(const GenArgs& a) {
    const DnfFormula f = generate_random(a.vars, a.cubes, a.width, a.seed);
    std::ofstream out(a.out);
    if (!out) throw ParseError("cannot write '" + a.out + "'");
    out << serialize(f);
    if (!out.flush()) throw ParseError("write failed for '" + a.out + "'");
    return kExitOk;
}

int cmd_verify(const VerifyArgs& a) {
    const auto policy = a.allow_tautology ? TautologyPolicy::allow
                                          : TautologyPolicy::reject;
    const DnfFormula f = parse_dnf_file(a.file, policy);
    const ExactCount exact = exact_count(f);

    std::vector<double> rel_err(a.runs, 0.0);
    std::atomic<uint64_t> next{0};
    const unsigned jobs = std::max(1u, a.jobs);
    auto worker = [&]() {
        for (;;) {
            const uint64_t i = next.fetch_add(1);
            if (i >= a.runs) return;
            CounterConfig cfg;
            cfg.epsilon = a.epsilon;
            cfg.delta = a.delta;
            cfg.seed = a.seed_base + i;
            cfg.backend = backend_from_string(a.backend);
            const CountEstimate est = count(f, cfg);
            if (exact.count == 0) {
                rel_err[i] = est.count == 0
                                 ? 0.0
                                 : std::numeric_limits<double>::infinity();
                continue;
            }
            mpz_class diff = est.count - exact.count;
            if (diff < 0) diff = -diff;
            mpq_class ratio(diff, exact.count);
            ratio.canonicalize();
            rel_err[i] = ratio.get_d();
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    double sum = 0.0, max_err = 0.0;
    uint64_t within = 0;
    for (double e : rel_err) {
        sum += e;
        max_err = std::max(max_err, e);
        if (e <= a.epsilon) ++within;
    }
    const double mean = a.runs > 0 ? sum / double(a.runs) : 0.0;
    const double fraction = a.runs > 0 ? double(within) / double(a.runs) : 0.0;
    const bool pass = fraction >= 1.0 - a.delta;

    if (a.json) {
        nlohmann::ordered_json j;
        j["file"] = a.file;
        j["runs"] = a.runs;
        j["epsilon"] = a.epsilon;
        j["delta"] = a.delta;
        j["seed_base"] = a.seed_base;
        j["exact"] = exact.count.get_str();
        j["mean_relative_error"] = mean;
        j["max_relative_error"] = max_err;
        j["fraction_within_epsilon"] = fraction;
        j["pass"] = pass;
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("c file %s runs %llu seeds %llu..%llu\n", a.file.c_str(),
                    (unsigned long long)a.runs, (unsigned long long)a.seed_base,
                    (unsigned long long)(a.seed_base + a.runs - 1));
        std::printf("c exact %s\n", exact.count.get_str().c_str());
        std::printf("mean-relative-error %.6f\n", mean);
        std::printf("max-relative-error %.6f\n", max_err);
        std::printf("fraction-within-epsilon %.6f (%llu/%llu)\n", fraction,
                    (unsigned long long)within, (unsigned long long)a.runs);
        std::printf("result %s\n", pass ? "PASS" : "FAIL");
    }
    return pass ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pepin: approximate DNF model counter"};
    app.require_subcommand(1);

    CountArgs count_args;
    auto* count_cmd =
        app.add_subcommand("count", "approximate the model count of a DNF");
    count_cmd->add_option("file", count_args.file, "input DNF file")
        ->required();
    count_cmd->add_option("--epsilon", count_args.epsilon,
                          "tolerance in (0,1)");
    count_cmd->add_option("--delta", count_args.delta, "confidence in (0,1)");
    count_cmd->add_option("--seed", count_args.seed, "64-bit seed")
        ->envname("PEPIN_SEED");
    count_cmd->add_option("--backend", count_args.backend,
                          "sample store backend (dense|sparse)");
    count_cmd->add_flag("--json", count_args.json, "emit a JSON run report");
    count_cmd->add_flag("--allow-tautology", count_args.allow_tautology,
                        "accept empty cubes (count becomes exactly 2^n)");

    ExactArgs exact_args;
    auto* exact_cmd =
        app.add_subcommand("exact", "exact model count (small inputs)");
    exact_cmd->add_option("file", exact_args.file, "input DNF file")
        ->required();
    exact_cmd->add_option("--method", exact_args.method,
                          "auto|brute|incexc");
    exact_cmd->add_flag("--allow-tautology", exact_args.allow_tautology,
                        "accept empty cubes");

    GenArgs gen_args;
    auto* gen_cmd =
        app.add_subcommand("gen", "generate a random benchmark DNF");
    gen_cmd->add_option("--vars", gen_args.vars, "number of variables")
        ->required();
    gen_cmd->add_option("--cubes", gen_args.cubes, "number of cubes")
        ->required();
    gen_cmd->add_option("--width", gen_args.width, "literals per cube")
        ->required();
    gen_cmd->add_option("--seed", gen_args.seed, "64-bit seed")
        ->envname("PEPIN_SEED");
    gen_cmd->add_option("-o,--out", gen_args.out, "output file")->required();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand(
        "verify", "measure accuracy over seeded runs against the exact count");
    verify_cmd->add_option("file", verify_args.file, "input DNF file")
        ->required();
    verify_cmd->add_option("--runs", verify_args.runs, "number of runs");
    verify_cmd->add_option("--epsilon", verify_args.epsilon,
                           "tolerance in (0,1)");
    verify_cmd->add_option("--delta", verify_args.delta,
                           "confidence in (0,1)");
    verify_cmd
        ->add_option("--seeds", verify_args.seed_base,
                     "base seed; runs use base, base+1, ...")
        ->envname("PEPIN_SEED");
    verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads");
    verify_cmd->add_option("--backend", verify_args.backend,
                           "sample store backend (dense|sparse)");
    verify_cmd->add_flag("--json", verify_args.json, "emit a JSON summary");
    verify_cmd->add_flag("--allow-tautology", verify_args.allow_tautology,
                         "accept empty cubes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParam;
    }

    try {
        if (count_cmd->parsed()) return cmd_count(count_args);
        if (exact_cmd->parsed()) return cmd_exact(exact_args);
        if (gen_cmd->parsed()) return cmd_gen(gen_args);
        if (verify_cmd->parsed()) return cmd_verify(verify_args);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ParamError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParam;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::bad_alloc&) {
        std::cerr << "fatal: out of memory\n";
        return kExitInternal;
    }
    return kExitOk;
}
