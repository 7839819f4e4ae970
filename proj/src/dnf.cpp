// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#include "pepin/dnf.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

#include "pepin/errors.hpp"
#include "pepin/rand.hpp"

namespace pepin {

namespace {

int64_t to_int(const std::string& tok) {
    int64_t v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ParseError("not an integer: '" + tok + "'");
    return v;
}

}  // namespace

DnfFormula parse_dnf(std::istream& in, TautologyPolicy policy) {
    std::vector<std::string> toks;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == 'c') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) toks.push_back(std::move(tok));
    }

    size_t pos = 0;
    auto next = [&]() -> const std::string& {
        if (pos >= toks.size())
            throw ParseError("unexpected end of input (incomplete header)");
        return toks[pos++];
    };

    if (toks.empty() || next() != "p" || next() != "dnf")
        throw ParseError("expected header 'p dnf <vars> <cubes>'");
    const int64_t n = to_int(next());
    const int64_t m = to_int(next());
    if (n < 0 || m < 0 || n > INT32_MAX || m > INT32_MAX)
        throw ParseError("header counts out of range");

    std::vector<Cube> cubes;
    cubes.reserve(size_t(m));
    Cube cur;
    while (pos < toks.size()) {
        const int64_t v = to_int(toks[pos++]);
        if (v == 0) {
            if (cur.lits.empty() && policy == TautologyPolicy::reject)
                throw ParseError("empty cube (tautology) not accepted; "
                                 "pass --allow-tautology to permit it");
            cubes.push_back(std::move(cur));
            cur = Cube{};
            continue;
        }
        if (v < -n || v > n)
            throw ParseError("literal " + std::to_string(v) +
                             " out of range for " + std::to_string(n) +
                             " variables");
        cur.lits.push_back(Lit(uint32_t(v < 0 ? -v : v), v > 0));
    }
    if (!cur.lits.empty())
        throw ParseError("last cube not terminated by 0");
    if (int64_t(cubes.size()) != m)
        throw ParseError("header declares " + std::to_string(m) +
                         " cubes but input has " +
                         std::to_string(cubes.size()));

    auto [normalized, dropped] = normalize(std::move(cubes), uint32_t(n));
    return DnfFormula{uint32_t(n), std::move(normalized), dropped};
}

DnfFormula parse_dnf(const std::string& text, TautologyPolicy policy) {
    std::istringstream in(text);
    return parse_dnf(in, policy);
}

DnfFormula parse_dnf_file(const std::string& path, TautologyPolicy policy) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_dnf(in, policy);
}

std::pair<std::vector<Cube>, uint32_t> normalize(std::vector<Cube> cubes,
                                                 uint32_t n) {
    (void)n;
    std::vector<Cube> out;
    out.reserve(cubes.size());
    uint32_t dropped = 0;
    for (Cube& c : cubes) {
        std::sort(c.lits.begin(), c.lits.end(), [](Lit a, Lit b) {
            return a.var() != b.var() ? a.var() < b.var() : a.code < b.code;
        });
        bool contradictory = false;
        std::vector<Lit> kept;
        kept.reserve(c.lits.size());
        for (Lit l : c.lits) {
            assert(l.var() >= 1 && l.var() <= n);
            if (!kept.empty() && kept.back().var() == l.var()) {
                if (kept.back().code != l.code) {
                    contradictory = true;
                    break;
                }
                continue;  // duplicate literal
            }
            kept.push_back(l);
        }
        if (contradictory) {
            ++dropped;
            continue;
        }
        out.push_back(Cube{std::move(kept)});
    }
    return {std::move(out), dropped};
}

DnfFormula generate_random(uint32_t n, uint32_t m, uint32_t width,
                           uint64_t seed) {
    if (width < 1 || width > n)
        throw ParamError("cube width must be in [1, vars]");
    if (m < 1) throw ParamError("need at least one cube");

    RandomSource rng(seed);
    unsigned idx_bits = 0;
    while ((uint64_t(1) << idx_bits) < n) ++idx_bits;

    std::vector<uint8_t> used(n, 0);
    std::vector<uint32_t> vars(width);
    std::vector<Cube> cubes;
    cubes.reserve(m);
    for (uint32_t i = 0; i < m; ++i) {
        for (uint32_t j = 0; j < width; ++j) {
            uint32_t v;
            do {
                v = uint32_t(rng.next_uniform_bits(idx_bits));
            } while (v >= n || used[v]);
            used[v] = 1;
            vars[j] = v;
        }
        std::sort(vars.begin(), vars.end());
        Cube c;
        c.lits.reserve(width);
        for (uint32_t v : vars) {
            c.lits.push_back(Lit(v + 1, rng.next_bit() != 0));
            used[v] = 0;
        }
        cubes.push_back(std::move(c));
    }
    return DnfFormula{n, std::move(cubes), 0};
}

std::string serialize(const DnfFormula& f) {
    std::string out = "p dnf " + std::to_string(f.n) + " " +
                      std::to_string(f.m()) + "\n";
    for (const Cube& c : f.cubes) {
        for (Lit l : c.lits) {
            out += std::to_string(l.code);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

}  // namespace pepin
