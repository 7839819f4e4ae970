// Copyright (c) 2026 the pepin developers
// Distributed under the MIT software license, see the accompanying
// file LICENSE or http://www.opensource.org/licenses/mit-license.php.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "pepin/arith.hpp"

using namespace pepin;

TEST_CASE("mean_exceeds on pinned cases") {
    CHECK(mean_exceeds(10, 0, 79));        // 1024 >= 79
    CHECK_FALSE(mean_exceeds(6, 0, 79));   // 64 < 79
    CHECK_FALSE(mean_exceeds(200, 195, 79));  // 32 < 79
    CHECK(mean_exceeds(7, 0, 79));         // 128 >= 79
    CHECK(mean_exceeds(0, 0, 1));          // 1 >= 1
    CHECK_FALSE(mean_exceeds(0, 1, 1));    // 1/2 < 1
    CHECK(mean_exceeds(100, 0, 2147483647));
}

TEST_CASE("mean_exceeds agrees with a big-integer oracle") {
    std::mt19937_64 gen(2024);
    for (int i = 0; i < 10000; ++i) {
        const int64_t t_exp = int64_t(gen() % 4000);
        const int64_t k = int64_t(gen() % 4200);
        const int thresh = int(gen() % 2147483000) + 1;
        bool expect;
        const int64_t d = t_exp - k;
        if (d < 0) {
            expect = false;  // 2^d < 1 <= thresh
        } else {
            mpz_class lhs = mpz_class(1) << unsigned(d);
            expect = lhs >= thresh;
        }
        CAPTURE(t_exp);
        CAPTURE(k);
        CAPTURE(thresh);
        CHECK(mean_exceeds(t_exp, k, thresh) == expect);
    }
}

TEST_CASE("estimate builds exact big integers") {
    CHECK(estimate(0, 1000) == 0);
    CHECK(estimate(5, 3) == 40);
    CHECK(estimate(1, 0) == 1);
    // value computed independently with arbitrary-precision arithmetic
    CHECK(estimate(79, 120).get_str() ==
          "105009011667008353959400757762147221504");
    // cross-check against a separate gmp route
    mpz_class expect;
    mpz_ui_pow_ui(expect.get_mpz_t(), 2, 120);
    expect *= 79;
    CHECK(estimate(79, 120) == expect);
}

TEST_CASE("DyadicProb halving is monotone in k") {
    DyadicProb p;
    CHECK(p.k == 0);
    p.halve();
    p.halve();
    CHECK(p.k == 2);
}
