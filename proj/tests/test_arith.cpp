/*
 * Copyright 2026 the primavoid authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include "arith.hpp"
#include "errors.hpp"
#include "rng.hpp"

using namespace primavoid;

namespace {

// Brute-force oracles, kept independent of the implementations they check.
u64 phi_brute(u64 n) {
    u64 c = 0;
    for (u64 k = 1; k <= n; ++k)
        if (gcd_u64(k, n) == 1) ++c;
    return c;
}

int moebius_brute(u64 n) {
    int primes = 0;
    for (u64 p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            ++primes;
            if (n % p == 0) return 0;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

u64 squarefree_divisors_brute(u64 n) {
    u64 c = 0;
    for (u64 d = 1; d <= n; ++d)
        if (n % d == 0 && moebius_brute(d) != 0) ++c;
    return c;
}

} // namespace

TEST_CASE("factorize known values") {
    auto f63 = factorize(63);
    CHECK(f63.factors == std::vector<std::pair<u64, u32>>{{3, 2}, {7, 1}});
    auto f1 = factorize(1);
    CHECK(f1.factors.empty());
    auto f80 = factorize(80); // 3^4 - 1
    CHECK(f80.factors == std::vector<std::pair<u64, u32>>{{2, 4}, {5, 1}});
    CHECK_THROWS_AS(factorize(0), Error);
}

TEST_CASE("factorize reconstructs its input") {
    SplitMix64 rng(7);
    for (int i = 0; i < 200; ++i) {
        u64 n = 1 + rng.below(u64{1} << 40);
        auto f = factorize(n);
        u64 prod = 1;
        for (auto [p, e] : f.factors) {
            CHECK(is_prime_u64(p));
            for (u32 j = 0; j < e; ++j) prod *= p;
        }
        CHECK(prod == n);
        for (size_t j = 1; j < f.factors.size(); ++j)
            CHECK(f.factors[j - 1].first < f.factors[j].first);
    }
}

TEST_CASE("factorize above the trial-division range") {
    // Mersenne prime 2^61 - 1
    auto f = factorize((u64{1} << 61) - 1);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0] == std::pair<u64, u32>{(u64{1} << 61) - 1, 1});

    // product of two 10-digit primes
    u64 p1 = 1000000007, p2 = 1000000009;
    auto g = factorize(p1 * p2);
    CHECK(g.factors == std::vector<std::pair<u64, u32>>{{p1, 1}, {p2, 1}});
}

TEST_CASE("primality spot checks") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(3));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(561));  // Carmichael
    CHECK_FALSE(is_prime_u64(341));
    CHECK(is_prime_u64(1000000007));
    CHECK_FALSE(is_prime_u64(u64{1000000007} * 1000000007));
}

TEST_CASE("phi, mu, W on known values") {
    auto f8 = factorize(8);
    CHECK(euler_phi(f8) == 4);
    CHECK(moebius(f8) == 0);
    CHECK(squarefree_divisor_count(f8) == 2);

    auto f1 = factorize(1);
    CHECK(euler_phi(f1) == 1);
    CHECK(moebius(f1) == 1);
    CHECK(squarefree_divisor_count(f1) == 1);

    CHECK(squarefree_divisor_count(factorize(12)) == 4); // 1, 2, 3, 6
}

TEST_CASE("phi and mu agree with brute force up to 10^4") {
    for (u64 n = 1; n <= 10000; ++n) {
        auto f = factorize(n);
        CHECK(euler_phi(f) == phi_brute(n));
        CHECK(moebius(f) == moebius_brute(n));
    }
}

TEST_CASE("W agrees with brute-force divisor enumeration") {
    for (u64 n = 1; n <= 2000; ++n)
        CHECK(squarefree_divisor_count(factorize(n)) == squarefree_divisors_brute(n));
    // sparse larger samples
    for (u64 n : {30030ull, 65536ull, 99991ull, 96577ull})
        CHECK(squarefree_divisor_count(factorize(n)) == squarefree_divisors_brute(n));
}

TEST_CASE("divisor lists") {
    auto f = factorize(80);
    CHECK(divisors(f) == std::vector<u64>{1, 2, 4, 5, 8, 10, 16, 20, 40, 80});
    CHECK(squarefree_divisors(f) == std::vector<u64>{1, 2, 5, 10});
    CHECK(divisors(factorize(1)) == std::vector<u64>{1});
}

TEST_CASE("checked_pow overflow") {
    CHECK(checked_pow_u64(3, 4) == 81);
    CHECK_THROWS_AS(checked_pow_u64(2, 64), Error);
}
