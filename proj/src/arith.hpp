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

// Integer arithmetic: 64-bit primality, factorization and the arithmetic
// functions phi, mu and W (number of squarefree divisors).

#ifndef PRIMAVOID_ARITH_HPP
#define PRIMAVOID_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace primavoid {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// A complete prime factorization of n, factors sorted by prime.
struct Factorization {
    u64 n = 1;
    std::vector<std::pair<u64, u32>> factors; // (prime, exponent), empty for n = 1
};

/// Deterministic Miller-Rabin, valid for the full uint64 range.
bool is_prime_u64(u64 n);

/// Trial division below 10^6, Pollard-Brent rho above. n >= 1.
Factorization factorize(u64 n);

u64 euler_phi(const Factorization& f);
int moebius(const Factorization& f); // -1, 0 or 1
u64 squarefree_divisor_count(const Factorization& f); // W(n) = 2^omega(n)

/// All divisors of n, sorted ascending.
std::vector<u64> divisors(const Factorization& f);

/// The squarefree divisors of n (products of subsets of distinct primes), sorted.
std::vector<u64> squarefree_divisors(const Factorization& f);

u64 gcd_u64(u64 a, u64 b);

/// a*b mod m without overflow.
u64 mulmod_u64(u64 a, u64 b, u64 m);
u64 powmod_u64(u64 a, u64 e, u64 m);

/// q^r with an overflow check; throws input_too_large past 2^63.
u64 checked_pow_u64(u64 q, u32 r);

} // namespace primavoid

#endif
