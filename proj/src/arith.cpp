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

#include "arith.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace primavoid {

u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

u64 mulmod_u64(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 powmod_u64(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // This witness set is a proven deterministic test below 2^64.
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Pollard-Brent with a deterministic parameter schedule; n composite, odd, > 1.
u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        u64 ys = y, q = 1;
        const u64 m = 128;
        u64 r = 1;
        auto f = [n, c](u64 v) { return (mulmod_u64(v, v, n) + c) % n; };
        while (d == 1) {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            while (k < r && d == 1) {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod_u64(q, x > y ? x - y : y - x, n);
                }
                d = gcd_u64(q, n);
                k += m;
            }
            r <<= 1;
        }
        if (d == n) {
            // Backtrack one step at a time.
            do {
                ys = f(ys);
                d = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (d == 1);
        }
        if (d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& primes) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        primes.push_back(n);
        return;
    }
    u64 d = pollard_brent(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

} // namespace

Factorization factorize(u64 n) {
    if (n == 0) fail(errc::invalid_argument, "factorize expects n >= 1");
    Factorization out;
    out.n = n;
    if (n == 1) return out;
    std::vector<u64> primes;
    for (u64 p = 2; p < 1000000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            primes.push_back(p);
            n /= p;
        }
    }
    if (n > 1) factor_rec(n, primes);
    std::sort(primes.begin(), primes.end());
    for (u64 p : primes) {
        if (!out.factors.empty() && out.factors.back().first == p) {
            out.factors.back().second++;
        } else {
            out.factors.emplace_back(p, 1);
        }
    }
    return out;
}

u64 euler_phi(const Factorization& f) {
    u64 r = 1;
    for (auto [p, e] : f.factors) {
        r *= p - 1;
        for (u32 i = 1; i < e; ++i) r *= p;
    }
    return r;
}

int moebius(const Factorization& f) {
    for (auto [p, e] : f.factors) {
        (void)p;
        if (e >= 2) return 0;
    }
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

u64 squarefree_divisor_count(const Factorization& f) {
    return u64{1} << f.factors.size();
}

std::vector<u64> divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (auto [p, e] : f.factors) {
        size_t cur = ds.size();
        u64 pw = 1;
        for (u32 i = 1; i <= e; ++i) {
            pw *= p;
            for (size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * pw);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

std::vector<u64> squarefree_divisors(const Factorization& f) {
    std::vector<u64> ds{1};
    for (auto [p, e] : f.factors) {
        (void)e;
        size_t cur = ds.size();
        for (size_t j = 0; j < cur; ++j) ds.push_back(ds[j] * p);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

u64 checked_pow_u64(u64 q, u32 r) {
    u64 out = 1;
    for (u32 i = 0; i < r; ++i) {
        if (q != 0 && out > (u64{1} << 63) / q)
            fail(errc::input_too_large, "power exceeds 2^63");
        out *= q;
    }
    return out;
}

} // namespace primavoid
