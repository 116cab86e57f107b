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

#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "errors.hpp"
#include "multiplicative.hpp"
#include "rng.hpp"

using namespace primavoid;

namespace {

// Oracle: multiplicative order by walking successive powers.
u64 order_brute(const FieldCtx& ctx, const FieldElem& a) {
    FieldElem x = a;
    u64 e = 1;
    while (!(x == ctx.one())) {
        x = ctx.mul(x, a);
        ++e;
    }
    return e;
}

} // namespace

TEST_CASE("multiplicative orders") {
    auto f49 = FieldCtx::build(7, 1, 2);
    auto fn = factorize(48);
    CHECK(multiplicative_order(*f49, f49->one(), fn) == 1);
    CHECK(multiplicative_order(*f49, f49->scalar(2), fn) == 3); // 2, 4, 1 mod 7
    CHECK(multiplicative_order(*f49, f49->scalar(3), fn) == 6);

    SplitMix64 rng(21);
    for (int i = 0; i < 30; ++i) {
        FieldElem a = f49->element_at(1 + rng.below(48));
        u64 e = multiplicative_order(*f49, a, fn);
        CHECK(48 % e == 0); // Lagrange
        CHECK(e == order_brute(*f49, a));
    }
    try {
        (void)multiplicative_order(*f49, f49->zero(), fn);
        FAIL("expected ZeroElement");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_element);
    }
}

TEST_CASE("order agrees with brute force across whole small fields") {
    for (auto [p, s, r] : {std::tuple<u64, u32, u32>{3, 1, 4}, {2, 2, 2}, {5, 1, 2}}) {
        auto ctx = FieldCtx::build(p, s, r);
        auto fn = factorize(ctx->order() - 1);
        for (u64 idx = 1; idx < ctx->order(); ++idx) {
            FieldElem a = ctx->element_at(idx);
            CHECK(multiplicative_order(*ctx, a, fn) == order_brute(*ctx, a));
        }
    }
}

TEST_CASE("primitivity and primitive counts") {
    // one is never primitive beyond F_2
    auto f9 = FieldCtx::build(3, 1, 2);
    auto f9n = factorize(8);
    CHECK_FALSE(is_primitive(*f9, f9->one(), f9n));

    // number of primitive elements is phi(q^r - 1)
    for (auto [p, s, r] : {std::tuple<u64, u32, u32>{3, 1, 2}, {2, 2, 2}, {5, 1, 2}, {3, 1, 4}}) {
        auto ctx = FieldCtx::build(p, s, r);
        auto fn = factorize(ctx->order() - 1);
        u64 count = 0;
        for (u64 idx = 1; idx < ctx->order(); ++idx)
            if (is_primitive(*ctx, ctx->element_at(idx), fn)) ++count;
        CHECK(count == euler_phi(fn));
    }
}

TEST_CASE("find_generator scans lexicographically") {
    auto f9 = FieldCtx::build(3, 1, 2);
    auto fn = factorize(8);
    FieldElem g = find_generator(*f9, fn);
    CHECK(g.v == std::vector<Scalar>{1, 1}); // 1 + y, the first primitive in scan order
    CHECK(is_primitive(*f9, g, fn));
    CHECK(multiplicative_order(*f9, g, fn) == 8);

    for (auto [p, s, r] : {std::tuple<u64, u32, u32>{2, 2, 2}, {5, 1, 3}, {3, 2, 2}}) {
        auto ctx = FieldCtx::build(p, s, r);
        auto f = factorize(ctx->order() - 1);
        FieldElem gen = find_generator(*ctx, f);
        CHECK(is_primitive(*ctx, gen, f));
        CHECK(multiplicative_order(*ctx, gen, f) == ctx->order() - 1);
    }
}

TEST_CASE("dlog table basics") {
    auto f9 = FieldCtx::build(3, 1, 2);
    auto fn = factorize(8);
    FieldElem g = find_generator(*f9, fn);
    DLogTable t = DLogTable::build(f9, g);
    CHECK(t.size() == 8);
    CHECK(t.dlog(f9->one()) == 0);
    CHECK(t.dlog(g) == 1);
    SplitMix64 rng(5);
    for (int i = 0; i < 20; ++i) {
        FieldElem a = f9->element_at(1 + rng.below(8));
        CHECK(f9->pow(g, t.dlog(a)) == a);
    }
    try {
        (void)t.dlog(f9->zero());
        FAIL("expected ZeroElement");
    } catch (const Error& e) {
        CHECK(e.code() == errc::zero_element);
    }

    // non-primitive base is rejected while filling
    try {
        DLogTable bad = DLogTable::build(f9, f9->scalar(2));
        FAIL("expected NotPrimitive");
    } catch (const Error& e) {
        CHECK(e.code() == errc::not_primitive);
    }
}

TEST_CASE("dlog table respects the enumeration cap") {
    auto big = FieldCtx::build(2, 1, 30); // 2^30 above the cap
    auto fn = factorize(big->order() - 1);
    try {
        DLogTable t = DLogTable::build(big, big->y(), u64{1} << 20);
        FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == errc::field_too_large);
    }
}

TEST_CASE("dlog cache round-trips through the documented layout") {
    auto f81 = FieldCtx::build(3, 1, 4);
    auto fn = factorize(80);
    FieldElem g = find_generator(*f81, fn);

    auto dir = std::filesystem::temp_directory_path() / "primavoid_cache_test";
    std::filesystem::remove_all(dir);
    std::optional<std::string> cache{dir.string()};

    DLogTable fresh = DLogTable::build(f81, g, kEnumerationCap, cache);

    // exactly one cache file with the documented header
    std::filesystem::path file;
    int files = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        file = e.path();
        ++files;
    }
    REQUIRE(files == 1);
    std::ifstream in(file, std::ios::binary);
    std::string blob((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    REQUIRE(blob.size() == 24 + 4 * 80);
    CHECK(blob.substr(0, 5) == "DLOG1");
    CHECK(static_cast<unsigned char>(blob[5]) == 4);
    u64 order = 0;
    for (int i = 7; i >= 0; --i)
        order = (order << 8) | static_cast<unsigned char>(blob[8 + i]);
    CHECK(order == 81);

    // reload and compare against the fresh table on every element
    DLogTable loaded = DLogTable::build(f81, g, kEnumerationCap, cache);
    for (u64 idx = 1; idx < 81; ++idx) {
        FieldElem a = f81->element_at(idx);
        CHECK(loaded.dlog(a) == fresh.dlog(a));
    }

    // a truncated file is ignored and rebuilt
    std::ofstream(file, std::ios::binary | std::ios::trunc) << "DLOG1garbage";
    DLogTable rebuilt = DLogTable::build(f81, g, kEnumerationCap, cache);
    CHECK(rebuilt.dlog(g) == 1);
    std::filesystem::remove_all(dir);
}

TEST_CASE("characters partition by order") {
    auto f81 = FieldCtx::build(3, 1, 4);
    auto fn = factorize(80);
    FieldElem g = find_generator(*f81, fn);

    auto trivial = characters_of_order(*f81, g, 1);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0].index == 0);
    CHECK(trivial[0].trivial());

    auto quad = characters_of_order(*f81, g, 2);
    REQUIRE(quad.size() == 1);
    CHECK(quad[0].index == 40);

    u64 total = 0;
    for (u64 d : divisors(fn)) {
        auto chars = characters_of_order(*f81, g, d);
        CHECK(chars.size() == euler_phi(factorize(d)));
        for (const auto& chi : chars) CHECK(chi.order == d);
        total += chars.size();
    }
    CHECK(total == 80); // sum of phi(d) over d | n

    CHECK_THROWS_AS(static_cast<void>(characters_of_order(*f81, g, 3)), Error);
}

TEST_CASE("character evaluation rejects foreign elements") {
    auto f9 = FieldCtx::build(3, 1, 2);
    auto other = FieldCtx::build(3, 1, 2);
    auto fn = factorize(8);
    FieldElem g = find_generator(*f9, fn);
    DLogTable t = DLogTable::build(f9, g);
    CharacterSpec chi = character(*f9, g, 1);
    try {
        (void)char_eval(chi, other->one(), t);
        FAIL("expected CtxMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == errc::ctx_mismatch);
    }
}

TEST_CASE("character evaluation") {
    auto f81 = FieldCtx::build(3, 1, 4);
    auto fn = factorize(80);
    FieldElem g = find_generator(*f81, fn);
    DLogTable t = DLogTable::build(f81, g);

    CharacterSpec triv = character(*f81, g, 0);
    CHECK(triv.order == 1);
    SplitMix64 rng(31);
    for (int i = 0; i < 10; ++i) {
        FieldElem a = f81->element_at(1 + rng.below(80));
        CHECK(std::abs(char_eval(triv, a, t) - std::complex<double>{1.0, 0.0}) < 1e-12);
    }

    for (u64 j = 0; j < 80; ++j) {
        CharacterSpec chi = character(*f81, g, j);
        CHECK(chi.order == 80 / gcd_u64(j == 0 ? 80 : j, 80));
        // chi(1) = 1 and chi(0) = 0
        CHECK(std::abs(char_eval(chi, f81->one(), t) - std::complex<double>{1.0, 0.0}) < 1e-12);
        CHECK(std::abs(char_eval(chi, f81->zero(), t)) == 0.0);
        // orthogonality: nontrivial characters sum to zero over the group
        if (j != 0) {
            std::complex<double> sum{0.0, 0.0};
            for (u64 idx = 1; idx < 81; ++idx) sum += char_eval(chi, f81->element_at(idx), t);
            CHECK(std::abs(sum) < 1e-8);
        }
        // multiplicativity on random pairs
        for (int i = 0; i < 8; ++i) {
            FieldElem a = f81->element_at(1 + rng.below(80));
            FieldElem b = f81->element_at(1 + rng.below(80));
            auto lhs = char_eval(chi, f81->mul(a, b), t);
            auto rhs = char_eval(chi, a, t) * char_eval(chi, b, t);
            CHECK(std::abs(lhs - rhs) < 1e-10);
        }
    }
}
