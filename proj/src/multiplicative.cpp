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

#include "multiplicative.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "errors.hpp"

namespace primavoid {

u64 multiplicative_order(const FieldCtx& ctx, const FieldElem& a, const Factorization& f) {
    ctx.require_same(a);
    if (ctx.is_zero(a)) fail(errc::zero_element, "zero has no multiplicative order");
    if (f.n != ctx.order() - 1)
        fail(errc::invalid_argument, "factorization must be of q^r - 1");
    u64 e = f.n;
    for (auto [p, k] : f.factors) {
        for (u32 i = 0; i < k; ++i) {
            if (ctx.pow(a, e / p) == ctx.one())
                e /= p;
            else
                break;
        }
    }
    return e;
}

bool is_primitive(const FieldCtx& ctx, const FieldElem& a, const Factorization& f) {
    ctx.require_same(a);
    if (ctx.is_zero(a)) fail(errc::zero_element, "zero is not in the multiplicative group");
    if (f.n != ctx.order() - 1)
        fail(errc::invalid_argument, "factorization must be of q^r - 1");
    for (auto [p, k] : f.factors) {
        (void)k;
        if (ctx.pow(a, f.n / p) == ctx.one()) return false;
    }
    return true;
}

FieldElem find_generator(const FieldCtx& ctx, const Factorization& f) {
    // Scan in coordinate-lex order with respect to the context basis.
    for (u64 t = 1; t < ctx.order(); ++t) {
        FieldElem cand = ctx.has_power_basis()
                             ? ctx.element_at(t)
                             : ctx.from_coords(ctx.element_at(t).v);
        if (ctx.is_zero(cand)) continue;
        if (is_primitive(ctx, cand, f)) return cand;
    }
    fail(errc::internal, "no generator found"); // unreachable for a valid field
}

namespace {

constexpr char kDlogMagic[5] = {'D', 'L', 'O', 'G', '1'};

u64 fnv1a(const std::string& s) {
    u64 h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string dlog_cache_key(const FieldCtx& ctx, const FieldElem& g) {
    std::ostringstream os;
    os << "p=" << ctx.p() << ";s=" << ctx.s() << ";r=" << ctx.r() << ";bm=";
    for (Scalar c : ctx.base().modulus()) os << c << ",";
    os << ";tm=";
    for (Scalar c : ctx.top_modulus()) os << c << ",";
    os << ";g=";
    for (Scalar c : g.v) os << c << ",";
    return os.str();
}

void put_u64le(std::string& out, u64 v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

u64 get_u64le(const unsigned char* p) {
    u64 v = 0;
    for (int i = 7; i >= 0; --i) v = (v << 8) | p[i];
    return v;
}

std::optional<std::string> env_cache_dir() {
    const char* dir = std::getenv("PRIMAVOID_CACHE_DIR");
    if (dir && *dir) return std::string(dir);
    return std::nullopt;
}

} // namespace

DLogTable DLogTable::build(FieldCtxPtr ctx, const FieldElem& g, u64 cap) {
    return build(std::move(ctx), g, cap, env_cache_dir());
}

DLogTable DLogTable::build(FieldCtxPtr ctx, const FieldElem& g, u64 cap,
                           const std::optional<std::string>& cache_dir) {
    ctx->require_same(g);
    if (cap > kEnumerationCap) cap = kEnumerationCap;
    if (ctx->order() > cap)
        fail(errc::field_too_large, "field order exceeds the enumeration cap");
    if (ctx->is_zero(g)) fail(errc::not_primitive, "zero cannot generate F_{q^r}^*");

    const u64 order = ctx->order();
    const u64 n = order - 1;
    const std::string key = dlog_cache_key(*ctx, g);
    const u64 key_hash = fnv1a(key);
    std::filesystem::path cache_file;
    if (cache_dir) {
        char hex[17];
        std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(key_hash));
        cache_file = std::filesystem::path(*cache_dir) / ("dlog_" + std::string(hex) + ".bin");
    }

    DLogTable t(ctx, g);

    if (cache_dir && std::filesystem::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        const size_t expect = 24 + 4 * n;
        if (data.size() == expect && std::equal(kDlogMagic, kDlogMagic + 5, data.begin()) &&
            static_cast<unsigned char>(data[5]) == 4) {
            const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
            if (get_u64le(bytes + 8) == order && get_u64le(bytes + 16) == key_hash) {
                t.table_.assign(order, 0xffffffffu);
                for (u64 i = 0; i < n; ++i) {
                    const unsigned char* rec = bytes + 24 + 4 * i;
                    t.table_[i + 1] = static_cast<u32>(rec[0]) | (static_cast<u32>(rec[1]) << 8) |
                                      (static_cast<u32>(rec[2]) << 16) |
                                      (static_cast<u32>(rec[3]) << 24);
                }
                return t;
            }
        }
        // Stale or foreign file: fall through and rebuild.
    }

    t.table_.assign(order, 0xffffffffu);
    FieldElem x = ctx->one();
    for (u64 k = 0; k < n; ++k) {
        u64 idx = ctx->index_of(x);
        if (t.table_[idx] != 0xffffffffu)
            fail(errc::not_primitive, "generator has order below q^r - 1");
        t.table_[idx] = static_cast<u32>(k);
        x = ctx->mul(x, g);
    }
    if (!(x == ctx->one())) fail(errc::internal, "generator power cycle did not close");

    if (cache_dir) {
        std::error_code ec;
        std::filesystem::create_directories(*cache_dir, ec);
        std::string blob;
        blob.reserve(24 + 4 * n);
        blob.append(kDlogMagic, 5);
        blob.push_back(4);
        blob.push_back(0);
        blob.push_back(0);
        put_u64le(blob, order);
        put_u64le(blob, key_hash);
        for (u64 i = 1; i < order; ++i) {
            u32 v = t.table_[i];
            for (int b = 0; b < 4; ++b) blob.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
        }
        std::ofstream out(cache_file, std::ios::binary | std::ios::trunc);
        out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
        // Cache writes are best effort; a failed write only costs a rebuild.
    }
    return t;
}

u32 DLogTable::dlog(const FieldElem& a) const {
    ctx_->require_same(a);
    if (ctx_->is_zero(a)) fail(errc::zero_element, "dlog of zero");
    return table_[ctx_->index_of(a)];
}

CharacterSpec character(const FieldCtx& ctx, const FieldElem& g, u64 j) {
    ctx.require_same(g);
    const u64 n = ctx.order() - 1;
    if (j >= n) fail(errc::invalid_argument, "character index must lie in [0, q^r-2]");
    return CharacterSpec{ctx.id(), g, j, n / gcd_u64(j == 0 ? n : j, n)};
}

std::vector<CharacterSpec> characters_of_order(const FieldCtx& ctx, const FieldElem& g, u64 d) {
    const u64 n = ctx.order() - 1;
    if (d == 0 || n % d != 0) fail(errc::not_a_divisor, "character order must divide q^r - 1");
    std::vector<CharacterSpec> out;
    for (u64 m = 0; m < d; ++m) {
        if (m == 0 && d != 1) continue;
        if (gcd_u64(m == 0 ? 1 : m, d) != 1) continue;
        out.push_back(CharacterSpec{ctx.id(), g, m * (n / d), d});
    }
    return out;
}

std::complex<double> char_eval_dlog(const CharacterSpec& chi, u64 k, u64 n) {
    const u64 m = static_cast<u64>((static_cast<unsigned __int128>(chi.index) * k) % n);
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    return std::polar(1.0, angle);
}

std::complex<double> char_eval(const CharacterSpec& chi, const FieldElem& a, const DLogTable& t) {
    const FieldCtx& ctx = *t.ctx();
    if (chi.ctx_id != ctx.id()) fail(errc::ctx_mismatch, "character belongs to a different field");
    ctx.require_same(a);
    if (ctx.is_zero(a)) return {0.0, 0.0};
    return char_eval_dlog(chi, t.dlog(a), ctx.order() - 1);
}

} // namespace primavoid
