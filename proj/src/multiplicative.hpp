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

// Multiplicative structure of F_{q^r}^*: element orders, primitivity,
// generators, discrete-log tables and multiplicative characters.

#ifndef PRIMAVOID_MULTIPLICATIVE_HPP
#define PRIMAVOID_MULTIPLICATIVE_HPP

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ff_core.hpp"

namespace primavoid {

/// Least e > 0 with a^e = 1. f must factor order-1.
u64 multiplicative_order(const FieldCtx& ctx, const FieldElem& a, const Factorization& f);

/// True iff a generates F_{q^r}^*: a^((q^r-1)/l) != 1 for every prime l.
bool is_primitive(const FieldCtx& ctx, const FieldElem& a, const Factorization& f);

/// First primitive element in coordinate-lex scan order (deterministic).
FieldElem find_generator(const FieldCtx& ctx, const Factorization& f);

/// Full table element -> exponent for a primitive g; q^r - 1 entries.
///
/// When a cache directory is configured (PRIMAVOID_CACHE_DIR or the explicit
/// argument) tables are persisted in a little-endian binary format:
///   bytes 0..4   magic "DLOG1"
///   byte  5      record width in bytes (4)
///   bytes 6..7   reserved (zero)
///   bytes 8..15  field order q^r (u64 LE)
///   bytes 16..23 FNV-1a hash of the (p,s,r,moduli,generator) key (u64 LE)
///   then q^r-1 u32 LE records; record i = dlog of the element with index i+1.
class DLogTable {
public:
    static DLogTable build(FieldCtxPtr ctx, const FieldElem& g, u64 cap = kEnumerationCap);
    static DLogTable build(FieldCtxPtr ctx, const FieldElem& g, u64 cap,
                           const std::optional<std::string>& cache_dir);

    const FieldCtxPtr& ctx() const { return ctx_; }
    const FieldElem& generator() const { return gen_; }
    u64 size() const { return ctx_->order() - 1; }

    /// Exponent k in [0, q^r-2] with g^k = a; throws zero_element for 0.
    u32 dlog(const FieldElem& a) const;

private:
    DLogTable(FieldCtxPtr ctx, FieldElem g) : ctx_(std::move(ctx)), gen_(std::move(g)) {}

    FieldCtxPtr ctx_;
    FieldElem gen_;
    std::vector<u32> table_; // indexed by element index; entry 0 is a sentinel
};

/// A multiplicative character chi of F_{q^r}: chi(g^k) = e^(2*pi*i*j*k/(q^r-1)).
struct CharacterSpec {
    u64 ctx_id = 0;
    FieldElem generator;
    u64 index = 0; // j in [0, q^r-2]; j = 0 is the trivial character
    u64 order = 0; // d = (q^r-1)/gcd(j, q^r-1)

    bool trivial() const { return index == 0; }
};

/// Character with index j relative to generator g.
CharacterSpec character(const FieldCtx& ctx, const FieldElem& g, u64 j);

/// The phi(d) characters of exact order d (d must divide q^r-1).
std::vector<CharacterSpec> characters_of_order(const FieldCtx& ctx, const FieldElem& g, u64 d);

/// chi(a), with chi(0) = 0 for every character including the trivial one.
std::complex<double> char_eval(const CharacterSpec& chi, const FieldElem& a, const DLogTable& t);

/// chi applied to a known exponent: e^(2*pi*i*j*k/n).
std::complex<double> char_eval_dlog(const CharacterSpec& chi, u64 k, u64 n);

} // namespace primavoid

#endif
