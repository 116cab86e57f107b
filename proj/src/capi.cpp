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

#include "primavoid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "json_io.hpp"

using namespace primavoid;

struct pv_field {
    FieldCtxPtr ctx;
};

struct pv_config {
    HyperplaneConfig cfg;
};

namespace {

thread_local std::string t_last_error;

pv_status map_errc(errc c) {
    switch (c) {
        case errc::ok: return PV_OK;
        case errc::invalid_argument: return PV_ERR_INVALID_ARGUMENT;
        case errc::parse_error: return PV_ERR_PARSE;
        case errc::io_error: return PV_ERR_IO;
        case errc::not_prime: return PV_ERR_NOT_PRIME;
        case errc::supplied_polynomial_reducible: return PV_ERR_POLY_REDUCIBLE;
        case errc::degree_mismatch: return PV_ERR_DEGREE_MISMATCH;
        case errc::ctx_mismatch: return PV_ERR_CTX_MISMATCH;
        case errc::division_by_zero: return PV_ERR_DIVISION_BY_ZERO;
        case errc::input_too_large: return PV_ERR_INPUT_TOO_LARGE;
        case errc::zero_element: return PV_ERR_ZERO_ELEMENT;
        case errc::not_primitive: return PV_ERR_NOT_PRIMITIVE;
        case errc::field_too_large: return PV_ERR_FIELD_TOO_LARGE;
        case errc::not_a_divisor: return PV_ERR_NOT_A_DIVISOR;
        case errc::basis_not_independent: return PV_ERR_BASIS_NOT_INDEPENDENT;
        case errc::length_mismatch: return PV_ERR_LENGTH_MISMATCH;
        case errc::wrong_count: return PV_ERR_WRONG_COUNT;
        case errc::not_general_position: return PV_ERR_NOT_GENERAL_POSITION;
        case errc::set_too_large: return PV_ERR_SET_TOO_LARGE;
        case errc::wrong_characteristic: return PV_ERR_WRONG_CHARACTERISTIC;
        case errc::numerical_drift: return PV_ERR_NUMERICAL_DRIFT;
        case errc::domain_error: return PV_ERR_DOMAIN;
        case errc::no_threshold_below_cap: return PV_ERR_NO_THRESHOLD;
        case errc::internal: return PV_ERR_INTERNAL;
    }
    return PV_ERR_INTERNAL;
}

template <typename Fn>
pv_status guarded(Fn&& fn) {
    try {
        fn();
        return PV_OK;
    } catch (const Error& e) {
        t_last_error = e.what();
        return map_errc(e.code());
    } catch (const std::bad_alloc&) {
        t_last_error = "out of memory";
        return PV_ERR_INTERNAL;
    } catch (const std::exception& e) {
        t_last_error = e.what();
        return PV_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

pv_status require(bool ok, const char* msg) {
    if (ok) return PV_OK;
    t_last_error = msg;
    return PV_ERR_INVALID_ARGUMENT;
}

double tamper_scale_from_env() {
    // Fault-injection hook for the test suite: scales exact character sums
    // before the bound comparison so violations can be exercised end to end.
    const char* v = std::getenv("PRIMAVOID_TAMPER_SCALE");
    if (!v || !*v) return 1.0;
    return std::strtod(v, nullptr);
}

std::optional<u64> opt_seed(int has_seed, uint64_t seed) {
    if (has_seed) return seed;
    return std::nullopt;
}

} // namespace

extern "C" {

const char* pv_version(void) { return kVersion; }

const char* pv_status_name(pv_status s) {
    switch (s) {
        case PV_OK: return "Ok";
        case PV_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case PV_ERR_PARSE: return "ParseError";
        case PV_ERR_IO: return "IoError";
        case PV_ERR_NOT_PRIME: return "NotPrime";
        case PV_ERR_POLY_REDUCIBLE: return "SuppliedPolynomialReducible";
        case PV_ERR_DEGREE_MISMATCH: return "DegreeMismatch";
        case PV_ERR_CTX_MISMATCH: return "CtxMismatch";
        case PV_ERR_DIVISION_BY_ZERO: return "DivisionByZero";
        case PV_ERR_INPUT_TOO_LARGE: return "InputTooLarge";
        case PV_ERR_ZERO_ELEMENT: return "ZeroElement";
        case PV_ERR_NOT_PRIMITIVE: return "NotPrimitive";
        case PV_ERR_FIELD_TOO_LARGE: return "FieldTooLarge";
        case PV_ERR_NOT_A_DIVISOR: return "NotADivisor";
        case PV_ERR_BASIS_NOT_INDEPENDENT: return "BasisNotIndependent";
        case PV_ERR_LENGTH_MISMATCH: return "LengthMismatch";
        case PV_ERR_WRONG_COUNT: return "WrongCount";
        case PV_ERR_NOT_GENERAL_POSITION: return "NotGeneralPosition";
        case PV_ERR_SET_TOO_LARGE: return "SetTooLarge";
        case PV_ERR_WRONG_CHARACTERISTIC: return "WrongCharacteristic";
        case PV_ERR_NUMERICAL_DRIFT: return "NumericalDrift";
        case PV_ERR_DOMAIN: return "DomainError";
        case PV_ERR_NO_THRESHOLD: return "NoThresholdBelowCap";
        case PV_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* pv_last_error(void) { return t_last_error.c_str(); }

void pv_string_free(char* s) { std::free(s); }

pv_status pv_field_create(uint64_t p, uint32_t s, uint32_t r, const uint32_t* base_modulus,
                          size_t base_modulus_len, const uint32_t* top_modulus,
                          size_t top_modulus_len, pv_field** out) {
    if (pv_status st = require(out != nullptr, "out must not be null"); st != PV_OK) return st;
    return guarded([&] {
        Poly base_mod(base_modulus, base_modulus ? base_modulus + base_modulus_len : base_modulus);
        Poly top_mod(top_modulus, top_modulus ? top_modulus + top_modulus_len : top_modulus);
        auto ctx = FieldCtx::build(p, s, r, std::move(base_mod), std::move(top_mod));
        *out = new pv_field{std::move(ctx)};
    });
}

pv_status pv_field_from_json(const char* json, pv_field** out) {
    if (pv_status st = require(json && out, "json and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out = new pv_field{field_from_json(parse_json(json))}; });
}

pv_status pv_field_to_json(const pv_field* f, char** out_json) {
    if (pv_status st = require(f && out_json, "field and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out_json = dup_string(field_to_json(*f->ctx).dump()); });
}

uint64_t pv_field_order(const pv_field* f) { return f ? f->ctx->order() : 0; }
uint64_t pv_field_q(const pv_field* f) { return f ? f->ctx->q() : 0; }
uint32_t pv_field_r(const pv_field* f) { return f ? f->ctx->r() : 0; }

void pv_field_free(pv_field* f) { delete f; }

pv_status pv_config_from_json(const char* json, pv_config** out) {
    if (pv_status st = require(json && out, "json and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out = new pv_config{config_from_json(parse_json(json))}; });
}

pv_status pv_config_standard(const pv_field* f, const uint32_t* c, size_t c_len, pv_config** out) {
    if (pv_status st = require(f && c && out, "field, c and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] {
        std::vector<Scalar> shifts(c, c + c_len);
        *out = new pv_config{standard_config(f->ctx, f->ctx->basis(), std::move(shifts))};
    });
}

pv_status pv_config_random(const pv_field* f, uint64_t seed, pv_config** out) {
    if (pv_status st = require(f && out, "field and out must not be null"); st != PV_OK) return st;
    return guarded([&] {
        SplitMix64 rng(seed);
        *out = new pv_config{random_config(f->ctx, rng)};
    });
}

pv_status pv_config_to_json(const pv_config* cfg, char** out_json) {
    if (pv_status st = require(cfg && out_json, "config and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out_json = dup_string(config_to_json(cfg->cfg).dump()); });
}

void pv_config_free(pv_config* cfg) { delete cfg; }

pv_status pv_count_report(const pv_config* cfg, uint64_t cap, int has_seed, uint64_t seed,
                          char** out_json) {
    if (pv_status st = require(cfg && out_json, "config and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] {
        const u64 effective = cap == 0 ? kEnumerationCap : cap;
        *out_json =
            dup_string(build_count_report(cfg->cfg, effective, opt_seed(has_seed, seed)).dump());
    });
}

pv_status pv_verify_bounds_report(const pv_config* cfg, uint64_t cap, int has_seed, uint64_t seed,
                                  char** out_json) {
    if (pv_status st = require(cfg && out_json, "config and out must not be null"); st != PV_OK)
        return st;
    return guarded([&] {
        const u64 effective = cap == 0 ? kEnumerationCap : cap;
        *out_json = dup_string(build_verify_report(cfg->cfg, effective, opt_seed(has_seed, seed),
                                                   tamper_scale_from_env())
                                   .dump());
    });
}

pv_status pv_threshold_report(uint64_t q, char** out_json) {
    if (pv_status st = require(out_json != nullptr, "out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out_json = dup_string(build_threshold_report(q).dump()); });
}

pv_status pv_limits_table_report(char** out_json) {
    if (pv_status st = require(out_json != nullptr, "out must not be null"); st != PV_OK)
        return st;
    return guarded([&] { *out_json = dup_string(build_table_report().dump()); });
}

pv_status pv_rhs_limit(uint64_t q, double* out) {
    if (pv_status st = require(out != nullptr, "out must not be null"); st != PV_OK) return st;
    return guarded([&] { *out = existence_rhs_limit(q); });
}

} // extern "C"
