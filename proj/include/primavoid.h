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

/*
 * primavoid C API.
 *
 * Opaque handles plus status codes. Every function that can fail returns a
 * pv_status; on failure pv_last_error() holds a thread-local message valid
 * until the next failing call on the same thread. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * pv_string_free(); handles must be released with their _free function.
 *
 * JSON schemas (same as the CLI; see README):
 *   field   {"p":3,"s":1,"r":4,"base_modulus":[...]?,"top_modulus":[...]?}
 *   config  {"field":{...},"basis":[[...],...],"c":[...]} or
 *           {"field":{...},"hyperplanes":[{"normal":[...],"constant":k},...]}
 * Omitted moduli are selected deterministically. The hyperplane form is
 * canonicalized on load.
 */

#ifndef PRIMAVOID_H
#define PRIMAVOID_H

#include <stddef.h>
#include <stdint.h>

#ifndef PV_API
#if defined(_WIN32)
#define PV_API
#elif defined(__GNUC__)
#define PV_API __attribute__((visibility("default")))
#else
#define PV_API
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pv_status {
    PV_OK = 0,
    PV_ERR_INVALID_ARGUMENT = 1,
    PV_ERR_PARSE = 2,
    PV_ERR_IO = 3,
    PV_ERR_NOT_PRIME = 4,
    PV_ERR_POLY_REDUCIBLE = 5,
    PV_ERR_DEGREE_MISMATCH = 6,
    PV_ERR_CTX_MISMATCH = 7,
    PV_ERR_DIVISION_BY_ZERO = 8,
    PV_ERR_INPUT_TOO_LARGE = 9,
    PV_ERR_ZERO_ELEMENT = 10,
    PV_ERR_NOT_PRIMITIVE = 11,
    PV_ERR_FIELD_TOO_LARGE = 12,
    PV_ERR_NOT_A_DIVISOR = 13,
    PV_ERR_BASIS_NOT_INDEPENDENT = 14,
    PV_ERR_LENGTH_MISMATCH = 15,
    PV_ERR_WRONG_COUNT = 16,
    PV_ERR_NOT_GENERAL_POSITION = 17,
    PV_ERR_SET_TOO_LARGE = 18,
    PV_ERR_WRONG_CHARACTERISTIC = 19,
    PV_ERR_NUMERICAL_DRIFT = 20,
    PV_ERR_DOMAIN = 21,
    PV_ERR_NO_THRESHOLD = 22,
    PV_ERR_INTERNAL = 23
} pv_status;

typedef struct pv_field pv_field;   /* a validated finite field tower  */
typedef struct pv_config pv_config; /* a hyperplane configuration      */

PV_API const char* pv_version(void);
PV_API const char* pv_status_name(pv_status s);
PV_API const char* pv_last_error(void);
PV_API void pv_string_free(char* s);

/*
 * Field construction. Moduli are dense coefficient arrays, low degree first:
 * base_modulus over F_p (length s+1, required absent for s = 1), top_modulus
 * over F_q with encoded coefficients (length r+1). Pass NULL/0 to select the
 * first irreducible polynomial in counting order.
 */
PV_API pv_status pv_field_create(uint64_t p, uint32_t s, uint32_t r,
                          const uint32_t* base_modulus, size_t base_modulus_len,
                          const uint32_t* top_modulus, size_t top_modulus_len,
                          pv_field** out);
PV_API pv_status pv_field_from_json(const char* json, pv_field** out);
PV_API pv_status pv_field_to_json(const pv_field* f, char** out_json);
PV_API uint64_t pv_field_order(const pv_field* f);
PV_API uint64_t pv_field_q(const pv_field* f);
PV_API uint32_t pv_field_r(const pv_field* f);
PV_API void pv_field_free(pv_field* f);

/*
 * Configurations. The JSON loader accepts both schema forms; the standard
 * constructor takes the power basis with the given shift vector c (length r,
 * encoded F_q values); the random constructor draws a uniform invertible
 * basis and uniform shifts from a splitmix64 stream seeded with seed.
 */
PV_API pv_status pv_config_from_json(const char* json, pv_config** out);
PV_API pv_status pv_config_standard(const pv_field* f, const uint32_t* c, size_t c_len, pv_config** out);
PV_API pv_status pv_config_random(const pv_field* f, uint64_t seed, pv_config** out);
PV_API pv_status pv_config_to_json(const pv_config* cfg, char** out_json);
PV_API void pv_config_free(pv_config* cfg);

/*
 * Reports (JSON, deterministic for identical inputs). cap limits enumeration
 * work; 0 means the library default of 2^24. has_seed/seed only annotate the
 * report with the seed a random config was drawn from.
 */
PV_API pv_status pv_count_report(const pv_config* cfg, uint64_t cap, int has_seed, uint64_t seed,
                          char** out_json);
PV_API pv_status pv_verify_bounds_report(const pv_config* cfg, uint64_t cap, int has_seed, uint64_t seed,
                                  char** out_json);
PV_API pv_status pv_threshold_report(uint64_t q, char** out_json);
PV_API pv_status pv_limits_table_report(char** out_json);

/* (q-1)^(1/2) / q^(3/8), the large-r limit of the existence condition's RHS. */
PV_API pv_status pv_rhs_limit(uint64_t q, double* out);

#ifdef __cplusplus
}
#endif

#endif /* PRIMAVOID_H */
