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

// JSON wire formats (see README for the schemas) and the report builders
// shared by the C API and the CLI. nlohmann::json keeps object keys sorted,
// so identical inputs serialize to identical bytes.

#ifndef PRIMAVOID_JSON_IO_HPP
#define PRIMAVOID_JSON_IO_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "counting.hpp"
#include "hyperplanes.hpp"
#include "thresholds.hpp"

namespace primavoid {

inline constexpr const char* kVersion = "1.0.0";

using Json = nlohmann::json;

// field spec: {"p":3,"s":1,"r":4,"base_modulus":[...]?,"top_modulus":[...]}
Json field_to_json(const FieldCtx& ctx);
FieldCtxPtr field_from_json(const Json& j);

// F_q scalar: plain integer when s = 1, else length-s array of F_p digits
// (low to high); encoded integers in [0, q) are accepted on input either way.
Json scalar_to_json(const BaseField& F, Scalar a);
Scalar scalar_from_json(const BaseField& F, const Json& j);

// element: array of r scalar coordinates with respect to the context basis
Json elem_to_json(const FieldCtx& ctx, const FieldElem& a);
FieldElem elem_from_json(const FieldCtx& ctx, const Json& j);

// config: {"field":..., "basis":[...], "c":[...]} or
//         {"field":..., "hyperplanes":[{"normal":[...], "constant":...}, ...]}
// The hyperplane form is canonicalized. fallback_field supplies the field
// when the config fragment does not embed one.
Json config_to_json(const HyperplaneConfig& cfg);
HyperplaneConfig config_from_json(const Json& j, FieldCtxPtr fallback_field = nullptr);

Json report_to_json(const BoundReport& r);
Json factorization_to_json(const Factorization& f);
Json charspec_to_json(const FieldCtx& ctx, const CharacterSpec& chi);
Json threshold_to_json(const ThresholdResult& t);

/// Parses a JSON document, mapping syntax errors to parse_error.
Json parse_json(const std::string& text);

// ---- composite reports (deterministic; embed field, config and version) ----

/// Counts primitive elements in the avoidance set by both routes, compares
/// them against each other and against the analytic lower bound, and names a
/// witness. For q = 2 the set is a single element which is checked directly.
Json build_count_report(const HyperplaneConfig& cfg, u64 cap, std::optional<u64> seed);

/// Character-sum bounds for every nontrivial character, the squarefree-divisor
/// bound at t = q^r - 1 and the primitive-count lower bound. tamper_scale
/// multiplies the exact sums (a fault-injection hook for tests; 1.0 = off).
Json build_verify_report(const HyperplaneConfig& cfg, u64 cap, std::optional<u64> seed,
                         double tamper_scale = 1.0);

Json build_threshold_report(u64 q);

/// The limits of the existence condition's RHS for q = 3, 4, 5.
Json build_table_report();

} // namespace primavoid

#endif
