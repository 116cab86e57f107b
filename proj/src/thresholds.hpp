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

// Searches for the smallest extension degree r at which the existence
// conditions hold. The crossing degrees are astronomical (around 10^19 for
// q = 4 and beyond 10^75 for q = 3), so the search runs over exact big
// integers with 160-digit floats; doubles cannot tell adjacent integers apart
// up there.

#ifndef PRIMAVOID_THRESHOLDS_HPP
#define PRIMAVOID_THRESHOLDS_HPP

#include <string>
#include <vector>

#include "arith.hpp"

namespace primavoid {

enum class ThresholdMode { exact_scan, analytic_log_domain };
enum class ThresholdCondition { auto_route, general, q3 };

struct ThresholdSample {
    double r_log10 = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

struct ThresholdResult {
    u64 q = 0;
    ThresholdMode mode = ThresholdMode::analytic_log_domain;
    std::string condition;            // "general" or "q3"
    bool found = false;
    std::string r_min;                // decimal, empty when not found
    double r_min_log10 = 0.0;
    double lhs_at_rmin = 0.0, rhs_at_rmin = 0.0;
    double lhs_at_prev = 0.0, rhs_at_prev = 0.0;
    bool bracket_verified = false;    // condition holds at r_min, fails at r_min - 1
    bool monotone_ok = false;         // sampled LHS decrease across the bracket
    std::string note;
    std::vector<std::string> class_minima; // per residue class mod 4 (general condition)
    std::vector<ThresholdSample> trace;
};

/// Finds the crossing degree. For q = 3 the general condition is unsatisfiable
/// (its RHS limit is below 1); auto_route then records that and switches to
/// the q3 condition. Requesting the general condition for q = 3 explicitly
/// throws no_threshold_below_cap.
ThresholdResult threshold_search(u64 q, ThresholdMode mode = ThresholdMode::analytic_log_domain,
                                 ThresholdCondition cond = ThresholdCondition::auto_route);

/// Scan prefix used by exact_scan mode.
inline constexpr u64 kExactScanLimit = 1000000;

} // namespace primavoid

#endif
