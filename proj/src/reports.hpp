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

#ifndef PRIMAVOID_REPORTS_HPP
#define PRIMAVOID_REPORTS_HPP

#include <cmath>
#include <map>
#include <string>

namespace primavoid {

/// Comparison record "exact_value <= bound_value": holds is decided with a
/// 1e-9 relative tolerance so float noise never flips a genuine inequality.
struct BoundReport {
    std::string quantity;
    double exact_value = 0.0;
    double bound_value = 0.0;
    bool holds = false;
    double slack = 0.0; // bound - exact
    std::map<std::string, std::string> metadata;
};

inline constexpr double kBoundRelTol = 1e-9;

inline BoundReport make_bound_report(std::string quantity, double exact, double bound,
                                     std::map<std::string, std::string> metadata = {}) {
    BoundReport r;
    r.quantity = std::move(quantity);
    r.exact_value = exact;
    r.bound_value = bound;
    r.slack = bound - exact;
    r.holds = exact <= bound + kBoundRelTol * std::max(1.0, std::fabs(bound));
    r.metadata = std::move(metadata);
    return r;
}

} // namespace primavoid

#endif
