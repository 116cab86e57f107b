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

#include <cmath>

#include "counting.hpp"
#include "errors.hpp"
#include "thresholds.hpp"

using namespace primavoid;

namespace {

// decimal-string comparison for big nonnegative integers
bool dec_less(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

} // namespace

TEST_CASE("threshold for q = 5 (pinned)") {
    ThresholdResult t = threshold_search(5);
    CHECK(t.condition == "general");
    CHECK(t.found);
    CHECK(t.r_min == "19126124");
    CHECK(t.bracket_verified);
    CHECK(t.monotone_ok);
    CHECK(t.r_min_log10 == doctest::Approx(7.2816269671).epsilon(1e-9));
    // cross-check the bracket with the double-domain evaluation: this r fits
    // in a double exactly, and the margin is far above double noise
    CHECK(existence_condition(5, 19126124.0).holds);
    CHECK_FALSE(existence_condition(5, 19126123.0).holds);
}

TEST_CASE("threshold for q = 4 (pinned, above 2^64)") {
    ThresholdResult t = threshold_search(4);
    CHECK(t.condition == "general");
    CHECK(t.found);
    CHECK(t.r_min == "30668739039322505552");
    CHECK(t.bracket_verified);
    CHECK(t.monotone_ok);
    REQUIRE(t.class_minima.size() == 4);
    // r_min is the smallest of the per-class crossings
    for (const auto& m : t.class_minima) CHECK_FALSE(dec_less(m, t.r_min));
}

TEST_CASE("threshold for q = 3 routes to the sparse-set condition (pinned)") {
    ThresholdResult t = threshold_search(3);
    CHECK(t.condition == "q3");
    CHECK(t.found);
    CHECK(t.r_min ==
          "5492341574507449189524858053147556019222353344364081569063188750232166706271");
    CHECK(t.bracket_verified);
    CHECK(t.monotone_ok);
    CHECK_FALSE(t.note.empty());
    CHECK(std::fabs(t.rhs_at_rmin - 1.00606) <= 1e-5);
    CHECK(t.r_min_log10 == doctest::Approx(75.7397575386).epsilon(1e-9));
}

TEST_CASE("ordering of the thresholds") {
    ThresholdResult t5 = threshold_search(5);
    ThresholdResult t4 = threshold_search(4);
    ThresholdResult t3 = threshold_search(3);
    CHECK(dec_less(t5.r_min, t4.r_min));
    CHECK(dec_less(t4.r_min, t3.r_min));
}

TEST_CASE("requesting the general condition for q = 3 fails loudly") {
    try {
        auto t = threshold_search(3, ThresholdMode::analytic_log_domain,
                                  ThresholdCondition::general);
        FAIL("expected NoThresholdBelowCap");
    } catch (const Error& e) {
        CHECK(e.code() == errc::no_threshold_below_cap);
    }
    CHECK_THROWS_AS(static_cast<void>(threshold_search(2)), Error);
}

TEST_CASE("exact scan finds nothing below the cap for q = 4 and 5") {
    for (u64 q : {4u, 5u}) {
        ThresholdResult t = threshold_search(q, ThresholdMode::exact_scan);
        CHECK_FALSE(t.found);
        CHECK_FALSE(t.note.empty());
        CHECK(t.monotone_ok);
    }
    // q = 3 scans the sparse-set condition and likewise finds nothing
    ThresholdResult t3 = threshold_search(3, ThresholdMode::exact_scan);
    CHECK(t3.condition == "q3");
    CHECK_FALSE(t3.found);
}

TEST_CASE("exact scan and analytic search agree where both apply") {
    // for larger q the crossing is small enough to scan directly
    ThresholdResult scan = threshold_search(37, ThresholdMode::exact_scan);
    REQUIRE(scan.found);
    ThresholdResult ana = threshold_search(37);
    REQUIRE(ana.found);
    CHECK(scan.r_min == ana.r_min);
    CHECK(scan.bracket_verified);
    CHECK(ana.bracket_verified);

    // and the bracket holds under direct double evaluation
    const double r = std::stod(scan.r_min);
    CHECK(existence_condition(37, r).holds);
    CHECK_FALSE(existence_condition(37, r - 1).holds);
}
