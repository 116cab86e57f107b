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

#include "thresholds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "counting.hpp"
#include "errors.hpp"

namespace primavoid {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<160>>;

BigInt ceil_3r4(const BigInt& r) { return (3 * r + 3) / 4; }

struct CondValue {
    BigFloat lhs_log;
    BigFloat rhs_log;
    bool holds() const { return lhs_log <= rhs_log; }
};

// log-domain sides of the general condition at an exact integer r
CondValue eval_general(u64 q, const BigInt& r) {
    const BigFloat rf(r);
    const BigFloat lq = log(BigFloat(q));
    CondValue v;
    v.lhs_log = log(BigFloat(3)) / 2 / rf + BigFloat("0.96") * lq / log(rf * lq);
    v.rhs_log = log(BigFloat(q - 1)) / 2 - BigFloat(ceil_3r4(r)) * lq / (2 * rf);
    return v;
}

CondValue eval_q3(const BigInt& r) {
    const BigFloat rf(r);
    const BigFloat l3 = log(BigFloat(3));
    CondValue v;
    v.lhs_log = BigFloat("0.96") * l3 / log(rf * l3);
    v.rhs_log = (1 - BigFloat("0.99128")) * log(BigFloat(2));
    return v;
}

double to_double(const BigFloat& x) { return static_cast<double>(x); }

double log10_of(const BigInt& r) { return to_double(log(BigFloat(r)) / log(BigFloat(10))); }

ThresholdSample sample_at(u64 q, bool q3_route, const BigInt& r) {
    CondValue v = q3_route ? eval_q3(r) : eval_general(q, r);
    ThresholdSample s;
    s.r_log10 = log10_of(r);
    s.lhs = to_double(exp(v.lhs_log));
    s.rhs = to_double(exp(v.rhs_log));
    s.holds = v.holds();
    return s;
}

// Minimal r >= r_start with r = r_start (mod step) where the condition holds.
// Requires the condition to be monotone along this progression (the LHS is
// strictly decreasing in r; within a residue class mod 4 the general RHS is
// nondecreasing, and the q3 RHS is constant).
BigInt class_minimum(u64 q, bool q3_route, const BigInt& r_start, const BigInt& step,
                     std::vector<ThresholdSample>* trace) {
    auto holds = [&](const BigInt& r) {
        return (q3_route ? eval_q3(r) : eval_general(q, r)).holds();
    };
    if (holds(r_start)) return r_start;
    BigInt lo_m = 0; // in r = r_start + m*step coordinates; fails here
    BigInt hi_m = 1;
    int guard = 0;
    while (!holds(r_start + hi_m * step)) {
        lo_m = hi_m;
        hi_m *= 16;
        if (trace) trace->push_back(sample_at(q, q3_route, r_start + hi_m * step));
        if (++guard > 300) fail(errc::no_threshold_below_cap, "condition never became true");
    }
    while (hi_m - lo_m > 1) {
        BigInt mid = (lo_m + hi_m) / 2;
        if (holds(r_start + mid * step))
            hi_m = mid;
        else
            lo_m = mid;
    }
    return r_start + hi_m * step;
}

ThresholdResult analytic_search(u64 q, bool q3_route) {
    ThresholdResult res;
    res.q = q;
    res.mode = ThresholdMode::analytic_log_domain;
    res.condition = q3_route ? "q3" : "general";

    BigInt r_min;
    if (q3_route) {
        r_min = class_minimum(q, true, BigInt(2), BigInt(1), &res.trace);
    } else {
        // The ceil(3r/4) term makes the RHS 4-periodic in r, so handle each
        // residue class separately (each class is monotone) and take the
        // smallest crossing.
        bool first = true;
        for (u32 a = 0; a < 4; ++a) {
            BigInt start = a < 2 ? a + 4 : a; // smallest r >= 2 in the class
            BigInt m = class_minimum(q, false, start, BigInt(4), first ? &res.trace : nullptr);
            res.class_minima.push_back(m.str());
            if (first || m < r_min) r_min = m;
            first = false;
        }
    }

    res.found = true;
    res.r_min = r_min.str();
    res.r_min_log10 = log10_of(r_min);

    CondValue at = q3_route ? eval_q3(r_min) : eval_general(q, r_min);
    CondValue prev = q3_route ? eval_q3(r_min - 1) : eval_general(q, r_min - 1);
    res.lhs_at_rmin = to_double(exp(at.lhs_log));
    res.rhs_at_rmin = to_double(exp(at.rhs_log));
    res.lhs_at_prev = to_double(exp(prev.lhs_log));
    res.rhs_at_prev = to_double(exp(prev.rhs_log));
    res.bracket_verified = at.holds() && !prev.holds();

    // Sampled monotonicity of the LHS across the bracket.
    res.monotone_ok = true;
    BigFloat last_lhs;
    bool have_last = false;
    for (int sh : {4, 2, 1, 0}) {
        BigInt r = r_min >> sh;
        if (r < 2) continue;
        CondValue v = q3_route ? eval_q3(r) : eval_general(q, r);
        if (have_last && v.lhs_log >= last_lhs) res.monotone_ok = false;
        last_lhs = v.lhs_log;
        have_last = true;
        res.trace.push_back(sample_at(q, q3_route, r));
    }
    {
        BigInt r = r_min * 2;
        CondValue v = q3_route ? eval_q3(r) : eval_general(q, r);
        if (have_last && v.lhs_log >= last_lhs) res.monotone_ok = false;
        res.trace.push_back(sample_at(q, q3_route, r));
    }
    return res;
}

ThresholdResult exact_scan_search(u64 q, bool q3_route) {
    ThresholdResult res;
    res.q = q;
    res.mode = ThresholdMode::exact_scan;
    res.condition = q3_route ? "q3" : "general";
    res.monotone_ok = true;

    double prev_lhs = 0.0;
    bool prev_holds = false;
    bool have_prev = false;
    for (u64 r = 2; r <= kExactScanLimit; ++r) {
        BoundReport c = q3_route ? q3_condition(static_cast<double>(r))
                                 : existence_condition(q, static_cast<double>(r));
        if (r % (kExactScanLimit / 16) == 0 || r < 16) {
            ThresholdSample s;
            s.r_log10 = std::log10(static_cast<double>(r));
            s.lhs = c.exact_value;
            s.rhs = c.bound_value;
            s.holds = c.holds;
            res.trace.push_back(s);
        }
        if (have_prev && c.exact_value >= prev_lhs + 1e-15) res.monotone_ok = false;
        if (c.holds) {
            res.found = true;
            res.r_min = std::to_string(r);
            res.r_min_log10 = std::log10(static_cast<double>(r));
            res.lhs_at_rmin = c.exact_value;
            res.rhs_at_rmin = c.bound_value;
            if (have_prev) {
                res.bracket_verified = !prev_holds;
            } else {
                res.bracket_verified = true; // holds at the smallest admissible r
            }
            return res;
        }
        prev_lhs = c.exact_value;
        prev_holds = c.holds;
        have_prev = true;
    }
    res.note = "no crossing at or below r = " + std::to_string(kExactScanLimit);
    return res;
}

} // namespace

ThresholdResult threshold_search(u64 q, ThresholdMode mode, ThresholdCondition cond) {
    if (q < 3) fail(errc::domain_error, "threshold search needs q >= 3");

    bool q3_route = false;
    std::string note;
    switch (cond) {
        case ThresholdCondition::general:
            if (existence_rhs_limit(q) <= 1.0)
                fail(errc::no_threshold_below_cap,
                     "the general condition is unsatisfiable for q = " + std::to_string(q) +
                         ": its RHS limit is below 1 while the LHS stays above 1");
            break;
        case ThresholdCondition::q3:
            if (q != 3) fail(errc::domain_error, "the q3 condition applies to q = 3 only");
            q3_route = true;
            break;
        case ThresholdCondition::auto_route:
            if (existence_rhs_limit(q) <= 1.0) {
                if (q != 3)
                    fail(errc::no_threshold_below_cap,
                         "general condition unsatisfiable and no alternate route for q = " +
                             std::to_string(q));
                q3_route = true;
                note = "general condition unsatisfiable for q = 3 (RHS limit 0.936687 < 1); "
                       "using the q3 sparse-set condition instead";
            }
            break;
    }

    ThresholdResult res = mode == ThresholdMode::analytic_log_domain
                              ? analytic_search(q, q3_route)
                              : exact_scan_search(q, q3_route);
    if (!note.empty()) res.note = note;
    return res;
}

} // namespace primavoid
