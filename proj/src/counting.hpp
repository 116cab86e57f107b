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

// Exact character sums and primitive-element counts over avoidance sets,
// together with the analytic bounds they are checked against.

#ifndef PRIMAVOID_COUNTING_HPP
#define PRIMAVOID_COUNTING_HPP

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "hyperplanes.hpp"
#include "multiplicative.hpp"
#include "reports.hpp"

namespace primavoid {

struct CharSum {
    std::complex<double> value;
    double magnitude = 0.0;
};

/// Exact sum of chi over the avoidance set (chi(0) = 0, so the question of
/// whether 0 belongs to the set cannot change the value).
CharSum char_sum(const HyperplaneConfig& cfg, const CharacterSpec& chi, const DLogTable& t,
                 u64 cap = kEnumerationCap);

/// sqrt(3) * (q-1)^(r/2) * q^(ceil(3r/4)/2): the avoidance-set character-sum
/// bound for nontrivial characters.
double char_sum_bound(u64 q, u32 r);

/// One report per nontrivial character: exact |s| against char_sum_bound.
std::vector<BoundReport> verify_char_sum_bound(const HyperplaneConfig& cfg, const DLogTable& t,
                                               u64 cap = kEnumerationCap);

/// The split underlying the character-sum bound: the avoidance set is V + W
/// with V over the first k coordinates and W over the rest, and V extends to
/// the full subspace V' spanned by the first k basis vectors.
struct SplitProbe {
    u32 k = 0;
    BoundReport inner;   // max |sum over V' of chi(v+w1) conj(chi(v+w2))|, w1 != w2, vs 2 q^{r/2}
    BoundReport chain;   // exact |s| vs (q-1)^{r/2} (2 q^{3r/2-k} + q^k)^{1/2}
    bool diagonal_ok = false; // every w1 = w2 sum is q^k, or q^k - 1 exactly when -w lies in V'
    u64 pairs_checked = 0;
    u64 w_size = 0;
};

SplitProbe split_sum_probe(const HyperplaneConfig& cfg, const CharacterSpec& chi,
                           const DLogTable& t, u32 k, u64 cap = kEnumerationCap,
                           u64 pair_budget = 10000);

/// (q-1)^{r/2} * sqrt(2 q^{3r/2-k} + q^k), the chain bound as a function of k.
double split_chain_bound(u64 q, u32 r, u32 k);

/// Count of primitive elements in U by the Moebius/phi-weighted double
/// character sum (complex arithmetic, rounded to the nearest integer; throws
/// numerical_drift if the rounding or imaginary part exceeds 1e-6*|U| + 1e-6).
u64 vinogradov_count(const std::vector<FieldElem>& U, const DLogTable& t, const Factorization& fn);
u64 vinogradov_count(const AvoidanceSet& set, const DLogTable& t, const Factorization& fn);

/// Independent oracle: enumerate the avoidance set and test each element for
/// primitivity by prime-wise exponentiation (no dlog table, no characters).
u64 brute_force_count(const HyperplaneConfig& cfg, const Factorization& fn,
                      u64 cap = kEnumerationCap);

/// First primitive element of the avoidance set in enumeration order, if any.
std::optional<FieldElem> first_primitive_in_set(const HyperplaneConfig& cfg,
                                                const Factorization& fn,
                                                u64 cap = kEnumerationCap);

/// (q-1)^r - sqrt(3) (q-1)^{r/2} q^{ceil(3r/4)/2} * W, the lower bound on
/// ((q^r-1)/phi(q^r-1)) * (primitive count in the avoidance set). Often
/// negative at desk scale; reported as-is.
double primitive_count_lower_bound(u64 q, u32 r, u64 squarefree_divisors_of_order);

/// Robin-type check W(t) < t^{0.96/log log t} for t >= 3 (natural logs).
BoundReport robin_bound_check(u64 t);

/// The shifted existence condition
///   (sqrt(3) q^{0.96 r / log log q^r})^{1/r} <= (q-1)^{1/2} / q^{ceil(3r/4)/(2r)}
/// evaluated in the log domain. holds == condition satisfied at this r.
BoundReport existence_condition(u64 q, double r);

/// Limit of the condition's right-hand side: (q-1)^{1/2} / q^{3/8}.
double existence_rhs_limit(u64 q);

/// Character-sum decay exponent used by the q = 3 route (the sparse-set
/// estimate gives |s| = O(2^{gamma r}) with gamma = 0.99128...).
inline constexpr double kGamma3 = 0.99128;

/// q = 3 existence condition: (q^{0.96 r / log log q^r})^{1/r} <= (q-1)/2^gamma.
BoundReport q3_condition(double r);

struct DecaySample {
    double r = 0.0;
    double lhs = 0.0;
};

struct DecayReport {
    std::vector<DecaySample> samples;
    bool strictly_decreasing = false;
    bool above_one = false;
};

/// Samples the condition's left-hand side on an increasing r grid; it must
/// stay above 1 and decrease toward it.
DecayReport lhs_decay_check(u64 q, std::span<const double> r_grid);

} // namespace primavoid

#endif
