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

#include "counting.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace primavoid {

namespace {

u32 ceil_3r4(u32 r) { return (3 * r + 3) / 4; }

// dlogs of the nonzero elements of the avoidance set, plus how many elements
// the set has in total (the flagged zero, when present, carries no dlog).
std::vector<u32> set_dlogs(const HyperplaneConfig& cfg, const DLogTable& t, u64 cap,
                           u64* total_out) {
    AvoidanceSet set = enumerate_avoidance_set(cfg, cap);
    std::vector<u32> ks;
    ks.reserve(set.size());
    const FieldCtx& ctx = *cfg.ctx();
    set.for_each([&](const FieldElem& x) {
        if (!ctx.is_zero(x)) ks.push_back(t.dlog(x));
    });
    if (total_out) *total_out = set.size();
    return ks;
}

std::complex<double> sum_over_dlogs(const CharacterSpec& chi, const std::vector<u32>& ks, u64 n) {
    std::complex<double> acc{0.0, 0.0};
    for (u32 k : ks) acc += char_eval_dlog(chi, k, n);
    return acc;
}

} // namespace

CharSum char_sum(const HyperplaneConfig& cfg, const CharacterSpec& chi, const DLogTable& t,
                 u64 cap) {
    const FieldCtx& ctx = *cfg.ctx();
    if (chi.ctx_id != ctx.id() || t.ctx()->id() != ctx.id())
        fail(errc::ctx_mismatch, "character/table belong to a different field");
    auto ks = set_dlogs(cfg, t, cap, nullptr);
    CharSum out;
    out.value = sum_over_dlogs(chi, ks, ctx.order() - 1);
    out.magnitude = std::abs(out.value);
    return out;
}

double char_sum_bound(u64 q, u32 r) {
    return std::sqrt(3.0) * std::pow(static_cast<double>(q - 1), r / 2.0) *
           std::pow(static_cast<double>(q), ceil_3r4(r) / 2.0);
}

std::vector<BoundReport> verify_char_sum_bound(const HyperplaneConfig& cfg, const DLogTable& t,
                                               u64 cap) {
    const FieldCtx& ctx = *cfg.ctx();
    if (t.ctx()->id() != ctx.id()) fail(errc::ctx_mismatch, "table belongs to a different field");
    const u64 n = ctx.order() - 1;
    auto ks = set_dlogs(cfg, t, cap, nullptr);
    const double bound = char_sum_bound(ctx.q(), ctx.r());
    const std::string hash = cfg.hash_hex();

    std::vector<BoundReport> reports;
    reports.reserve(n - 1);
    for (u64 j = 1; j < n; ++j) {
        CharacterSpec chi = character(ctx, t.generator(), j);
        double mag = std::abs(sum_over_dlogs(chi, ks, n));
        reports.push_back(make_bound_report(
            "char_sum", mag, bound,
            {{"q", std::to_string(ctx.q())},
             {"r", std::to_string(ctx.r())},
             {"j", std::to_string(j)},
             {"d", std::to_string(chi.order)},
             {"config", hash}}));
    }
    return reports;
}

double split_chain_bound(u64 q, u32 r, u32 k) {
    const double qd = static_cast<double>(q);
    return std::pow(qd - 1.0, r / 2.0) *
           std::sqrt(2.0 * std::pow(qd, 1.5 * r - k) + std::pow(qd, static_cast<double>(k)));
}

SplitProbe split_sum_probe(const HyperplaneConfig& cfg, const CharacterSpec& chi,
                           const DLogTable& t, u32 k, u64 cap, u64 pair_budget) {
    const FieldCtx& ctx = *cfg.ctx();
    if (chi.ctx_id != ctx.id() || t.ctx()->id() != ctx.id())
        fail(errc::ctx_mismatch, "character/table belong to a different field");
    const u32 r = ctx.r();
    if (k < 1 || k > r) fail(errc::invalid_argument, "split position must lie in [1, r]");
    const u64 q = ctx.q();
    const u64 n = ctx.order() - 1;

    // V' = span(b_1..b_k): all q^k combinations of the first k coordinates.
    u64 vp_size = 1;
    for (u32 i = 0; i < k; ++i) {
        if (vp_size > cap / q) fail(errc::set_too_large, "V' exceeds the enumeration cap");
        vp_size *= q;
    }
    std::vector<FieldElem> vprime;
    vprime.reserve(vp_size);
    {
        std::vector<Scalar> coords(r, 0);
        for (u64 idx = 0; idx < vp_size; ++idx) {
            u64 v = idx;
            for (u32 i = k; i-- > 0;) {
                coords[i] = static_cast<Scalar>(v % q);
                v /= q;
            }
            vprime.push_back(cfg.combine(coords));
        }
    }

    // W: coordinates above k run through their avoiding values.
    u64 w_size = 1;
    for (u32 i = k; i < r; ++i) w_size *= q - 1;
    std::vector<FieldElem> wset;
    wset.reserve(w_size);
    {
        std::vector<Scalar> coords(r, 0);
        for (u64 idx = 0; idx < w_size; ++idx) {
            u64 v = idx;
            for (u32 i = r; i-- > k;) {
                u64 digit = v % (q - 1);
                v /= q - 1;
                Scalar c = cfg.shifts()[i];
                coords[i] = static_cast<Scalar>(digit < c ? digit : digit + 1);
            }
            wset.push_back(cfg.combine(coords));
        }
    }

    auto inner_sum = [&](const FieldElem& w1, const FieldElem& w2) {
        std::complex<double> acc{0.0, 0.0};
        for (const FieldElem& v : vprime) {
            FieldElem x = ctx.add(v, w1);
            FieldElem y = ctx.add(v, w2);
            if (ctx.is_zero(x) || ctx.is_zero(y)) continue; // chi(0) = 0
            acc += char_eval_dlog(chi, t.dlog(x), n) * std::conj(char_eval_dlog(chi, t.dlog(y), n));
        }
        return acc;
    };

    SplitProbe probe;
    probe.k = k;
    probe.w_size = w_size;

    // Off-diagonal pairs: all of them unless the pair count explodes, in which
    // case a deterministic stride sample.
    double max_inner = 0.0;
    u64 pairs = 0;
    const u64 total_pairs = w_size * w_size - w_size;
    u64 stride = 1;
    if (total_pairs > pair_budget && pair_budget > 0) stride = total_pairs / pair_budget + 1;
    u64 pair_index = 0;
    for (u64 i = 0; i < w_size; ++i) {
        for (u64 j = 0; j < w_size; ++j) {
            if (i == j) continue;
            if (pair_index++ % stride != 0) continue;
            max_inner = std::max(max_inner, std::abs(inner_sum(wset[i], wset[j])));
            ++pairs;
        }
    }
    probe.pairs_checked = pairs;
    const double inner_bound = 2.0 * std::pow(static_cast<double>(q), r / 2.0);
    probe.inner = make_bound_report("split_inner_sum", max_inner, inner_bound,
                                    {{"q", std::to_string(q)},
                                     {"r", std::to_string(r)},
                                     {"k", std::to_string(k)},
                                     {"pairs", std::to_string(pairs)},
                                     {"config", cfg.hash_hex()}});

    // Diagonal: |chi|^2 summed over V' counts the nonzero shifts, so the value
    // is q^k, dropping to q^k - 1 exactly when -w lies in V'.
    probe.diagonal_ok = true;
    const double qk = static_cast<double>(vp_size);
    for (const FieldElem& w : wset) {
        double diag = inner_sum(w, w).real();
        auto neg_coords = cfg.coords_of(ctx.neg(w));
        bool neg_in_vprime = true;
        for (u32 i = k; i < r; ++i)
            if (neg_coords[i] != 0) neg_in_vprime = false;
        const double expect = neg_in_vprime ? qk - 1.0 : qk;
        if (std::fabs(diag - expect) > 1e-6) probe.diagonal_ok = false;
    }

    CharSum s = char_sum(cfg, chi, t, cap);
    probe.chain = make_bound_report("split_chain", s.magnitude, split_chain_bound(q, r, k),
                                    {{"q", std::to_string(q)},
                                     {"r", std::to_string(r)},
                                     {"k", std::to_string(k)},
                                     {"config", cfg.hash_hex()}});
    return probe;
}

namespace {

u64 vinogradov_from_dlogs(const std::vector<u32>& ks, u64 set_total, const FieldCtx& ctx,
                          const Factorization& fn) {
    if (fn.n != ctx.order() - 1)
        fail(errc::invalid_argument, "factorization must be of q^r - 1");
    const u64 n = fn.n;
    const double phi_n = static_cast<double>(euler_phi(fn));

    // sum over squarefree d | n of mu(d)/phi(d) * sum over characters of
    // order d of the character sum; non-squarefree d contribute mu(d) = 0.
    std::complex<double> acc{0.0, 0.0};
    for (u64 d : squarefree_divisors(fn)) {
        Factorization fd = factorize(d);
        const double coef =
            static_cast<double>(moebius(fd)) / static_cast<double>(euler_phi(fd));
        std::complex<double> inner{0.0, 0.0};
        for (u64 m = 0; m < d; ++m) {
            if (m == 0 && d != 1) continue;
            if (gcd_u64(m == 0 ? 1 : m, d) != 1) continue;
            const u64 j = m * (n / d);
            for (u32 k : ks) {
                const u64 e = static_cast<u64>((static_cast<unsigned __int128>(j) * k) % n);
                inner += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) /
                                             static_cast<double>(n));
            }
        }
        acc += coef * inner;
    }
    const std::complex<double> scaled = acc * (phi_n / static_cast<double>(n));
    const double tol = 1e-6 * static_cast<double>(set_total) + 1e-6;
    const double rounded = std::round(scaled.real());
    if (std::fabs(scaled.imag()) >= tol || std::fabs(scaled.real() - rounded) >= tol ||
        rounded < 0.0)
        fail(errc::numerical_drift, "character-sum count did not round to an integer");
    return static_cast<u64>(rounded);
}

} // namespace

u64 vinogradov_count(const std::vector<FieldElem>& U, const DLogTable& t, const Factorization& fn) {
    const FieldCtx& ctx = *t.ctx();
    std::vector<u32> ks;
    ks.reserve(U.size());
    for (const FieldElem& x : U) {
        ctx.require_same(x);
        if (!ctx.is_zero(x)) ks.push_back(t.dlog(x));
    }
    return vinogradov_from_dlogs(ks, U.size(), ctx, fn);
}

u64 vinogradov_count(const AvoidanceSet& set, const DLogTable& t, const Factorization& fn) {
    u64 total = 0;
    std::vector<u32> ks;
    ks.reserve(set.size());
    const FieldCtx& ctx = *t.ctx();
    set.for_each([&](const FieldElem& x) {
        ++total;
        if (!ctx.is_zero(x)) ks.push_back(t.dlog(x));
    });
    return vinogradov_from_dlogs(ks, total, ctx, fn);
}

u64 brute_force_count(const HyperplaneConfig& cfg, const Factorization& fn, u64 cap) {
    const FieldCtx& ctx = *cfg.ctx();
    AvoidanceSet set = enumerate_avoidance_set(cfg, cap);
    u64 count = 0;
    set.for_each([&](const FieldElem& x) {
        if (!ctx.is_zero(x) && is_primitive(ctx, x, fn)) ++count;
    });
    return count;
}

std::optional<FieldElem> first_primitive_in_set(const HyperplaneConfig& cfg,
                                                const Factorization& fn, u64 cap) {
    const FieldCtx& ctx = *cfg.ctx();
    AvoidanceSet set = enumerate_avoidance_set(cfg, cap);
    for (u64 t = 0; t < set.size(); ++t) {
        FieldElem x = set.at(t);
        if (!ctx.is_zero(x) && is_primitive(ctx, x, fn)) return x;
    }
    return std::nullopt;
}

double primitive_count_lower_bound(u64 q, u32 r, u64 squarefree_divisors_of_order) {
    return std::pow(static_cast<double>(q - 1), static_cast<double>(r)) -
           char_sum_bound(q, r) * static_cast<double>(squarefree_divisors_of_order);
}

BoundReport robin_bound_check(u64 t) {
    if (t < 3) fail(errc::domain_error, "the squarefree-divisor bound needs t >= 3");
    const u64 w = squarefree_divisor_count(factorize(t));
    const double td = static_cast<double>(t);
    const double bound = std::exp(0.96 * std::log(td) / std::log(std::log(td)));
    return make_bound_report("squarefree_divisor_count", static_cast<double>(w), bound,
                             {{"t", std::to_string(t)}, {"W", std::to_string(w)}});
}

BoundReport existence_condition(u64 q, double r) {
    if (q < 2 || r < 2) fail(errc::domain_error, "existence condition needs q >= 2, r >= 2");
    const double lq = std::log(static_cast<double>(q));
    if (r * lq <= 1.0) fail(errc::domain_error, "log log q^r must be positive");
    const double lhs_log = 0.5 * std::log(3.0) / r + 0.96 * lq / std::log(r * lq);
    const double rhs_log =
        0.5 * std::log(static_cast<double>(q - 1)) - std::ceil(3.0 * r / 4.0) * lq / (2.0 * r);
    return make_bound_report("existence_condition_lhs", std::exp(lhs_log), std::exp(rhs_log),
                             {{"q", std::to_string(q)}, {"r", std::to_string(r)}});
}

double existence_rhs_limit(u64 q) {
    if (q < 2) fail(errc::domain_error, "rhs limit needs q >= 2");
    return std::sqrt(static_cast<double>(q - 1)) /
           std::pow(static_cast<double>(q), 3.0 / 8.0);
}

BoundReport q3_condition(double r) {
    if (r < 2) fail(errc::domain_error, "q3 condition needs r >= 2");
    const double l3 = std::log(3.0);
    const double lhs = std::exp(0.96 * l3 / std::log(r * l3));
    const double rhs = std::exp((1.0 - kGamma3) * std::log(2.0));
    return make_bound_report("q3_condition_lhs", lhs, rhs, {{"r", std::to_string(r)}});
}

DecayReport lhs_decay_check(u64 q, std::span<const double> r_grid) {
    DecayReport rep;
    rep.strictly_decreasing = true;
    rep.above_one = true;
    double prev = 0.0;
    for (double r : r_grid) {
        BoundReport c = existence_condition(q, r);
        rep.samples.push_back(DecaySample{r, c.exact_value});
        if (!rep.samples.empty() && rep.samples.size() > 1 && c.exact_value >= prev)
            rep.strictly_decreasing = false;
        if (c.exact_value <= 1.0) rep.above_one = false;
        prev = c.exact_value;
    }
    return rep;
}

} // namespace primavoid
