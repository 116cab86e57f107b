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

#include "json_io.hpp"

#include <cmath>
#include <cstdio>

#include "errors.hpp"

namespace primavoid {

namespace {

u64 get_u64(const Json& j, const char* key, std::optional<u64> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        fail(errc::parse_error, std::string("missing field \"") + key + "\"");
    }
    const Json& v = j.at(key);
    if (!v.is_number_unsigned()) fail(errc::parse_error, std::string(key) + " must be a nonnegative integer");
    return v.get<u64>();
}

Poly poly_from_json(const BaseField& coeff_field, const Json& j) {
    if (!j.is_array()) fail(errc::parse_error, "polynomial must be an array of coefficients");
    Poly out;
    out.reserve(j.size());
    for (const Json& c : j) out.push_back(scalar_from_json(coeff_field, c));
    return out;
}

Json poly_to_json(const BaseField& coeff_field, const Poly& f) {
    Json out = Json::array();
    for (Scalar c : f) out.push_back(scalar_to_json(coeff_field, c));
    return out;
}

} // namespace

Json parse_json(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
    return j;
}

Json scalar_to_json(const BaseField& F, Scalar a) {
    if (F.s() == 1) return Json(a);
    Json out = Json::array();
    for (Scalar d : F.digits(a)) out.push_back(d);
    return out;
}

Scalar scalar_from_json(const BaseField& F, const Json& j) {
    if (j.is_number_unsigned()) {
        u64 v = j.get<u64>();
        if (v >= F.q()) fail(errc::parse_error, "scalar out of range for F_q");
        return static_cast<Scalar>(v);
    }
    if (j.is_array()) {
        if (j.size() != F.s()) fail(errc::parse_error, "scalar digit array must have length s");
        std::vector<Scalar> d;
        d.reserve(j.size());
        for (const Json& x : j) {
            if (!x.is_number_unsigned()) fail(errc::parse_error, "scalar digit must be an integer");
            u64 v = x.get<u64>();
            if (v >= F.p()) fail(errc::parse_error, "scalar digit out of range for F_p");
            d.push_back(static_cast<Scalar>(v));
        }
        return F.from_digits(d);
    }
    fail(errc::parse_error, "scalar must be an integer or a digit array");
}

Json field_to_json(const FieldCtx& ctx) {
    BaseField fp(ctx.p(), 1);
    Json out;
    out["p"] = ctx.p();
    out["s"] = ctx.s();
    out["r"] = ctx.r();
    if (ctx.s() > 1) out["base_modulus"] = poly_to_json(fp, ctx.base().modulus());
    out["top_modulus"] = poly_to_json(ctx.base(), ctx.top_modulus());
    return out;
}

FieldCtxPtr field_from_json(const Json& j) {
    if (!j.is_object()) fail(errc::parse_error, "field spec must be a JSON object");
    u64 p = get_u64(j, "p");
    u64 s = get_u64(j, "s", u64{1});
    u64 r = get_u64(j, "r");
    if (s < 1 || s > 64) fail(errc::parse_error, "s out of range");
    if (r < 2 || r > 64) fail(errc::degree_mismatch, "r must lie in [2, 64]");
    Poly base_mod, top_mod;
    if (j.contains("base_modulus")) {
        BaseField fp(p, 1);
        base_mod = poly_from_json(fp, j.at("base_modulus"));
    }
    if (j.contains("top_modulus")) {
        BaseField base(p, static_cast<u32>(s), base_mod);
        top_mod = poly_from_json(base, j.at("top_modulus"));
    }
    return FieldCtx::build(p, static_cast<u32>(s), static_cast<u32>(r), std::move(base_mod),
                           std::move(top_mod));
}

Json elem_to_json(const FieldCtx& ctx, const FieldElem& a) {
    Json out = Json::array();
    for (Scalar c : ctx.to_coords(a)) out.push_back(scalar_to_json(ctx.base(), c));
    return out;
}

FieldElem elem_from_json(const FieldCtx& ctx, const Json& j) {
    if (!j.is_array() || j.size() != ctx.r())
        fail(errc::parse_error, "element must be an array of r coordinates");
    std::vector<Scalar> coords;
    coords.reserve(j.size());
    for (const Json& c : j) coords.push_back(scalar_from_json(ctx.base(), c));
    return ctx.from_coords(coords);
}

Json config_to_json(const HyperplaneConfig& cfg) {
    const FieldCtx& ctx = *cfg.ctx();
    Json out;
    out["field"] = field_to_json(ctx);
    Json basis = Json::array();
    for (const FieldElem& b : cfg.basis()) basis.push_back(elem_to_json(ctx, b));
    out["basis"] = basis;
    Json c = Json::array();
    for (Scalar v : cfg.shifts()) c.push_back(scalar_to_json(ctx.base(), v));
    out["c"] = c;
    out["zero_in_coordinate_set"] = cfg.zero_in_coordinate_set();
    return out;
}

HyperplaneConfig config_from_json(const Json& j, FieldCtxPtr fallback_field) {
    if (!j.is_object()) fail(errc::parse_error, "config must be a JSON object");
    FieldCtxPtr ctx;
    if (j.contains("field"))
        ctx = field_from_json(j.at("field"));
    else if (fallback_field)
        ctx = std::move(fallback_field);
    else
        fail(errc::parse_error, "config does not name a field");

    if (j.contains("hyperplanes")) {
        const Json& hj = j.at("hyperplanes");
        if (!hj.is_array()) fail(errc::parse_error, "hyperplanes must be an array");
        std::vector<AffineHyperplane> hs;
        hs.reserve(hj.size());
        for (const Json& h : hj) {
            AffineHyperplane plane;
            if (!h.contains("normal") || !h.at("normal").is_array())
                fail(errc::parse_error, "hyperplane needs a normal array");
            for (const Json& c : h.at("normal"))
                plane.normal.push_back(scalar_from_json(ctx->base(), c));
            if (!h.contains("constant")) fail(errc::parse_error, "hyperplane needs a constant");
            plane.constant = scalar_from_json(ctx->base(), h.at("constant"));
            hs.push_back(std::move(plane));
        }
        return canonicalize(ctx, hs);
    }

    if (!j.contains("c")) fail(errc::parse_error, "config needs either c or hyperplanes");
    std::vector<Scalar> c;
    for (const Json& v : j.at("c")) c.push_back(scalar_from_json(ctx->base(), v));

    std::vector<FieldElem> basis;
    if (j.contains("basis")) {
        for (const Json& b : j.at("basis")) basis.push_back(elem_from_json(*ctx, b));
    } else {
        basis = ctx->basis();
    }
    return standard_config(ctx, std::move(basis), std::move(c));
}

Json report_to_json(const BoundReport& r) {
    Json out;
    out["quantity"] = r.quantity;
    out["exact_value"] = r.exact_value;
    out["bound_value"] = r.bound_value;
    out["holds"] = r.holds;
    out["slack"] = r.slack;
    Json meta;
    for (const auto& [k, v] : r.metadata) meta[k] = v;
    out["metadata"] = meta;
    return out;
}

Json factorization_to_json(const Factorization& f) {
    Json out;
    out["n"] = f.n;
    Json fs = Json::array();
    for (auto [p, e] : f.factors) fs.push_back(Json::array({p, e}));
    out["factors"] = fs;
    return out;
}

Json charspec_to_json(const FieldCtx& ctx, const CharacterSpec& chi) {
    Json out;
    out["generator"] = elem_to_json(ctx, chi.generator);
    out["index"] = chi.index;
    out["order"] = chi.order;
    out["trivial"] = chi.trivial();
    return out;
}

Json threshold_to_json(const ThresholdResult& t) {
    Json out;
    out["q"] = t.q;
    out["mode"] = t.mode == ThresholdMode::analytic_log_domain ? "analytic_log_domain" : "exact_scan";
    out["condition"] = t.condition;
    out["found"] = t.found;
    if (t.found) {
        out["r_min"] = t.r_min;
        out["r_min_log10"] = t.r_min_log10;
        out["lhs_at_r_min"] = t.lhs_at_rmin;
        out["rhs_at_r_min"] = t.rhs_at_rmin;
        out["lhs_at_r_min_minus_1"] = t.lhs_at_prev;
        out["rhs_at_r_min_minus_1"] = t.rhs_at_prev;
        out["bracket_verified"] = t.bracket_verified;
    }
    out["monotone_ok"] = t.monotone_ok;
    if (!t.note.empty()) out["note"] = t.note;
    if (!t.class_minima.empty()) out["class_minima_mod4"] = t.class_minima;
    Json trace = Json::array();
    for (const ThresholdSample& s : t.trace) {
        Json e;
        e["r_log10"] = s.r_log10;
        e["lhs"] = s.lhs;
        e["rhs"] = s.rhs;
        e["holds"] = s.holds;
        trace.push_back(e);
    }
    out["trace"] = trace;
    return out;
}

namespace {

Json base_report(const HyperplaneConfig& cfg, u64 cap, std::optional<u64> seed) {
    Json out;
    out["version"] = kVersion;
    out["field"] = field_to_json(*cfg.ctx());
    out["config"] = config_to_json(cfg);
    out["cap"] = cap;
    out["seed"] = seed ? Json(*seed) : Json(nullptr);
    return out;
}

} // namespace

Json build_count_report(const HyperplaneConfig& cfg, u64 cap, std::optional<u64> seed) {
    const FieldCtx& ctx = *cfg.ctx();
    Json out = base_report(cfg, cap, seed);
    out["command"] = "count";

    Factorization fn = factorize(ctx.order() - 1);
    out["order_factorization"] = factorization_to_json(fn);

    if (ctx.q() == 2) {
        // Only one element avoids all r hyperplanes when q = 2; check it directly.
        AvoidanceSet set = enumerate_avoidance_set(cfg, cap);
        FieldElem only = set.at(0);
        bool prim = !ctx.is_zero(only) && is_primitive(ctx, only, fn);
        out["warning"] = "q = 2: the avoidance set consists of a single element; "
                         "checking it directly";
        out["single_element"] = elem_to_json(ctx, only);
        out["single_element_primitive"] = prim;
        out["witness"] = prim ? elem_to_json(ctx, only) : Json(nullptr);
        out["counts"] = {{"brute_force", prim ? 1 : 0}, {"vinogradov", prim ? 1 : 0}, {"agree", true}};
        return out;
    }

    FieldElem g = find_generator(ctx, fn);
    DLogTable table = DLogTable::build(cfg.ctx(), g, cap);
    AvoidanceSet set = enumerate_avoidance_set(cfg, cap);

    const u64 vino = vinogradov_count(set, table, fn);
    const u64 brute = brute_force_count(cfg, fn, cap);
    out["counts"] = {{"vinogradov", vino}, {"brute_force", brute}, {"agree", vino == brute}};
    out["set_size"] = set.size();

    const u64 n = ctx.order() - 1;
    const double scale = static_cast<double>(n) / static_cast<double>(euler_phi(fn));
    const double scaled = scale * static_cast<double>(brute);
    const u64 w = squarefree_divisor_count(fn);
    const double lower = primitive_count_lower_bound(ctx.q(), ctx.r(), w);
    // The derivation separates the trivial character first, which gives the
    // slightly sharper intermediate value recorded alongside the stated bound.
    const double cbound = char_sum_bound(ctx.q(), ctx.r());
    const double intermediate =
        std::pow(static_cast<double>(ctx.q() - 1), static_cast<double>(ctx.r())) - 1.0 -
        cbound * (static_cast<double>(w) - 1.0);
    BoundReport lb = make_bound_report(
        "primitive_count_lower_bound", lower, scaled,
        {{"W", std::to_string(w)},
         {"note", "lower bound on (q^r-1)/phi(q^r-1) * count; negative values are reported as-is"},
         {"sharper_intermediate_bound", std::to_string(intermediate)}});
    out["lower_bound"] = report_to_json(lb);
    out["scaled_count"] = scaled;

    auto witness = first_primitive_in_set(cfg, fn, cap);
    out["witness"] = witness ? elem_to_json(ctx, *witness) : Json(nullptr);
    return out;
}

Json build_verify_report(const HyperplaneConfig& cfg, u64 cap, std::optional<u64> seed,
                         double tamper_scale) {
    const FieldCtx& ctx = *cfg.ctx();
    Json out = base_report(cfg, cap, seed);
    out["command"] = "verify-bounds";

    Factorization fn = factorize(ctx.order() - 1);
    FieldElem g = find_generator(ctx, fn);
    DLogTable table = DLogTable::build(cfg.ctx(), g, cap);

    bool all_hold = true;
    Json reports = Json::array();

    auto char_reports = verify_char_sum_bound(cfg, table, cap);
    double max_mag = 0.0;
    for (BoundReport& r : char_reports) {
        if (tamper_scale != 1.0) {
            r = make_bound_report(r.quantity, r.exact_value * tamper_scale, r.bound_value,
                                  r.metadata);
        }
        max_mag = std::max(max_mag, r.exact_value);
        all_hold = all_hold && r.holds;
        reports.push_back(report_to_json(r));
    }
    out["char_sum_max"] = max_mag;
    out["char_sum_bound"] = char_sum_bound(ctx.q(), ctx.r());

    BoundReport robin = robin_bound_check(ctx.order() - 1);
    all_hold = all_hold && robin.holds;
    reports.push_back(report_to_json(robin));

    const u64 brute = brute_force_count(cfg, fn, cap);
    const double scale =
        static_cast<double>(ctx.order() - 1) / static_cast<double>(euler_phi(fn));
    const u64 w = squarefree_divisor_count(fn);
    BoundReport lb = make_bound_report("primitive_count_lower_bound",
                                       primitive_count_lower_bound(ctx.q(), ctx.r(), w),
                                       scale * static_cast<double>(brute),
                                       {{"W", std::to_string(w)}});
    all_hold = all_hold && lb.holds;
    reports.push_back(report_to_json(lb));

    out["reports"] = reports;
    out["all_hold"] = all_hold;
    return out;
}

Json build_threshold_report(u64 q) {
    Json out;
    out["version"] = kVersion;
    out["command"] = "threshold";
    out["threshold"] = threshold_to_json(threshold_search(q));
    return out;
}

Json build_table_report() {
    Json out;
    out["version"] = kVersion;
    out["command"] = "table";
    Json rows = Json::array();
    for (u64 q : {3, 4, 5}) {
        Json row;
        row["q"] = q;
        const double v = existence_rhs_limit(q);
        row["rhs_limit"] = v;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6g", v);
        row["rhs_limit_printed"] = buf;
        rows.push_back(row);
    }
    out["limits"] = rows;
    return out;
}

} // namespace primavoid
