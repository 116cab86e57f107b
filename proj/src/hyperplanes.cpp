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

#include "hyperplanes.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "errors.hpp"
#include "linalg.hpp"

namespace primavoid {

namespace {

// Cheap enough to run inside canonicalize without being felt.
constexpr u64 kPointwiseCheckCap = u64{1} << 14;

Scalar dot(const BaseField& F, const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
    Scalar acc = 0;
    for (size_t i = 0; i < a.size(); ++i) acc = F.add(acc, F.mul(a[i], b[i]));
    return acc;
}

void validate_hyperplanes(const FieldCtx& ctx, const std::vector<AffineHyperplane>& hs) {
    for (const auto& h : hs) {
        if (h.normal.size() != ctx.r())
            fail(errc::length_mismatch, "hyperplane normal length must equal r");
        bool all_zero = true;
        for (Scalar c : h.normal) {
            ctx.base().require_valid(c);
            if (c != 0) all_zero = false;
        }
        if (all_zero) fail(errc::invalid_argument, "hyperplane normal must be nonzero");
        ctx.base().require_valid(h.constant);
    }
}

} // namespace

std::vector<Scalar> HyperplaneConfig::coords_of(const FieldElem& x) const {
    ctx_->require_same(x);
    const BaseField& F = ctx_->base();
    const u32 r = ctx_->r();
    std::vector<Scalar> out(r, 0);
    for (u32 i = 0; i < r; ++i) {
        Scalar acc = 0;
        for (u32 j = 0; j < r; ++j)
            acc = F.add(acc, F.mul(mat_inv_[static_cast<size_t>(i) * r + j], x.v[j]));
        out[i] = acc;
    }
    return out;
}

FieldElem HyperplaneConfig::combine(const std::vector<Scalar>& coords) const {
    if (coords.size() != ctx_->r())
        fail(errc::length_mismatch, "coordinate vector length must equal r");
    const BaseField& F = ctx_->base();
    const u32 r = ctx_->r();
    FieldElem out{ctx_->id(), std::vector<Scalar>(r, 0)};
    for (u32 i = 0; i < r; ++i) {
        Scalar acc = 0;
        for (u32 j = 0; j < r; ++j)
            acc = F.add(acc, F.mul(mat_[static_cast<size_t>(i) * r + j], coords[j]));
        out.v[i] = acc;
    }
    return out;
}

std::string HyperplaneConfig::hash_hex() const {
    std::ostringstream os;
    os << ctx_->p() << "." << ctx_->s() << "." << ctx_->r() << "|";
    for (Scalar c : ctx_->top_modulus()) os << c << ",";
    os << "|";
    for (const auto& b : basis_) {
        for (Scalar c : b.v) os << c << ",";
        os << ";";
    }
    os << "|";
    for (Scalar c : c_) os << c << ",";
    const std::string s = os.str();
    u64 h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string(hex);
}

HyperplaneConfig standard_config(FieldCtxPtr ctx, std::vector<FieldElem> basis,
                                 std::vector<Scalar> c) {
    const u32 r = ctx->r();
    if (basis.size() != r) fail(errc::length_mismatch, "basis must contain r elements");
    if (c.size() != r) fail(errc::length_mismatch, "shift vector must have length r");
    for (Scalar ci : c) ctx->base().require_valid(ci);
    Mat m(r, r);
    for (u32 j = 0; j < r; ++j) {
        ctx->require_same(basis[j]);
        for (u32 i = 0; i < r; ++i) m.at(i, j) = basis[j].v[i];
    }
    auto minv = inverse(ctx->base(), m);
    if (!minv) fail(errc::basis_not_independent, "basis does not have rank r over F_q");

    HyperplaneConfig cfg;
    cfg.ctx_ = std::move(ctx);
    cfg.basis_ = std::move(basis);
    cfg.c_ = std::move(c);
    cfg.zero_in_set_ = std::all_of(cfg.c_.begin(), cfg.c_.end(), [](Scalar v) { return v != 0; });
    cfg.mat_ = std::move(m.a);
    cfg.mat_inv_ = std::move(minv->a);
    return cfg;
}

HyperplaneConfig standard_config(FieldCtxPtr ctx, std::vector<std::vector<Scalar>> basis_coords,
                                 std::vector<Scalar> c) {
    std::vector<FieldElem> basis;
    basis.reserve(basis_coords.size());
    for (auto& v : basis_coords) {
        if (v.size() != ctx->r()) fail(errc::degree_mismatch, "basis vector length must equal r");
        for (Scalar s : v) ctx->base().require_valid(s);
        basis.push_back(FieldElem{ctx->id(), std::move(v)});
    }
    return standard_config(std::move(ctx), std::move(basis), std::move(c));
}

bool verify_general_position(const FieldCtx& ctx, const std::vector<AffineHyperplane>& hs) {
    if (hs.size() != ctx.r()) fail(errc::wrong_count, "expected exactly r hyperplanes");
    validate_hyperplanes(ctx, hs);
    const u32 r = ctx.r();
    Mat m(r, r);
    for (u32 i = 0; i < r; ++i)
        for (u32 j = 0; j < r; ++j) m.at(i, j) = hs[i].normal[j];
    return rank(ctx.base(), m) == r;
}

HyperplaneConfig canonicalize(FieldCtxPtr ctx, const std::vector<AffineHyperplane>& hs) {
    if (!verify_general_position(*ctx, hs))
        fail(errc::not_general_position, "hyperplane normals do not have rank r");
    const BaseField& F = ctx->base();
    const u32 r = ctx->r();

    // Common intersection point gamma of all r hyperplanes.
    Mat n_all(r, r);
    std::vector<Scalar> consts(r);
    for (u32 i = 0; i < r; ++i) {
        for (u32 j = 0; j < r; ++j) n_all.at(i, j) = hs[i].normal[j];
        consts[i] = hs[i].constant;
    }
    auto gamma = solve(F, n_all, consts);
    if (!gamma) fail(errc::not_general_position, "hyperplane system is singular");

    // Omitting hyperplane j leaves a line; its direction is basis vector j,
    // normalized so the first nonzero coordinate is 1.
    std::vector<std::vector<Scalar>> dirs(r);
    for (u32 omit = 0; omit < r; ++omit) {
        Mat sub(r - 1, r);
        u32 row = 0;
        for (u32 i = 0; i < r; ++i) {
            if (i == omit) continue;
            for (u32 j = 0; j < r; ++j) sub.at(row, j) = hs[i].normal[j];
            ++row;
        }
        auto kern = kernel_basis(F, sub);
        if (kern.size() != 1)
            fail(errc::not_general_position, "omitted subsystem does not leave a line");
        std::vector<Scalar> dir = kern[0];
        Scalar lead = 0;
        for (Scalar v : dir) {
            if (v != 0) {
                lead = v;
                break;
            }
        }
        Scalar scale = F.inv(lead);
        for (auto& v : dir) v = F.mul(scale, v);
        dirs[omit] = std::move(dir);
    }

    // Express gamma in the recovered basis to obtain the shifts.
    Mat bmat(r, r);
    for (u32 j = 0; j < r; ++j)
        for (u32 i = 0; i < r; ++i) bmat.at(i, j) = dirs[j][i];
    auto c = solve(F, bmat, *gamma);
    if (!c) fail(errc::not_general_position, "recovered directions are not independent");

    // Back to field elements: the dirs are coordinates w.r.t. the context basis.
    std::vector<FieldElem> basis;
    basis.reserve(r);
    for (u32 j = 0; j < r; ++j) basis.push_back(ctx->from_coords(dirs[j]));
    HyperplaneConfig cfg = standard_config(ctx, std::move(basis), std::move(*c));

    if (ctx->order() <= kPointwiseCheckCap) {
        // Pointwise: x lies on input hyperplane j iff its j-th configuration
        // coordinate equals c_j.
        for (u64 t = 0; t < ctx->order(); ++t) {
            FieldElem x = ctx->element_at(t);
            auto xc = ctx->to_coords(x);
            auto cc = cfg.coords_of(x);
            for (u32 j = 0; j < r; ++j) {
                bool on_input = dot(F, hs[j].normal, xc) == hs[j].constant;
                bool on_induced = cc[j] == cfg.shifts()[j];
                if (on_input != on_induced)
                    fail(errc::internal, "canonicalized configuration does not match inputs");
            }
        }
    }
    return cfg;
}

std::vector<AffineHyperplane> induced_hyperplanes(const HyperplaneConfig& cfg) {
    const FieldCtx& ctx = *cfg.ctx();
    const u32 r = ctx.r();
    std::vector<AffineHyperplane> out(r);
    // Row j of the inverse basis matrix reads off the j-th configuration
    // coordinate of a power-coordinate vector; compose with the context basis
    // to express it against context coordinates.
    for (u32 j = 0; j < r; ++j) {
        out[j].constant = cfg.shifts()[j];
        out[j].normal.assign(r, 0);
    }
    const BaseField& F = ctx.base();
    for (u32 j = 0; j < r; ++j) {
        for (u32 col = 0; col < r; ++col) {
            // effect of context basis vector col on configuration coordinate j
            Scalar acc = 0;
            const FieldElem& bc = ctx.basis()[col];
            for (u32 k = 0; k < r; ++k)
                acc = F.add(acc, F.mul(cfg.coords_row(j, k), bc.v[k]));
            out[j].normal[col] = acc;
        }
    }
    return out;
}

AvoidanceSet::AvoidanceSet(const HyperplaneConfig& cfg, u64 cap) : cfg_(&cfg) {
    if (cap > kEnumerationCap) cap = kEnumerationCap;
    const u64 q = cfg.q();
    u64 size = 1;
    for (u32 i = 0; i < cfg.r(); ++i) {
        if (q > 1 && size > cap / (q - 1))
            fail(errc::set_too_large, "avoidance set exceeds the enumeration cap");
        size *= q - 1;
    }
    size_ = size;
}

FieldElem AvoidanceSet::at(u64 t) const {
    if (t >= size_) fail(errc::invalid_argument, "avoidance set index out of range");
    const u64 q = cfg_->q();
    const u32 r = cfg_->r();
    std::vector<Scalar> coords(r);
    for (u32 i = r; i-- > 0;) {
        u64 digit = t % (q - 1);
        t /= q - 1;
        // allowed values are 0..q-1 with c_i removed, in increasing order
        Scalar c = cfg_->shifts()[i];
        coords[i] = static_cast<Scalar>(digit < c ? digit : digit + 1);
    }
    return cfg_->combine(coords);
}

AvoidanceSet enumerate_avoidance_set(const HyperplaneConfig& cfg, u64 cap) {
    return AvoidanceSet(cfg, cap);
}

bool membership(const HyperplaneConfig& cfg, const FieldElem& x) {
    auto coords = cfg.coords_of(x);
    for (u32 i = 0; i < cfg.r(); ++i)
        if (coords[i] == cfg.shifts()[i]) return false;
    return true;
}

std::vector<FieldElem> sparse_shift_image(const HyperplaneConfig& cfg, u64 cap) {
    const FieldCtx& ctx = *cfg.ctx();
    if (ctx.q() != 3) fail(errc::wrong_characteristic, "sparse shift image needs q = 3");
    const u32 r = cfg.r();
    const u64 count = u64{1} << r;
    if (count > cap) fail(errc::set_too_large, "sparse image exceeds the enumeration cap");

    // shift = sum (c_i - 1) b_i
    std::vector<Scalar> shift_coords(r);
    const BaseField& F = ctx.base();
    for (u32 i = 0; i < r; ++i) shift_coords[i] = F.sub(cfg.shifts()[i], 1);
    FieldElem shift = cfg.combine(shift_coords);

    std::vector<FieldElem> image;
    image.reserve(count);
    std::vector<Scalar> coords(r);
    for (u64 mask = 0; mask < count; ++mask) {
        for (u32 i = 0; i < r; ++i) coords[i] = (mask >> (r - 1 - i)) & 1 ? 2 : 0;
        image.push_back(ctx.add(cfg.combine(coords), shift));
    }

    auto by_index = [&ctx](const FieldElem& a, const FieldElem& b) {
        return ctx.index_of(a) < ctx.index_of(b);
    };
    std::sort(image.begin(), image.end(), by_index);

    AvoidanceSet avoid = enumerate_avoidance_set(cfg, cap);
    if (avoid.size() != image.size())
        fail(errc::internal, "sparse image size disagrees with the avoidance set");
    std::vector<FieldElem> direct;
    direct.reserve(avoid.size());
    avoid.for_each([&direct](const FieldElem& e) { direct.push_back(e); });
    std::sort(direct.begin(), direct.end(), by_index);
    if (direct != image)
        fail(errc::internal, "sparse shift image differs from the avoidance set");
    return image;
}

HyperplaneConfig random_config(FieldCtxPtr ctx, SplitMix64& rng) {
    const u32 r = ctx->r();
    const u64 q = ctx->q();
    for (;;) {
        std::vector<std::vector<Scalar>> basis(r, std::vector<Scalar>(r));
        Mat m(r, r);
        for (u32 j = 0; j < r; ++j)
            for (u32 i = 0; i < r; ++i) {
                basis[j][i] = static_cast<Scalar>(rng.below(q));
                m.at(i, j) = basis[j][i];
            }
        if (rank(ctx->base(), m) != r) continue;
        std::vector<Scalar> c(r);
        for (u32 i = 0; i < r; ++i) c[i] = static_cast<Scalar>(rng.below(q));
        return standard_config(ctx, std::move(basis), std::move(c));
    }
}

std::vector<AffineHyperplane> random_hyperplanes(const FieldCtx& ctx, SplitMix64& rng) {
    const u32 r = ctx.r();
    const u64 q = ctx.q();
    for (;;) {
        Mat m(r, r);
        std::vector<AffineHyperplane> hs(r);
        for (u32 i = 0; i < r; ++i) {
            hs[i].normal.resize(r);
            for (u32 j = 0; j < r; ++j) {
                hs[i].normal[j] = static_cast<Scalar>(rng.below(q));
                m.at(i, j) = hs[i].normal[j];
            }
            hs[i].constant = static_cast<Scalar>(rng.below(q));
        }
        if (rank(ctx.base(), m) == r) return hs;
    }
}

} // namespace primavoid
