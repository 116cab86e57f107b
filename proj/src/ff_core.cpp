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

#include "ff_core.hpp"

#include <atomic>

#include "errors.hpp"
#include "linalg.hpp"

namespace primavoid {

namespace {

constexpr u64 kBaseFieldCap = u64{1} << 20;
constexpr u64 kMulTableCap = 1024;

std::atomic<u64> g_next_ctx_id{1};

// --- dense polynomial helpers over a BaseField (low degree first) ---

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_mul(const BaseField& F, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
    }
    return out;
}

// Remainder of a modulo g (g need not be monic).
Poly poly_mod(const BaseField& F, Poly a, const Poly& g) {
    trim(a);
    Scalar lead_inv = F.inv(g.back());
    while (degree(a) >= degree(g)) {
        Scalar c = F.mul(a.back(), lead_inv);
        size_t off = a.size() - g.size();
        for (size_t j = 0; j < g.size(); ++j)
            a[off + j] = F.sub(a[off + j], F.mul(c, g[j]));
        trim(a);
    }
    return a;
}

Poly poly_gcd(const BaseField& F, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Scalar s = F.inv(a.back());
        for (auto& c : a) c = F.mul(s, c);
    }
    return a;
}

Poly poly_powmod(const BaseField& F, Poly base, u64 e, const Poly& m) {
    Poly result{1};
    base = poly_mod(F, std::move(base), m);
    while (e) {
        if (e & 1) result = poly_mod(F, poly_mul(F, result, base), m);
        base = poly_mod(F, poly_mul(F, base, base), m);
        e >>= 1;
    }
    return result;
}

// Decode candidate index into the non-leading coefficients of a monic degree-n
// polynomial: constant coefficient is the least significant base-q digit.
Poly decode_candidate(u64 c, u64 q, u32 n) {
    Poly f(n + 1, 0);
    for (u32 i = 0; i < n; ++i) {
        f[i] = static_cast<Scalar>(c % q);
        c /= q;
    }
    f[n] = 1;
    return f;
}

} // namespace

// ---------------------------------------------------------------- BaseField

BaseField::BaseField(u64 p, u32 s, Poly modulus) : p_(p), s_(s) {
    if (!is_prime_u64(p)) fail(errc::not_prime, "p = " + std::to_string(p) + " is not prime");
    if (s < 1) fail(errc::degree_mismatch, "base extension degree must be >= 1");
    u64 q = 1;
    for (u32 i = 0; i < s; ++i) {
        if (q > kBaseFieldCap / p) fail(errc::input_too_large, "base field order above 2^20");
        q *= p;
    }
    q_ = q;
    if (s == 1) {
        if (!modulus.empty())
            fail(errc::degree_mismatch, "base modulus must be absent for s = 1");
    } else {
        BaseField fp(p, 1);
        if (modulus.empty()) {
            modulus = find_irreducible(fp, s);
        } else {
            if (modulus.size() != s + 1)
                fail(errc::degree_mismatch, "base modulus must have degree s");
            for (Scalar c : modulus)
                if (c >= p) fail(errc::invalid_argument, "base modulus coefficient out of range");
            if (modulus.back() != 1)
                fail(errc::invalid_argument, "base modulus must be monic");
            if (!is_irreducible(fp, modulus))
                fail(errc::supplied_polynomial_reducible, "base modulus is reducible over F_p");
        }
        modulus_ = std::move(modulus);
    }
    if (q_ <= kMulTableCap) {
        mul_tab_.assign(static_cast<size_t>(q_) * q_, 0);
        for (u64 a = 0; a < q_; ++a)
            for (u64 b = a; b < q_; ++b) {
                Scalar v = mul_slow(static_cast<Scalar>(a), static_cast<Scalar>(b));
                mul_tab_[a * q_ + b] = v;
                mul_tab_[b * q_ + a] = v;
            }
        inv_tab_.assign(static_cast<size_t>(q_), 0);
        for (u64 a = 1; a < q_; ++a) {
            // a^(q-2) by square-and-multiply through the table
            Scalar r = 1, base = static_cast<Scalar>(a);
            u64 e = q_ - 2;
            while (e) {
                if (e & 1) r = mul_tab_[static_cast<size_t>(r) * q_ + base];
                base = mul_tab_[static_cast<size_t>(base) * q_ + base];
                e >>= 1;
            }
            inv_tab_[a] = r;
        }
    }
}

void BaseField::require_valid(Scalar a) const {
    if (!is_valid(a)) fail(errc::invalid_argument, "scalar out of range for F_q");
}

std::vector<Scalar> BaseField::digits(Scalar a) const {
    std::vector<Scalar> d(s_);
    u64 v = a;
    for (u32 i = 0; i < s_; ++i) {
        d[i] = static_cast<Scalar>(v % p_);
        v /= p_;
    }
    return d;
}

Scalar BaseField::from_digits(const std::vector<Scalar>& d) const {
    if (d.size() != s_) fail(errc::degree_mismatch, "digit vector length must equal s");
    u64 v = 0;
    for (u32 i = s_; i-- > 0;) {
        if (d[i] >= p_) fail(errc::invalid_argument, "digit out of range for F_p");
        v = v * p_ + d[i];
    }
    return static_cast<Scalar>(v);
}

Scalar BaseField::add(Scalar a, Scalar b) const {
    if (s_ == 1) return static_cast<Scalar>((u64{a} + b) % p_);
    u64 x = a, y = b, out = 0, pw = 1;
    while (x || y) {
        out += (x % p_ + y % p_) % p_ * pw;
        x /= p_;
        y /= p_;
        pw *= p_;
    }
    return static_cast<Scalar>(out);
}

Scalar BaseField::neg(Scalar a) const {
    if (s_ == 1) return static_cast<Scalar>(a == 0 ? 0 : p_ - a);
    u64 x = a, out = 0, pw = 1;
    while (x) {
        u64 d = x % p_;
        out += (d == 0 ? 0 : p_ - d) * pw;
        x /= p_;
        pw *= p_;
    }
    return static_cast<Scalar>(out);
}

Scalar BaseField::sub(Scalar a, Scalar b) const { return add(a, neg(b)); }

Scalar BaseField::mul_slow(Scalar a, Scalar b) const {
    if (s_ == 1) return static_cast<Scalar>(u64{a} * b % p_);
    auto da = digits(a);
    auto db = digits(b);
    std::vector<u64> conv(2 * s_ - 1, 0);
    for (u32 i = 0; i < s_; ++i)
        for (u32 j = 0; j < s_; ++j) conv[i + j] += u64{da[i]} * db[j];
    // reduce modulo the monic defining polynomial
    for (u32 i = 2 * s_ - 2; i >= s_; --i) {
        u64 c = conv[i] % p_;
        if (c) {
            u64 cneg = p_ - c;
            for (u32 j = 0; j < s_; ++j)
                conv[i - s_ + j] += cneg * modulus_[j];
        }
        conv[i] = 0;
        if (i == s_) break;
    }
    std::vector<Scalar> out(s_);
    for (u32 i = 0; i < s_; ++i) out[i] = static_cast<Scalar>(conv[i] % p_);
    return from_digits(out);
}

Scalar BaseField::mul(Scalar a, Scalar b) const {
    if (!mul_tab_.empty()) return mul_tab_[static_cast<size_t>(a) * q_ + b];
    return mul_slow(a, b);
}

Scalar BaseField::inv(Scalar a) const {
    if (a == 0) fail(errc::division_by_zero, "inverse of zero in F_q");
    if (!inv_tab_.empty()) return inv_tab_[a];
    return pow(a, q_ - 2);
}

Scalar BaseField::div(Scalar a, Scalar b) const { return mul(a, inv(b)); }

Scalar BaseField::pow(Scalar a, u64 e) const {
    Scalar r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

// ------------------------------------------------------------ irreducibility

bool is_irreducible(const BaseField& base, const Poly& f) {
    if (f.size() < 2) fail(errc::invalid_argument, "polynomial must have degree >= 1");
    if (f.back() != 1) fail(errc::invalid_argument, "irreducibility test expects a monic polynomial");
    for (Scalar c : f) base.require_valid(c);
    u32 n = static_cast<u32>(f.size() - 1);
    if (n == 1) return true;
    u64 q = base.q();

    // Exhaustive trial division by every monic divisor candidate of degree
    // <= n/2 when that stays cheap.
    u32 half = n / 2;
    bool small = true;
    u64 total = 0;
    for (u32 d = 1; d <= half && small; ++d) {
        u64 cnt = 1;
        for (u32 i = 0; i < d; ++i) {
            cnt *= q;
            if (cnt > 4096) {
                small = false;
                break;
            }
        }
        total += cnt;
        if (total > 8192) small = false;
    }
    if (small) {
        for (u32 d = 1; d <= half; ++d) {
            u64 count = 1;
            for (u32 i = 0; i < d; ++i) count *= q;
            for (u64 c = 0; c < count; ++c) {
                Poly g = decode_candidate(c, q, d);
                if (poly_mod(base, f, g).empty()) return false;
            }
        }
        return true;
    }

    // x^{q^i} mod f for i = 1..n/2; any irreducible factor of degree d <= n/2
    // shows up as a nontrivial gcd at i = d.
    Poly x{0, 1};
    Poly t = x;
    for (u32 i = 1; i <= half; ++i) {
        t = poly_powmod(base, t, q, f);
        Poly diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = base.sub(diff[1], 1);
        Poly g = poly_gcd(base, diff, f);
        if (degree(g) > 0) return false;
    }
    return true;
}

Poly find_irreducible(const BaseField& base, u32 n) {
    if (n < 1) fail(errc::invalid_argument, "degree must be >= 1");
    u64 q = base.q();
    u64 count = 1;
    for (u32 i = 0; i < n; ++i) {
        if (count > (u64{1} << 40) / q)
            fail(errc::input_too_large, "irreducible scan space too large");
        count *= q;
    }
    for (u64 c = 0; c < count; ++c) {
        Poly f = decode_candidate(c, q, n);
        if (is_irreducible(base, f)) return f;
    }
    fail(errc::internal, "no irreducible polynomial found"); // unreachable
}

// ------------------------------------------------------------------ FieldCtx

FieldCtx::FieldCtx(BaseField base, u32 r, Poly top_modulus,
                   std::vector<std::vector<Scalar>> basis_coords)
    : base_(std::move(base)), r_(r), top_modulus_(std::move(top_modulus)) {
    order_ = 1;
    for (u32 i = 0; i < r_; ++i) {
        if (order_ > kFieldOrderCap / base_.q())
            fail(errc::field_too_large, "field order above 2^48");
        order_ *= base_.q();
    }
    id_ = g_next_ctx_id.fetch_add(1);

    power_basis_ = basis_coords.empty();
    Mat m(r_, r_);
    if (power_basis_) {
        m = Mat::identity(r_);
        basis_coords.resize(r_);
        for (u32 j = 0; j < r_; ++j) {
            basis_coords[j].assign(r_, 0);
            basis_coords[j][j] = 1;
        }
    } else {
        if (basis_coords.size() != r_)
            fail(errc::length_mismatch, "basis must contain r elements");
        for (u32 j = 0; j < r_; ++j) {
            if (basis_coords[j].size() != r_)
                fail(errc::degree_mismatch, "basis vector length must equal r");
            for (Scalar c : basis_coords[j]) base_.require_valid(c);
            for (u32 i = 0; i < r_; ++i) m.at(i, j) = basis_coords[j][i];
        }
    }
    auto minv = inverse(base_, m);
    if (!minv) fail(errc::basis_not_independent, "basis does not have rank r over F_q");
    basis_mat_ = std::move(m.a);
    basis_mat_inv_ = std::move(minv->a);
    basis_.reserve(r_);
    for (u32 j = 0; j < r_; ++j) basis_.push_back(FieldElem{id_, basis_coords[j]});
}

std::shared_ptr<const FieldCtx> FieldCtx::build(u64 p, u32 s, u32 r, Poly base_modulus,
                                                Poly top_modulus,
                                                std::vector<std::vector<Scalar>> basis) {
    if (r < 2) fail(errc::degree_mismatch, "top extension degree must be >= 2");
    BaseField base(p, s, std::move(base_modulus));
    if (top_modulus.empty()) {
        top_modulus = find_irreducible(base, r);
    } else {
        if (top_modulus.size() != static_cast<size_t>(r) + 1)
            fail(errc::degree_mismatch, "top modulus must have degree r");
        for (Scalar c : top_modulus) base.require_valid(c);
        if (top_modulus.back() != 1)
            fail(errc::invalid_argument, "top modulus must be monic");
        if (!is_irreducible(base, top_modulus))
            fail(errc::supplied_polynomial_reducible, "top modulus is reducible over F_q");
    }
    return std::shared_ptr<const FieldCtx>(
        new FieldCtx(std::move(base), r, std::move(top_modulus), std::move(basis)));
}

FieldElem FieldCtx::zero() const { return FieldElem{id_, std::vector<Scalar>(r_, 0)}; }

FieldElem FieldCtx::one() const { return scalar(1); }

FieldElem FieldCtx::scalar(Scalar a) const {
    base_.require_valid(a);
    FieldElem e = zero();
    e.v[0] = a;
    return e;
}

FieldElem FieldCtx::y() const {
    FieldElem e = zero();
    e.v[1] = 1;
    return e;
}

bool FieldCtx::is_zero(const FieldElem& a) const {
    require_same(a);
    for (Scalar c : a.v)
        if (c != 0) return false;
    return true;
}

void FieldCtx::require_same(const FieldElem& a) const {
    if (a.ctx_id != id_) fail(errc::ctx_mismatch, "element belongs to a different field context");
    if (a.v.size() != r_) fail(errc::degree_mismatch, "element coordinate length must equal r");
}

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    require_same(a);
    require_same(b);
    FieldElem out{id_, std::vector<Scalar>(r_)};
    for (u32 i = 0; i < r_; ++i) out.v[i] = base_.add(a.v[i], b.v[i]);
    return out;
}

FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    require_same(a);
    require_same(b);
    FieldElem out{id_, std::vector<Scalar>(r_)};
    for (u32 i = 0; i < r_; ++i) out.v[i] = base_.sub(a.v[i], b.v[i]);
    return out;
}

FieldElem FieldCtx::neg(const FieldElem& a) const {
    require_same(a);
    FieldElem out{id_, std::vector<Scalar>(r_)};
    for (u32 i = 0; i < r_; ++i) out.v[i] = base_.neg(a.v[i]);
    return out;
}

FieldElem FieldCtx::scalar_mul(Scalar a, const FieldElem& b) const {
    require_same(b);
    base_.require_valid(a);
    FieldElem out{id_, std::vector<Scalar>(r_)};
    for (u32 i = 0; i < r_; ++i) out.v[i] = base_.mul(a, b.v[i]);
    return out;
}

FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    require_same(a);
    require_same(b);
    std::vector<Scalar> conv(2 * r_ - 1, 0);
    for (u32 i = 0; i < r_; ++i) {
        if (a.v[i] == 0) continue;
        for (u32 j = 0; j < r_; ++j)
            conv[i + j] = base_.add(conv[i + j], base_.mul(a.v[i], b.v[j]));
    }
    for (u32 i = 2 * r_ - 2; i >= r_; --i) {
        Scalar c = conv[i];
        if (c) {
            conv[i] = 0;
            for (u32 j = 0; j < r_; ++j)
                conv[i - r_ + j] = base_.sub(conv[i - r_ + j], base_.mul(c, top_modulus_[j]));
        }
        if (i == r_) break;
    }
    conv.resize(r_);
    return FieldElem{id_, std::move(conv)};
}

FieldElem FieldCtx::pow(const FieldElem& a, u64 e) const {
    require_same(a);
    FieldElem result = one(); // includes the 0^0 = 1 convention
    FieldElem base = a;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FieldElem FieldCtx::inv(const FieldElem& a) const {
    if (is_zero(a)) fail(errc::division_by_zero, "inverse of zero");
    return pow(a, order_ - 2);
}

FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const {
    if (is_zero(b)) fail(errc::division_by_zero, "division by zero");
    return mul(a, inv(b));
}

FieldElem FieldCtx::from_coords(const std::vector<Scalar>& coords) const {
    if (coords.size() != r_) fail(errc::degree_mismatch, "coordinate vector length must equal r");
    for (Scalar c : coords) base_.require_valid(c);
    FieldElem out{id_, std::vector<Scalar>(r_, 0)};
    if (power_basis_) {
        out.v = coords;
        return out;
    }
    for (u32 i = 0; i < r_; ++i) {
        Scalar acc = 0;
        for (u32 j = 0; j < r_; ++j)
            acc = base_.add(acc, base_.mul(basis_mat_[static_cast<size_t>(i) * r_ + j], coords[j]));
        out.v[i] = acc;
    }
    return out;
}

std::vector<Scalar> FieldCtx::to_coords(const FieldElem& a) const {
    require_same(a);
    if (power_basis_) return a.v;
    std::vector<Scalar> coords(r_, 0);
    for (u32 i = 0; i < r_; ++i) {
        Scalar acc = 0;
        for (u32 j = 0; j < r_; ++j)
            acc = base_.add(acc, base_.mul(basis_mat_inv_[static_cast<size_t>(i) * r_ + j], a.v[j]));
        coords[i] = acc;
    }
    return coords;
}

u64 FieldCtx::index_of(const FieldElem& a) const {
    require_same(a);
    u64 idx = 0;
    for (u32 i = 0; i < r_; ++i) idx = idx * base_.q() + a.v[i];
    return idx;
}

FieldElem FieldCtx::element_at(u64 idx) const {
    if (idx >= order_) fail(errc::invalid_argument, "element index out of range");
    FieldElem out{id_, std::vector<Scalar>(r_)};
    for (u32 i = r_; i-- > 0;) {
        out.v[i] = static_cast<Scalar>(idx % base_.q());
        idx /= base_.q();
    }
    return out;
}

} // namespace primavoid
