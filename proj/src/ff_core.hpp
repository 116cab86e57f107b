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

// Finite field towers F_p c F_q c F_{q^r} with elements exposed as coordinate
// vectors over F_q.
//
// Encodings (also the wire format, see README):
//   * An F_q element is an integer in [0, q): the base-p digit d_i is the
//     coefficient of x^i in its polynomial representative (d_0 least
//     significant).
//   * An F_{q^r} element is a length-r vector of F_q values; internally these
//     are always coordinates with respect to the power basis 1, y, ..., y^{r-1}.
//   * The element index used by enumeration and the dlog table reads the
//     power-basis vector as a base-q number with coordinate 0 as the most
//     significant digit, so index order equals coordinate-lex order.
//   * Polynomials are dense coefficient vectors, low degree first.

#ifndef PRIMAVOID_FF_CORE_HPP
#define PRIMAVOID_FF_CORE_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "arith.hpp"

namespace primavoid {

using Scalar = u32;              // an encoded F_q value
using Poly = std::vector<Scalar>; // dense, low degree first

/// Desk-scale ceiling for operations that touch every field element.
inline constexpr u64 kEnumerationCap = u64{1} << 24;

/// Hard ceiling on the order of a constructible field context.
inline constexpr u64 kFieldOrderCap = u64{1} << 48;

/// The base level of a tower: F_{p^s}, a prime field when s = 1.
class BaseField {
public:
    /// modulus: monic irreducible of degree s over F_p, low-to-high; must be
    /// empty when s = 1, and may be empty for s > 1 to pick the first monic
    /// irreducible in base-q counting order (constant coefficient fastest).
    BaseField(u64 p, u32 s, Poly modulus = {});

    u64 p() const { return p_; }
    u32 s() const { return s_; }
    u64 q() const { return q_; }
    const Poly& modulus() const { return modulus_; } // empty when s == 1

    bool is_valid(Scalar a) const { return a < q_; }
    void require_valid(Scalar a) const;

    Scalar zero() const { return 0; }
    Scalar one() const { return 1; }

    Scalar add(Scalar a, Scalar b) const;
    Scalar sub(Scalar a, Scalar b) const;
    Scalar neg(Scalar a) const;
    Scalar mul(Scalar a, Scalar b) const;
    Scalar inv(Scalar a) const; // throws division_by_zero for 0
    Scalar div(Scalar a, Scalar b) const;
    Scalar pow(Scalar a, u64 e) const; // 0^0 = 1

    /// Base-p digits of an encoded value (coefficients low to high, s of them).
    std::vector<Scalar> digits(Scalar a) const;
    Scalar from_digits(const std::vector<Scalar>& d) const;

    bool operator==(const BaseField& o) const {
        return p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_;
    }

private:
    Scalar mul_slow(Scalar a, Scalar b) const;

    u64 p_;
    u32 s_;
    u64 q_;
    Poly modulus_;
    std::vector<Scalar> mul_tab_; // q*q entries when q <= 1024, else empty
    std::vector<Scalar> inv_tab_;
};

/// True iff f (monic, over base) is irreducible. Certified by exhaustive trial
/// division below a size cutoff and by gcd(x^{q^i} - x, f) = 1 for i <= n/2
/// above it.
bool is_irreducible(const BaseField& base, const Poly& f);

/// First monic irreducible of degree n over base, scanning candidates in
/// base-q counting order with the constant coefficient varying fastest.
Poly find_irreducible(const BaseField& base, u32 n);

class FieldCtx;

/// An element of F_{q^r}, stored as power-basis coordinates over F_q and tied
/// to its owning context by id.
struct FieldElem {
    u64 ctx_id = 0;
    std::vector<Scalar> v; // length r, v[i] = coefficient of y^i

    bool operator==(const FieldElem& o) const = default;
};

/// Immutable tower F_p c F_q c F_{q^r}. Shareable across threads; every
/// operation is a pure function of its inputs.
class FieldCtx {
public:
    /// Builds and validates a field context. Omitted moduli are chosen
    /// deterministically (first irreducible in counting order); an omitted
    /// basis means the power basis. A custom basis is given as r power-basis
    /// coordinate vectors and must have rank r over F_q.
    static std::shared_ptr<const FieldCtx> build(u64 p, u32 s, u32 r,
                                                 Poly base_modulus = {},
                                                 Poly top_modulus = {},
                                                 std::vector<std::vector<Scalar>> basis = {});

    u64 id() const { return id_; }
    u64 p() const { return base_.p(); }
    u32 s() const { return base_.s(); }
    u32 r() const { return r_; }
    u64 q() const { return base_.q(); }
    u64 order() const { return order_; }
    const BaseField& base() const { return base_; }
    const Poly& top_modulus() const { return top_modulus_; }
    const std::vector<FieldElem>& basis() const { return basis_; }
    bool has_power_basis() const { return power_basis_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem scalar(Scalar a) const; // constant embedding a * y^0
    FieldElem y() const;              // the adjoined root (0, 1, 0, ...)

    bool is_zero(const FieldElem& a) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem scalar_mul(Scalar a, const FieldElem& b) const;

    /// a^e with a^0 = 1, including 0^0 = 1.
    FieldElem pow(const FieldElem& a, u64 e) const;

    /// Sum a_i * basis_i for coordinates with respect to this context's basis.
    FieldElem from_coords(const std::vector<Scalar>& coords) const;
    /// Inverse of from_coords.
    std::vector<Scalar> to_coords(const FieldElem& a) const;

    /// Bijection between elements and [0, order): power-basis coordinates read
    /// as a base-q number, coordinate 0 most significant. Index 0 is the zero
    /// element.
    u64 index_of(const FieldElem& a) const;
    FieldElem element_at(u64 idx) const;

    /// Throws ctx_mismatch / degree_mismatch when a does not belong here.
    void require_same(const FieldElem& a) const;

private:
    FieldCtx(BaseField base, u32 r, Poly top_modulus,
             std::vector<std::vector<Scalar>> basis_coords);

    BaseField base_;
    u32 r_;
    u64 order_;
    Poly top_modulus_;
    std::vector<FieldElem> basis_;
    bool power_basis_;
    std::vector<Scalar> basis_mat_;     // r x r, column j = basis_[j], row-major
    std::vector<Scalar> basis_mat_inv_; // inverse, for to_coords
    u64 id_;
};

using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

} // namespace primavoid

#endif
