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

// Configurations of r affine hyperplanes of F_{q^r} in general position and
// the avoidance set of elements lying on none of them.
//
// A configuration is carried in coordinate form: an F_q-basis b_1..b_r plus a
// shift vector (c_1..c_r), inducing hyperplanes A_j = { sum a_i b_i : a_j = c_j }.
// Any family of r hyperplanes in general position can be brought into this
// form (canonicalize): the r hyperplanes meet in a single point, and omitting
// one hyperplane at a time leaves a line through that point whose direction is
// the corresponding basis vector.

#ifndef PRIMAVOID_HYPERPLANES_HPP
#define PRIMAVOID_HYPERPLANES_HPP

#include <string>
#include <vector>

#include "ff_core.hpp"
#include "rng.hpp"

namespace primavoid {

/// { x : normal . coords(x) = constant }, coordinates w.r.t. the context basis.
struct AffineHyperplane {
    std::vector<Scalar> normal; // nonzero, length r
    Scalar constant = 0;
};

class HyperplaneConfig {
public:
    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<FieldElem>& basis() const { return basis_; }
    const std::vector<Scalar>& shifts() const { return c_; }
    u32 r() const { return ctx_->r(); }
    u64 q() const { return ctx_->q(); }

    /// True iff the all-coordinates-avoiding set contains 0, i.e. every c_i != 0.
    bool zero_in_coordinate_set() const { return zero_in_set_; }

    /// Coordinates of x with respect to the configuration basis.
    std::vector<Scalar> coords_of(const FieldElem& x) const;
    /// sum a_i b_i over the configuration basis.
    FieldElem combine(const std::vector<Scalar>& coords) const;

    /// Entry (i, j) of the inverse basis matrix (the map power coords -> config coords).
    Scalar coords_row(u32 i, u32 j) const { return mat_inv_[static_cast<size_t>(i) * ctx_->r() + j]; }

    /// FNV-1a hash of the canonical description, for report metadata.
    std::string hash_hex() const;

    friend HyperplaneConfig standard_config(FieldCtxPtr ctx, std::vector<FieldElem> basis,
                                            std::vector<Scalar> c);

private:
    HyperplaneConfig() = default;

    FieldCtxPtr ctx_;
    std::vector<FieldElem> basis_;
    std::vector<Scalar> c_;
    bool zero_in_set_ = false;
    std::vector<Scalar> mat_;     // columns = basis vectors (power coords)
    std::vector<Scalar> mat_inv_;
};

/// Validated configuration from a basis (rank r over F_q) and shift vector.
HyperplaneConfig standard_config(FieldCtxPtr ctx, std::vector<FieldElem> basis,
                                 std::vector<Scalar> c);
HyperplaneConfig standard_config(FieldCtxPtr ctx, std::vector<std::vector<Scalar>> basis_coords,
                                 std::vector<Scalar> c);

/// True iff the r normal vectors have rank r over F_q (equivalently: any k of
/// the hyperplanes intersect in an affine subspace of dimension r-k).
bool verify_general_position(const FieldCtx& ctx, const std::vector<AffineHyperplane>& hs);

/// Recovers (basis, shifts) from r hyperplanes in general position. Each basis
/// vector is normalized so its first nonzero coordinate is 1; when the field
/// is small enough the result is checked pointwise against the inputs.
HyperplaneConfig canonicalize(FieldCtxPtr ctx, const std::vector<AffineHyperplane>& hs);

/// The hyperplanes A_j induced by a configuration, in context coordinates.
std::vector<AffineHyperplane> induced_hyperplanes(const HyperplaneConfig& cfg);

/// The (q-1)^r elements whose configuration coordinates all differ from the
/// shifts, in odometer order (coordinate 1 most significant, each coordinate
/// running through its allowed values in increasing encoding order). Index t
/// of at(t) is stable and may be partitioned across workers.
class AvoidanceSet {
public:
    AvoidanceSet(const HyperplaneConfig& cfg, u64 cap);

    u64 size() const { return size_; }
    bool contains_zero() const { return cfg_->zero_in_coordinate_set(); }
    FieldElem at(u64 t) const;

    template <typename F>
    void for_each(F&& fn) const {
        for (u64 t = 0; t < size_; ++t) fn(at(t));
    }

private:
    const HyperplaneConfig* cfg_;
    u64 size_;
};

AvoidanceSet enumerate_avoidance_set(const HyperplaneConfig& cfg, u64 cap = kEnumerationCap);

/// True iff every configuration coordinate of x differs from the shift c_i.
bool membership(const HyperplaneConfig& cfg, const FieldElem& x);

/// q = 3 only: the image of { sum a_i b_i : a_i in {0,2} } under adding
/// sum (c_i - 1) b_i. Asserts set equality with the avoidance set and returns
/// the image (sorted by element index).
std::vector<FieldElem> sparse_shift_image(const HyperplaneConfig& cfg, u64 cap = kEnumerationCap);

/// Uniform invertible basis (rejection sampled) and uniform shifts.
HyperplaneConfig random_config(FieldCtxPtr ctx, SplitMix64& rng);

/// Uniform general-position family: invertible normal matrix, uniform constants.
std::vector<AffineHyperplane> random_hyperplanes(const FieldCtx& ctx, SplitMix64& rng);

} // namespace primavoid

#endif
