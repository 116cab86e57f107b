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

// Dense linear algebra over F_q via Gaussian elimination. Matrices are tiny
// (r x r with r <= ~24), so no pivoting strategy beyond "first nonzero".

#ifndef PRIMAVOID_LINALG_HPP
#define PRIMAVOID_LINALG_HPP

#include <optional>
#include <vector>

#include "ff_core.hpp"

namespace primavoid {

/// Row-major matrix over a BaseField.
struct Mat {
    u32 rows = 0;
    u32 cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(u32 rw, u32 cl) : rows(rw), cols(cl), a(static_cast<size_t>(rw) * cl, 0) {}

    Scalar& at(u32 i, u32 j) { return a[static_cast<size_t>(i) * cols + j]; }
    Scalar at(u32 i, u32 j) const { return a[static_cast<size_t>(i) * cols + j]; }

    static Mat identity(u32 n) {
        Mat m(n, n);
        for (u32 i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }
};

u32 rank(const BaseField& F, Mat m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Mat> inverse(const BaseField& F, const Mat& m);

/// Unique solution of the square system A x = b, or nullopt when A is singular.
std::optional<std::vector<Scalar>> solve(const BaseField& F, Mat A, std::vector<Scalar> b);

/// Basis of the null space of A (cols - rank vectors of length cols).
std::vector<std::vector<Scalar>> kernel_basis(const BaseField& F, Mat A);

/// y = M x for a square row-major matrix.
std::vector<Scalar> mat_vec(const BaseField& F, const Mat& M, const std::vector<Scalar>& x);

} // namespace primavoid

#endif
