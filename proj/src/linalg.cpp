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

#include "linalg.hpp"

#include "errors.hpp"

namespace primavoid {

namespace {

// Reduces m to row echelon form in place, returns pivot columns.
std::vector<u32> echelon(const BaseField& F, Mat& m) {
    std::vector<u32> pivots;
    u32 row = 0;
    for (u32 col = 0; col < m.cols && row < m.rows; ++col) {
        u32 pivot = row;
        while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
        if (pivot == m.rows) continue;
        if (pivot != row) {
            for (u32 j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(row, j));
        }
        Scalar s = F.inv(m.at(row, col));
        for (u32 j = 0; j < m.cols; ++j) m.at(row, j) = F.mul(s, m.at(row, j));
        for (u32 i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col) == 0) continue;
            Scalar f = m.at(i, col);
            for (u32 j = 0; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

u32 rank(const BaseField& F, Mat m) {
    return static_cast<u32>(echelon(F, m).size());
}

std::optional<Mat> inverse(const BaseField& F, const Mat& m) {
    if (m.rows != m.cols) fail(errc::invalid_argument, "inverse needs a square matrix");
    u32 n = m.rows;
    Mat aug(n, 2 * n);
    for (u32 i = 0; i < n; ++i) {
        for (u32 j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    auto pivots = echelon(F, aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Mat inv(n, n);
    for (u32 i = 0; i < n; ++i)
        for (u32 j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

std::optional<std::vector<Scalar>> solve(const BaseField& F, Mat A, std::vector<Scalar> b) {
    if (A.rows != A.cols || b.size() != A.rows)
        fail(errc::invalid_argument, "solve needs a square system");
    u32 n = A.rows;
    Mat aug(n, n + 1);
    for (u32 i = 0; i < n; ++i) {
        for (u32 j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, n) = b[i];
    }
    auto pivots = echelon(F, aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    std::vector<Scalar> x(n);
    for (u32 i = 0; i < n; ++i) x[i] = aug.at(i, n);
    return x;
}

std::vector<std::vector<Scalar>> kernel_basis(const BaseField& F, Mat A) {
    u32 n = A.cols;
    auto pivots = echelon(F, A);
    std::vector<bool> is_pivot(n, false);
    for (u32 c : pivots) is_pivot[c] = true;
    std::vector<std::vector<Scalar>> basis;
    for (u32 freecol = 0; freecol < n; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<Scalar> v(n, 0);
        v[freecol] = 1;
        // Each pivot row reads: x_pivot + sum(coeff * x_free) = 0.
        for (u32 i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(A.at(i, freecol));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<Scalar> mat_vec(const BaseField& F, const Mat& M, const std::vector<Scalar>& x) {
    if (x.size() != M.cols) fail(errc::invalid_argument, "mat_vec dimension mismatch");
    std::vector<Scalar> y(M.rows, 0);
    for (u32 i = 0; i < M.rows; ++i) {
        Scalar acc = 0;
        for (u32 j = 0; j < M.cols; ++j) acc = F.add(acc, F.mul(M.at(i, j), x[j]));
        y[i] = acc;
    }
    return y;
}

} // namespace primavoid
