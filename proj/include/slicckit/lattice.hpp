// Copyright 2026 The slicckit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact integer row reduction for the small exponent systems that arise from
// local diagonal/antidiagonal operators (at most 8 x 6 with 0/1 entries).

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace slicckit::lattice {

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;  // row-major

inline IntMatrix identity(std::size_t n) {
    IntMatrix id(n, IntVector(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline void axpy_row(IntVector &dst, const IntVector &src, std::int64_t q) {
    for (std::size_t j = 0; j < dst.size(); ++j) dst[j] -= q * src[j];
}

inline void negate_row(IntVector &row) {
    for (auto &x : row) x = -x;
}

/// U * M = H with U unimodular and H in reduced row echelon form over Z
/// (Hermite normal form): positive pivots, entries above a pivot in [0, pivot).
/// Rows of U past `rank` span the integer left kernel of M.
struct RowHermite {
    IntMatrix h;
    IntMatrix u;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank() const { return pivot_cols.size(); }
};

inline RowHermite row_hermite(const IntMatrix &m) {
    RowHermite out{m, identity(m.size()), {}};
    auto &h = out.h;
    auto &u = out.u;
    const std::size_t rows = h.size();
    const std::size_t cols = rows ? h[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        while (true) {
            std::size_t best = rows;
            for (std::size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 && (best == rows || std::abs(h[i][c]) < std::abs(h[best][c]))) best = i;
            if (best == rows) break;
            std::swap(h[r], h[best]);
            std::swap(u[r], u[best]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                std::int64_t q = floor_div(h[i][c], h[r][c]);
                axpy_row(h[i], h[r], q);
                axpy_row(u[i], u[r], q);
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            negate_row(h[r]);
            negate_row(u[r]);
        }
        for (std::size_t i = 0; i < r; ++i) {
            std::int64_t q = floor_div(h[i][c], h[r][c]);
            if (q == 0) continue;
            axpy_row(h[i], h[r], q);
            axpy_row(u[i], u[r], q);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

inline std::int64_t content(const IntVector &v) {
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x);
    return g;
}

/// Echelon basis of the lattice spanned by `generators`; zero rows dropped.
inline IntMatrix hermite_basis(const IntMatrix &generators) {
    if (generators.empty()) return {};
    auto hnf = row_hermite(generators);
    hnf.h.resize(hnf.rank());
    return hnf.h;
}

/// Saturated basis of {x in Z^rows : x^T M = 0}, in Hermite form, each vector
/// primitive.
inline IntMatrix left_kernel(const IntMatrix &m) {
    auto hnf = row_hermite(m);
    IntMatrix kernel(hnf.u.begin() + static_cast<std::ptrdiff_t>(hnf.rank()), hnf.u.end());
    kernel = hermite_basis(kernel);
    for (auto &v : kernel) {
        std::int64_t g = content(v);
        if (g > 1)
            for (auto &x : v) x /= g;
    }
    return kernel;
}

inline IntVector left_multiply(const IntVector &x, const IntMatrix &m) {
    IntVector out(m.empty() ? 0 : m[0].size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * m[i][j];
    return out;
}

inline std::size_t rank(const IntMatrix &m) { return m.empty() ? 0 : row_hermite(m).rank(); }

/// Integer membership of v in the lattice spanned by `generators`.
inline bool contains(const IntMatrix &generators, IntVector v) {
    auto basis = hermite_basis(generators);
    for (const auto &row : basis) {
        std::size_t p = 0;
        while (row[p] == 0) ++p;
        if (v[p] % row[p] != 0) return false;
        axpy_row(v, row, v[p] / row[p]);
    }
    for (auto x : v)
        if (x != 0) return false;
    return true;
}

inline bool same_lattice(const IntMatrix &a, const IntMatrix &b) {
    for (const auto &v : a)
        if (!contains(b, v)) return false;
    for (const auto &v : b)
        if (!contains(a, v)) return false;
    return true;
}

}  // namespace slicckit::lattice
