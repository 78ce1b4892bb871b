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

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace {

using namespace slicckit;
using lattice::IntMatrix;
using lattice::IntVector;

TEST(RowHermite, UnimodularTransform) {
    const IntMatrix m{{2, 4, 6}, {3, 6, 9}, {1, 0, 1}, {4, 2, 1}};
    const auto h = lattice::row_hermite(m);
    // U * M == H
    for (std::size_t i = 0; i < m.size(); ++i) {
        IntVector row(3, 0);
        for (std::size_t k = 0; k < m.size(); ++k)
            for (std::size_t j = 0; j < 3; ++j) row[j] += h.u[i][k] * m[k][j];
        EXPECT_EQ(row, h.h[i]);
    }
    EXPECT_EQ(h.rank(), 3u);
    for (std::size_t r = 0; r < h.rank(); ++r) EXPECT_GT(h.h[r][h.pivot_cols[r]], 0);
}

TEST(LeftKernel, SaturatedBasis) {
    // The lattice 2Z is not saturated: x^T (2 -2)^T = 0 gives (1,1).
    const IntMatrix m{{2}, {-2}};
    const auto k = lattice::left_kernel(m);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(lattice::content(k[0]), 1);
    EXPECT_TRUE(lattice::same_lattice(k, {{1, 1}}));
}

TEST(Lattice, MembershipAndEquality) {
    const IntMatrix a{{1, -1, 0}, {0, 1, -1}};
    EXPECT_TRUE(lattice::contains(a, {1, 0, -1}));
    EXPECT_FALSE(lattice::contains(a, {1, 0, 0}));
    EXPECT_TRUE(lattice::same_lattice(a, {{1, 0, -1}, {0, 1, -1}}));
    EXPECT_FALSE(lattice::same_lattice(a, {{2, -2, 0}, {0, 1, -1}}));
}

/// Every small kernel vector found by enumeration lies in the computed
/// lattice, and every basis vector annihilates M.
TEST(LeftKernel, MatchesEnumerationForEverySupportAndFamily) {
    for (unsigned bits = 1; bits < 256; ++bits) {
        const SupportPattern p(bits);
        for (unsigned f = 0; f < 8; ++f) {
            const auto m = exponent_matrix(p, FlipMask(f));
            const auto k = lattice::left_kernel(m.entries);
            for (const auto &u : k) {
                EXPECT_EQ(lattice::left_multiply(u, m.entries), IntVector(6, 0));
                EXPECT_EQ(lattice::content(u), 1);
            }
            EXPECT_EQ(k.size(), m.entries.size() - lattice::rank(m.entries));
            if (p.popcount() <= 6 && f == 0)
                for (const auto &v : oracles::enumerate_kernel(m.entries, 1)) EXPECT_TRUE(lattice::contains(k, v)) << bits;
        }
    }
}

TEST(LeftKernel, RankIsSizeMinusAffineSpan) {
    // |S| - (1 + dim aff S); the eight-term support gives 8 - 4 = 4.
    EXPECT_EQ(lattice::left_kernel(exponent_matrix(SupportPattern(255), FlipMask(0)).entries).size(), 4u);
    EXPECT_EQ(lattice::left_kernel(exponent_matrix(SupportPattern::from_indices({0, 1, 2, 3}), FlipMask(0)).entries).size(), 1u);
    EXPECT_EQ(lattice::left_kernel(exponent_matrix(SupportPattern::from_indices({0, 7}), FlipMask(0)).entries).size(), 0u);
}

}  // namespace
