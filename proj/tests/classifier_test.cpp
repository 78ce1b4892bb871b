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
using oracles::on_support;

Complex delta(const DeltaInvariants &d, const std::string &name) {
    for (const auto &x : d)
        if (x.name == name) return x.value;
    ADD_FAILURE() << "missing " << name;
    return 0;
}

TEST(ComputeDeltas, Examples) {
    const auto &k = table_row("4k");
    EXPECT_NEAR(std::abs(delta(compute_deltas(on_support({0, 1, 2, 3}, {1, 2, 3, 6}), k, FlipMask(0)), "D1") - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(delta(compute_deltas(on_support({0, 1, 2, 3}, {1, 1, 1, 2}), k, FlipMask(0)), "D1") - 2.0), 0, 1e-15);
    const auto &b = table_row("5b");
    EXPECT_NEAR(std::abs(delta(compute_deltas(on_support({0, 1, 2, 4, 5}, {1, 2, 3, 4, 8}), b, FlipMask(0)), "D5") - 1.0), 0, 1e-15);
}

TEST(ComputeDeltas, LettersFollowTheFlippedState) {
    // {4,5,6,7} flips onto 4k's support with mask 100; letters read after the flip.
    const auto s = on_support({4, 5, 6, 7}, {1, 1, 1, 2});
    const auto d = compute_deltas(s, table_row("4k"), FlipMask(4));
    EXPECT_NEAR(std::abs(delta(d, "D1") - 2.0), 0, 1e-15);
    try {
        compute_deltas(s, table_row("4k"), FlipMask(0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::WrongRow);
    }
}

TEST(ComputeDeltas, EightTermRowUsesRatioNames) {
    const auto d = compute_deltas(oracles::state({1, 2, 3, 4, 5, 6, 7, 8}), table_row("8"), FlipMask(0));
    ASSERT_EQ(d.size(), 6u);
    EXPECT_EQ(d[0].name, "ad/bc");
    EXPECT_NEAR(std::abs(d[0].value - Complex(4.0 / 6.0)), 0, 1e-15);
}

TEST(ComputeDeltas, InvariantUnderDiagonalFamily) {
    Rng rng(201);
    for (int i = 0; i < 2000; ++i) {
        const auto p = random_support(rng);
        const auto s = random_state(rng, AmplitudeLaw::Gaussian, p);
        const auto t = random_sio_triple(rng, FlipMask(0));
        const auto c = canonicalize_support(p);
        const auto before = compute_deltas(s, *c.row, c.flip);
        const auto after = compute_deltas(apply_sio_triple(t, s), *c.row, c.flip);
        ASSERT_EQ(before.size(), after.size());
        for (std::size_t j = 0; j < before.size(); ++j)
            EXPECT_LE(std::abs(after[j].value - before[j].value), 1e-7 * std::max(1.0, std::abs(before[j].value)));
    }
}

TEST(Classify, CanonicalStates) {
    const auto ghz = classify(oracles::ghz());
    EXPECT_EQ(ghz.row->id, "2g");
    EXPECT_EQ(ghz.slocc, SloccClass::GHZ);
    const auto w = classify(oracles::w_state());
    EXPECT_EQ(w.row->id, "3e");
    EXPECT_EQ(w.flip, FlipMask(1));
    EXPECT_EQ(w.slocc, SloccClass::W);
    const auto zero = classify(oracles::state({1, 0, 0, 0, 0, 0, 0, 0}));
    EXPECT_EQ(zero.row->id, "1");
    EXPECT_EQ(zero.slocc, SloccClass::FullySeparable);
    EXPECT_TRUE(zero.warnings.empty());
    EXPECT_EQ(apply_flip(w.normalized, w.flip).amplitudes()[0], w.normalized[1]);
}

TEST(Classify, WarnsNearThresholds) {
    // W plus a small |111> component: the tangle is 16t/9 on the normalized state.
    const auto c = classify(oracles::state({0, 1, 1, 0, 1, 0, 0, 1e-7}));
    EXPECT_TRUE(std::any_of(c.warnings.begin(), c.warnings.end(), [](const auto &w) { return w.find("three-tangle") != std::string::npos; }));
    const auto dust = classify(oracles::state({1, 1e-7, 0, 0, 0, 0, 0, 1}));
    EXPECT_FALSE(dust.warnings.empty());
}

TEST(SameClassByTable, Examples) {
    Rng rng(202);
    const auto p = SupportPattern::from_indices({0, 1, 2, 6});
    EXPECT_TRUE(same_class_by_table(random_state(rng, AmplitudeLaw::Gaussian, p), random_state(rng, AmplitudeLaw::Gaussian, p)));
    const auto two = on_support({0, 1, 2, 3}, {1, 1, 1, 2});
    const auto half = on_support({0, 1, 2, 3}, {1, 2, 1, 1});
    const auto three = on_support({0, 1, 2, 3}, {1, 1, 1, 3});
    EXPECT_TRUE(same_class_by_table(two, half));
    EXPECT_FALSE(same_class_by_table(two, three));
    EXPECT_FALSE(same_class_by_table(oracles::ghz(), oracles::w_state()));
    EXPECT_FALSE(same_class_by_table(two, half, {TableSource::Corrected, TableMutation::DropAlternates}));
}

TEST(SameClassByTable, ErrataRows) {
    Rng rng(203);
    // 6c: the BC flip fixes ad/bc and inverts af/de.
    const auto s = random_state(rng, AmplitudeLaw::Gaussian, table_row("6c").rep_support);
    const SIOLocalOperator x = SIOLocalOperator::antidiagonal(1, 1), id = SIOLocalOperator::diagonal(1, 1);
    const auto t = apply_sio_triple({{id, x, x}}, s);
    EXPECT_TRUE(solve_slicc_equivalence(s, t));
    EXPECT_TRUE(same_class_by_table(s, t));
    EXPECT_FALSE(same_class_by_table(s, t, {TableSource::Printed, TableMutation::None}));
    // 4e: independent states differ in ad/bc, which the print ignores.
    const auto p = table_row("4e").rep_support;
    const auto a = random_state(rng, AmplitudeLaw::Gaussian, p), b = random_state(rng, AmplitudeLaw::Gaussian, p);
    EXPECT_FALSE(solve_slicc_equivalence(a, b));
    EXPECT_FALSE(same_class_by_table(a, b));
    EXPECT_TRUE(same_class_by_table(a, b, {TableSource::Printed, TableMutation::None}));
}

TEST(SameClassByTable, EightTermCasesMatchSolverFamilies) {
    Rng rng(204);
    for (const auto &c : appendix_cases()) {
        for (int i = 0; i < 50; ++i) {
            const auto s = random_state(rng, AmplitudeLaw::Gaussian);
            const auto t = apply_sio_triple(random_sio_triple(rng, c.operator_mask), s);
            const auto v = compare_by_table(s, t);
            EXPECT_TRUE(v.same);
            EXPECT_EQ(v.matched, c.number);
        }
    }
}

TEST(SameClassByTable, AgreesWithSolverOnEveryRow) {
    Rng rng(205);
    for (const auto &row : row_registry()) {
        for (int i = 0; i < 40; ++i) {
            const auto s = random_state(rng, AmplitudeLaw::Gaussian, row.rep_support);
            const auto t = apply_sio_triple(random_sio_triple(rng), s);
            EXPECT_TRUE(same_class_by_table(s, t)) << row.id;
            const auto u = random_state(rng, AmplitudeLaw::Gaussian, row.rep_support.flipped(FlipMask(static_cast<unsigned>(rng.below(8)))));
            EXPECT_EQ(same_class_by_table(s, u), solve_slicc_equivalence(s, u).equivalent()) << row.id;
        }
    }
}

TEST(InfiniteClasses, FourKFamilyIsPairwiseInequivalent) {
    for (int t = 2; t <= 21; ++t)
        for (int u = t + 1; u <= 21; ++u) {
            const auto a = on_support({0, 1, 2, 3}, {1, 1, 1, Complex(t)});
            const auto b = on_support({0, 1, 2, 3}, {1, 1, 1, Complex(u)});
            EXPECT_FALSE(solve_slicc_equivalence(a, b));
            EXPECT_FALSE(same_class_by_table(a, b));
        }
}

}  // namespace
