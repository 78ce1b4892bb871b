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

TEST(StateDocument, Parse) {
    const auto s = io::parse_state_text(R"({"amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,1]], "label": "ghz"})");
    EXPECT_EQ(s.label(), "ghz");
    EXPECT_EQ(s[7], Complex(0, 1));
}

TEST(StateDocument, Errors) {
    auto code = [](std::string_view text) {
        try {
            io::parse_state_text(text);
        } catch (const Error &e) {
            return e.code();
        }
        return ErrorCode::NoRow;
    };
    EXPECT_EQ(code("{not json"), ErrorCode::Parse);
    EXPECT_EQ(code("[]"), ErrorCode::Parse);
    EXPECT_EQ(code(R"({"amplitudes": [[1,0],[0,0]]})"), ErrorCode::BadArity);
    EXPECT_EQ(code(R"({"amplitudes": [1,0,0,0,0,0,0,0]})"), ErrorCode::Parse);
    EXPECT_EQ(code(R"({"amplitudes": [[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]})"), ErrorCode::AllZero);
    EXPECT_EQ(code(R"({"amplitudes": [[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]], "label": 3})"), ErrorCode::Parse);
}

TEST(StateDocument, RoundTripsExactly) {
    Rng rng(401);
    for (int i = 0; i < 500; ++i) {
        const auto s = random_state(rng, AmplitudeLaw::Gaussian, random_support(rng)).with_label("s" + std::to_string(i));
        const auto back = io::parse_state_text(io::state_document(s).dump());
        EXPECT_EQ(back.amplitudes(), s.amplitudes());
        EXPECT_EQ(back.label(), s.label());
    }
}

TEST(ClassificationReport, FieldsAndDeterminism) {
    const auto c = classify(oracles::w_state().with_label("W"));
    const auto j = io::classification_json(c);
    EXPECT_EQ(j["label"], "W");
    EXPECT_EQ(j["row"], "3e");
    EXPECT_EQ(j["flip"]["mask"], "001");
    EXPECT_EQ(j["flip"]["number"], 2);
    EXPECT_EQ(j["slocc"], "W");
    EXPECT_EQ(j["fine"]["bipartite"]["AB"]["coherent"], 1);
    EXPECT_EQ(j["fine"]["single"]["A"]["nature"], "MixedIncoherent");
    EXPECT_EQ(j.dump(), io::classification_json(classify(oracles::w_state().with_label("W"))).dump());
    // Normalized amplitudes survive serialization bit for bit.
    const auto back = io::Json::parse(j.dump());
    for (int k = 0; k < 8; ++k) EXPECT_EQ(io::parse_complex(back["normalized"][static_cast<std::size_t>(k)]), c.normalized[k]);
}

TEST(EquivalenceReport, Shapes) {
    const auto g = normalize(oracles::ghz());
    const auto s = normalize(oracles::state({2, 0, 0, 0, 0, 0, 0, 3}));
    const auto yes = io::equivalence_json(solve_slicc_equivalence(g, s), "slicc");
    EXPECT_EQ(yes["equivalent"], true);
    EXPECT_EQ(yes["family"]["mask"], "000");
    EXPECT_EQ(yes["witness"]["A"]["kind"], "diagonal");
    const auto no = io::equivalence_json(solve_licc_equivalence(g, s), "licc");
    EXPECT_EQ(no["equivalent"], false);
    EXPECT_EQ(no["reason"], "modulus mismatch");
}

TEST(RegistryExport, JsonAndMarkdown) {
    const auto j = io::registry_json();
    ASSERT_EQ(j.size(), 45u);
    EXPECT_EQ(j[7]["id"], "2g");
    EXPECT_EQ(j[7]["representative"], "a|000⟩+b|111⟩");
    EXPECT_TRUE(j[7]["kernel_conditions"].empty());
    EXPECT_EQ(j[43]["conditions"][0], "Δ₁'=Δ₁, Δ₂'=Δ₂, Δ₈'=Δ₈");
    EXPECT_EQ(j[44]["operator_cases"].size(), 8u);
    const auto md = io::registry_markdown();
    EXPECT_NE(md.find("| 7 | a|000⟩+b|001⟩+c|010⟩+d|011⟩+e|100⟩+f|101⟩+g|110⟩ | Δ₁'=Δ₁, Δ₂'=Δ₂, Δ₈'=Δ₈ |"), std::string::npos);
    EXPECT_NE(md.find("| 2g | a|000⟩+b|111⟩ | No |  |"), std::string::npos);
    EXPECT_NE(md.find("| 4k | a|000⟩+b|001⟩+c|010⟩+d|011⟩ | Δ₁'=Δ₁ or Δ₁'=1/Δ₁ |"), std::string::npos);
}

}  // namespace
