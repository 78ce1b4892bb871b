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

// Representatives of the 45 orbits of supports under local flips, together
// with the printed invariant conditions that separate classes sharing a
// support. Coefficient letters a, b, c, ... name the amplitudes of the
// representative support in ascending basis-index order.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "slicckit/error.hpp"
#include "slicckit/lattice.hpp"
#include "slicckit/state.hpp"

namespace slicckit {

/// Delta_n = numerator / denominator, letters repeated for powers.
struct DeltaDefinition {
    int number;
    std::string_view numerator;
    std::string_view denominator;
};

inline constexpr std::array<DeltaDefinition, 11> kDeltas{{
    {1, "ad", "bc"},
    {2, "af", "be"},
    {3, "af", "ce"},
    {4, "af", "de"},
    {5, "ae", "bd"},
    {6, "af", "dc"},
    {7, "bf", "cd"},
    {8, "ag", "ce"},
    {9, "ae", "cd"},
    {10, "be", "cd"},
    {11, "aae", "bcd"},
}};

inline const DeltaDefinition &delta_definition(int number) {
    if (number < 1 || number > static_cast<int>(kDeltas.size())) throw std::out_of_range("no such delta");
    return kDeltas[static_cast<std::size_t>(number - 1)];
}

/// Delta'_delta = Delta_delta^exponent, exponent +1 or -1.
struct DeltaCondition {
    int delta;
    int exponent;
    friend bool operator==(const DeltaCondition &, const DeltaCondition &) = default;
};

/// Conjunction of delta conditions.
using ConditionDisjunct = std::vector<DeltaCondition>;

/// (primed_num / primed_den) of the target equals (num / den) of the source.
struct RatioCondition {
    std::string primed_num;
    std::string primed_den;
    std::string num;
    std::string den;
    friend bool operator==(const RatioCondition &, const RatioCondition &) = default;

    std::string to_string() const { return primed(primed_num) + "/" + primed(primed_den) + " = " + num + "/" + den; }

   private:
    static std::string primed(const std::string &s) {
        std::string out;
        for (char c : s) {
            out.push_back(c);
            out.push_back('\'');
        }
        return out;
    }
};

/// One operator combination for the eight-term support and the printed
/// ratio equalities it induces.
struct AppendixCase {
    int number = 0;
    FlipMask printed_operator;
    std::vector<RatioCondition> printed;
    FlipMask operator_mask;                // after errata
    std::vector<RatioCondition> conditions;  // after errata; used for decisions
};

struct TableRow {
    std::string id;
    SupportPattern rep_support;
    std::vector<ConditionDisjunct> printed_conditions;
    std::vector<ConditionDisjunct> conditions;  // after errata; used for decisions
    std::string erratum;
    bool uses_appendix = false;

    int terms() const { return rep_support.popcount(); }
    bool infinite_classes() const { return uses_appendix || !conditions.empty(); }
    std::vector<int> letters() const { return rep_support.indices(); }

    /// Deltas mentioned by the condition column, ascending.
    std::vector<int> applicable_deltas() const {
        std::vector<int> out;
        for (const auto &d : conditions)
            for (const auto &c : d)
                if (std::find(out.begin(), out.end(), c.delta) == out.end()) out.push_back(c.delta);
        std::sort(out.begin(), out.end());
        return out;
    }
};

/// Exponent vector of numerator/denominator over `n` letters.
inline lattice::IntVector monomial_exponents(std::string_view numerator, std::string_view denominator, std::size_t n) {
    lattice::IntVector v(n, 0);
    auto add = [&](std::string_view letters, int sign) {
        for (char c : letters) {
            auto i = static_cast<std::size_t>(c - 'a');
            if (c < 'a' || i >= n) throw std::out_of_range(std::string("letter out of range: ") + c);
            v[i] += sign;
        }
    };
    add(numerator, +1);
    add(denominator, -1);
    return v;
}

/// Inverse of monomial_exponents: "ad/bc", letters repeated for powers.
inline std::string monomial_string(const lattice::IntVector &v) {
    std::string num, den;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::int64_t j = 0; j < v[i]; ++j) num.push_back(static_cast<char>('a' + i));
        for (std::int64_t j = 0; j < -v[i]; ++j) den.push_back(static_cast<char>('a' + i));
    }
    if (num.empty()) num = "1";
    return den.empty() ? num : num + "/" + den;
}

namespace detail {

inline TableRow plain_row(std::string id, std::initializer_list<int> support) {
    TableRow r;
    r.id = std::move(id);
    r.rep_support = SupportPattern::from_indices(support);
    return r;
}

inline TableRow conditioned_row(std::string id, std::initializer_list<int> support, std::vector<ConditionDisjunct> printed) {
    TableRow r = plain_row(std::move(id), support);
    r.printed_conditions = printed;
    r.conditions = std::move(printed);
    return r;
}

inline std::vector<TableRow> build_registry() {
    using D = ConditionDisjunct;
    const D d1{{1, 1}}, d1inv{{1, -1}};
    std::vector<TableRow> rows;
    rows.push_back(plain_row("1", {0}));

    rows.push_back(plain_row("2a", {0, 1}));
    rows.push_back(plain_row("2b", {0, 2}));
    rows.push_back(plain_row("2c", {0, 3}));
    rows.push_back(plain_row("2d", {0, 4}));
    rows.push_back(plain_row("2e", {0, 5}));
    rows.push_back(plain_row("2f", {0, 6}));
    rows.push_back(plain_row("2g", {0, 7}));

    rows.push_back(plain_row("3a", {0, 1, 2}));
    rows.push_back(plain_row("3b", {0, 1, 4}));
    rows.push_back(plain_row("3c", {0, 1, 6}));
    rows.push_back(plain_row("3d", {0, 3, 4}));
    rows.push_back(plain_row("3e", {0, 3, 5}));
    rows.push_back(plain_row("3f", {0, 2, 4}));
    rows.push_back(plain_row("3g", {0, 2, 5}));

    rows.push_back(plain_row("4a", {0, 1, 2, 4}));
    rows.push_back(plain_row("4b", {0, 1, 2, 5}));
    rows.push_back(plain_row("4c", {0, 1, 2, 6}));
    rows.push_back(plain_row("4d", {0, 1, 2, 7}));
    rows.push_back(plain_row("4e", {0, 1, 4, 5}));
    // Product of a fixed qubit with a two-qubit state of A and C, like 4k.
    rows.back().conditions = {d1, d1inv};
    rows.back().erratum = "printed without conditions; the support has the two-qubit character ad/bc and the stabilizer of 4k up to relabeling";
    rows.push_back(plain_row("4f", {0, 1, 4, 6}));
    rows.push_back(plain_row("4g", {0, 1, 4, 7}));
    rows.push_back(plain_row("4h", {0, 2, 4, 6}));
    // Product of a fixed qubit with a two-qubit state of A and B, like 4k.
    rows.back().conditions = {d1, d1inv};
    rows.back().erratum = "printed without conditions; the support has the two-qubit character ad/bc and the stabilizer of 4k up to relabeling";
    rows.push_back(plain_row("4i", {0, 2, 4, 7}));
    rows.push_back(plain_row("4j", {0, 3, 5, 6}));
    rows.push_back(conditioned_row("4k", {0, 1, 2, 3}, {d1, d1inv}));
    rows.push_back(conditioned_row("4l", {0, 1, 6, 7}, {d1, d1inv}));
    rows.push_back(conditioned_row("4m", {0, 2, 5, 7}, {d1, d1inv}));
    rows.push_back(conditioned_row("4n", {0, 3, 4, 7}, {d1, d1inv}));

    rows.push_back(conditioned_row("5a", {0, 1, 2, 3, 4}, {D{{1, 1}}}));
    rows.push_back(conditioned_row("5b", {0, 1, 2, 4, 5}, {D{{5, 1}}}));
    rows.push_back(conditioned_row("5c", {0, 1, 2, 4, 6}, {D{{9, 1}}}));
    rows.push_back(conditioned_row("5d", {0, 1, 2, 4, 7}, {D{{11, 1}}}));
    rows.push_back(conditioned_row("5e", {0, 1, 2, 5, 6}, {D{{10, 1}}}));
    rows.push_back(conditioned_row("5f", {0, 1, 2, 5, 7}, {D{{9, 1}}}));
    rows.push_back(conditioned_row("5g", {0, 1, 2, 6, 7}, {D{{5, 1}}}));

    rows.push_back(conditioned_row("6a", {0, 1, 2, 3, 4, 5}, {D{{1, 1}, {2, 1}}, D{{1, -1}, {2, -1}}}));
    rows.push_back(conditioned_row("6b", {0, 1, 2, 3, 4, 6}, {D{{1, 1}, {3, 1}}, D{{1, -1}, {3, -1}}}));
    rows.push_back(conditioned_row("6c", {0, 1, 2, 3, 4, 7}, {D{{1, 1}, {4, 1}}, D{{1, -1}, {4, -1}}}));
    // BC flip (mask 011) is the only nontrivial stabilizer of this support; it
    // fixes ad/bc and inverts af/de.
    rows.back().conditions = {D{{1, 1}, {4, 1}}, D{{1, 1}, {4, -1}}};
    rows.back().erratum = "second disjunct printed as D1'=1/D1 and D4'=1/D4; the support stabilizer (mask 011) gives D1'=D1 and D4'=1/D4";
    rows.push_back(conditioned_row("6d", {0, 1, 2, 4, 5, 6}, {D{{5, 1}, {6, 1}}, D{{5, -1}, {6, -1}}}));
    rows.push_back(conditioned_row("6e", {0, 1, 2, 4, 5, 7}, {D{{5, 1}, {3, 1}}, D{{5, 1}, {3, -1}}}));
    rows.push_back(conditioned_row("6f", {0, 1, 2, 5, 6, 7}, {D{{2, 1}, {6, 1}}}));
    rows.push_back(conditioned_row("6g", {0, 1, 3, 5, 6, 7}, {D{{2, 1}, {7, 1}}, D{{2, -1}, {7, 1}}}));

    rows.push_back(conditioned_row("7", {0, 1, 2, 3, 4, 5, 6}, {D{{1, 1}, {2, 1}, {8, 1}}}));

    TableRow eight = plain_row("8", {0, 1, 2, 3, 4, 5, 6, 7});
    eight.uses_appendix = true;
    rows.push_back(std::move(eight));
    return rows;
}

inline AppendixCase appendix_case(int number, unsigned printed_mask, std::vector<RatioCondition> printed) {
    AppendixCase c;
    c.number = number;
    c.printed_operator = FlipMask(printed_mask);
    c.operator_mask = c.printed_operator;
    c.printed = printed;
    c.conditions = std::move(printed);
    return c;
}

inline std::vector<AppendixCase> build_appendix() {
    std::vector<AppendixCase> cases;
    cases.push_back(appendix_case(1, 0b000,
                                  {{"ad", "bc", "ad", "bc"},
                                   {"af", "be", "af", "be"},
                                   {"ah", "bg", "ah", "bg"},
                                   {"ag", "ce", "ag", "ce"},
                                   {"ah", "cf", "ah", "cf"},
                                   {"ah", "dc", "ah", "dc"}}));
    cases.push_back(appendix_case(2, 0b001,
                                  {{"bc", "ad", "ad", "bc"},
                                   {"be", "af", "af", "be"},
                                   {"bg", "de", "ah", "cf"},
                                   {"bg", "ah", "ah", "bg"},
                                   {"bh", "df", "ag", "ce"},
                                   {"bg", "cf", "ah", "ed"}}));
    cases.push_back(appendix_case(3, 0b100,
                                  {{"eh", "gf", "ad", "bc"},
                                   {"be", "af", "af", "be"},
                                   {"de", "cf", "ah", "bg"},
                                   {"ce", "ag", "ag", "ce"},
                                   {"de", "bg", "ah", "cf"},
                                   {"de", "ah", "ah", "ed"}}));
    cases.push_back(appendix_case(4, 0b010,
                                  {{"bc", "ad", "ad", "bc"},
                                   {"ch", "dg", "af", "be"},
                                   {"cf", "de", "ah", "bg"},
                                   {"ce", "ag", "ag", "ce"},
                                   {"cf", "ah", "ah", "cf"},
                                   {"cf", "bg", "ah", "de"}}));
    cases.push_back(appendix_case(5, 0b111,
                                  {{"ah", "bg", "ah", "bg"},
                                   {"ah", "cf", "ah", "cf"},
                                   {"ah", "de", "ah", "de"},
                                   {"ad", "bc", "eh", "dg"},
                                   {"af", "be", "ch", "dg"},
                                   {"ag", "ce", "bh", "df"}}));
    cases.push_back(appendix_case(6, 0b110,
                                  {{"ah", "bg", "bg", "ah"},
                                   {"bc", "ad", "eh", "gf"},
                                   {"ah", "cf", "bg", "de"},
                                   {"ah", "de", "bg", "cf"},
                                   {"be", "af", "ch", "dg"},
                                   {"ag", "ce", "ag", "ce"}}));
    cases.push_back(appendix_case(7, 0b111,
                                  {{"ad", "bc", "ad", "bc"},
                                   {"cf", "ah", "bg", "ae"},
                                   {"cf", "bg", "bg", "cf"},
                                   {"bf", "ae", "cg", "dh"},
                                   {"ce", "ag", "bh", "df"},
                                   {"de", "ah", "ah", "de"}}));
    cases.push_back(appendix_case(8, 0b101,
                                  {{"bc", "ad", "eh", "fg"},
                                   {"ce", "ag", "bh", "af"},
                                   {"af", "be", "af", "be"},
                                   {"bg", "ah", "de", "cf"},
                                   {"cf", "ah", "ah", "cf"},
                                   {"de", "ah", "bg", "cf"}}));

    // Errata. Each replaced condition is not an invariant of any family as
    // printed; replacements are the unique one-letter fixes for the case's
    // operator, except case 1 where c -> e on both sides matches the other
    // cases' a h / d e entry.
    cases[0].conditions[5] = {"ah", "de", "ah", "de"};
    cases[4].conditions[3] = {"ad", "bc", "eh", "fg"};
    cases[6].operator_mask = FlipMask(0b011);
    cases[6].conditions[1] = {"cf", "ah", "bg", "de"};
    cases[6].conditions.erase(cases[6].conditions.begin() + 3);
    cases[7].conditions[1] = {"ce", "ag", "bh", "df"};
    return cases;
}

}  // namespace detail

inline const std::vector<TableRow> &row_registry() {
    static const std::vector<TableRow> rows = detail::build_registry();
    return rows;
}

inline const TableRow &table_row(std::string_view id) {
    for (const auto &r : row_registry())
        if (r.id == id) return r;
    throw Error(ErrorCode::NoRow, "no table row with id " + std::string(id));
}

inline const std::vector<AppendixCase> &appendix_cases() {
    static const std::vector<AppendixCase> cases = detail::build_appendix();
    return cases;
}

}  // namespace slicckit
