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

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "slicckit/lattice.hpp"
#include "slicckit/registry.hpp"
#include "slicckit/sio.hpp"

namespace slicckit {

/// Flip masks that map the pattern onto itself.
inline std::vector<FlipMask> stabilizer(SupportPattern p) {
    std::vector<FlipMask> out;
    for (unsigned m = 0; m < 8; ++m)
        if (p.flipped(FlipMask(m)) == p) out.push_back(FlipMask(m));
    return out;
}

/// Kernel basis of the representative support, as vectors over the row letters.
inline lattice::IntMatrix row_kernel(const TableRow &row) {
    return lattice::left_kernel(exponent_matrix(row.rep_support, FlipMask(0)).entries);
}

/// (pi_m u)[pos(k ^ m)] = u[pos(k)] over the letters of a support fixed by m.
inline lattice::IntVector permute_exponents(const lattice::IntVector &u, const std::vector<int> &letters, FlipMask m) {
    lattice::IntVector out(u.size(), 0);
    for (std::size_t i = 0; i < letters.size(); ++i) {
        const auto it = std::find(letters.begin(), letters.end(), m.apply(letters[i]));
        if (it == letters.end()) throw std::invalid_argument("mask does not stabilize the support");
        out[static_cast<std::size_t>(it - letters.begin())] = u[i];
    }
    return out;
}

/// Necessary and sufficient monomial conditions for phi = O psi with O in
/// family m, both states on the row's representative support.
inline std::vector<RatioCondition> kernel_conditions(const TableRow &row, FlipMask m) {
    const auto letters = row.letters();
    std::vector<RatioCondition> out;
    for (const auto &u : row_kernel(row)) {
        const auto [num, den] = [&] {
            const auto s = monomial_string(u);
            const auto slash = s.find('/');
            return std::pair{s.substr(0, slash), slash == std::string::npos ? std::string("1") : s.substr(slash + 1)};
        }();
        const auto primed = monomial_string(permute_exponents(u, letters, m));
        const auto slash = primed.find('/');
        out.push_back({primed.substr(0, slash), slash == std::string::npos ? std::string("1") : primed.substr(slash + 1), num, den});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Eight-term operator cases
// ---------------------------------------------------------------------------

struct ConditionAudit {
    RatioCondition condition;
    bool character = false;          // unprimed side is a kernel character
    std::vector<FlipMask> families;  // families for which the primed side matches
};

struct AppendixCaseAudit {
    int number = 0;
    FlipMask printed_operator;
    std::vector<ConditionAudit> conditions;
    std::vector<FlipMask> consistent;  // families compatible with every valid condition
    std::optional<FlipMask> resolved;
    bool spans_kernel = false;  // valid conditions generate the full kernel lattice
};

inline ConditionAudit audit_condition(const RatioCondition &c, const lattice::IntMatrix &kernel, const std::vector<int> &letters) {
    ConditionAudit a{c, false, {}};
    const auto u = monomial_exponents(c.num, c.den, letters.size());
    const auto v = monomial_exponents(c.primed_num, c.primed_den, letters.size());
    a.character = lattice::contains(kernel, u);
    if (!a.character) return a;
    for (unsigned m = 0; m < 8; ++m)
        if (permute_exponents(u, letters, FlipMask(m)) == v) a.families.push_back(FlipMask(m));
    return a;
}

inline std::vector<AppendixCaseAudit> audit_appendix(bool printed = true) {
    const TableRow &row = row_registry().back();
    const auto letters = row.letters();
    const auto kernel = row_kernel(row);
    std::vector<AppendixCaseAudit> out;
    for (const auto &c : appendix_cases()) {
        AppendixCaseAudit a;
        a.number = c.number;
        a.printed_operator = printed ? c.printed_operator : c.operator_mask;
        std::vector<bool> ok(8, true);
        lattice::IntMatrix generators;
        for (const auto &cond : printed ? c.printed : c.conditions) {
            auto ca = audit_condition(cond, kernel, letters);
            if (!ca.families.empty()) {
                for (unsigned m = 0; m < 8; ++m)
                    ok[m] = ok[m] && std::find(ca.families.begin(), ca.families.end(), FlipMask(m)) != ca.families.end();
                generators.push_back(monomial_exponents(cond.num, cond.den, letters.size()));
            }
            a.conditions.push_back(std::move(ca));
        }
        for (unsigned m = 0; m < 8; ++m)
            if (ok[m]) a.consistent.push_back(FlipMask(m));
        if (a.consistent.size() == 1) a.resolved = a.consistent.front();
        a.spans_kernel = lattice::same_lattice(generators, kernel);
        out.push_back(std::move(a));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rows with delta conditions
// ---------------------------------------------------------------------------

/// Integer coefficients c with sum_j c_j basis[j] = v, if they exist.
inline std::optional<lattice::IntVector> integer_coordinates(const lattice::IntMatrix &basis, const lattice::IntVector &v) {
    if (basis.empty()) {
        if (std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; })) return lattice::IntVector{};
        return std::nullopt;
    }
    const auto rows = static_cast<Eigen::Index>(v.size());
    const auto cols = static_cast<Eigen::Index>(basis.size());
    Eigen::MatrixXd a(rows, cols);
    Eigen::VectorXd b(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        b(i) = static_cast<double>(v[static_cast<std::size_t>(i)]);
        for (Eigen::Index j = 0; j < cols; ++j)
            a(i, j) = static_cast<double>(basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
    }
    const Eigen::VectorXd x = a.colPivHouseholderQr().solve(b);
    lattice::IntVector c(basis.size());
    for (std::size_t j = 0; j < c.size(); ++j) c[j] = static_cast<std::int64_t>(std::llround(x(static_cast<Eigen::Index>(j))));
    lattice::IntVector check(v.size(), 0);
    for (std::size_t j = 0; j < c.size(); ++j) lattice::axpy_row(check, basis[j], -c[j]);
    if (check != v) return std::nullopt;
    return c;
}

/// Conditions on the deltas induced by one stabilizing family: Delta_i' =
/// prod_j Delta_j^{coefficients[i][j]}.
struct InducedCondition {
    FlipMask family;
    std::vector<lattice::IntVector> coefficients;
    std::optional<ConditionDisjunct> disjunct;  // set when the coefficients are diagonal +-1
};

struct RowAudit {
    std::string id;
    std::size_t kernel_rank = 0;
    bool lattice_match = false;  // applicable deltas generate the kernel
    std::vector<InducedCondition> induced;
    std::vector<ConditionDisjunct> effective;  // distinct induced disjuncts
    bool printed_match = false;
    bool corrected_match = false;
};

namespace detail {

inline ConditionDisjunct sorted(ConditionDisjunct d) {
    std::sort(d.begin(), d.end(), [](const auto &x, const auto &y) { return x.delta < y.delta; });
    return d;
}

inline bool same_disjunct_set(const std::vector<ConditionDisjunct> &a, const std::vector<ConditionDisjunct> &b) {
    auto has = [](const std::vector<ConditionDisjunct> &set, const ConditionDisjunct &d) {
        return std::any_of(set.begin(), set.end(), [&](const auto &e) { return sorted(e) == sorted(d); });
    };
    return std::all_of(a.begin(), a.end(), [&](const auto &d) { return has(b, d); }) &&
           std::all_of(b.begin(), b.end(), [&](const auto &d) { return has(a, d); });
}

}  // namespace detail

inline RowAudit audit_row(const TableRow &row) {
    RowAudit a;
    a.id = row.id;
    const auto letters = row.letters();
    const auto kernel = row_kernel(row);
    a.kernel_rank = kernel.size();
    const auto deltas = row.applicable_deltas();
    lattice::IntMatrix basis;
    for (int n : deltas) {
        const auto &d = delta_definition(n);
        basis.push_back(monomial_exponents(d.numerator, d.denominator, letters.size()));
    }
    a.lattice_match = lattice::same_lattice(basis, kernel) && basis.size() == kernel.size();
    if (!a.lattice_match) return a;

    for (FlipMask m : stabilizer(row.rep_support)) {
        // Delta_i(phi) = Delta_u(psi) with pi_m u = delta_i, so u = pi_m^{-1} delta_i.
        InducedCondition ic{m, {}, ConditionDisjunct{}};
        for (std::size_t i = 0; i < basis.size(); ++i) {
            const auto u = permute_exponents(basis[i], letters, m);  // masks are involutions
            auto c = integer_coordinates(basis, u);
            if (!c) throw std::logic_error("stabilizer does not preserve the kernel");
            for (std::size_t j = 0; j < c->size(); ++j) {
                const auto x = (*c)[j];
                if ((j != i && x != 0) || (j == i && x != 1 && x != -1)) ic.disjunct.reset();
            }
            if (ic.disjunct) ic.disjunct->push_back({deltas[i], static_cast<int>((*c)[i])});
            ic.coefficients.push_back(std::move(*c));
        }
        if (ic.disjunct && !basis.empty() &&
            std::none_of(a.effective.begin(), a.effective.end(),
                         [&](const auto &e) { return detail::sorted(e) == detail::sorted(*ic.disjunct); }))
            a.effective.push_back(*ic.disjunct);
        a.induced.push_back(std::move(ic));
    }
    a.printed_match = detail::same_disjunct_set(a.effective, row.printed_conditions);
    a.corrected_match = detail::same_disjunct_set(a.effective, row.conditions);
    return a;
}

}  // namespace slicckit
