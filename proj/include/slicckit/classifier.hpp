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

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "slicckit/coherence.hpp"
#include "slicckit/registry.hpp"
#include "slicckit/state.hpp"

namespace slicckit {

struct CanonicalSupport {
    const TableRow *row = nullptr;
    FlipMask flip;
};

namespace detail {

inline const std::array<std::optional<CanonicalSupport>, 256> &canonical_lookup() {
    static const auto table = [] {
        std::array<std::optional<CanonicalSupport>, 256> t{};
        for (unsigned bits = 1; bits < 256; ++bits) {
            const SupportPattern p(bits);
            for (unsigned m = 0; m < 8 && !t[bits]; ++m)
                for (const auto &row : row_registry())
                    if (p.flipped(FlipMask(m)) == row.rep_support) {
                        t[bits] = CanonicalSupport{&row, FlipMask(m)};
                        break;
                    }
        }
        return t;
    }();
    return table;
}

}  // namespace detail

/// Registry row whose representative lies in the flip orbit of `p`, and the
/// smallest mask taking `p` onto it.
inline CanonicalSupport canonicalize_support(SupportPattern p) {
    if (p.empty()) throw Error(ErrorCode::NoRow, "empty support");
    const auto &hit = detail::canonical_lookup()[p.bits()];
    if (!hit) throw Error(ErrorCode::NoRow, "support has no registry row");
    return *hit;
}

struct Invariant {
    std::string name;
    Complex value;
};

using DeltaInvariants = std::vector<Invariant>;

/// Value of numerator/denominator with letters bound to `letters[0]`, ... .
inline Complex monomial_value(std::string_view numerator, std::string_view denominator, std::span<const Complex> letters) {
    Complex num = 1.0, den = 1.0;
    for (char c : numerator) num *= letters[static_cast<std::size_t>(c - 'a')];
    for (char c : denominator) den *= letters[static_cast<std::size_t>(c - 'a')];
    return num / den;
}

inline Complex delta_value(int number, std::span<const Complex> letters) {
    const auto &d = delta_definition(number);
    return monomial_value(d.numerator, d.denominator, letters);
}

namespace detail {

/// Amplitudes of the flipped state on the row's representative support.
inline std::vector<Complex> row_letters(const ThreeQubitPureState &state, const TableRow &row, FlipMask flip, const Tolerances &tol) {
    const auto flipped = apply_flip(state, flip);
    if (support(flipped, tol.support) != row.rep_support)
        throw Error(ErrorCode::WrongRow, "state support does not match row " + row.id + " under flip " + flip.to_string());
    std::vector<Complex> letters;
    for (int k : row.letters()) letters.push_back(flipped[k]);
    return letters;
}

}  // namespace detail

inline DeltaInvariants compute_deltas(const ThreeQubitPureState &state, const TableRow &row, FlipMask flip, const Tolerances &tol = {}) {
    const auto letters = detail::row_letters(state, row, flip, tol);
    DeltaInvariants out;
    if (row.uses_appendix) {
        for (const auto &c : appendix_cases().front().conditions)
            out.push_back({c.num + "/" + c.den, monomial_value(c.num, c.den, letters)});
        return out;
    }
    for (int n : row.applicable_deltas()) out.push_back({"D" + std::to_string(n), delta_value(n, letters)});
    return out;
}

struct Classification {
    ThreeQubitPureState normalized;
    const TableRow *row = nullptr;
    FlipMask flip;
    DeltaInvariants deltas;
    LocalRanks ranks{};
    double tangle = 0;
    SloccClass slocc = SloccClass::FullySeparable;
    FineDescriptor fine;
    std::vector<std::string> warnings;
};

inline Classification classify(const ThreeQubitPureState &state, const Tolerances &tol = {}) {
    const auto n = normalize(state);
    const auto canon = canonicalize_support(support(n, tol.support));
    Classification c{n, canon.row, canon.flip, compute_deltas(n, *canon.row, canon.flip, tol), local_ranks(n, tol.rank),
                     three_tangle(n), slocc_class(n, tol), fine_descriptor(n, tol), {}};
    for (Party p : kParties) {
        const double lo = partial_trace(n, {p}).eigenvalues()[1];
        if (lo > 1e-3 * tol.rank && lo < 1e3 * tol.rank)
            c.warnings.push_back(std::string("local rank of ") + party_name(p) + " is close to the threshold (smallest eigenvalue " +
                                 std::to_string(lo) + ")");
    }
    if (c.ranks == LocalRanks{2, 2, 2} && c.tangle > 1e-10 && c.tangle < 1e-6)
        c.warnings.push_back("three-tangle " + std::to_string(c.tangle) + " lies near the GHZ/W threshold");
    const double smallest = [&] {
        double m = n.max_modulus();
        for (int k = 0; k < 8; ++k)
            if (std::abs(n[k]) > tol.support * n.max_modulus()) m = std::min(m, std::abs(n[k]));
        return m;
    }();
    if (smallest < 1e3 * tol.support * n.max_modulus())
        c.warnings.push_back("an amplitude is within three orders of magnitude of the support threshold");
    return c;
}

// ---------------------------------------------------------------------------
// Table-based equivalence
// ---------------------------------------------------------------------------

enum class TableSource {
    Corrected,  // printed conditions with errata applied
    Printed,    // printed conditions verbatim
};

enum class TableMutation {
    None,
    DropAlternates,  // keep only the first disjunct (row 8: only the first case)
};

struct TableOptions {
    TableSource source = TableSource::Corrected;
    TableMutation mutation = TableMutation::None;
};

struct TableVerdict {
    bool same = false;
    std::string row_psi;
    std::string row_phi;
    int matched = -1;  // disjunct index, or appendix case number for row 8
};

namespace detail {

inline bool values_match(Complex target, Complex source, double tol) {
    return std::abs(target - source) <= tol * std::max(1.0, std::abs(source));
}

}  // namespace detail

/// Table lookup: same representative row, then (for rows with infinitely many
/// classes) at least one printed disjunct between the primed (phi) and
/// unprimed (psi) invariants of the flipped states.
inline TableVerdict compare_by_table(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi, const TableOptions &opts = {},
                                     const Tolerances &tol = {}) {
    const auto cp = canonicalize_support(support(psi, tol.support));
    const auto cf = canonicalize_support(support(phi, tol.support));
    TableVerdict v{false, cp.row->id, cf.row->id, -1};
    if (cp.row != cf.row) return v;
    const TableRow &row = *cp.row;
    const auto x = detail::row_letters(psi, row, cp.flip, tol);
    const auto y = detail::row_letters(phi, row, cf.flip, tol);

    if (row.uses_appendix) {
        const auto &cases = appendix_cases();
        const std::size_t n = opts.mutation == TableMutation::DropAlternates ? 1 : cases.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto &conds = opts.source == TableSource::Printed ? cases[i].printed : cases[i].conditions;
            bool all = true;
            for (const auto &c : conds)
                all = all && detail::values_match(monomial_value(c.primed_num, c.primed_den, y), monomial_value(c.num, c.den, x), tol.delta);
            if (all) {
                v.same = true;
                v.matched = cases[i].number;
                return v;
            }
        }
        return v;
    }

    const auto &disjuncts = opts.source == TableSource::Printed ? row.printed_conditions : row.conditions;
    if (disjuncts.empty()) {
        v.same = true;
        return v;
    }
    const std::size_t n = opts.mutation == TableMutation::DropAlternates ? 1 : disjuncts.size();
    for (std::size_t i = 0; i < n; ++i) {
        bool all = true;
        for (const auto &c : disjuncts[i]) {
            Complex unprimed = delta_value(c.delta, x);
            if (c.exponent < 0) unprimed = 1.0 / unprimed;
            all = all && detail::values_match(delta_value(c.delta, y), unprimed, tol.delta);
        }
        if (all) {
            v.same = true;
            v.matched = static_cast<int>(i);
            return v;
        }
    }
    return v;
}

inline bool same_class_by_table(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi, const TableOptions &opts = {},
                                const Tolerances &tol = {}) {
    return compare_by_table(psi, phi, opts, tol).same;
}

}  // namespace slicckit
