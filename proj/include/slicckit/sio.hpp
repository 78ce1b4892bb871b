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
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "slicckit/error.hpp"
#include "slicckit/lattice.hpp"
#include "slicckit/state.hpp"

namespace slicckit {

// ---------------------------------------------------------------------------
// Strictly incoherent local operators
// ---------------------------------------------------------------------------

enum class OperatorKind { Diagonal, Antidiagonal };

/// Invertible qubit operator that maps basis kets to multiples of basis kets:
/// diag(u, v) or antidiag with u top-right and v bottom-left.
class SIOLocalOperator {
   public:
    SIOLocalOperator() = default;

    static SIOLocalOperator diagonal(Complex u, Complex v) { return SIOLocalOperator(OperatorKind::Diagonal, u, v); }
    static SIOLocalOperator antidiagonal(Complex u, Complex v) { return SIOLocalOperator(OperatorKind::Antidiagonal, u, v); }

    OperatorKind kind() const { return kind_; }
    Complex u() const { return u_; }
    Complex v() const { return v_; }

    /// Scalar picked up by the basis ket |bit>. The ket is sent to
    /// |bit> (diagonal) or |1 - bit> (antidiagonal).
    Complex factor(int bit) const {
        if (kind_ == OperatorKind::Diagonal) return bit == 0 ? u_ : v_;
        return bit == 0 ? v_ : u_;
    }

    LocalOperator matrix() const {
        if (kind_ == OperatorKind::Diagonal) return {{u_, 0.0, 0.0, v_}};
        return {{0.0, u_, v_, 0.0}};
    }

    SIOLocalOperator inverse() const {
        if (kind_ == OperatorKind::Diagonal) return diagonal(1.0 / u_, 1.0 / v_);
        // (0 u; v 0)^-1 = (0 1/v; 1/u 0)
        return antidiagonal(1.0 / v_, 1.0 / u_);
    }

    bool is_unitary(double tol = 1e-12) const {
        return std::abs(std::abs(u_) - 1.0) <= tol && std::abs(std::abs(v_) - 1.0) <= tol;
    }

   private:
    SIOLocalOperator(OperatorKind kind, Complex u, Complex v) : kind_(kind), u_(u), v_(v) {
        auto ok = [](Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()) && std::abs(z) > 0; };
        if (!ok(u) || !ok(v)) throw Error(ErrorCode::NotInvertible, "strictly incoherent operator entries must be finite and nonzero");
    }

    OperatorKind kind_ = OperatorKind::Diagonal;
    Complex u_{1.0};
    Complex v_{1.0};
};

struct SIOTriple {
    std::array<SIOLocalOperator, 3> ops{};

    const SIOLocalOperator &operator[](Party p) const { return ops[static_cast<int>(p)]; }

    FlipMask family() const {
        return FlipMask::from_parties(ops[0].kind() == OperatorKind::Antidiagonal, ops[1].kind() == OperatorKind::Antidiagonal,
                                      ops[2].kind() == OperatorKind::Antidiagonal);
    }

    SIOTriple inverse() const { return {{ops[0].inverse(), ops[1].inverse(), ops[2].inverse()}}; }

    LocalTriple matrices() const { return {ops[0].matrix(), ops[1].matrix(), ops[2].matrix()}; }

    /// Scalar acquired by basis ket k, which lands on k ^ family().
    Complex scale(int k) const {
        Complex s = 1.0;
        for (Party p : kParties) s *= (*this)[p].factor(local_bit(k, p));
        return s;
    }
};

inline ThreeQubitPureState apply_sio_triple(const SIOTriple &triple, const ThreeQubitPureState &state) {
    const FlipMask family = triple.family();
    Amplitudes out{};
    for (int k = 0; k < 8; ++k) out[family.apply(k)] = triple.scale(k) * state[k];
    return ThreeQubitPureState(out, state.label());
}

// ---------------------------------------------------------------------------
// Exponent matrices and kernel characters
// ---------------------------------------------------------------------------

/// Column of the exponent matrix for entry `slot` (0 -> x1, 1 -> x2) of the
/// party's operator; columns are ordered a1 a2 b1 b2 c1 c2.
constexpr int exponent_column(Party p, int slot) { return 2 * static_cast<int>(p) + slot; }

/// Linearization of the action of a family on a support: row i says which
/// operator entries multiply amplitude `indices[i]`.
struct ExponentMatrix {
    std::vector<int> indices;
    lattice::IntMatrix entries;
    FlipMask family;
};

inline ExponentMatrix exponent_matrix(SupportPattern support, FlipMask family) {
    ExponentMatrix m{support.indices(), {}, family};
    for (int k : m.indices) {
        lattice::IntVector row(6, 0);
        for (Party p : kParties) row[exponent_column(p, local_bit(k, p) ^ (family.flips(p) ? 1 : 0))] = 1;
        m.entries.push_back(std::move(row));
    }
    return m;
}

/// Integer exponents over basis indices whose monomial is invariant under the
/// family's operators: prod_k (phi[k ^ m] / psi[k])^{u_k} = 1 for related states.
struct KernelCharacter {
    std::vector<int> indices;
    lattice::IntVector exponents;

    /// Exponent of basis index k (0 when k is not in the support).
    std::int64_t exponent_of(int k) const {
        for (std::size_t i = 0; i < indices.size(); ++i)
            if (indices[i] == k) return exponents[i];
        return 0;
    }

    std::array<std::int64_t, 8> dense() const {
        std::array<std::int64_t, 8> out{};
        for (std::size_t i = 0; i < indices.size(); ++i) out[indices[i]] = exponents[i];
        return out;
    }
};

inline std::vector<KernelCharacter> kernel_characters(const ExponentMatrix &m) {
    std::vector<KernelCharacter> out;
    for (auto &v : lattice::left_kernel(m.entries)) out.push_back({m.indices, std::move(v)});
    return out;
}

namespace detail {

inline Complex ipow(Complex z, std::int64_t e) {
    Complex r = 1.0;
    Complex b = e < 0 ? 1.0 / z : z;
    for (std::int64_t i = 0, n = e < 0 ? -e : e; i < n; ++i) r *= b;
    return r;
}

/// prod values[i]^{exponents[i]}, alternating numerator and denominator
/// factors so intermediate magnitudes stay near the final one.
inline Complex balanced_product(std::span<const Complex> values, std::span<const std::int64_t> exponents) {
    std::vector<Complex> num, den;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::int64_t j = 0; j < exponents[i]; ++j) num.push_back(values[i]);
        for (std::int64_t j = 0; j < -exponents[i]; ++j) den.push_back(values[i]);
    }
    Complex r = 1.0;
    for (std::size_t i = 0; i < std::max(num.size(), den.size()); ++i) {
        if (i < num.size()) r *= num[i];
        if (i < den.size()) r /= den[i];
    }
    return r;
}

/// Representative of an angle in (-pi, pi].
inline double wrap_angle(double a) {
    constexpr double two_pi = 2 * std::numbers::pi;
    a = std::fmod(a, two_pi);
    if (a <= -std::numbers::pi) a += two_pi;
    if (a > std::numbers::pi) a -= two_pi;
    return a;
}

inline Complex principal_root(Complex z, std::int64_t n) {
    if (n == 1) return z;
    return std::polar(std::pow(std::abs(z), 1.0 / static_cast<double>(n)), std::arg(z) / static_cast<double>(n));
}

/// Solves prod_j x_j^{M_ij} = r_i for x in (C*)^6, free variables fixed to 1.
/// Assumes every kernel character of M already evaluates to 1 on r.
inline std::array<Complex, 6> solve_exponent_system(const lattice::IntMatrix &m, std::span<const Complex> r) {
    auto hnf = lattice::row_hermite(m);
    std::array<Complex, 6> x;
    x.fill(1.0);
    for (std::size_t i = hnf.rank(); i-- > 0;) {
        Complex target = balanced_product(r, hnf.u[i]);
        const std::size_t p = hnf.pivot_cols[i];
        for (std::size_t j = p + 1; j < 6; ++j)
            if (hnf.h[i][j] != 0) target /= ipow(x[j], hnf.h[i][j]);
        x[p] = principal_root(target, hnf.h[i][p]);
    }
    return x;
}

}  // namespace detail

inline Complex evaluate_character(const KernelCharacter &u, std::span<const Complex> ratios) {
    return detail::balanced_product(ratios, u.exponents);
}

// ---------------------------------------------------------------------------
// Equivalence
// ---------------------------------------------------------------------------

struct EquivalenceWitness {
    SIOTriple triple;
    Complex global_scale{1.0};

    FlipMask family() const { return triple.family(); }
};

/// Why a family (or every family) failed. Ordered by how far the check got.
enum class Obstruction {
    None,
    SupportMismatch,
    InvariantMismatch,
    ModulusMismatch,
    PhaseMismatch,
    NumericalFailure,
};

constexpr std::string_view to_string(Obstruction o) {
    switch (o) {
        case Obstruction::None: return "none";
        case Obstruction::SupportMismatch: return "support mismatch";
        case Obstruction::InvariantMismatch: return "invariant mismatch";
        case Obstruction::ModulusMismatch: return "modulus mismatch";
        case Obstruction::PhaseMismatch: return "phase mismatch";
        case Obstruction::NumericalFailure: return "numerical failure";
    }
    return "unknown";
}

struct EquivalenceResult {
    std::optional<EquivalenceWitness> witness;
    Obstruction reason = Obstruction::None;
    std::array<Obstruction, 8> per_family{};

    bool equivalent() const { return witness.has_value(); }
    explicit operator bool() const { return equivalent(); }
};

inline bool verify_witness(const EquivalenceWitness &w, const ThreeQubitPureState &psi, const ThreeQubitPureState &phi,
                           double rel_tol = Tolerances{}.witness) {
    const double scale = phi.max_modulus();
    const FlipMask family = w.family();
    for (int k = 0; k < 8; ++k) {
        Complex image = w.global_scale * w.triple.scale(k) * psi[k];
        if (std::abs(image - phi[family.apply(k)]) > rel_tol * scale) return false;
    }
    return true;
}

namespace detail {

inline SIOTriple triple_from_entries(FlipMask family, const std::array<Complex, 6> &x) {
    SIOTriple t;
    for (Party p : kParties) {
        Complex x1 = x[exponent_column(p, 0)], x2 = x[exponent_column(p, 1)];
        t.ops[static_cast<int>(p)] = family.flips(p) ? SIOLocalOperator::antidiagonal(x1, x2) : SIOLocalOperator::diagonal(x1, x2);
    }
    return t;
}

/// Ratios phi[k ^ m] / psi[k] over the support of psi, in ascending k.
inline std::vector<Complex> ratios(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi, const std::vector<int> &indices,
                                   FlipMask family) {
    std::vector<Complex> r;
    r.reserve(indices.size());
    for (int k : indices) r.push_back(phi[family.apply(k)] / psi[k]);
    return r;
}

inline Obstruction deepest(const std::array<Obstruction, 8> &per_family) {
    return *std::max_element(per_family.begin(), per_family.end());
}

}  // namespace detail

/// Decides equivalence under stochastic local incoherent operations by
/// searching the eight diagonal/antidiagonal families for a local strictly
/// incoherent invertible operator mapping psi to phi. Families are tried in
/// ascending mask order; the first verified witness wins.
inline EquivalenceResult solve_slicc_equivalence(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi,
                                                 const Tolerances &tol = {}) {
    EquivalenceResult result;
    const SupportPattern s_psi = support(psi, tol.support);
    const SupportPattern s_phi = support(phi, tol.support);
    for (unsigned bits = 0; bits < 8; ++bits) {
        const FlipMask family(bits);
        auto &status = result.per_family[bits];
        if (s_psi.flipped(family) != s_phi) {
            status = Obstruction::SupportMismatch;
            continue;
        }
        const auto m = exponent_matrix(s_psi, family);
        const auto r = detail::ratios(psi, phi, m.indices, family);
        bool invariant = true;
        for (const auto &u : kernel_characters(m))
            if (std::abs(evaluate_character(u, r) - 1.0) > tol.character) invariant = false;
        if (!invariant) {
            status = Obstruction::InvariantMismatch;
            continue;
        }
        EquivalenceWitness w{detail::triple_from_entries(family, detail::solve_exponent_system(m.entries, r)), 1.0};
        if (!verify_witness(w, psi, phi, tol.witness)) {
            status = Obstruction::NumericalFailure;
            continue;
        }
        result.witness = w;
        result.reason = Obstruction::None;
        return result;
    }
    result.reason = detail::deepest(result.per_family);
    return result;
}

/// Deterministic (unit probability) variant: the local operators must also be
/// unitary, so every ratio has unit modulus and the phases must be consistent.
/// The witness maps psi to phi with unit-modulus entries and a positive real
/// global scale equal to |phi| / |psi|.
inline EquivalenceResult solve_licc_equivalence(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi,
                                                const Tolerances &tol = {}) {
    EquivalenceResult result;
    const auto psi_n = normalize(psi);
    const auto phi_n = normalize(phi);
    const SupportPattern s_psi = support(psi_n, tol.support);
    const SupportPattern s_phi = support(phi_n, tol.support);
    for (unsigned bits = 0; bits < 8; ++bits) {
        const FlipMask family(bits);
        auto &status = result.per_family[bits];
        if (s_psi.flipped(family) != s_phi) {
            status = Obstruction::SupportMismatch;
            continue;
        }
        const auto m = exponent_matrix(s_psi, family);
        auto r = detail::ratios(psi_n, phi_n, m.indices, family);
        if (std::any_of(r.begin(), r.end(), [&](Complex z) { return std::abs(std::abs(z) - 1.0) > tol.modulus; })) {
            status = Obstruction::ModulusMismatch;
            continue;
        }
        bool consistent = true;
        for (const auto &u : kernel_characters(m)) {
            double phase = 0;
            for (std::size_t i = 0; i < r.size(); ++i) phase += static_cast<double>(u.exponents[i]) * std::arg(r[i]);
            if (std::abs(detail::wrap_angle(phase)) > tol.phase) consistent = false;
        }
        if (!consistent) {
            status = Obstruction::PhaseMismatch;
            continue;
        }
        for (auto &z : r) z /= std::abs(z);
        auto x = detail::solve_exponent_system(m.entries, r);
        for (auto &z : x) z /= std::abs(z);
        EquivalenceWitness w{detail::triple_from_entries(family, x), phi.norm() / psi.norm()};
        if (!verify_witness(w, psi, phi, tol.witness)) {
            status = Obstruction::NumericalFailure;
            continue;
        }
        result.witness = w;
        result.reason = Obstruction::None;
        return result;
    }
    result.reason = detail::deepest(result.per_family);
    return result;
}

}  // namespace slicckit
