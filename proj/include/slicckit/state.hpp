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

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "slicckit/error.hpp"

namespace slicckit {

using Complex = std::complex<double>;
using Amplitudes = std::array<Complex, 8>;

/// Numerical thresholds shared by every module. The defaults are the values the
/// command-line tool uses unless overridden with --eps-supp / --eps-rank.
struct Tolerances {
    double support = 1e-9;      // relative to the largest amplitude modulus
    double rank = 1e-9;         // eigenvalues of single-qubit reductions
    double character = 1e-7;    // |prod r^u - 1|
    double modulus = 1e-7;      // LICC unit-modulus ratio test
    double phase = 1e-7;        // LICC phase congruence
    double delta = 1e-7;        // table condition equality, relative
    double witness = 1e-9;      // witness verification, relative to max |phi|
    double coherence = 1e-9;    // off-diagonal / second eigenvalue test
    double tangle = 1e-8;       // GHZ vs W split on normalized states
};

// ---------------------------------------------------------------------------
// Parties and masks
// ---------------------------------------------------------------------------

enum class Party : int { A = 0, B = 1, C = 2 };

inline constexpr std::array<Party, 3> kParties{Party::A, Party::B, Party::C};

/// Bit position of a party inside a basis index k = 4x + 2y + z.
constexpr int bit_position(Party p) { return 2 - static_cast<int>(p); }

constexpr int local_bit(int index, Party p) { return (index >> bit_position(p)) & 1; }

constexpr char party_name(Party p) { return "ABC"[static_cast<int>(p)]; }

/// Per-party choice of diagonal (bit clear) or antidiagonal (bit set) local
/// operator. The mask value equals its action on basis indices: k -> k ^ bits().
class FlipMask {
   public:
    constexpr FlipMask() = default;
    constexpr explicit FlipMask(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {
        if (bits > 7) throw std::invalid_argument("flip mask out of range");
    }

    static constexpr FlipMask from_parties(bool a, bool b, bool c) {
        return FlipMask((a ? 4u : 0u) | (b ? 2u : 0u) | (c ? 1u : 0u));
    }

    constexpr unsigned bits() const { return bits_; }
    constexpr bool flips(Party p) const { return (bits_ >> bit_position(p)) & 1u; }
    constexpr int apply(int index) const { return index ^ static_cast<int>(bits_); }

    /// Three characters "ABC", '1' where the party's operator is antidiagonal.
    std::string to_string() const {
        std::string s(3, '0');
        for (Party p : kParties) s[static_cast<int>(p)] = flips(p) ? '1' : '0';
        return s;
    }

    /// Position of this combination in the usual list of eight operator
    /// combinations: all diagonal first, then single flips on C, B, A, then
    /// pairs AB, AC, BC, then all antidiagonal.
    constexpr int family_number() const {
        constexpr std::array<int, 8> number{1, 2, 3, 7, 4, 6, 5, 8};
        return number[bits_];
    }

    static FlipMask from_family_number(int n) {
        for (unsigned m = 0; m < 8; ++m)
            if (FlipMask(m).family_number() == n) return FlipMask(m);
        throw std::invalid_argument("family number must be in 1..8");
    }

    friend constexpr FlipMask operator^(FlipMask x, FlipMask y) { return FlipMask(x.bits_ ^ y.bits_); }
    friend constexpr bool operator==(FlipMask, FlipMask) = default;
    friend constexpr auto operator<=>(FlipMask, FlipMask) = default;

   private:
    std::uint8_t bits_ = 0;
};

/// Occupied computational basis kets, bit k set iff amplitude k is nonzero.
class SupportPattern {
   public:
    constexpr SupportPattern() = default;
    constexpr explicit SupportPattern(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {
        if (bits > 255) throw std::invalid_argument("support pattern out of range");
    }

    static constexpr SupportPattern from_indices(std::initializer_list<int> indices) {
        unsigned bits = 0;
        for (int k : indices) bits |= 1u << k;
        return SupportPattern(bits);
    }

    constexpr unsigned bits() const { return bits_; }
    constexpr bool contains(int index) const { return (bits_ >> index) & 1u; }
    constexpr int popcount() const { return std::popcount(static_cast<unsigned>(bits_)); }
    constexpr bool empty() const { return bits_ == 0; }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int k = 0; k < 8; ++k)
            if (contains(k)) out.push_back(k);
        return out;
    }

    /// Image of the pattern under index XOR with the mask.
    constexpr SupportPattern flipped(FlipMask mask) const {
        unsigned out = 0;
        for (int k = 0; k < 8; ++k)
            if (contains(k)) out |= 1u << mask.apply(k);
        return SupportPattern(out);
    }

    friend constexpr bool operator==(SupportPattern, SupportPattern) = default;
    friend constexpr auto operator<=>(SupportPattern, SupportPattern) = default;

   private:
    std::uint8_t bits_ = 0;
};

/// Subset of {A, B, C}; used to select the kept parties of a reduction.
class PartySet {
   public:
    constexpr PartySet() = default;
    constexpr PartySet(std::initializer_list<Party> parties) {
        for (Party p : parties) bits_ |= 1u << static_cast<int>(p);
    }
    static constexpr PartySet from_bits(unsigned bits) {
        PartySet s;
        s.bits_ = bits & 7u;
        return s;
    }

    constexpr bool contains(Party p) const { return (bits_ >> static_cast<int>(p)) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr PartySet complement() const { return from_bits(~bits_ & 7u); }
    constexpr unsigned bits() const { return bits_; }

    std::vector<Party> parties() const {
        std::vector<Party> out;
        for (Party p : kParties)
            if (contains(p)) out.push_back(p);
        return out;
    }

    std::string to_string() const {
        std::string s;
        for (Party p : parties()) s.push_back(party_name(p));
        return s;
    }

    friend constexpr bool operator==(PartySet, PartySet) = default;

   private:
    unsigned bits_ = 0;
};

// ---------------------------------------------------------------------------
// States
// ---------------------------------------------------------------------------

inline constexpr double kZeroAmplitude = 1e-15;

/// Pure three-qubit state in the computational basis, index k = 4x + 2y + z
/// for |xyz>. Amplitudes are kept as given; normalize() is explicit.
class ThreeQubitPureState {
   public:
    explicit ThreeQubitPureState(const Amplitudes &amp, std::string label = {})
        : amp_(amp), label_(std::move(label)) {
        bool any = std::any_of(amp_.begin(), amp_.end(), [](const Complex &z) { return std::abs(z) >= kZeroAmplitude; });
        if (!any) throw Error(ErrorCode::AllZero, "all amplitudes are zero");
    }

    const Amplitudes &amplitudes() const { return amp_; }
    const Complex &operator[](int k) const { return amp_[k]; }
    const std::string &label() const { return label_; }

    double norm() const {
        double s = 0;
        for (const auto &z : amp_) s += std::norm(z);
        return std::sqrt(s);
    }

    double max_modulus() const {
        double m = 0;
        for (const auto &z : amp_) m = std::max(m, std::abs(z));
        return m;
    }

    ThreeQubitPureState with_label(std::string label) const { return ThreeQubitPureState(amp_, std::move(label)); }

   private:
    Amplitudes amp_;
    std::string label_;
};

inline ThreeQubitPureState parse_state(std::span<const Complex> amplitudes, std::string label = {}) {
    if (amplitudes.size() != 8)
        throw Error(ErrorCode::BadArity, "expected 8 amplitudes, got " + std::to_string(amplitudes.size()));
    Amplitudes amp;
    std::copy(amplitudes.begin(), amplitudes.end(), amp.begin());
    return ThreeQubitPureState(amp, std::move(label));
}

inline ThreeQubitPureState normalize(const ThreeQubitPureState &state) {
    double n = state.norm();
    Amplitudes amp = state.amplitudes();
    for (auto &z : amp) z /= n;
    return ThreeQubitPureState(amp, state.label());
}

inline SupportPattern support(const ThreeQubitPureState &state, double eps_supp = Tolerances{}.support) {
    double cutoff = eps_supp * state.max_modulus();
    unsigned bits = 0;
    for (int k = 0; k < 8; ++k)
        if (std::abs(state[k]) > cutoff) bits |= 1u << k;
    return SupportPattern(bits);
}

/// Applies the 0/1 antidiagonal (Pauli-X) operators selected by the mask.
inline ThreeQubitPureState apply_flip(const ThreeQubitPureState &state, FlipMask mask) {
    Amplitudes out{};
    for (int k = 0; k < 8; ++k) out[mask.apply(k)] = state[k];
    return ThreeQubitPureState(out, state.label());
}

/// True iff phi = lambda * psi for some nonzero complex lambda, entrywise within
/// `tol` relative to the largest modulus of phi.
inline bool proportional(const ThreeQubitPureState &psi, const ThreeQubitPureState &phi, double tol = 1e-9) {
    int pivot = 0;
    for (int k = 1; k < 8; ++k)
        if (std::abs(psi[k]) > std::abs(psi[pivot])) pivot = k;
    Complex lambda = phi[pivot] / psi[pivot];
    if (std::abs(lambda) == 0) return false;
    double scale = phi.max_modulus();
    for (int k = 0; k < 8; ++k)
        if (std::abs(lambda * psi[k] - phi[k]) > tol * scale) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Reductions
// ---------------------------------------------------------------------------

/// Reduced density matrix of one or two parties. Kept parties are ordered
/// A < B < C, the first kept party being the most significant index bit.
class DensityMatrix {
   public:
    explicit DensityMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
        if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4))
            throw std::invalid_argument("density matrix must be 2x2 or 4x4");
    }

    int dim() const { return static_cast<int>(m_.rows()); }
    Complex operator()(int i, int j) const { return m_(i, j); }
    const Eigen::MatrixXcd &matrix() const { return m_; }
    Complex trace() const { return m_.trace(); }

    double max_off_diagonal() const {
        double out = 0;
        for (int i = 0; i < dim(); ++i)
            for (int j = 0; j < dim(); ++j)
                if (i != j) out = std::max(out, std::abs(m_(i, j)));
        return out;
    }

    /// Eigenvalues in descending order. 2x2 uses the closed form.
    std::vector<double> eigenvalues() const {
        if (dim() == 2) {
            double p = m_(0, 0).real(), s = m_(1, 1).real();
            double off = std::norm(m_(0, 1));
            double half_trace = 0.5 * (p + s);
            double disc = std::sqrt(std::max(0.0, 0.25 * (p - s) * (p - s) + off));
            double hi = half_trace + disc;
            double det = p * s - off;
            double lo = hi > 0 ? det / hi : half_trace - disc;
            return {hi, lo};
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m_, Eigen::EigenvaluesOnly);
        std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + dim());
        std::sort(out.begin(), out.end(), std::greater<>());
        return out;
    }

   private:
    Eigen::MatrixXcd m_;
};

namespace detail {

/// Basis index of the full system from kept and traced-out sub-indices.
inline int compose_index(const std::vector<Party> &kept, int kept_index, const std::vector<Party> &env, int env_index) {
    int k = 0;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        int b = (kept_index >> (kept.size() - 1 - i)) & 1;
        k |= b << bit_position(kept[i]);
    }
    for (std::size_t i = 0; i < env.size(); ++i) {
        int b = (env_index >> (env.size() - 1 - i)) & 1;
        k |= b << bit_position(env[i]);
    }
    return k;
}

}  // namespace detail

inline DensityMatrix partial_trace(const ThreeQubitPureState &state, PartySet keep) {
    if (keep.size() != 1 && keep.size() != 2)
        throw Error(ErrorCode::BadSubset, "partial trace must keep one or two parties");
    const auto kept = keep.parties();
    const auto env = keep.complement().parties();
    const int dim = 1 << kept.size();
    const int env_dim = 1 << env.size();
    const double norm2 = state.norm() * state.norm();
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Complex s = 0;
            for (int e = 0; e < env_dim; ++e)
                s += state[detail::compose_index(kept, i, env, e)] * std::conj(state[detail::compose_index(kept, j, env, e)]);
            rho(i, j) = s / norm2;
        }
    return DensityMatrix(std::move(rho));
}

using LocalRanks = std::array<int, 3>;

inline LocalRanks local_ranks(const ThreeQubitPureState &state, double eps_rank = Tolerances{}.rank) {
    LocalRanks r{};
    for (Party p : kParties) {
        auto ev = partial_trace(state, {p}).eigenvalues();
        r[static_cast<int>(p)] = static_cast<int>(std::count_if(ev.begin(), ev.end(), [&](double x) { return x > eps_rank; }));
    }
    return r;
}

// ---------------------------------------------------------------------------
// General local operators
// ---------------------------------------------------------------------------

/// Arbitrary 2x2 operator, row-major: {m00, m01, m10, m11}.
struct LocalOperator {
    std::array<Complex, 4> m{1.0, 0.0, 0.0, 1.0};

    Complex operator()(int row, int col) const { return m[2 * row + col]; }
    bool is_incoherent(double tol = 0) const {
        // Every column maps a basis ket to a multiple of a basis ket.
        for (int col = 0; col < 2; ++col)
            if (std::abs(m[col]) > tol && std::abs(m[2 + col]) > tol) return false;
        return true;
    }
};

using LocalTriple = std::array<LocalOperator, 3>;

/// (A (x) B (x) C) |psi>. The result may be the zero vector.
inline Amplitudes apply_local(const LocalTriple &ops, const Amplitudes &amp) {
    Amplitudes out{};
    for (int in = 0; in < 8; ++in) {
        if (amp[in] == Complex{}) continue;
        for (int o = 0; o < 8; ++o) {
            Complex f = 1.0;
            for (Party p : kParties) f *= ops[static_cast<int>(p)](local_bit(o, p), local_bit(in, p));
            out[o] += f * amp[in];
        }
    }
    return out;
}

}  // namespace slicckit
