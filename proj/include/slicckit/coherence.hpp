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

#include <array>
#include <cmath>
#include <string_view>
#include <vector>

#include "slicckit/state.hpp"

namespace slicckit {

enum class CoherenceNature { PureIncoherent, PureCoherent, MixedIncoherent, MixedCoherent };

constexpr std::string_view to_string(CoherenceNature n) {
    switch (n) {
        case CoherenceNature::PureIncoherent: return "PureIncoherent";
        case CoherenceNature::PureCoherent: return "PureCoherent";
        case CoherenceNature::MixedIncoherent: return "MixedIncoherent";
        case CoherenceNature::MixedCoherent: return "MixedCoherent";
    }
    return "unknown";
}

inline CoherenceNature coherence_nature(const DensityMatrix &rho, double tol = Tolerances{}.coherence) {
    const auto ev = rho.eigenvalues();
    const bool pure = ev[1] <= tol;
    const bool incoherent = rho.max_off_diagonal() <= tol;
    if (pure) return incoherent ? CoherenceNature::PureIncoherent : CoherenceNature::PureCoherent;
    return incoherent ? CoherenceNature::MixedIncoherent : CoherenceNature::MixedCoherent;
}

struct MixtureComponent {
    double weight = 0;
    std::vector<Complex> state;  // unit norm, basis of the kept parties
    bool coherent = false;
};

/// Ensemble obtained by measuring the traced-out parties in the computational
/// basis, with proportional branches merged.
struct MixtureComposition {
    int n_coherent = 0;
    int n_incoherent = 0;
    std::vector<MixtureComponent> components;

    Eigen::MatrixXcd reconstruct() const {
        const auto dim = static_cast<Eigen::Index>(components.empty() ? 0 : components.front().state.size());
        Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
        for (const auto &c : components) {
            Eigen::Map<const Eigen::VectorXcd> v(c.state.data(), dim);
            rho += c.weight * v * v.adjoint();
        }
        return rho;
    }
};

namespace detail {

inline double norm2(const std::vector<Complex> &v) {
    double s = 0;
    for (const auto &z : v) s += std::norm(z);
    return s;
}

/// Amplitudes below the support threshold are set to exactly zero and the
/// result is normalized.
inline Amplitudes cleaned(const ThreeQubitPureState &state, double eps_supp) {
    const auto supp = support(state, eps_supp);
    Amplitudes amp{};
    double n = 0;
    for (int k = 0; k < 8; ++k)
        if (supp.contains(k)) {
            amp[k] = state[k];
            n += std::norm(state[k]);
        }
    n = std::sqrt(n);
    for (auto &z : amp) z /= n;
    return amp;
}

}  // namespace detail

inline MixtureComposition conditional_decomposition(const ThreeQubitPureState &state, PartySet keep, const Tolerances &tol = {}) {
    if (keep.size() != 1 && keep.size() != 2) throw Error(ErrorCode::BadSubset, "decomposition must keep one or two parties");
    const auto amp = detail::cleaned(state, tol.support);
    const auto kept = keep.parties();
    const auto env = keep.complement().parties();
    const int dim = 1 << kept.size();
    const int env_dim = 1 << env.size();

    struct Branch {
        std::vector<Complex> v;  // unnormalized
        double weight;
    };
    std::vector<Branch> branches;
    for (int e = 0; e < env_dim; ++e) {
        std::vector<Complex> v(dim);
        for (int i = 0; i < dim; ++i) v[i] = amp[detail::compose_index(kept, i, env, e)];
        const double w = detail::norm2(v);
        if (w == 0.0) continue;  // dust was already cleared by the support threshold
        bool merged = false;
        for (auto &b : branches) {
            Complex overlap = 0;
            for (int i = 0; i < dim; ++i) overlap += std::conj(b.v[i]) * v[i];
            if (std::norm(overlap) >= (1 - tol.coherence) * detail::norm2(b.v) * w) {
                b.weight += w;
                merged = true;
                break;
            }
        }
        if (!merged) branches.push_back({v, w});
    }

    double total = 0;
    for (const auto &b : branches) total += b.weight;
    MixtureComposition out;
    for (auto &b : branches) {
        const double n = std::sqrt(detail::norm2(b.v));
        MixtureComponent c{b.weight / total, b.v, false};
        double largest = 0;
        for (auto &z : c.state) {
            z /= n;
            largest = std::max(largest, std::norm(z));
        }
        c.coherent = largest < 1 - tol.coherence;
        (c.coherent ? out.n_coherent : out.n_incoherent) += 1;
        out.components.push_back(std::move(c));
    }
    return out;
}

/// Three-tangle 4|Det3(psi)| from Cayley's hyperdeterminant of the amplitude
/// tensor. Equals 1 on the normalized GHZ state, 0 on W and product states.
inline double three_tangle(const ThreeQubitPureState &state) {
    const auto &a = state.amplitudes();
    const Complex a000 = a[0], a001 = a[1], a010 = a[2], a011 = a[3];
    const Complex a100 = a[4], a101 = a[5], a110 = a[6], a111 = a[7];
    const Complex d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 + a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    const Complex d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 + a000 * a111 * a110 * a001 +
                       a011 * a100 * a101 * a010 + a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
    const Complex d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

enum class SloccClass { FullySeparable, Bisep_A_BC, Bisep_B_AC, Bisep_C_AB, GHZ, W };

constexpr std::string_view to_string(SloccClass c) {
    switch (c) {
        case SloccClass::FullySeparable: return "FullySeparable";
        case SloccClass::Bisep_A_BC: return "Bisep_A_BC";
        case SloccClass::Bisep_B_AC: return "Bisep_B_AC";
        case SloccClass::Bisep_C_AB: return "Bisep_C_AB";
        case SloccClass::GHZ: return "GHZ";
        case SloccClass::W: return "W";
    }
    return "unknown";
}

/// Six-way split from the local ranks, with the three-tangle separating GHZ
/// from W once all ranks are 2. Two rank-1 parties cannot occur for a pure
/// state; if rounding produces it the state is reported fully separable.
inline SloccClass slocc_class(const ThreeQubitPureState &state, const Tolerances &tol = {}) {
    const auto n = normalize(state);
    const auto r = local_ranks(n, tol.rank);
    const int pure_parties = (r[0] == 1) + (r[1] == 1) + (r[2] == 1);
    if (pure_parties >= 2) return SloccClass::FullySeparable;
    if (r[0] == 1) return SloccClass::Bisep_A_BC;
    if (r[1] == 1) return SloccClass::Bisep_B_AC;
    if (r[2] == 1) return SloccClass::Bisep_C_AB;
    return three_tangle(n) > tol.tangle ? SloccClass::GHZ : SloccClass::W;
}

inline constexpr std::array<PartySet, 3> kBipartitions{PartySet{Party::A, Party::B}, PartySet{Party::A, Party::C},
                                                      PartySet{Party::B, Party::C}};

struct FineDescriptor {
    std::array<CoherenceNature, 3> single_nature{};
    std::array<MixtureComposition, 3> single_mix;
    std::array<MixtureComposition, 3> bipartite_mix;  // AB, AC, BC
    SloccClass slocc = SloccClass::FullySeparable;
};

inline FineDescriptor fine_descriptor(const ThreeQubitPureState &state, const Tolerances &tol = {}) {
    const auto n = normalize(state);
    FineDescriptor d;
    for (Party p : kParties) {
        const int i = static_cast<int>(p);
        d.single_nature[i] = coherence_nature(partial_trace(n, {p}), tol.coherence);
        d.single_mix[i] = conditional_decomposition(n, {p}, tol);
    }
    for (std::size_t i = 0; i < kBipartitions.size(); ++i) d.bipartite_mix[i] = conditional_decomposition(n, kBipartitions[i], tol);
    d.slocc = slocc_class(n, tol);
    return d;
}

}  // namespace slicckit
