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
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "slicckit/classifier.hpp"
#include "slicckit/sio.hpp"
#include "slicckit/state.hpp"

namespace slicckit {

// ---------------------------------------------------------------------------
// Pinned random source
// ---------------------------------------------------------------------------

/// mt19937_64 with distributions written out explicitly, so a seed yields the
/// same stream on every platform and standard library.
class Rng {
   public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform on {0, ..., n - 1}, n > 0, by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do x = next();
        while (x >= limit);
        return x % n;
    }

    /// Standard normal via Box-Muller (one variate per call).
    double gaussian() {
        double u1;
        do u1 = uniform();
        while (u1 == 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    Complex phase() { return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi)); }

   private:
    std::mt19937_64 engine_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

/// Independent stream for one trial of a campaign.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(splitmix64(seed + trial * 0x9E3779B97F4A7C15ull)); }

// ---------------------------------------------------------------------------
// Random objects
// ---------------------------------------------------------------------------

enum class AmplitudeLaw {
    Gaussian,        // i.i.d. standard complex normal
    UniformModulus,  // modulus uniform on [0, 1], uniform phase
};

struct RandomSpec {
    std::uint64_t seed = 1;
    std::size_t n_trials = 10000;
    AmplitudeLaw amplitude_law = AmplitudeLaw::Gaussian;
    std::optional<SupportPattern> support_filter;
    TableOptions table;
    unsigned jobs = 1;
};

inline constexpr double kAmplitudeFloor = 1e-3;

inline SupportPattern random_support(Rng &rng) { return SupportPattern(static_cast<unsigned>(1 + rng.below(255))); }

/// Normalized state whose support is exactly `support` (all eight kets when
/// absent), every in-support modulus at least kAmplitudeFloor.
inline ThreeQubitPureState random_state(Rng &rng, AmplitudeLaw law, std::optional<SupportPattern> support = std::nullopt) {
    const SupportPattern s = support.value_or(SupportPattern(255));
    if (s.empty()) throw Error(ErrorCode::AllZero, "empty support");
    for (;;) {
        Amplitudes amp{};
        double norm2 = 0;
        for (int k : s.indices()) {
            amp[k] = law == AmplitudeLaw::Gaussian ? Complex(rng.gaussian(), rng.gaussian()) / std::sqrt(2.0)
                                                   : rng.uniform() * rng.phase();
            norm2 += std::norm(amp[k]);
        }
        if (norm2 == 0) continue;
        const double n = std::sqrt(norm2);
        bool ok = true;
        for (int k : s.indices()) {
            amp[k] /= n;
            ok = ok && std::abs(amp[k]) >= kAmplitudeFloor;
        }
        if (ok) return ThreeQubitPureState(amp);
    }
}

inline Complex random_entry(Rng &rng) { return std::exp(rng.uniform(std::log(0.25), std::log(4.0))) * rng.phase(); }

/// Invertible strictly incoherent triple; entry moduli log-uniform on [0.25, 4].
inline SIOTriple random_sio_triple(Rng &rng, std::optional<FlipMask> family = std::nullopt) {
    const FlipMask f = family.value_or(FlipMask(static_cast<unsigned>(rng.below(8))));
    SIOTriple t;
    for (Party p : kParties) {
        const Complex u = random_entry(rng), v = random_entry(rng);
        t.ops[static_cast<int>(p)] = f.flips(p) ? SIOLocalOperator::antidiagonal(u, v) : SIOLocalOperator::diagonal(u, v);
    }
    return t;
}

/// Incoherent qubit operator, possibly singular: diagonal, antidiagonal, either
/// with one entry zeroed, or a collapse onto a single basis ket.
inline LocalOperator random_incoherent_operator(Rng &rng) {
    const Complex u = random_entry(rng), v = random_entry(rng);
    switch (rng.below(6)) {
        case 0: return {{u, 0.0, 0.0, v}};
        case 1: return {{0.0, u, v, 0.0}};
        case 2: return rng.below(2) ? LocalOperator{{u, 0.0, 0.0, 0.0}} : LocalOperator{{0.0, 0.0, 0.0, v}};
        case 3: return rng.below(2) ? LocalOperator{{0.0, u, 0.0, 0.0}} : LocalOperator{{0.0, 0.0, v, 0.0}};
        case 4: return {{u, v, 0.0, 0.0}};
        default: return {{0.0, 0.0, u, v}};
    }
}

// ---------------------------------------------------------------------------
// Campaigns
// ---------------------------------------------------------------------------

struct Disagreement {
    std::size_t trial = 0;
    std::string check;
    ThreeQubitPureState psi;
    ThreeQubitPureState phi;
    bool solver = false;
    bool table = false;
    std::string row;
    std::optional<FlipMask> family;
    std::string detail;
};

struct ConsistencyReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t agreements = 0;
    std::size_t skipped = 0;  // trials counted as agreements without a check
    std::vector<Disagreement> disagreements;
    double elapsed_seconds = 0;

    bool ok() const { return disagreements.empty(); }
};

namespace detail {

struct TrialOutcome {
    bool skipped = false;
    std::optional<Disagreement> disagreement;
};

template <class Trial>
ConsistencyReport run_campaign(std::string suite, const RandomSpec &spec, Trial trial) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(spec.n_trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < spec.n_trials; i = next++) {
            Rng rng = trial_rng(spec.seed, i);
            outcomes[i] = trial(rng);
            if (outcomes[i].disagreement) outcomes[i].disagreement->trial = i;
        }
    };
    const unsigned jobs = std::max(1u, spec.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    ConsistencyReport r{std::move(suite), spec.seed, spec.n_trials, 0, 0, {}, 0};
    for (auto &o : outcomes) {
        if (o.disagreement)
            r.disagreements.push_back(std::move(*o.disagreement));
        else
            ++r.agreements;
        r.skipped += o.skipped;
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Solver and table verdicts for one ordered pair; a disagreement when they
/// differ or when a returned witness fails verification.
inline std::optional<Disagreement> compare_pair(const std::string &check, const ThreeQubitPureState &psi, const ThreeQubitPureState &phi,
                                                const TableOptions &table, std::optional<bool> expected = std::nullopt) {
    const auto solved = solve_slicc_equivalence(psi, phi);
    const auto verdict = compare_by_table(psi, phi, table);
    std::string detail;
    if (solved && !verify_witness(*solved.witness, psi, phi)) detail = "witness fails verification";
    if (solved.equivalent() != verdict.same) detail = "solver and table disagree";
    if (expected && solved.equivalent() != *expected) detail = "solver misses a constructed equivalence";
    if (detail.empty()) return std::nullopt;
    Disagreement d{0, check, psi, phi, solved.equivalent(), verdict.same, verdict.row_psi, std::nullopt, detail};
    if (solved) d.family = solved.witness->family();
    return d;
}

}  // namespace detail

/// Per trial: psi on a random support, phi = T psi for a random invertible SIO
/// triple (must be equivalent by both solver and table), and an independent
/// state on the orbit-mate support psi.support ^ m compared both ways.
inline ConsistencyReport orbit_consistency_campaign(const RandomSpec &spec) {
    return detail::run_campaign("orbit", spec, [&](Rng &rng) {
        detail::TrialOutcome out;
        const SupportPattern s = spec.support_filter.value_or(random_support(rng));
        const auto psi = random_state(rng, spec.amplitude_law, s);
        const SIOTriple t = random_sio_triple(rng);
        const auto phi = apply_sio_triple(t, psi);
        if (auto d = detail::compare_pair("orbit", psi, phi, spec.table, true)) {
            d->family = t.family();
            out.disagreement = std::move(d);
            return out;
        }
        const auto other = random_state(rng, spec.amplitude_law, s.flipped(FlipMask(static_cast<unsigned>(rng.below(8)))));
        if (auto d = detail::compare_pair("independent", psi, other, spec.table)) {
            out.disagreement = std::move(d);
            return out;
        }
        out.disagreement = detail::compare_pair("independent-reversed", other, psi, spec.table);
        return out;
    });
}

/// Per trial: a random state and a random (possibly singular) incoherent
/// triple; no party's local rank may increase. Zero images are skipped.
inline ConsistencyReport rank_monotonicity_campaign(const RandomSpec &spec) {
    return detail::run_campaign("ranks", spec, [&](Rng &rng) {
        detail::TrialOutcome out;
        const SupportPattern s = spec.support_filter.value_or(random_support(rng));
        const auto psi = random_state(rng, spec.amplitude_law, s);
        const LocalTriple ops{random_incoherent_operator(rng), random_incoherent_operator(rng), random_incoherent_operator(rng)};
        const Amplitudes image = apply_local(ops, psi.amplitudes());
        double norm2 = 0;
        for (const auto &a : image) norm2 += std::norm(a);
        if (std::sqrt(norm2) <= 1e-12) {
            out.skipped = true;
            return out;
        }
        const ThreeQubitPureState phi(image);
        const auto before = local_ranks(psi), after = local_ranks(phi);
        for (Party p : kParties) {
            const int i = static_cast<int>(p);
            if (after[i] > before[i]) {
                out.disagreement = Disagreement{0,     "ranks", psi, phi, false, false, {}, std::nullopt,
                                                std::string("local rank of ") + party_name(p) + " increased from " +
                                                    std::to_string(before[i]) + " to " + std::to_string(after[i])};
                break;
            }
        }
        return out;
    });
}

}  // namespace slicckit
