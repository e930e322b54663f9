// Copyright 2026 The qrem Authors
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

#ifndef QREM_MONTECARLO_HPP
#define QREM_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qrem/automaton.hpp"
#include "qrem/error_correction.hpp"
#include "qrem/noise.hpp"

namespace qrem {

enum class SchemeKind {
    kSingleQubit,
    kTmr,
    kGhz,
    kCoinFlip,  // control better: random bet on 0 or n, no qubit at all
};

struct SchemeSpec {
    SchemeKind kind = SchemeKind::kSingleQubit;
    unsigned ghz_qubits = 3;  // used by kGhz only; odd, <= 11
};

std::string_view to_string(SchemeKind kind);

/// How trial strings are generated. Conditioned modes fix the Hamming
/// weight exactly (ones placed uniformly at random) so every trial lands on
/// the requested critical remainder; unconditioned mode draws i.i.d. fair
/// bits, as a roulette pointer would see.
enum class Conditioning { kRemainderZero, kRemainderN, kUnconditioned };

std::string_view to_string(Conditioning c);

struct TrialConfig {
    ProblemSpec spec{2, 1};
    NoiseModel noise;
    SchemeSpec scheme;
    std::uint64_t trials = 1;
    std::uint64_t master_seed = 0;
    Conditioning conditioning = Conditioning::kRemainderZero;
    /// Exact Hamming weight for conditioned modes. Unset: the harness picks
    /// the admissible weight nearest N/2.
    std::optional<std::uint64_t> target_weight;
};

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t wrong = 0;
    double p_hat = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double predicted = 0.0;

    bool operator==(const TrialStats&) const = default;
};

/// 95% Wilson score interval for wrong/trials.
std::pair<double, double> wilson_interval(std::uint64_t wrong, std::uint64_t trials);

/// A string with exactly `weight` ones placed uniformly at random
/// (selection sampling; consumes one draw per character).
BitString make_conditioned_string(const ProblemSpec& spec, std::uint64_t weight,
                                  RandomStream& rng);

/// The Hamming weight trials will use: the explicit target if any (checked
/// against the conditioning residue), otherwise the admissible weight
/// nearest N/2. Unconditioned mode has no target; this throws for it.
std::uint64_t resolved_target_weight(const TrialConfig& cfg);

/// Runs cfg.trials independent executions and counts wrong verdicts (the
/// machine excluded the value that actually was the remainder; only
/// critical trials can be wrong). Trial i draws from substream
/// (master_seed, i), so results are bitwise identical for any thread count.
TrialStats estimate_error_rate(const TrialConfig& cfg, unsigned threads = 0);

/// Spread of the accumulated half-angle deviation across trials, measured
/// on the unwrapped pulse sum of a single-qubit run.
struct AngleVarianceStats {
    std::uint64_t trials = 0;
    double mean = 0.0;       // half-angle radians
    double variance = 0.0;   // sample variance, half-angle radians^2
    double std_error = 0.0;  // of the variance estimate, Gaussian approx
    double predicted = 0.0;  // target_weight * phi0^2

    bool operator==(const AngleVarianceStats&) const = default;
};

AngleVarianceStats estimate_angle_variance(const TrialConfig& cfg, unsigned threads = 0);

enum class SweepAxis { kPhi0, kLength, kHalfModulus, kFlipProbability, kGhzQubits };

std::string_view to_string(SweepAxis axis);

struct SweepPoint {
    double value = 0.0;
    std::optional<TrialStats> stats;  // empty on a per-point error
    std::string error;
};

/// One estimate per axis value, in input order; point i runs under the
/// derived seed derive_seed(master_seed, i). A bad value yields an error
/// entry and the sweep continues.
std::vector<SweepPoint> sweep(const TrialConfig& base, SweepAxis axis,
                              std::span<const double> values, unsigned threads = 0);

namespace detail {
/// Static-chunk parallel loop over trial indices; the body must only touch
/// per-trial state (or associative integer accumulators).
void parallel_trials(std::uint64_t trials, unsigned threads,
                     const std::function<void(std::uint64_t first, std::uint64_t last)>& chunk);
}  // namespace detail

}  // namespace qrem

#endif
