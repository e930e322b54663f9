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

#ifndef QREM_AUTOMATON_HPP
#define QREM_AUTOMATON_HPP

#include <cstdint>

#include "qrem/bitstring.hpp"
#include "qrem/noise.hpp"
#include "qrem/planar_qubit.hpp"
#include "qrem/rng.hpp"

namespace qrem {

/// Problem parameters: the stream length N and the half-modulus n. The task
/// is to name one of {0, n} that is NOT the Hamming weight's remainder mod
/// 2n. The machine advances by a physical angle pi/n per '1' character.
struct ProblemSpec {
    ProblemSpec(std::uint64_t half_modulus, std::uint64_t length);

    std::uint64_t n;  // half-modulus, >= 2
    std::uint64_t N;  // string length, >= 1
};

/// The machine's verdict: `excluded` (either 0 or n) is asserted NOT to be
/// the remainder of the Hamming weight mod 2n. The machine never claims to
/// know the remainder itself.
struct Answer {
    std::uint64_t excluded = 0;
};

/// True when the assertion is wrong, i.e. the excluded value IS the actual
/// remainder. Only possible in critical cases (remainder 0 or n).
inline bool answer_is_wrong(Answer a, std::uint64_t actual_remainder) {
    return a.excluded == actual_remainder;
}

/// Brute-force oracle: Hamming weight mod 2n.
std::uint64_t true_remainder(const BitString& s, const ProblemSpec& spec);

/// Incremental single-qubit machine: one rotation of pi/n (plus sampled
/// angle error) per '1' character, nothing on '0'. Exactly one noise draw
/// is consumed per '1', noiseless or not.
class SingleQubitAutomaton {
  public:
    SingleQubitAutomaton(const ProblemSpec& spec, const NoiseModel& noise);

    void feed(Bit b, RandomStream& rng);

    const PlanarQubitState& state() const { return state_; }

    /// Total physical angle applied, without the mod-2*pi reduction; used
    /// for deviation statistics where wrapping would bias the estimate.
    double accumulated_angle() const { return accumulated_angle_; }

    std::uint64_t ones_seen() const { return ones_seen_; }

  private:
    double step_;
    NoiseModel noise_;
    PlanarQubitState state_;
    double accumulated_angle_ = 0.0;
    std::uint64_t ones_seen_ = 0;
};

/// Runs the machine over a full string and returns the final state.
PlanarQubitState run_single_qubit(const BitString& s, const ProblemSpec& spec,
                                  const NoiseModel& noise, RandomStream& rng);

/// Maps the projector outcome to the verdict: X = 1 excludes n, X = 0
/// excludes 0.
Answer answer_from_outcome(MeasurementOutcome m, const ProblemSpec& spec);

/// Classical baseline: a ceil(log2(2n))-bit register counting mod 2n.
struct CounterRun {
    std::uint64_t remainder = 0;
    std::uint64_t bit_flips = 0;  // physical register-bit transitions
};

CounterRun run_classical_counter(const BitString& s, const ProblemSpec& spec);

/// Classical rotator baseline: same kinematics as the noiseless qubit, but
/// a spin-S magnet needs 2S times longer per step at equal coupling.
struct RotatorRun {
    double final_angle = 0.0;  // physical radians in [0, 2*pi)
    double time_factor = 1.0;  // per-pulse slowdown vs the qubit
};

RotatorRun run_classical_rotator(const BitString& s, const ProblemSpec& spec, double spin);

}  // namespace qrem

#endif
