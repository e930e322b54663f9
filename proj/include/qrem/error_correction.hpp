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

#ifndef QREM_ERROR_CORRECTION_HPP
#define QREM_ERROR_CORRECTION_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qrem/automaton.hpp"
#include "qrem/dense_register.hpp"

namespace qrem {

/// Triple-modular redundancy: three independent planar qubits fed the same
/// string, measured separately, majority-voted.
struct TmrResult {
    std::array<MeasurementOutcome, 3> outcomes{};
    int majority = 0;
    Answer answer;
};

/// The three branches consume the caller's stream in branch order, each with
/// independent draws; results are joined deterministically.
TmrResult run_tmr(const BitString& s, const ProblemSpec& spec, const NoiseModel& noise,
                  RandomStream& rng);

/// Probability that at least two of three independent qubits are wrong when
/// each is wrong with probability p: 3p^2 - 2p^3.
double tmr_failure_prob(double p);

/// Entangled-register run: decoded qubit readouts and their majority vote.
/// A zero majority corresponds to the remainder-0 endpoint (excludes n); a
/// one majority to the remainder-n endpoint (excludes 0).
struct GhzRunResult {
    std::vector<std::uint8_t> decoded_bits;
    int majority_bit = 0;
    Answer answer;
};

/// Incremental entangled-register machine. Per '1' character: one phase
/// pulse of pi/n (plus sampled angle error) on qubit 0, then an independent
/// bit-flip chance on every qubit. Draw budget per '1' is 1 + qubit_count,
/// regardless of noise settings.
class GhzAutomaton {
  public:
    GhzAutomaton(const ProblemSpec& spec, unsigned qubit_count, const NoiseModel& noise);

    void feed(Bit b, RandomStream& rng);

    const DenseRegisterState& state() const { return state_; }

    /// The state after the decoding unitary (copy; the run continues).
    DenseRegisterState decoded() const;

    std::uint64_t ones_seen() const { return ones_seen_; }

  private:
    double step_;
    NoiseModel noise_;
    DenseRegisterState state_;
    std::uint64_t ones_seen_ = 0;
};

/// Full run: init, stream, decode, measure, vote. qubit_count must be odd
/// (no vote ties) and at most 11.
GhzRunResult run_ghz(const BitString& s, const ProblemSpec& spec, unsigned qubit_count,
                     const NoiseModel& noise, RandomStream& rng);

/// Coupling energy of one nonorthogonal switch, h/(4*n*tau); independent of
/// how many qubits are entangled.
double ghz_switch_coupling(std::uint64_t n, double tau, double h = 1.0);

}  // namespace qrem

#endif
