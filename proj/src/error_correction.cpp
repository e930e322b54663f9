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

#include "qrem/error_correction.hpp"

#include <numbers>
#include <stdexcept>

#include "qrem/energy.hpp"

namespace qrem {

TmrResult run_tmr(const BitString& s, const ProblemSpec& spec, const NoiseModel& noise,
                  RandomStream& rng) {
    TmrResult result;
    int ones = 0;
    for (int branch = 0; branch < 3; ++branch) {
        const auto state = run_single_qubit(s, spec, noise, rng);
        result.outcomes[static_cast<std::size_t>(branch)] = measure_x(state, rng);
        ones += result.outcomes[static_cast<std::size_t>(branch)].x;
    }
    result.majority = ones >= 2 ? 1 : 0;
    result.answer = answer_from_outcome({result.majority}, spec);
    return result;
}

double tmr_failure_prob(double p) {
    if (!(p >= 0.0) || !(p <= 1.0)) {
        throw std::invalid_argument("tmr_failure_prob: p must lie in [0, 1]");
    }
    return 3.0 * p * p - 2.0 * p * p * p;
}

GhzAutomaton::GhzAutomaton(const ProblemSpec& spec, unsigned qubit_count,
                           const NoiseModel& noise)
    : step_(std::numbers::pi / static_cast<double>(spec.n)),
      noise_(noise),
      state_(ghz_logical_init(qubit_count)) {}

void GhzAutomaton::feed(Bit b, RandomStream& rng) {
    if (b == 0) {
        return;
    }
    state_ = ghz_phase_pulse(state_, step_ + sample_angle_error(noise_, rng), 0);
    for (unsigned q = 0; q < state_.qubit_count(); ++q) {
        if (rng.next_bernoulli(noise_.p_flip())) {
            state_ = ghz_bit_flip(state_, q);
        }
    }
    ++ones_seen_;
}

DenseRegisterState GhzAutomaton::decoded() const {
    return ghz_encode_unitary(state_, true);
}

GhzRunResult run_ghz(const BitString& s, const ProblemSpec& spec, unsigned qubit_count,
                     const NoiseModel& noise, RandomStream& rng) {
    if (qubit_count % 2 == 0) {
        throw std::invalid_argument("run_ghz: qubit count must be odd");
    }
    if (qubit_count > 11) {
        throw std::invalid_argument("run_ghz: qubit count must be <= 11");
    }
    GhzAutomaton machine(spec, qubit_count, noise);
    for (Bit b : s.bits()) {
        machine.feed(b, rng);
    }
    GhzRunResult result;
    result.decoded_bits = measure_all(machine.decoded(), rng);
    unsigned ones = 0;
    for (auto bit : result.decoded_bits) {
        ones += bit;
    }
    result.majority_bit = 2 * ones > qubit_count ? 1 : 0;
    // Majority 0 reads as the remainder-0 endpoint, so n is excluded;
    // majority 1 reads as the remainder-n endpoint, so 0 is excluded.
    result.answer = Answer{result.majority_bit == 0 ? spec.n : 0};
    return result;
}

double ghz_switch_coupling(std::uint64_t n, double tau, double h) {
    return qubit_pulse_coupling(n, tau, h);
}

}  // namespace qrem
