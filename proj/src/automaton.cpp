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

#include "qrem/automaton.hpp"

#include <bit>
#include <numbers>
#include <stdexcept>

namespace qrem {

namespace {

void check_bits(const std::vector<Bit>& bits) {
    for (Bit b : bits) {
        if (b > 1) {
            throw std::invalid_argument("BitString: entries must be 0 or 1");
        }
    }
}

}  // namespace

BitString::BitString(std::vector<Bit> bits) : bits_(std::move(bits)) {
    check_bits(bits_);
}

std::uint64_t BitString::hamming_weight() const {
    std::uint64_t ones = 0;
    for (Bit b : bits_) {
        ones += b;
    }
    return ones;
}

ProblemSpec::ProblemSpec(std::uint64_t half_modulus, std::uint64_t length)
    : n(half_modulus), N(length) {
    if (n < 2) {
        throw std::invalid_argument("ProblemSpec: half-modulus must be >= 2");
    }
    if (n > (std::uint64_t{1} << 62)) {
        throw std::invalid_argument("ProblemSpec: half-modulus too large");
    }
    if (N < 1) {
        throw std::invalid_argument("ProblemSpec: length must be >= 1");
    }
}

std::uint64_t true_remainder(const BitString& s, const ProblemSpec& spec) {
    return s.hamming_weight() % (2 * spec.n);
}

SingleQubitAutomaton::SingleQubitAutomaton(const ProblemSpec& spec, const NoiseModel& noise)
    : step_(std::numbers::pi / static_cast<double>(spec.n)), noise_(noise) {}

void SingleQubitAutomaton::feed(Bit b, RandomStream& rng) {
    if (b == 0) {
        return;
    }
    const double pulse = step_ + sample_angle_error(noise_, rng);
    state_ = rotate(state_, pulse);
    accumulated_angle_ += pulse;
    ++ones_seen_;
}

PlanarQubitState run_single_qubit(const BitString& s, const ProblemSpec& spec,
                                  const NoiseModel& noise, RandomStream& rng) {
    SingleQubitAutomaton machine(spec, noise);
    for (Bit b : s.bits()) {
        machine.feed(b, rng);
    }
    return machine.state();
}

Answer answer_from_outcome(MeasurementOutcome m, const ProblemSpec& spec) {
    return Answer{m.x == 1 ? spec.n : 0};
}

CounterRun run_classical_counter(const BitString& s, const ProblemSpec& spec) {
    const std::uint64_t modulus = 2 * spec.n;
    CounterRun run;
    for (Bit b : s.bits()) {
        if (b == 0) {
            continue;
        }
        const std::uint64_t next = (run.remainder + 1) % modulus;
        run.bit_flips += static_cast<std::uint64_t>(std::popcount(run.remainder ^ next));
        run.remainder = next;
    }
    return run;
}

RotatorRun run_classical_rotator(const BitString& s, const ProblemSpec& spec, double spin) {
    if (!(spin >= 0.5)) {
        throw std::invalid_argument("run_classical_rotator: spin must be >= 1/2");
    }
    const std::uint64_t k = true_remainder(s, spec);
    return RotatorRun{
        static_cast<double>(k) * std::numbers::pi / static_cast<double>(spec.n),
        2.0 * spin,
    };
}

}  // namespace qrem
