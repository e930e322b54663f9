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

#ifndef QREM_DENSE_REGISTER_HPP
#define QREM_DENSE_REGISTER_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "qrem/rng.hpp"

namespace qrem {

/// Dense state vector over up to 12 qubits. Qubit q maps to bit q of the
/// basis index (qubit 0 is the least significant bit). The qubit count is
/// fixed for the lifetime of a value; unitaries preserve the norm.
class DenseRegisterState {
  public:
    static constexpr unsigned kMaxQubits = 12;

    /// |0...0> on the given number of qubits.
    explicit DenseRegisterState(unsigned qubit_count);

    unsigned qubit_count() const { return qubit_count_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::complex<double> amplitude(std::size_t index) const { return amplitudes_.at(index); }
    const std::vector<std::complex<double>>& amplitudes() const { return amplitudes_; }

    /// Test hook: replaces the amplitude vector (size must match).
    void set_amplitudes(std::vector<std::complex<double>> amps);

  private:
    unsigned qubit_count_;
    std::vector<std::complex<double>> amplitudes_;
};

/// The logical start state (|0...0> - |1...1>)/sqrt(2).
DenseRegisterState ghz_logical_init(unsigned qubit_count);

/// Multiplies every amplitude whose target bit is set by exp(-i*phase).
/// With phase pi/n this advances the encoded step index k by one.
DenseRegisterState ghz_phase_pulse(const DenseRegisterState& state, double phase,
                                   unsigned target);

/// The encoding unitary U (|0...0> -> |->, |1...1> -> |+>), built as a
/// CNOT fan-out, X and H on qubit 0, and a second CNOT fan-out. With
/// inverse set, applies U^-1.
DenseRegisterState ghz_encode_unitary(const DenseRegisterState& state, bool inverse);

/// Pauli X on the target qubit.
DenseRegisterState ghz_bit_flip(const DenseRegisterState& state, unsigned target);

/// Samples one computational-basis index (Born rule, single draw) and
/// returns its bits, entry q for qubit q.
std::vector<std::uint8_t> measure_all(const DenseRegisterState& state, RandomStream& rng);

/// Sum of squared magnitudes.
double norm_squared(const DenseRegisterState& state);

/// |<a|b>|, the fidelity-style overlap ignoring global phase.
double overlap(const DenseRegisterState& a, const DenseRegisterState& b);

}  // namespace qrem

#endif
