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

#include "qrem/dense_register.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qrem {

namespace {

using Amps = std::vector<std::complex<double>>;

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

void check_target(const DenseRegisterState& state, unsigned target, const char* op) {
    if (target >= state.qubit_count()) {
        throw std::invalid_argument(std::string(op) + ": target qubit out of range");
    }
}

void apply_x(Amps& a, unsigned target) {
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & bit) == 0) {
            std::swap(a[i], a[i | bit]);
        }
    }
}

void apply_h(Amps& a, unsigned target) {
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & bit) == 0) {
            const auto lo = a[i];
            const auto hi = a[i | bit];
            a[i] = (lo + hi) * kInvSqrt2;
            a[i | bit] = (lo - hi) * kInvSqrt2;
        }
    }
}

void apply_cnot(Amps& a, unsigned control, unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & cbit) != 0 && (i & tbit) == 0) {
            std::swap(a[i], a[i | tbit]);
        }
    }
}

// Fan-out CNOTs from qubit 0 to every other qubit.
void apply_cnot_chain(Amps& a, unsigned qubit_count) {
    for (unsigned t = 1; t < qubit_count; ++t) {
        apply_cnot(a, 0, t);
    }
}

}  // namespace

DenseRegisterState::DenseRegisterState(unsigned qubit_count) : qubit_count_(qubit_count) {
    if (qubit_count < 1 || qubit_count > kMaxQubits) {
        throw std::invalid_argument("DenseRegisterState: qubit count must be in [1, 12]");
    }
    amplitudes_.assign(std::size_t{1} << qubit_count, 0.0);
    amplitudes_[0] = 1.0;
}

void DenseRegisterState::set_amplitudes(Amps amps) {
    if (amps.size() != amplitudes_.size()) {
        throw std::invalid_argument("set_amplitudes: dimension mismatch");
    }
    amplitudes_ = std::move(amps);
}

DenseRegisterState ghz_logical_init(unsigned qubit_count) {
    DenseRegisterState state(qubit_count);
    Amps a(state.dimension(), 0.0);
    a.front() = kInvSqrt2;
    a.back() = -kInvSqrt2;
    state.set_amplitudes(std::move(a));
    return state;
}

DenseRegisterState ghz_phase_pulse(const DenseRegisterState& state, double phase,
                                   unsigned target) {
    check_target(state, target, "ghz_phase_pulse");
    if (!std::isfinite(phase)) {
        throw std::invalid_argument("ghz_phase_pulse: phase must be finite");
    }
    DenseRegisterState out = state;
    Amps a = out.amplitudes();
    const std::complex<double> factor = std::polar(1.0, -phase);
    const std::size_t bit = std::size_t{1} << target;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & bit) != 0) {
            a[i] *= factor;
        }
    }
    out.set_amplitudes(std::move(a));
    return out;
}

DenseRegisterState ghz_encode_unitary(const DenseRegisterState& state, bool inverse) {
    DenseRegisterState out = state;
    Amps a = out.amplitudes();
    const unsigned nq = state.qubit_count();
    if (!inverse) {
        apply_cnot_chain(a, nq);
        apply_x(a, 0);
        apply_h(a, 0);
        apply_cnot_chain(a, nq);
    } else {
        apply_cnot_chain(a, nq);
        apply_h(a, 0);
        apply_x(a, 0);
        apply_cnot_chain(a, nq);
    }
    out.set_amplitudes(std::move(a));
    return out;
}

DenseRegisterState ghz_bit_flip(const DenseRegisterState& state, unsigned target) {
    check_target(state, target, "ghz_bit_flip");
    DenseRegisterState out = state;
    Amps a = out.amplitudes();
    apply_x(a, target);
    out.set_amplitudes(std::move(a));
    return out;
}

std::vector<std::uint8_t> measure_all(const DenseRegisterState& state, RandomStream& rng) {
    const double u = rng.next_unit();
    double cumulative = 0.0;
    std::size_t sampled = state.dimension() - 1;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        cumulative += std::norm(state.amplitude(i));
        if (u < cumulative) {
            sampled = i;
            break;
        }
    }
    std::vector<std::uint8_t> bits(state.qubit_count());
    for (unsigned q = 0; q < state.qubit_count(); ++q) {
        bits[q] = static_cast<std::uint8_t>((sampled >> q) & 1);
    }
    return bits;
}

double norm_squared(const DenseRegisterState& state) {
    double total = 0.0;
    for (const auto& amp : state.amplitudes()) {
        total += std::norm(amp);
    }
    return total;
}

double overlap(const DenseRegisterState& a, const DenseRegisterState& b) {
    if (a.qubit_count() != b.qubit_count()) {
        throw std::invalid_argument("overlap: qubit count mismatch");
    }
    std::complex<double> inner = 0.0;
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        inner += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return std::abs(inner);
}

}  // namespace qrem
