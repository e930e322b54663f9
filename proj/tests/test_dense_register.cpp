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

#include "doctest.h"

#include "qrem/planar_qubit.hpp"

using qrem::DenseRegisterState;
using qrem::RandomStream;

namespace {

constexpr double kPi = std::numbers::pi;

DenseRegisterState random_state(unsigned nq, RandomStream& rng) {
    DenseRegisterState s(nq);
    std::vector<std::complex<double>> a(s.dimension());
    double norm = 0.0;
    for (auto& amp : a) {
        amp = {rng.next_normal(), rng.next_normal()};
        norm += std::norm(amp);
    }
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& amp : a) amp *= scale;
    s.set_amplitudes(std::move(a));
    return s;
}

}  // namespace

TEST_CASE("logical init places the GHZ difference state") {
    const auto one = qrem::ghz_logical_init(1);
    CHECK(one.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(one.amplitude(1).real() == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-15));

    const auto three = qrem::ghz_logical_init(3);
    CHECK(three.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(three.amplitude(7).real() == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-15));
    for (std::size_t i = 1; i < 7; ++i) {
        CHECK(std::abs(three.amplitude(i)) == 0.0);
    }
    for (unsigned nq = 1; nq <= 12; ++nq) {
        CHECK(qrem::norm_squared(qrem::ghz_logical_init(nq)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS((void)qrem::ghz_logical_init(0), std::invalid_argument);
    CHECK_THROWS_AS((void)qrem::ghz_logical_init(13), std::invalid_argument);
}

TEST_CASE("phase pulses step through the encoded states") {
    const unsigned n = 4;
    const unsigned nq = 2;

    // n pulses of pi/n turn the difference state into the plus state.
    auto state = qrem::ghz_logical_init(nq);
    for (unsigned i = 0; i < n; ++i) {
        state = qrem::ghz_phase_pulse(state, kPi / n, 0);
    }
    DenseRegisterState plus(nq);
    std::vector<std::complex<double>> a(plus.dimension(), 0.0);
    a.front() = 1 / std::sqrt(2.0);
    a.back() = 1 / std::sqrt(2.0);
    plus.set_amplitudes(std::move(a));
    CHECK(qrem::overlap(plus, state) == doctest::Approx(1.0).epsilon(1e-12));

    // Zero phase is the identity.
    const auto same = qrem::ghz_phase_pulse(state, 0.0, 0);
    CHECK(qrem::overlap(same, state) == doctest::Approx(1.0).epsilon(1e-15));

    // 2n pulses come back to the start, up to global phase.
    auto cycled = qrem::ghz_logical_init(nq);
    for (unsigned i = 0; i < 2 * n; ++i) {
        cycled = qrem::ghz_phase_pulse(cycled, kPi / n, 0);
    }
    CHECK(qrem::overlap(cycled, qrem::ghz_logical_init(nq)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS((void)qrem::ghz_phase_pulse(state, 0.1, nq), std::invalid_argument);
}

TEST_CASE("encode unitary produces GHZ states from trivial states") {
    const unsigned nq = 3;
    const DenseRegisterState zeros(nq);  // |000>
    const auto minus = qrem::ghz_encode_unitary(zeros, false);
    CHECK(minus.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(minus.amplitude(7).real() == doctest::Approx(-1 / std::sqrt(2.0)).epsilon(1e-12));

    DenseRegisterState all_ones(nq);
    std::vector<std::complex<double>> a(all_ones.dimension(), 0.0);
    a.back() = 1.0;
    all_ones.set_amplitudes(std::move(a));
    const auto plus = qrem::ghz_encode_unitary(all_ones, false);
    CHECK(plus.amplitude(0).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));
    CHECK(plus.amplitude(7).real() == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-12));

    // Decoding maps the two logical endpoints back to the trivial states.
    const auto decoded0 = qrem::ghz_encode_unitary(qrem::ghz_logical_init(nq), true);
    CHECK(std::abs(decoded0.amplitude(0)) == doctest::Approx(1.0).epsilon(1e-12));

    auto psi_n = qrem::ghz_logical_init(nq);
    const unsigned n = 4;
    for (unsigned i = 0; i < n; ++i) {
        psi_n = qrem::ghz_phase_pulse(psi_n, kPi / n, 0);
    }
    const auto decoded1 = qrem::ghz_encode_unitary(psi_n, true);
    CHECK(std::abs(decoded1.amplitude(7)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("encode round trip is the identity on random states") {
    RandomStream rng(31337, 0);
    for (int rep = 0; rep < 100; ++rep) {
        const unsigned nq = 1 + static_cast<unsigned>(rng.next_below(5));
        const auto s = random_state(nq, rng);
        const auto back = qrem::ghz_encode_unitary(qrem::ghz_encode_unitary(s, false), true);
        double max_dev = 0.0;
        for (std::size_t i = 0; i < s.dimension(); ++i) {
            max_dev = std::max(max_dev, std::abs(back.amplitude(i) - s.amplitude(i)));
        }
        CHECK(max_dev < 1e-12);
    }
}

TEST_CASE("bit flips act on basis indices") {
    const unsigned nq = 3;
    DenseRegisterState s(nq);  // |000>
    auto flipped = qrem::ghz_bit_flip(s, 0);
    CHECK(std::abs(flipped.amplitude(1)) == doctest::Approx(1.0));

    auto twice = qrem::ghz_bit_flip(flipped, 0);
    CHECK(std::abs(twice.amplitude(0)) == doctest::Approx(1.0));

    auto all = s;
    for (unsigned q = 0; q < nq; ++q) all = qrem::ghz_bit_flip(all, q);
    CHECK(std::abs(all.amplitude(7)) == doctest::Approx(1.0));

    CHECK_THROWS_AS((void)qrem::ghz_bit_flip(s, 3), std::invalid_argument);
}

TEST_CASE("measure_all is exact on basis states and Born-samples GHZ") {
    RandomStream rng(5150, 2);

    DenseRegisterState ones(3);
    std::vector<std::complex<double>> a(8, 0.0);
    a[7] = 1.0;
    ones.set_amplitudes(std::move(a));
    for (int i = 0; i < 100; ++i) {
        const auto bits = qrem::measure_all(ones, rng);
        CHECK(bits == std::vector<std::uint8_t>{1, 1, 1});
    }

    // The "minus" GHZ state: all-zeros or all-ones, each half the time.
    const auto minus = qrem::ghz_encode_unitary(DenseRegisterState(3), false);
    const int n = 100000;
    int all_ones_count = 0;
    const auto before = rng.draw_count();
    for (int i = 0; i < n; ++i) {
        const auto bits = qrem::measure_all(minus, rng);
        const bool is_ones = bits == std::vector<std::uint8_t>{1, 1, 1};
        const bool is_zeros = bits == std::vector<std::uint8_t>{0, 0, 0};
        REQUIRE((is_ones || is_zeros));
        all_ones_count += is_ones ? 1 : 0;
    }
    CHECK(rng.draw_count() - before == static_cast<std::uint64_t>(n));
    CHECK(std::fabs(all_ones_count / static_cast<double>(n) - 0.5) < 3.0 * std::sqrt(0.25 / n));

    // Decoded logical zero measures as all zeros with certainty.
    const auto decoded = qrem::ghz_encode_unitary(qrem::ghz_logical_init(3), true);
    for (int i = 0; i < 100; ++i) {
        CHECK(qrem::measure_all(decoded, rng) == std::vector<std::uint8_t>{0, 0, 0});
    }
}

TEST_CASE("random unitary sequences preserve the norm") {
    RandomStream rng(86, 4);
    int checks = 0;
    for (int seq = 0; seq < 250; ++seq) {
        const unsigned nq = 1 + static_cast<unsigned>(rng.next_below(4));
        auto s = random_state(nq, rng);
        for (int op = 0; op < 40; ++op) {
            switch (rng.next_below(4)) {
                case 0:
                    s = qrem::ghz_phase_pulse(s, (rng.next_unit() - 0.5) * 7.0,
                                              static_cast<unsigned>(rng.next_below(nq)));
                    break;
                case 1:
                    s = qrem::ghz_bit_flip(s, static_cast<unsigned>(rng.next_below(nq)));
                    break;
                case 2:
                    s = qrem::ghz_encode_unitary(s, false);
                    break;
                default:
                    s = qrem::ghz_encode_unitary(s, true);
                    break;
            }
            REQUIRE(std::fabs(qrem::norm_squared(s) - 1.0) < 1e-9);
            ++checks;
        }
    }
    CHECK(checks == 10000);
}

TEST_CASE("single-qubit register agrees with the planar picture") {
    // After k phase pulses of pi/n, decoding and reading all-zeros has the
    // same probability as the planar qubit's projector after k rotations.
    const unsigned n = 6;
    for (unsigned k = 0; k < 2 * n; ++k) {
        auto reg = qrem::ghz_logical_init(1);
        qrem::PlanarQubitState planar;
        for (unsigned i = 0; i < k; ++i) {
            reg = qrem::ghz_phase_pulse(reg, kPi / n, 0);
            planar = qrem::rotate(planar, kPi / n);
        }
        const auto decoded = qrem::ghz_encode_unitary(reg, true);
        const double p_zero = std::norm(decoded.amplitude(0));
        CHECK(p_zero == doctest::Approx(qrem::prob_outcome_one(planar)).epsilon(1e-12));
    }
}
