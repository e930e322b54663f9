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

#include "qrem/planar_qubit.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "doctest.h"

using qrem::PlanarQubitState;
using qrem::RandomStream;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("rotate advances and wraps the angle") {
    const PlanarQubitState zero;
    CHECK(qrem::rotate(zero, kPi / 2).theta() == doctest::Approx(kPi / 2).epsilon(1e-15));

    const PlanarQubitState s(1.2345);
    CHECK(qrem::rotate(s, 0.0).theta() == 1.2345);

    const PlanarQubitState high(3 * kPi / 2);
    CHECK(qrem::rotate(high, kPi).theta() == doctest::Approx(kPi / 2).epsilon(1e-12));

    // Input is unmodified (value semantics).
    (void)qrem::rotate(s, 2.0);
    CHECK(s.theta() == 1.2345);
}

TEST_CASE("rotate rejects non-finite deltas") {
    const PlanarQubitState s;
    CHECK_THROWS_AS((void)qrem::rotate(s, std::numeric_limits<double>::infinity()),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)qrem::rotate(s, std::numeric_limits<double>::quiet_NaN()),
                    std::invalid_argument);
}

TEST_CASE("angle stays in [0, 2*pi) including negative rotations") {
    PlanarQubitState s;
    RandomStream rng(2024, 0);
    for (int i = 0; i < 20000; ++i) {
        const double delta = (rng.next_unit() - 0.5) * 50.0;
        s = qrem::rotate(s, delta);
        CHECK(s.theta() >= 0.0);
        CHECK(s.theta() < 2 * kPi);
    }
}

TEST_CASE("full turns are the identity") {
    const PlanarQubitState s(0.7);
    CHECK(qrem::rotate(s, 2 * kPi).theta() == doctest::Approx(0.7).epsilon(1e-12));
    CHECK(PlanarQubitState(0.7 + 6 * kPi).theta() == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("projector probability honors the half-angle convention") {
    CHECK(qrem::prob_outcome_one(PlanarQubitState(0.0)) == 1.0);
    // Physical angle pi is the orthogonal state: exactly zero.
    CHECK(qrem::prob_outcome_one(qrem::rotate(PlanarQubitState(), kPi)) == 0.0);
    CHECK(qrem::prob_outcome_one(PlanarQubitState(kPi / 2)) == doctest::Approx(0.5).epsilon(1e-15));
    // Generic angle: cos^2(theta/2).
    const double theta = 1.1;
    CHECK(qrem::prob_outcome_one(PlanarQubitState(theta)) ==
          doctest::Approx(std::cos(theta / 2) * std::cos(theta / 2)).epsilon(1e-14));
}

TEST_CASE("measurement is deterministic at the poles") {
    RandomStream rng(99, 0);
    for (int i = 0; i < 1000; ++i) {
        CHECK(qrem::measure_x(PlanarQubitState(0.0), rng).x == 1);
        CHECK(qrem::measure_x(PlanarQubitState(kPi), rng).x == 0);
    }
}

TEST_CASE("measurement samples the Born rule at the equator midpoint") {
    RandomStream rng(7, 11);
    const int n = 100000;
    int ones = 0;
    const auto before = rng.draw_count();
    for (int i = 0; i < n; ++i) {
        ones += qrem::measure_x(PlanarQubitState(kPi / 2), rng).x;
    }
    CHECK(rng.draw_count() - before == static_cast<std::uint64_t>(n));
    const double mean = static_cast<double>(ones) / n;
    CHECK(std::fabs(mean - 0.5) < 3.0 * std::sqrt(0.25 / n));
}
