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
#include <numbers>
#include <stdexcept>

namespace qrem {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double theta) {
    double wrapped = std::fmod(theta, kTwoPi);
    if (wrapped < 0.0) {
        wrapped += kTwoPi;
    }
    if (wrapped >= kTwoPi) {  // fmod(-tiny) + 2*pi can round up to 2*pi
        wrapped -= kTwoPi;
    }
    return wrapped;
}

}  // namespace

PlanarQubitState::PlanarQubitState(double theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("PlanarQubitState: angle must be finite");
    }
    theta_ = reduce_angle(theta);
}

PlanarQubitState rotate(PlanarQubitState state, double delta) {
    if (!std::isfinite(delta)) {
        throw std::invalid_argument("rotate: delta must be finite");
    }
    return PlanarQubitState(state.theta() + delta);
}

double prob_outcome_one(PlanarQubitState state) {
    return (1.0 + std::cos(state.theta())) / 2.0;
}

MeasurementOutcome measure_x(PlanarQubitState state, RandomStream& rng) {
    return MeasurementOutcome{rng.next_unit() < prob_outcome_one(state) ? 1 : 0};
}

}  // namespace qrem
