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

#ifndef QREM_PLANAR_QUBIT_HPP
#define QREM_PLANAR_QUBIT_HPP

#include "qrem/rng.hpp"

namespace qrem {

/// A qubit confined to the Bloch equator, tracked as the physical rotation
/// angle theta in [0, 2*pi). The amplitude-space (Hilbert) angle is theta/2:
/// states at physical angles 0 and pi are orthogonal. Global phase is not
/// tracked. Values are immutable; operations return new states.
class PlanarQubitState {
  public:
    PlanarQubitState() = default;
    explicit PlanarQubitState(double theta);

    double theta() const { return theta_; }

  private:
    double theta_ = 0.0;
};

/// Binary result of the projector onto the zero-angle state; x = 1 means the
/// projection succeeded.
struct MeasurementOutcome {
    int x = 0;
};

/// Advances the rotation angle by delta (radians, reduced mod 2*pi).
/// Throws std::invalid_argument when delta is not finite.
PlanarQubitState rotate(PlanarQubitState state, double delta);

/// Probability that measuring with the zero-angle projector yields 1,
/// i.e. cos^2(theta/2), computed as (1 + cos theta)/2 so the orthogonal
/// state at theta = pi gives exactly 0.
double prob_outcome_one(PlanarQubitState state);

/// Samples the projector outcome; consumes exactly one draw.
MeasurementOutcome measure_x(PlanarQubitState state, RandomStream& rng);

}  // namespace qrem

#endif
