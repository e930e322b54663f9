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

#ifndef QREM_NOISE_HPP
#define QREM_NOISE_HPP

#include <cstdint>
#include <string_view>

#include "qrem/rng.hpp"

namespace qrem {

/// Per-gate error model. phi0 and bias are amplitude-space (half-angle)
/// radians: a sampled error is drawn as Normal(bias, phi0^2) in that space
/// and doubled when applied as a physical rotation, so that after n1 pulses
/// the accumulated half-angle deviation has variance exactly n1*phi0^2.
/// p_flip is the per-qubit bit-flip probability applied after each phase
/// pulse of the entangled register; it does not affect the planar qubit.
class NoiseModel {
  public:
    NoiseModel() = default;  // noiseless
    NoiseModel(double phi0, double bias, double p_flip = 0.0);

    double phi0() const { return phi0_; }
    double bias() const { return bias_; }
    double p_flip() const { return p_flip_; }

  private:
    double phi0_ = 0.0;
    double bias_ = 0.0;
    double p_flip_ = 0.0;
};

/// One per-gate angle error in physical radians; consumes exactly one draw
/// whether or not the model is noiseless.
double sample_angle_error(const NoiseModel& model, RandomStream& rng);

/// Accumulated half-angle variance after n1 pulses: n1 * phi0^2.
double predicted_variance(std::uint64_t n1, double phi0);

/// Exact wrong-outcome probability in a critical case for a zero-mean
/// half-angle deviation of the given variance: E[sin^2 phi] =
/// (1 - exp(-2 var)) / 2. Its small-variance limit is the variance itself.
double predicted_error_prob(double variance);

/// phi0 * sqrt(N): must stay well below 1 for the scheme to work at all.
double workability_margin(std::uint64_t length, double phi0);

enum class WorkabilityFlag { kComfortable, kMarginal, kViolated };

/// < 0.1 comfortable, [0.1, 1) marginal, >= 1 violated.
WorkabilityFlag workability_flag(double margin);

std::string_view to_string(WorkabilityFlag flag);

}  // namespace qrem

#endif
