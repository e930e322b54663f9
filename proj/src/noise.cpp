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

#include "qrem/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace qrem {

NoiseModel::NoiseModel(double phi0, double bias, double p_flip)
    : phi0_(phi0), bias_(bias), p_flip_(p_flip) {
    if (!std::isfinite(phi0) || phi0 < 0.0) {
        throw std::invalid_argument("NoiseModel: phi0 must be finite and >= 0");
    }
    if (!std::isfinite(bias)) {
        throw std::invalid_argument("NoiseModel: bias must be finite");
    }
    if (!std::isfinite(p_flip) || p_flip < 0.0 || p_flip > 1.0) {
        throw std::invalid_argument("NoiseModel: p_flip must lie in [0, 1]");
    }
}

double sample_angle_error(const NoiseModel& model, RandomStream& rng) {
    const double half_angle = model.bias() + model.phi0() * rng.next_normal();
    return 2.0 * half_angle;
}

double predicted_variance(std::uint64_t n1, double phi0) {
    return static_cast<double>(n1) * phi0 * phi0;
}

double predicted_error_prob(double variance) {
    if (!(variance >= 0.0)) {
        throw std::invalid_argument("predicted_error_prob: variance must be >= 0");
    }
    return (1.0 - std::exp(-2.0 * variance)) / 2.0;
}

double workability_margin(std::uint64_t length, double phi0) {
    if (length < 1) {
        throw std::invalid_argument("workability_margin: length must be >= 1");
    }
    return phi0 * std::sqrt(static_cast<double>(length));
}

WorkabilityFlag workability_flag(double margin) {
    if (margin < 0.1) {
        return WorkabilityFlag::kComfortable;
    }
    return margin < 1.0 ? WorkabilityFlag::kMarginal : WorkabilityFlag::kViolated;
}

std::string_view to_string(WorkabilityFlag flag) {
    switch (flag) {
        case WorkabilityFlag::kComfortable: return "comfortable";
        case WorkabilityFlag::kMarginal: return "marginal";
        case WorkabilityFlag::kViolated: return "violated";
    }
    return "unknown";
}

}  // namespace qrem
