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

#include "qrem/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace qrem {

namespace {

constexpr double kZ95 = 1.959963984540054;  // Phi^-1(0.975)

std::uint64_t conditioning_residue(const TrialConfig& cfg) {
    return cfg.conditioning == Conditioning::kRemainderN ? cfg.spec.n : 0;
}

// Wrong-verdict probability for one conditioned trial at the given weight.
double conditional_prediction(const SchemeSpec& scheme, const NoiseModel& noise,
                              std::uint64_t weight) {
    switch (scheme.kind) {
        case SchemeKind::kCoinFlip:
            return 0.5;
        case SchemeKind::kSingleQubit:
        case SchemeKind::kGhz:
            return predicted_error_prob(predicted_variance(weight, noise.phi0()));
        case SchemeKind::kTmr:
            return tmr_failure_prob(
                predicted_error_prob(predicted_variance(weight, noise.phi0())));
    }
    throw std::logic_error("conditional_prediction: unknown scheme");
}

double prediction_for(const TrialConfig& cfg) {
    if (cfg.conditioning != Conditioning::kUnconditioned) {
        return conditional_prediction(cfg.scheme, cfg.noise, resolved_target_weight(cfg));
    }
    // Unconditioned fair bits: the remainder is asymptotically uniform over
    // [0, 2n), so a fraction 1/n of trials is critical; within those the
    // conditional rate is evaluated at the mean weight N/2.
    const double critical_fraction = 1.0 / static_cast<double>(cfg.spec.n);
    return critical_fraction *
           conditional_prediction(cfg.scheme, cfg.noise, (cfg.spec.N + 1) / 2);
}

Answer run_one_scheme(const TrialConfig& cfg, const BitString& s, RandomStream& rng) {
    switch (cfg.scheme.kind) {
        case SchemeKind::kSingleQubit: {
            const auto state = run_single_qubit(s, cfg.spec, cfg.noise, rng);
            return answer_from_outcome(measure_x(state, rng), cfg.spec);
        }
        case SchemeKind::kTmr:
            return run_tmr(s, cfg.spec, cfg.noise, rng).answer;
        case SchemeKind::kGhz:
            return run_ghz(s, cfg.spec, cfg.scheme.ghz_qubits, cfg.noise, rng).answer;
        case SchemeKind::kCoinFlip:
            return Answer{rng.next_bernoulli(0.5) ? cfg.spec.n : 0};
    }
    throw std::logic_error("run_one_scheme: unknown scheme");
}

BitString trial_string(const TrialConfig& cfg, std::uint64_t weight, RandomStream& rng) {
    if (cfg.conditioning == Conditioning::kUnconditioned) {
        std::vector<Bit> bits(cfg.spec.N);
        for (auto& b : bits) {
            b = rng.next_bernoulli(0.5) ? 1 : 0;
        }
        return BitString(std::move(bits));
    }
    return make_conditioned_string(cfg.spec, weight, rng);
}

void validate_scheme(const SchemeSpec& scheme) {
    if (scheme.kind == SchemeKind::kGhz) {
        if (scheme.ghz_qubits % 2 == 0 || scheme.ghz_qubits > 11 || scheme.ghz_qubits < 1) {
            throw std::invalid_argument("scheme: ghz qubit count must be odd and in [1, 11]");
        }
    }
}

}  // namespace

std::string_view to_string(SchemeKind kind) {
    switch (kind) {
        case SchemeKind::kSingleQubit: return "single-qubit";
        case SchemeKind::kTmr: return "tmr";
        case SchemeKind::kGhz: return "ghz";
        case SchemeKind::kCoinFlip: return "coin-flip";
    }
    return "unknown";
}

std::string_view to_string(Conditioning c) {
    switch (c) {
        case Conditioning::kRemainderZero: return "remainder-0";
        case Conditioning::kRemainderN: return "remainder-n";
        case Conditioning::kUnconditioned: return "unconditioned";
    }
    return "unknown";
}

std::string_view to_string(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::kPhi0: return "phi0";
        case SweepAxis::kLength: return "N";
        case SweepAxis::kHalfModulus: return "n";
        case SweepAxis::kFlipProbability: return "p_flip";
        case SweepAxis::kGhzQubits: return "n_q";
    }
    return "unknown";
}

std::pair<double, double> wilson_interval(std::uint64_t wrong, std::uint64_t trials) {
    if (trials < 1) {
        throw std::invalid_argument("wilson_interval: trials must be >= 1");
    }
    if (wrong > trials) {
        throw std::invalid_argument("wilson_interval: wrong exceeds trials");
    }
    const double t = static_cast<double>(trials);
    const double p = static_cast<double>(wrong) / t;
    const double z2 = kZ95 * kZ95;
    const double denom = 1.0 + z2 / t;
    const double center = (p + z2 / (2.0 * t)) / denom;
    const double half =
        kZ95 * std::sqrt(p * (1.0 - p) / t + z2 / (4.0 * t * t)) / denom;
    double low = center - half;
    double high = center + half;
    if (wrong == 0) low = 0.0;
    if (wrong == trials) high = 1.0;
    low = std::min(std::max(low, 0.0), p);
    high = std::max(std::min(high, 1.0), p);
    return {low, high};
}

BitString make_conditioned_string(const ProblemSpec& spec, std::uint64_t weight,
                                  RandomStream& rng) {
    if (weight > spec.N) {
        throw std::invalid_argument("make_conditioned_string: weight exceeds length");
    }
    // Selection sampling: uniform over all strings of this exact weight.
    std::vector<Bit> bits(spec.N, 0);
    std::uint64_t needed = weight;
    std::uint64_t remaining = spec.N;
    for (std::uint64_t i = 0; i < spec.N; ++i, --remaining) {
        if (rng.next_unit() * static_cast<double>(remaining) < static_cast<double>(needed)) {
            bits[i] = 1;
            --needed;
        }
    }
    // Floating-point selection can in principle leave a deficit of one at
    // the very end; patch deterministically to keep the exact-weight
    // contract.
    for (std::uint64_t i = spec.N; needed > 0 && i > 0; --i) {
        if (bits[i - 1] == 0) {
            bits[i - 1] = 1;
            --needed;
        }
    }
    return BitString(std::move(bits));
}

std::uint64_t resolved_target_weight(const TrialConfig& cfg) {
    if (cfg.conditioning == Conditioning::kUnconditioned) {
        throw std::invalid_argument("resolved_target_weight: unconditioned mode has no target");
    }
    const std::uint64_t modulus = 2 * cfg.spec.n;
    const std::uint64_t residue = conditioning_residue(cfg);
    if (cfg.target_weight) {
        const std::uint64_t w = *cfg.target_weight;
        if (w > cfg.spec.N) {
            throw std::invalid_argument("target weight exceeds string length");
        }
        if (w % modulus != residue) {
            throw std::invalid_argument("target weight does not match the conditioning residue");
        }
        return w;
    }
    if (residue > cfg.spec.N) {
        throw std::invalid_argument("string too short for the requested conditioning");
    }
    // Admissible weight nearest N/2 (ties toward the smaller weight).
    const std::uint64_t half = cfg.spec.N / 2;
    std::uint64_t below = residue;
    if (half > residue) {
        below = (half - residue) / modulus * modulus + residue;
    }
    const std::uint64_t above = below + modulus;
    if (above <= cfg.spec.N && above - half < half - below) {
        return above;
    }
    return below;
}

void detail::parallel_trials(
    std::uint64_t trials, unsigned threads,
    const std::function<void(std::uint64_t, std::uint64_t)>& chunk) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    if (trials < 2048) {
        threads = 1;  // not worth spawning
    }
    if (threads <= 1) {
        chunk(0, trials);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t per = (trials + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t first = static_cast<std::uint64_t>(t) * per;
        const std::uint64_t last = std::min(trials, first + per);
        if (first >= last) {
            break;
        }
        pool.emplace_back([&chunk, first, last] { chunk(first, last); });
    }
    for (auto& worker : pool) {
        worker.join();
    }
}

TrialStats estimate_error_rate(const TrialConfig& cfg, unsigned threads) {
    if (cfg.trials < 1) {
        throw std::invalid_argument("estimate_error_rate: trials must be >= 1");
    }
    validate_scheme(cfg.scheme);
    const std::uint64_t weight = cfg.conditioning == Conditioning::kUnconditioned
                                     ? 0
                                     : resolved_target_weight(cfg);

    std::atomic<std::uint64_t> wrong{0};
    detail::parallel_trials(cfg.trials, threads, [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t local_wrong = 0;
        for (std::uint64_t i = first; i < last; ++i) {
            RandomStream rng(cfg.master_seed, i);
            const BitString s = trial_string(cfg, weight, rng);
            const Answer answer = run_one_scheme(cfg, s, rng);
            const std::uint64_t r = true_remainder(s, cfg.spec);
            const bool critical = (r == 0 || r == cfg.spec.n);
            if (critical && answer_is_wrong(answer, r)) {
                ++local_wrong;
            }
        }
        wrong.fetch_add(local_wrong, std::memory_order_relaxed);
    });

    TrialStats stats;
    stats.trials = cfg.trials;
    stats.wrong = wrong.load();
    stats.p_hat = static_cast<double>(stats.wrong) / static_cast<double>(stats.trials);
    const auto [low, high] = wilson_interval(stats.wrong, stats.trials);
    stats.ci_low = low;
    stats.ci_high = high;
    stats.predicted = prediction_for(cfg);
    return stats;
}

AngleVarianceStats estimate_angle_variance(const TrialConfig& cfg, unsigned threads) {
    if (cfg.trials < 2) {
        throw std::invalid_argument("estimate_angle_variance: needs at least 2 trials");
    }
    if (cfg.conditioning == Conditioning::kUnconditioned) {
        throw std::invalid_argument(
            "estimate_angle_variance: requires a conditioned (fixed-weight) config");
    }
    const std::uint64_t weight = resolved_target_weight(cfg);
    const double ideal = static_cast<double>(weight) *
                         (std::numbers::pi / static_cast<double>(cfg.spec.n));

    // Per-trial slots keep the reduction order fixed regardless of threads.
    std::vector<double> deviation(cfg.trials);
    detail::parallel_trials(cfg.trials, threads, [&](std::uint64_t first, std::uint64_t last) {
        for (std::uint64_t i = first; i < last; ++i) {
            RandomStream rng(cfg.master_seed, i);
            const BitString s = trial_string(cfg, weight, rng);
            SingleQubitAutomaton machine(cfg.spec, cfg.noise);
            for (Bit b : s.bits()) {
                machine.feed(b, rng);
            }
            deviation[i] = (machine.accumulated_angle() - ideal) / 2.0;
        }
    });

    double sum = 0.0;
    for (double d : deviation) sum += d;
    const double mean = sum / static_cast<double>(cfg.trials);
    double ss = 0.0;
    for (double d : deviation) ss += (d - mean) * (d - mean);

    AngleVarianceStats stats;
    stats.trials = cfg.trials;
    stats.mean = mean;
    stats.variance = ss / static_cast<double>(cfg.trials - 1);
    stats.predicted = predicted_variance(weight, cfg.noise.phi0());
    stats.std_error = stats.predicted * std::sqrt(2.0 / static_cast<double>(cfg.trials - 1));
    return stats;
}

std::vector<SweepPoint> sweep(const TrialConfig& base, SweepAxis axis,
                              std::span<const double> values, unsigned threads) {
    if (values.empty()) {
        throw std::invalid_argument("sweep: values must be nonempty");
    }
    const auto as_count = [](double v, std::uint64_t lo) -> std::uint64_t {
        if (!(v >= static_cast<double>(lo)) || v != std::floor(v) || v > 9e15) {
            throw std::invalid_argument("axis value must be an integer in range");
        }
        return static_cast<std::uint64_t>(v);
    };

    std::vector<SweepPoint> points;
    points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        SweepPoint point;
        point.value = values[i];
        try {
            TrialConfig cfg = base;
            cfg.master_seed = derive_seed(base.master_seed, i);
            switch (axis) {
                case SweepAxis::kPhi0:
                    cfg.noise = NoiseModel(values[i], base.noise.bias(), base.noise.p_flip());
                    break;
                case SweepAxis::kLength:
                    cfg.spec = ProblemSpec(base.spec.n, as_count(values[i], 1));
                    break;
                case SweepAxis::kHalfModulus:
                    cfg.spec = ProblemSpec(as_count(values[i], 2), base.spec.N);
                    break;
                case SweepAxis::kFlipProbability:
                    cfg.noise = NoiseModel(base.noise.phi0(), base.noise.bias(), values[i]);
                    break;
                case SweepAxis::kGhzQubits:
                    if (base.scheme.kind != SchemeKind::kGhz) {
                        throw std::invalid_argument("n_q sweep requires the ghz scheme");
                    }
                    cfg.scheme.ghz_qubits = static_cast<unsigned>(as_count(values[i], 1));
                    break;
            }
            point.stats = estimate_error_rate(cfg, threads);
        } catch (const std::invalid_argument& e) {
            point.error = e.what();
        }
        points.push_back(std::move(point));
    }
    return points;
}

}  // namespace qrem
