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

#include "qrem/roulette.hpp"

#include <atomic>
#include <cmath>
#include <stdexcept>

namespace qrem {

GameSpec::GameSpec(std::uint64_t half_modulus, std::uint64_t length, double p_one,
                   std::uint64_t seed_in)
    : n(half_modulus), N(length), p_one(p_one), seed(seed_in) {
    if (n < 2) {
        throw std::invalid_argument("GameSpec: half-modulus must be >= 2");
    }
    if (N < 1) {
        throw std::invalid_argument("GameSpec: length must be >= 1");
    }
    if (!(p_one >= 0.0) || !(p_one <= 1.0)) {
        throw std::invalid_argument("GameSpec: p_one must lie in [0, 1]");
    }
}

BitString generate_string(const GameSpec& spec, RandomStream& rng) {
    std::vector<Bit> bits(spec.N);
    for (auto& b : bits) {
        b = rng.next_bernoulli(spec.p_one) ? 1 : 0;
    }
    return BitString(std::move(bits));
}

std::uint64_t resolve_pointer(const BitString& s, const GameSpec& spec) {
    return s.hamming_weight() % (2 * spec.n);
}

GameResult play(const GameSpec& spec, const NoiseModel& noise, const SchemeSpec& scheme,
                RandomStream& rng) {
    const ProblemSpec problem(spec.n, spec.N);
    const BitString s = generate_string(spec, rng);

    Answer answer;
    switch (scheme.kind) {
        case SchemeKind::kSingleQubit: {
            const auto state = run_single_qubit(s, problem, noise, rng);
            answer = answer_from_outcome(measure_x(state, rng), problem);
            break;
        }
        case SchemeKind::kTmr:
            answer = run_tmr(s, problem, noise, rng).answer;
            break;
        case SchemeKind::kGhz:
            answer = run_ghz(s, problem, scheme.ghz_qubits, noise, rng).answer;
            break;
        case SchemeKind::kCoinFlip:
            answer = Answer{rng.next_bernoulli(0.5) ? problem.n : 0};
            break;
    }

    GameResult result;
    result.pointer = resolve_pointer(s, spec);
    result.bet = answer.excluded;  // the value the machine says is safe
    result.won = result.pointer != result.bet;
    result.critical = result.pointer == 0 || result.pointer == spec.n;
    return result;
}

WinRateReport win_rate(const GameSpec& spec, const NoiseModel& noise,
                       const SchemeSpec& scheme, std::uint64_t games,
                       std::uint64_t master_seed, unsigned threads) {
    if (games < 1) {
        throw std::invalid_argument("win_rate: games must be >= 1");
    }

    std::atomic<std::uint64_t> wins{0};
    std::atomic<std::uint64_t> critical{0};
    std::atomic<std::uint64_t> critical_losses{0};
    detail::parallel_trials(games, threads, [&](std::uint64_t first, std::uint64_t last) {
        std::uint64_t local_wins = 0, local_critical = 0, local_losses = 0;
        for (std::uint64_t i = first; i < last; ++i) {
            RandomStream rng(master_seed, i);
            const GameResult r = play(spec, noise, scheme, rng);
            local_wins += r.won ? 1 : 0;
            if (r.critical) {
                ++local_critical;
                local_losses += r.won ? 0 : 1;
            }
        }
        wins.fetch_add(local_wins, std::memory_order_relaxed);
        critical.fetch_add(local_critical, std::memory_order_relaxed);
        critical_losses.fetch_add(local_losses, std::memory_order_relaxed);
    });

    WinRateReport report;
    report.win.trials = games;
    report.win.wrong = games - wins.load();  // "wrong" slot counts losses
    report.win.p_hat = static_cast<double>(wins.load()) / static_cast<double>(games);
    const auto [wlow, whigh] = wilson_interval(wins.load(), games);
    report.win.ci_low = wlow;
    report.win.ci_high = whigh;
    report.win.predicted = 1.0;  // noiseless play never loses

    report.critical_games = critical.load();
    report.critical_losses = critical_losses.load();
    report.conditional_loss.trials = report.critical_games;
    report.conditional_loss.wrong = report.critical_losses;
    const std::uint64_t mean_weight =
        static_cast<std::uint64_t>(std::llround(static_cast<double>(spec.N) * spec.p_one));
    double conditional_predicted;
    switch (scheme.kind) {
        case SchemeKind::kCoinFlip:
            conditional_predicted = 0.5;
            break;
        case SchemeKind::kTmr:
            conditional_predicted = tmr_failure_prob(
                predicted_error_prob(predicted_variance(mean_weight, noise.phi0())));
            break;
        default:
            conditional_predicted =
                predicted_error_prob(predicted_variance(mean_weight, noise.phi0()));
            break;
    }
    report.conditional_loss.predicted = conditional_predicted;
    if (report.critical_games > 0) {
        report.conditional_loss.p_hat = static_cast<double>(report.critical_losses) /
                                        static_cast<double>(report.critical_games);
        const auto [clow, chigh] =
            wilson_interval(report.critical_losses, report.critical_games);
        report.conditional_loss.ci_low = clow;
        report.conditional_loss.ci_high = chigh;
    } else {
        report.conditional_loss.ci_low = 0.0;
        report.conditional_loss.ci_high = 1.0;
    }
    return report;
}

}  // namespace qrem
