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

#ifndef QREM_ROULETTE_HPP
#define QREM_ROULETTE_HPP

#include <cstdint>

#include "qrem/montecarlo.hpp"

namespace qrem {

// The wheel scenario: a pointer over 2n positions starts at 0 and advances
// one step per '1' in a randomly generated string. Bets are taken only on
// positions 0 and n; a bet on the final pointer position loses everything,
// any other outcome wins. A player who can process the string in time bets
// on the machine's excluded value, which in the only dangerous cases
// (pointer on 0 or n) is exactly the position the pointer avoids.

struct GameSpec {
    GameSpec(std::uint64_t half_modulus, std::uint64_t length, double p_one = 0.5,
             std::uint64_t seed = 0);

    std::uint64_t n;
    std::uint64_t N;
    double p_one;        // chance each character is '1'
    std::uint64_t seed;  // used by one-shot CLI games
};

struct GameResult {
    std::uint64_t pointer = 0;  // final position in [0, 2n)
    std::uint64_t bet = 0;      // 0 or n
    bool won = false;           // pointer != bet
    bool critical = false;      // pointer landed on 0 or n
};

/// N i.i.d. Bernoulli(p_one) characters; consumes exactly N draws.
BitString generate_string(const GameSpec& spec, RandomStream& rng);

/// Final pointer position: Hamming weight mod 2n.
std::uint64_t resolve_pointer(const BitString& s, const GameSpec& spec);

/// One full game: generate, run the scheme, bet on its excluded value,
/// resolve the pointer.
GameResult play(const GameSpec& spec, const NoiseModel& noise, const SchemeSpec& scheme,
                RandomStream& rng);

struct WinRateReport {
    TrialStats win;               // p_hat = win frequency
    std::uint64_t critical_games = 0;
    std::uint64_t critical_losses = 0;
    TrialStats conditional_loss;  // loss rate given a critical pointer
};

/// Monte Carlo over independent games (substream per game, thread-count
/// invariant). The conditional-loss prediction is evaluated at the mean
/// weight N*p_one.
WinRateReport win_rate(const GameSpec& spec, const NoiseModel& noise,
                       const SchemeSpec& scheme, std::uint64_t games,
                       std::uint64_t master_seed, unsigned threads = 0);

}  // namespace qrem

#endif
