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

#include <cmath>
#include <stdexcept>

#include "doctest.h"

using qrem::Conditioning;
using qrem::NoiseModel;
using qrem::ProblemSpec;
using qrem::RandomStream;
using qrem::SchemeKind;
using qrem::TrialConfig;

TEST_CASE("wilson interval endpoints and shape") {
    const auto none = qrem::wilson_interval(0, 100);
    CHECK(none.first == 0.0);
    CHECK(none.second > 0.0);
    CHECK(none.second < 0.05);

    const auto all = qrem::wilson_interval(100, 100);
    CHECK(all.second == 1.0);
    CHECK(all.first > 0.95);

    const auto half = qrem::wilson_interval(50, 100);
    CHECK(half.first == doctest::Approx(0.5 - 0.0961674).epsilon(1e-4));
    CHECK(half.second == doctest::Approx(0.5 + 0.0961674).epsilon(1e-4));
    CHECK(half.second - half.first == doctest::Approx(0.1923).epsilon(1e-3));

    CHECK_THROWS_AS((void)qrem::wilson_interval(5, 4), std::invalid_argument);
    CHECK_THROWS_AS((void)qrem::wilson_interval(0, 0), std::invalid_argument);

    // low <= p_hat <= high across a grid.
    for (std::uint64_t t : {1ull, 7ull, 100ull, 12345ull}) {
        for (std::uint64_t w = 0; w <= t; w += std::max<std::uint64_t>(1, t / 13)) {
            const auto [lo, hi] = qrem::wilson_interval(w, t);
            const double p = static_cast<double>(w) / static_cast<double>(t);
            CHECK(lo >= 0.0);
            CHECK(lo <= p);
            CHECK(p <= hi);
            CHECK(hi <= 1.0);
        }
    }
}

TEST_CASE("conditioned strings have the exact weight, uniformly placed") {
    const ProblemSpec spec(2, 1000);
    RandomStream rng(17, 0);
    std::vector<std::uint64_t> position_hits(1000, 0);
    for (int t = 0; t < 2000; ++t) {
        const auto before = rng.draw_count();
        const auto s = qrem::make_conditioned_string(spec, 400, rng);
        CHECK(rng.draw_count() - before == 1000);  // one draw per character
        REQUIRE(s.hamming_weight() == 400);
        for (std::size_t i = 0; i < s.size(); ++i) position_hits[i] += s[i];
    }
    // Every position carries roughly weight/N of the mass.
    const double expect = 2000 * 0.4;
    for (auto hits : position_hits) {
        CHECK(std::fabs(static_cast<double>(hits) - expect) < 5.0 * std::sqrt(expect));
    }
    CHECK_THROWS_AS((void)qrem::make_conditioned_string(spec, 1001, rng),
                    std::invalid_argument);
}

TEST_CASE("target weight resolution") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 100);
    cfg.conditioning = Conditioning::kRemainderZero;
    CHECK(qrem::resolved_target_weight(cfg) == 48);  // nearest multiple of 4 to 50

    cfg.conditioning = Conditioning::kRemainderN;
    CHECK(qrem::resolved_target_weight(cfg) % 4 == 2);

    cfg.conditioning = Conditioning::kRemainderZero;
    cfg.target_weight = 52;
    CHECK(qrem::resolved_target_weight(cfg) == 52);

    cfg.target_weight = 50;  // 50 mod 4 == 2, not a remainder-0 weight
    CHECK_THROWS_AS((void)qrem::resolved_target_weight(cfg), std::invalid_argument);

    cfg.target_weight = 104;  // longer than the string
    CHECK_THROWS_AS((void)qrem::resolved_target_weight(cfg), std::invalid_argument);

    cfg.conditioning = Conditioning::kUnconditioned;
    cfg.target_weight.reset();
    CHECK_THROWS_AS((void)qrem::resolved_target_weight(cfg), std::invalid_argument);
}

TEST_CASE("noiseless estimates are exactly zero") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 64);
    cfg.trials = 500;
    cfg.master_seed = 5;
    for (auto kind : {SchemeKind::kSingleQubit, SchemeKind::kTmr, SchemeKind::kGhz}) {
        cfg.scheme.kind = kind;
        const auto stats = qrem::estimate_error_rate(cfg);
        CHECK(stats.wrong == 0);
        CHECK(stats.p_hat == 0.0);
        CHECK(stats.ci_low == 0.0);
        CHECK(stats.predicted == 0.0);
    }
}

TEST_CASE("single-qubit error rate matches the closed form") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 200);
    cfg.noise = NoiseModel(0.01, 0.0);
    cfg.trials = 20000;
    cfg.master_seed = 99;
    cfg.target_weight = 100;
    const auto stats = qrem::estimate_error_rate(cfg);
    CHECK(stats.predicted == doctest::Approx((1 - std::exp(-0.02)) / 2).epsilon(1e-12));
    const double sigma = std::sqrt(stats.predicted * (1 - stats.predicted) / cfg.trials);
    CHECK(std::fabs(stats.p_hat - stats.predicted) < 3.0 * sigma);
    CHECK(stats.ci_low <= stats.p_hat);
    CHECK(stats.p_hat <= stats.ci_high);
}

TEST_CASE("tmr estimate uses the voted prediction") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 64);
    cfg.scheme.kind = SchemeKind::kTmr;
    // Half-angle sigma for a 10% per-qubit error over 24 pulses.
    cfg.noise = NoiseModel(std::sqrt(-std::log(0.8) / 2.0 / 24.0), 0.0);
    cfg.trials = 20000;
    cfg.master_seed = 7;
    cfg.target_weight = 24;
    const auto stats = qrem::estimate_error_rate(cfg);
    CHECK(stats.predicted == doctest::Approx(0.028).epsilon(1e-6));
    const double sigma = std::sqrt(stats.predicted * (1 - stats.predicted) / cfg.trials);
    CHECK(std::fabs(stats.p_hat - stats.predicted) < 3.0 * sigma);
}

TEST_CASE("coin flip control loses half the critical trials") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 64);
    cfg.scheme.kind = SchemeKind::kCoinFlip;
    cfg.trials = 20000;
    cfg.master_seed = 3;
    const auto stats = qrem::estimate_error_rate(cfg);
    CHECK(stats.predicted == 0.5);
    CHECK(std::fabs(stats.p_hat - 0.5) < 3.0 * std::sqrt(0.25 / cfg.trials));
}

TEST_CASE("angle variance accumulates as weight times phi0 squared") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 200);
    cfg.noise = NoiseModel(0.02, 0.0);
    cfg.trials = 20000;
    cfg.master_seed = 11;
    cfg.target_weight = 100;
    const auto stats = qrem::estimate_angle_variance(cfg);
    CHECK(stats.predicted == doctest::Approx(100 * 0.02 * 0.02).epsilon(1e-12));
    CHECK(std::fabs(stats.variance - stats.predicted) < 3.0 * stats.std_error);
    CHECK(std::fabs(stats.mean) < 3.0 * std::sqrt(stats.predicted / cfg.trials));

    // A systematic bias shows up in the mean, not the variance.
    cfg.noise = NoiseModel(0.02, 0.001);
    const auto biased = qrem::estimate_angle_variance(cfg);
    CHECK(biased.mean == doctest::Approx(100 * 0.001).epsilon(0.25));
    CHECK(std::fabs(biased.variance - biased.predicted) < 3.0 * biased.std_error);
}

TEST_CASE("estimates are bitwise reproducible across thread counts") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 128);
    cfg.noise = NoiseModel(0.015, 0.0);
    cfg.trials = 6000;
    cfg.master_seed = 1234;
    cfg.target_weight = 64;
    const auto t1 = qrem::estimate_error_rate(cfg, 1);
    const auto t4 = qrem::estimate_error_rate(cfg, 4);
    const auto t7 = qrem::estimate_error_rate(cfg, 7);
    CHECK(t1 == t4);
    CHECK(t1 == t7);

    const auto v1 = qrem::estimate_angle_variance(cfg, 1);
    const auto v4 = qrem::estimate_angle_variance(cfg, 4);
    CHECK(v1 == v4);
}

TEST_CASE("unconditioned mode counts only critical trials as losable") {
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 300);
    cfg.conditioning = Conditioning::kUnconditioned;
    cfg.trials = 20000;
    cfg.master_seed = 55;

    // Noiseless: nothing to get wrong in any remainder class.
    const auto quiet = qrem::estimate_error_rate(cfg);
    CHECK(quiet.wrong == 0);

    // Coin-flip control: half of the critical trials lose; with n = 2 half
    // of all trials are critical, so the unconditional rate is ~1/4.
    cfg.scheme.kind = SchemeKind::kCoinFlip;
    const auto coin = qrem::estimate_error_rate(cfg);
    CHECK(coin.predicted == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::fabs(coin.p_hat - 0.25) < 3.0 * std::sqrt(0.25 * 0.75 / cfg.trials));
}

TEST_CASE("wilson interval covers the true rate") {
    // Known exact rate through the full pipeline; count covering seeds.
    TrialConfig cfg;
    cfg.spec = ProblemSpec(2, 200);
    cfg.noise = NoiseModel(0.01, 0.0);
    cfg.trials = 1500;
    cfg.target_weight = 100;
    const double p_true = qrem::predicted_error_prob(qrem::predicted_variance(100, 0.01));
    int covered = 0;
    for (int seed = 0; seed < 100; ++seed) {
        cfg.master_seed = static_cast<std::uint64_t>(seed) + 1000;
        const auto stats = qrem::estimate_error_rate(cfg);
        covered += (stats.ci_low <= p_true && p_true <= stats.ci_high) ? 1 : 0;
    }
    CHECK(covered >= 90);
}

TEST_CASE("sweep walks the axis and isolates bad points") {
    TrialConfig base;
    base.spec = ProblemSpec(2, 120);
    base.noise = NoiseModel(0.01, 0.0);
    base.trials = 200;
    base.master_seed = 21;

    SUBCASE("zero-noise point") {
        const std::vector<double> values = {0.0};
        const auto points = qrem::sweep(base, qrem::SweepAxis::kPhi0, values);
        REQUIRE(points.size() == 1);
        REQUIRE(points[0].stats.has_value());
        CHECK(points[0].stats->wrong == 0);
    }

    SUBCASE("variance grows with the string length") {
        base.trials = 20000;
        const std::vector<double> values = {100, 400, 1600};
        TrialConfig cfg = base;
        cfg.spec = ProblemSpec(2, 4000);
        const auto points = qrem::sweep(cfg, qrem::SweepAxis::kLength, values);
        REQUIRE(points.size() == 3);
        // Weights resolve near N/2, so the error rate climbs roughly 4x per
        // step while everything stays deep in the small-variance regime.
        const double r0 = points[0].stats->p_hat;
        const double r1 = points[1].stats->p_hat;
        const double r2 = points[2].stats->p_hat;
        CHECK(r1 / r0 == doctest::Approx(4.0).epsilon(0.8));
        CHECK(r2 / r1 == doctest::Approx(4.0).epsilon(0.5));
    }

    SUBCASE("error rate is independent of the half-modulus at fixed weight") {
        base.trials = 20000;
        base.target_weight = 48;  // residue 0 for every n below
        const std::vector<double> values = {2, 4, 8, 12};
        const auto points = qrem::sweep(base, qrem::SweepAxis::kHalfModulus, values);
        const double reference =
            qrem::predicted_error_prob(qrem::predicted_variance(48, 0.01));
        for (const auto& point : points) {
            REQUIRE(point.stats.has_value());
            const double sigma = std::sqrt(reference * (1 - reference) / base.trials);
            CHECK(std::fabs(point.stats->p_hat - reference) < 3.0 * sigma);
        }
    }

    SUBCASE("bad values produce per-point errors, sweep continues") {
        const std::vector<double> values = {0.01, -1.0, 0.02};
        const auto points = qrem::sweep(base, qrem::SweepAxis::kPhi0, values);
        REQUIRE(points.size() == 3);
        CHECK(points[0].stats.has_value());
        CHECK_FALSE(points[1].stats.has_value());
        CHECK_FALSE(points[1].error.empty());
        CHECK(points[2].stats.has_value());

        // n_q sweep without the ghz scheme is rejected per point.
        const std::vector<double> nq = {3};
        const auto wrong_scheme = qrem::sweep(base, qrem::SweepAxis::kGhzQubits, nq);
        CHECK_FALSE(wrong_scheme[0].stats.has_value());
    }

    SUBCASE("sweeps are deterministic") {
        const std::vector<double> values = {0.005, 0.01};
        const auto a = qrem::sweep(base, qrem::SweepAxis::kPhi0, values, 1);
        const auto b = qrem::sweep(base, qrem::SweepAxis::kPhi0, values, 4);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].stats == b[i].stats);
        }
    }
}
