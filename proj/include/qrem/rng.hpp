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

#ifndef QREM_RNG_HPP
#define QREM_RNG_HPP

#include <array>
#include <cstdint>

namespace qrem {

/// Counter-based random stream: Philox4x32-10 keyed by a 64-bit master seed,
/// with a 64-bit substream index folded into the high counter words.
///
/// Streams with the same seed but different indices are statistically
/// independent and may be consumed in any order, which is what makes trial
/// results insensitive to scheduling and thread count. Every public sampler
/// consumes exactly one 64-bit draw, so draw budgets are countable via
/// draw_count(). The generator and the normal inverse-CDF below are fixed;
/// changing either changes every seeded result.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t master_seed, std::uint64_t stream_index = 0);

    /// Raw 64-bit draw.
    std::uint64_t next_u64();

    /// Uniform in [0, 1), 53 random bits.
    double next_unit();

    /// Uniform in (0, 1), strictly interior; safe as inverse-CDF input.
    double next_open_unit();

    /// Standard normal via the inverse CDF of next_open_unit().
    double next_normal();

    /// True with probability p (one draw consumed regardless of p).
    bool next_bernoulli(double p);

    /// Uniform integer in [0, bound), bound >= 1. One draw.
    std::uint64_t next_below(std::uint64_t bound);

    /// Number of 64-bit draws consumed so far.
    std::uint64_t draw_count() const { return draw_count_; }

    std::uint64_t stream_index() const { return stream_; }

  private:
    void refill();

    std::array<std::uint32_t, 2> key_;
    std::uint64_t stream_;
    std::uint64_t block_ = 0;
    std::array<std::uint32_t, 4> lanes_{};
    int lane_pos_ = 4;  // empty
    std::uint64_t draw_count_ = 0;
};

namespace detail {
/// One Philox4x32-10 block: counter and key words in, four output words out.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);
}  // namespace detail

/// Derives an independent master seed, e.g. one per sweep point (SplitMix64
/// finalizer over seed and salt).
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t salt);

/// Inverse of the standard normal CDF (Wichura's PPND16, accurate to ~1e-15
/// for p in (0, 1)).
double inverse_normal_cdf(double p);

}  // namespace qrem

#endif
