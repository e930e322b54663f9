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

#ifndef QREM_BITSTRING_HPP
#define QREM_BITSTRING_HPP

#include <cstdint>
#include <vector>

namespace qrem {

using Bit = std::uint8_t;

/// An immutable sequence of binary characters.
class BitString {
  public:
    BitString() = default;
    explicit BitString(std::vector<Bit> bits);

    const std::vector<Bit>& bits() const { return bits_; }
    std::size_t size() const { return bits_.size(); }
    Bit operator[](std::size_t i) const { return bits_[i]; }

    /// Number of '1' characters.
    std::uint64_t hamming_weight() const;

  private:
    std::vector<Bit> bits_;
};

}  // namespace qrem

#endif
