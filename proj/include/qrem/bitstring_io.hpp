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

#ifndef QREM_BITSTRING_IO_HPP
#define QREM_BITSTRING_IO_HPP

#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string_view>

#include "qrem/bitstring.hpp"

namespace qrem {

// Input files hold ASCII '0'/'1' characters; commas, spaces, tabs and
// newlines (including CR) are separators. Anything else is rejected with
// its byte offset.

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t offset_in)
        : std::runtime_error(message), offset(offset_in) {}
    std::size_t offset;
};

struct EmptyInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Streams a file's bits through the sink in file order, reading in bounded
/// chunks; arbitrarily large inputs never materialize in memory.
void stream_bitstring_file(const std::filesystem::path& path,
                           const std::function<void(Bit)>& sink);

/// Materializes the whole file.
BitString parse_bitstring_file(const std::filesystem::path& path);

/// Same grammar, from memory.
BitString parse_bitstring_text(std::string_view text);

}  // namespace qrem

#endif
