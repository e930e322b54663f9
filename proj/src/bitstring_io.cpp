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

#include "qrem/bitstring_io.hpp"

#include <array>
#include <fstream>
#include <string>

namespace qrem {

namespace {

constexpr std::size_t kChunkSize = 64 * 1024;

bool is_separator(char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Returns the number of bits seen.
std::size_t scan(const char* data, std::size_t size, std::size_t base_offset,
                 const std::function<void(Bit)>& sink) {
    std::size_t bits = 0;
    for (std::size_t i = 0; i < size; ++i) {
        const char c = data[i];
        if (c == '0' || c == '1') {
            sink(static_cast<Bit>(c - '0'));
            ++bits;
        } else if (!is_separator(c)) {
            throw ParseError("illegal byte 0x" +
                                 [](unsigned char b) {
                                     static const char* digits = "0123456789abcdef";
                                     return std::string{digits[b >> 4], digits[b & 15]};
                                 }(static_cast<unsigned char>(c)) +
                                 " at offset " + std::to_string(base_offset + i),
                             base_offset + i);
        }
    }
    return bits;
}

}  // namespace

void stream_bitstring_file(const std::filesystem::path& path,
                           const std::function<void(Bit)>& sink) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open input file: " + path.string());
    }
    std::array<char, kChunkSize> buffer;
    std::size_t offset = 0;
    std::size_t total_bits = 0;
    while (in) {
        in.read(buffer.data(), static_cast<std::streamsize>(buffer.size()));
        const auto got = static_cast<std::size_t>(in.gcount());
        if (got == 0) {
            break;
        }
        total_bits += scan(buffer.data(), got, offset, sink);
        offset += got;
    }
    if (in.bad()) {
        throw IoError("read failure on input file: " + path.string());
    }
    if (total_bits == 0) {
        throw EmptyInputError("input contains no binary characters: " + path.string());
    }
}

BitString parse_bitstring_file(const std::filesystem::path& path) {
    std::vector<Bit> bits;
    stream_bitstring_file(path, [&bits](Bit b) { bits.push_back(b); });
    return BitString(std::move(bits));
}

BitString parse_bitstring_text(std::string_view text) {
    std::vector<Bit> bits;
    const std::size_t seen = scan(text.data(), text.size(), 0,
                                  [&bits](Bit b) { bits.push_back(b); });
    if (seen == 0) {
        throw EmptyInputError("input contains no binary characters");
    }
    return BitString(std::move(bits));
}

}  // namespace qrem
