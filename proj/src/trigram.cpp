/*
 * Copyright 2026 The lclmzy Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "lclmzy/trigram.hpp"

#include <array>

#include "lclmzy/error.hpp"

namespace lclmzy {

namespace {

struct TrigramEntry {
    Trigram trigram;
    std::uint8_t bits;
    std::string_view name;
};

constexpr std::array<TrigramEntry, 8> kTrigrams{{
    {Trigram::kQian, 0b111, "Qian"},
    {Trigram::kKun, 0b000, "Kun"},
    {Trigram::kZhen, 0b001, "Zhen"},
    {Trigram::kXun, 0b110, "Xun"},
    {Trigram::kKan, 0b010, "Kan"},
    {Trigram::kLi, 0b101, "Li"},
    {Trigram::kGen, 0b100, "Gen"},
    {Trigram::kDui, 0b011, "Dui"},
}};

std::uint8_t key_digit(std::string_view key, std::size_t group) {
    return static_cast<std::uint8_t>(key[group % key.size()] - '0');
}

void check_stream(std::size_t bits, std::string_view key) {
    if (bits % 3 != 0) {
        throw Error(ErrorKind::kLengthNotDivisibleBy3,
                    "bit stream of length " + std::to_string(bits) + " is not a multiple of 3");
    }
    validate_key_digits(key);
}

// Both directions reduce to the complement-of-xor because the obfuscation
// table maps v to 7 - v.
template <typename Get, typename Put>
void transform_groups(std::size_t groups, std::string_view key, Get get, Put put) {
    for (std::size_t g = 0; g < groups; ++g) {
        const auto data3 = get(g);
        put(g, static_cast<std::uint8_t>(~(data3 ^ key_digit(key, g)) & 0x7));
    }
}

}  // namespace

Hexagram Hexagram::from_string(std::string_view lines) {
    if (lines.size() != 6) {
        throw Error(ErrorKind::kValueOutOfRange, "hexagram needs exactly 6 lines");
    }
    std::uint8_t bits = 0;
    for (char c : lines) {
        if (c != '0' && c != '1') {
            throw Error(ErrorKind::kValueOutOfRange, "hexagram lines must be 0 or 1");
        }
        bits = static_cast<std::uint8_t>(bits << 1 | (c - '0'));
    }
    return Hexagram(bits);
}

std::string Hexagram::to_string() const {
    std::string s(6, '0');
    for (unsigned i = 0; i < 6; ++i) {
        s[i] = static_cast<char>('0' + ((bits_ >> (5 - i)) & 1u));
    }
    return s;
}

std::uint8_t trigram_bits(Trigram t) {
    for (const auto& e : kTrigrams) {
        if (e.trigram == t) return e.bits;
    }
    return 0;
}

Trigram trigram_from_bits(std::uint8_t bits) {
    for (const auto& e : kTrigrams) {
        if (e.bits == (bits & 0x7)) return e.trigram;
    }
    return Trigram::kKun;
}

std::string_view trigram_name(Trigram t) {
    for (const auto& e : kTrigrams) {
        if (e.trigram == t) return e.name;
    }
    return "?";
}

Trigram obfuscation_trigram(std::uint8_t xor_result) {
    if (xor_result > 7) {
        throw Error(ErrorKind::kValueOutOfRange, "xor result must be 0..7");
    }
    return trigram_from_bits(static_cast<std::uint8_t>(7 - xor_result));
}

void validate_key_digits(std::string_view key) {
    if (key.empty()) {
        throw Error(ErrorKind::kInvalidKeyDigit, "digit key is empty");
    }
    for (char c : key) {
        if (c < '0' || c > '7') {
            throw Error(ErrorKind::kInvalidKeyDigit,
                        std::string("digit key character '") + c + "' is outside 0..7");
        }
    }
}

BitStream bytes_to_bits(std::span<const std::uint8_t> bytes) {
    BitStream bits;
    bits.reserve(bytes.size() * 8);
    for (auto b : bytes) {
        for (int i = 7; i >= 0; --i) {
            bits.push_back(static_cast<std::uint8_t>((b >> i) & 1u));
        }
    }
    return bits;
}

std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits) {
    if (bits.size() % 8 != 0) {
        throw Error(ErrorKind::kBadLength, "bit count is not a multiple of 8");
    }
    std::vector<std::uint8_t> bytes(bits.size() / 8, 0);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        bytes[i / 8] = static_cast<std::uint8_t>(bytes[i / 8] << 1 | (bits[i] & 1u));
    }
    return bytes;
}

BitStream obfuscate_bits(std::span<const std::uint8_t> data, std::string_view key) {
    check_stream(data.size(), key);
    BitStream out(data.size());
    transform_groups(
        data.size() / 3, key,
        [&](std::size_t g) {
            return static_cast<std::uint8_t>(data[3 * g] << 2 | data[3 * g + 1] << 1 | data[3 * g + 2]);
        },
        [&](std::size_t g, std::uint8_t v) {
            out[3 * g] = (v >> 2) & 1u;
            out[3 * g + 1] = (v >> 1) & 1u;
            out[3 * g + 2] = v & 1u;
        });
    return out;
}

// not(data) xor key == not(data xor key), so the inverse has the same form.
BitStream deobfuscate_bits(std::span<const std::uint8_t> data, std::string_view key) {
    return obfuscate_bits(data, key);
}

std::vector<std::uint8_t> obfuscate_bytes(std::span<const std::uint8_t> data, std::string_view key) {
    check_stream(data.size() * 8, key);
    std::vector<std::uint8_t> out(data.size(), 0);
    auto bit_at = [&](std::size_t i) { return (data[i / 8] >> (7 - i % 8)) & 1u; };
    transform_groups(
        data.size() * 8 / 3, key,
        [&](std::size_t g) {
            return static_cast<std::uint8_t>(bit_at(3 * g) << 2 | bit_at(3 * g + 1) << 1 | bit_at(3 * g + 2));
        },
        [&](std::size_t g, std::uint8_t v) {
            for (unsigned j = 0; j < 3; ++j) {
                const std::size_t i = 3 * g + j;
                out[i / 8] = static_cast<std::uint8_t>(out[i / 8] | (((v >> (2 - j)) & 1u) << (7 - i % 8)));
            }
        });
    return out;
}

std::vector<std::uint8_t> deobfuscate_bytes(std::span<const std::uint8_t> data, std::string_view key) {
    return obfuscate_bytes(data, key);
}

}  // namespace lclmzy
