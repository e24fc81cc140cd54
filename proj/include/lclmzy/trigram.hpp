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

#ifndef LCLMZY_TRIGRAM_HPP_
#define LCLMZY_TRIGRAM_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lclmzy {

/// Six yin/yang lines packed into the low 6 bits. Bit 5 holds the top line
/// (line 6), bit 0 the bottom line (line 1), so the textual form "101100"
/// reads top line first.
class Hexagram {
public:
    constexpr Hexagram() = default;
    constexpr explicit Hexagram(std::uint8_t bits) : bits_(bits & 0x3F) {}

    static Hexagram from_string(std::string_view lines);

    constexpr std::uint8_t bits() const { return bits_; }
    /// Line n in 1..6 (1 = bottom).
    constexpr unsigned line(unsigned n) const { return (bits_ >> (n - 1)) & 1u; }

    std::string to_string() const;

    friend constexpr bool operator==(Hexagram, Hexagram) = default;

private:
    std::uint8_t bits_ = 0;
};

enum class Trigram : std::uint8_t { kQian, kKun, kZhen, kXun, kKan, kLi, kGen, kDui };

/// Qian=111 Xun=110 Li=101 Gen=100 Dui=011 Kan=010 Zhen=001 Kun=000
std::uint8_t trigram_bits(Trigram t);
Trigram trigram_from_bits(std::uint8_t bits);
std::string_view trigram_name(Trigram t);

// Hu: upper trigram from lines 5,4,3 and lower trigram from lines 4,3,2.
constexpr Hexagram hu(Hexagram h) {
    const unsigned l5 = h.line(5), l4 = h.line(4), l3 = h.line(3), l2 = h.line(2);
    return Hexagram(static_cast<std::uint8_t>(l5 << 5 | l4 << 4 | l3 << 3 | l4 << 2 | l3 << 1 | l2));
}

// Zong: the hexagram turned upside down.
constexpr Hexagram zong(Hexagram h) {
    std::uint8_t out = 0;
    for (unsigned i = 0; i < 6; ++i) {
        out = static_cast<std::uint8_t>(out | (((h.bits() >> i) & 1u) << (5 - i)));
    }
    return Hexagram(out);
}

// Cuo: every line flipped.
constexpr Hexagram cuo(Hexagram h) { return Hexagram(static_cast<std::uint8_t>(~h.bits())); }

/// The Eight Trigrams encryption rule, Hu(h) xor Cuo(h). Two-to-one, so it
/// is only used where invertibility is not needed.
constexpr Hexagram zy_encrypt(Hexagram h) {
    return Hexagram(static_cast<std::uint8_t>(hu(h).bits() ^ cuo(h).bits()));
}

/// Trigram assigned to an XOR result 0..7 by the obfuscation table.
Trigram obfuscation_trigram(std::uint8_t xor_result);

/// One bit per element (values 0/1), most significant bit of every
/// source byte first.
using BitStream = std::vector<std::uint8_t>;

BitStream bytes_to_bits(std::span<const std::uint8_t> bytes);
/// Requires bits.size() % 8 == 0.
std::vector<std::uint8_t> bits_to_bytes(std::span<const std::uint8_t> bits);

/// Each 3-bit group d becomes the obfuscation-table image of d xor k, where k
/// is the next key digit (cycled). Key digits must be '0'..'7'.
BitStream obfuscate_bits(std::span<const std::uint8_t> data, std::string_view key_digits);
BitStream deobfuscate_bits(std::span<const std::uint8_t> data, std::string_view key_digits);

/// Byte-level equivalents of the bit-stream functions for data whose bit
/// length is a multiple of 3. Used on image planes.
std::vector<std::uint8_t> obfuscate_bytes(std::span<const std::uint8_t> data, std::string_view key_digits);
std::vector<std::uint8_t> deobfuscate_bytes(std::span<const std::uint8_t> data,
                                            std::string_view key_digits);

void validate_key_digits(std::string_view key_digits);

}  // namespace lclmzy

#endif  // LCLMZY_TRIGRAM_HPP_
