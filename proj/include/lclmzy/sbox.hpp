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

#ifndef LCLMZY_SBOX_HPP_
#define LCLMZY_SBOX_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "lclmzy/chaos.hpp"

namespace lclmzy {

/// Bijective substitution on 6-bit values. Construction validates
/// bijectivity, so every live instance is a permutation of 0..63.
class SBox64 {
public:
    using Table = std::array<std::uint8_t, 64>;

    SBox64();  // identity
    explicit SBox64(const Table& table);

    static SBox64 identity() { return SBox64(); }

    std::uint8_t operator[](std::size_t v) const { return table_[v]; }
    const Table& table() const noexcept { return table_; }
    SBox64 inverse() const;

    /// Eight rows of eight decimal values.
    std::string dump() const;

    friend bool operator==(const SBox64&, const SBox64&) = default;

private:
    Table table_{};
};

struct UniqueCollection {
    SBox64 sbox;
    std::size_t consumed = 0;
};

/// Scans values from `start`, keeps first occurrences of their mod-64
/// quantization, stops once all 64 appeared.
UniqueCollection collect_unique_mod64(std::span<const double> values, std::size_t start);

/// out[i] = s1[t1[i]]
SBox64 scramble(const SBox64& s1, const PositionSequence& t1);

/// JPEG-style 8x8 zigzag read order: 0, 1, 8, 16, 9, 2, 3, 10, ...
const std::array<std::uint8_t, 64>& zigzag_order();

/// Reads the table (as an 8x8 row-major matrix) in zigzag order.
SBox64 zigzag_scan(const SBox64& s2);

std::uint8_t substitute(const SBox64& s, std::uint8_t v);

/// collect -> scramble -> zigzag.
SBox64 build_sbox(const SBox64& collected, const PositionSequence& t1);

}  // namespace lclmzy

#endif  // LCLMZY_SBOX_HPP_
