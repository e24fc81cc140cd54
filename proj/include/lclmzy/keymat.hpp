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

#ifndef LCLMZY_KEYMAT_HPP_
#define LCLMZY_KEYMAT_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lclmzy/chaos.hpp"

namespace lclmzy {

using DigestBytes = std::array<std::uint8_t, 32>;

DigestBytes sha256(std::span<const std::uint8_t> data);
DigestBytes sha256(std::string_view text);

std::string digest_to_hex(const DigestBytes& digest);
DigestBytes digest_from_hex(std::string_view hex);

struct InitialValues {
    ChaosState state;
    DigestBytes digest{};
};

/// Perturbs the base initial values with a digest:
///   x_i' = frac(x_i + mod((xor of 8 digest bytes + mean) / 256, 1))
/// using bytes 1..8, 9..16 and 17..24 for x1, x2, x3 and the mean of all 32.
ChaosState perturb_initial_values(const DigestBytes& digest, const ChaosState& base);

/// Hashes the decimal ASCII form of `sum` and perturbs `base` with it.
InitialValues derive_initial_values(std::uint64_t sum, const ChaosState& base);

struct RoundKeySchedule {
    std::vector<std::uint16_t> subkeys;  // 12-bit words, two per round

    std::size_t rounds() const noexcept { return subkeys.size() / 2; }
    friend bool operator==(const RoundKeySchedule&, const RoundKeySchedule&) = default;
};

/// Hex digits per round: two 12-bit subkeys = 24 bits = 6 hex digits.
inline constexpr std::size_t kHexDigitsPerRound = 6;
inline constexpr std::size_t kKeyBitsPerRound = 24;

/// hex -> bits (MSB first per digit), bit i := bit T2[i], zy_encrypt on every
/// 6-bit group (skipped when zy_enabled is false), then 12-bit subkeys.
RoundKeySchedule build_round_keys(std::string_view hex_key, const PositionSequence& t2,
                                  std::size_t rounds, bool zy_enabled);

/// Big-endian concatenation of z[offset .. offset + 6).
std::uint64_t derive_iv(const IntegerSequence& z, std::size_t offset);

}  // namespace lclmzy

#endif  // LCLMZY_KEYMAT_HPP_
