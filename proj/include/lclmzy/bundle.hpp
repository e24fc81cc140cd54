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

#ifndef LCLMZY_BUNDLE_HPP_
#define LCLMZY_BUNDLE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lclmzy/chaos.hpp"
#include "lclmzy/image.hpp"
#include "lclmzy/keymat.hpp"

namespace lclmzy {

/// Complete key material for one image. Digests are plaintext dependent and
/// only known after encryption, so they stay empty until then.
struct KeyBundle {
    ChaosParams params;
    ChaosState base{0.2, 0.4, 0.1};
    std::size_t rounds = 8;
    bool zy_enabled = true;
    std::size_t width = kDefaultSide;
    std::size_t height = kDefaultSide;
    std::string hex_key = "9E3779B97F4A7C15F39CC0605CEDC8341082276BF3A27251";
    std::string digit_key = "7215304627";
    std::array<std::optional<DigestBytes>, 3> digests;

    const std::optional<DigestBytes>& digest(Channel c) const { return digests[static_cast<std::size_t>(c)]; }
    std::optional<DigestBytes>& digest(Channel c) { return digests[static_cast<std::size_t>(c)]; }

    /// Throws on inconsistent fields (key lengths, digit range, geometry).
    void validate() const;

    friend bool operator==(const KeyBundle&, const KeyBundle&) = default;
};

inline constexpr std::size_t kMaxRounds = 256;

std::string serialize_bundle(const KeyBundle& bundle);
KeyBundle parse_bundle(std::string_view text);

KeyBundle read_bundle(const std::filesystem::path& path);
void write_bundle(const std::filesystem::path& path, const KeyBundle& bundle);

/// Fills hex_key and digit_key with fresh random material for the
/// bundle's round count.
template <typename Rng>
void refresh_keys(KeyBundle& bundle, Rng& rng, std::size_t digit_key_length = 16) {
    static constexpr char kHex[] = "0123456789ABCDEF";
    bundle.hex_key.clear();
    for (std::size_t i = 0; i < bundle.rounds * kHexDigitsPerRound; ++i) bundle.hex_key.push_back(kHex[rng() % 16]);
    bundle.digit_key.clear();
    for (std::size_t i = 0; i < digit_key_length; ++i) bundle.digit_key.push_back(static_cast<char>('0' + rng() % 8));
}

}  // namespace lclmzy

#endif  // LCLMZY_BUNDLE_HPP_
