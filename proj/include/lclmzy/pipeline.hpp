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

#ifndef LCLMZY_PIPELINE_HPP_
#define LCLMZY_PIPELINE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "lclmzy/bundle.hpp"
#include "lclmzy/chaos.hpp"
#include "lclmzy/cipher.hpp"
#include "lclmzy/image.hpp"
#include "lclmzy/keymat.hpp"
#include "lclmzy/sbox.hpp"

namespace lclmzy {

/// Where each consumer reads the post-burn-in chaotic streams of one channel,
/// for a plane of n samples. At 240x240 and 8 rounds:
///   X2: T3 [0, 57600)  T1 [57600, 57664)  T2 [57664, 57856)  S-box scan from 57856
///   X1: T4 [0, 57600)
///   X3: IV [0, 6)  pre-permutation [6, 54)  post-permutation [54, 102)
struct ConsumptionMap {
    std::size_t samples;
    std::size_t rounds;

    constexpr std::size_t t3_start() const { return 0; }
    constexpr std::size_t t1_start() const { return samples; }
    constexpr std::size_t t2_start() const { return samples + 64; }
    constexpr std::size_t t2_length() const { return rounds * kKeyBitsPerRound; }
    constexpr std::size_t sbox_start() const { return t2_start() + t2_length(); }
    constexpr std::size_t t4_start() const { return 0; }
    static constexpr std::size_t iv_start() { return 0; }
    static constexpr std::size_t pre_start() { return 6; }
    static constexpr std::size_t post_start() { return 54; }
    constexpr std::size_t sequence_length() const { return samples + 62400; }
};

/// Deterministic fallback when an orbit escapes: attempt k starts from
/// frac(x_i' + k * c_i).
inline constexpr std::array<double, 3> kReseedOffsets{0.6180339887498949, 0.4142135623730951, 0.7320508075688772};
inline constexpr unsigned kMaxReseedAttempts = 64;

struct ChannelContext {
    DigestBytes digest{};
    ChaosState perturbed;  // straight from the digest
    ChaosState init;       // after any re-seeding
    unsigned reseed_attempt = 0;
    Trajectory sequences;
    PositionSequence t1, t2, t3, t4;
    SBox64 sbox;
    RoundKeySchedule schedule;
    std::uint64_t iv = 0;
    BitPermutation48 pre;
    BitPermutation48 post;
    bool zy_enabled = true;

    BlockCipher cipher() const;
};

/// Sum of the obfuscated plane bytes; the value fed to SHA-256.
std::uint64_t obfuscated_sum(const Plane& plane, const KeyBundle& bundle);

ChannelContext build_channel_context(const Plane& plane, const KeyBundle& bundle);
ChannelContext build_channel_context_from_digest(const DigestBytes& digest, const KeyBundle& bundle);

std::vector<std::uint8_t> encrypt_channel(const Plane& plane, const ChannelContext& ctx, const KeyBundle& bundle);
Plane decrypt_channel(std::span<const std::uint8_t> cipher, const KeyBundle& bundle, const DigestBytes& digest);
Plane decrypt_channel(std::span<const std::uint8_t> cipher, const KeyBundle& bundle, Channel channel);

struct CipherImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::array<std::vector<std::uint8_t>, 3> channels;

    /// Ciphertext reshaped into displayable planes.
    Raster as_raster() const;
    static CipherImage from_raster(const Raster& img);

    friend bool operator==(const CipherImage&, const CipherImage&) = default;
};

struct EncryptResult {
    CipherImage cipher;
    KeyBundle bundle;  // input bundle with the three digests filled in
};

/// Resamples to the bundle's geometry, then encrypts the channels concurrently.
EncryptResult encrypt_image(const Raster& img, const KeyBundle& bundle);
Raster decrypt_image(const CipherImage& cipher, const KeyBundle& bundle);

// Cipher file: "LCLMZY\0\1", u32 BE width, u32 BE height, then R, G, B payloads.
std::vector<std::uint8_t> encode_cipher_file(const CipherImage& c);
CipherImage decode_cipher_file(std::span<const std::uint8_t> bytes);
CipherImage read_cipher_file(const std::filesystem::path& path);
void write_cipher_file(const std::filesystem::path& path, const CipherImage& c);
bool looks_like_cipher_file(std::span<const std::uint8_t> bytes);

}  // namespace lclmzy

#endif  // LCLMZY_PIPELINE_HPP_
