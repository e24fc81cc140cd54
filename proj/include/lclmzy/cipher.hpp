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

#ifndef LCLMZY_CIPHER_HPP_
#define LCLMZY_CIPHER_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lclmzy/chaos.hpp"
#include "lclmzy/keymat.hpp"
#include "lclmzy/sbox.hpp"

namespace lclmzy {

/// 48-bit block held in the low bits of a 64-bit word. Wire order is
/// L1 | L2 | R1 | R2, twelve bits each; bit 0 is the MSB of L1.
class Block48 {
public:
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << 48) - 1;

    constexpr Block48() = default;
    constexpr explicit Block48(std::uint64_t bits) : bits_(bits & kMask) {}

    static constexpr Block48 from_quarters(std::uint16_t l1, std::uint16_t l2, std::uint16_t r1,
                                           std::uint16_t r2) {
        return Block48(std::uint64_t{l1 & 0xFFFu} << 36 | std::uint64_t{l2 & 0xFFFu} << 24 |
                       std::uint64_t{r1 & 0xFFFu} << 12 | std::uint64_t{r2 & 0xFFFu});
    }

    constexpr std::uint64_t bits() const { return bits_; }
    /// Quarter q in 0..3 (L1, L2, R1, R2).
    constexpr std::uint16_t quarter(unsigned q) const {
        return static_cast<std::uint16_t>((bits_ >> (36 - 12 * q)) & 0xFFFu);
    }
    /// Bit i in 0..47, 0 = most significant.
    constexpr unsigned bit(unsigned i) const { return static_cast<unsigned>((bits_ >> (47 - i)) & 1u); }

    friend constexpr Block48 operator^(Block48 a, Block48 b) { return Block48(a.bits_ ^ b.bits_); }
    friend constexpr bool operator==(Block48, Block48) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Permutation of the 48 bit positions of a block.
class BitPermutation48 {
public:
    BitPermutation48();  // identity
    explicit BitPermutation48(const std::array<std::uint8_t, 48>& perm);
    static BitPermutation48 from_positions(const PositionSequence& positions);

    const std::array<std::uint8_t, 48>& perm() const noexcept { return perm_; }

    friend bool operator==(const BitPermutation48&, const BitPermutation48&) = default;

private:
    std::array<std::uint8_t, 48> perm_{};
    std::array<std::uint8_t, 48> inverse_{};

    friend Block48 outer_permutation(Block48 b, const BitPermutation48& p, bool inverse);
};

/// Forward: output bit i = input bit p[i]. Inverse applies p^-1.
Block48 outer_permutation(Block48 b, const BitPermutation48& p, bool inverse = false);

/// Bit-position table of the QF stage; output bit i takes input bit kQfTable[i].
inline constexpr std::array<std::uint8_t, 12> kQfTable{5, 2, 10, 6, 7, 4, 0, 1, 3, 8, 9, 11};

std::uint16_t qf_permute(std::uint16_t w);
std::uint16_t qf_inverse(std::uint16_t w);

/// key xor -> S-box on both 6-bit halves -> QF -> trigram rule on both halves.
std::uint16_t round_function_f(std::uint16_t w, std::uint16_t subkey, const SBox64& s, bool zy_enabled);

Block48 feistel_encrypt_block(Block48 b, const RoundKeySchedule& ks, const SBox64& s, bool zy_enabled);
Block48 feistel_decrypt_block(Block48 b, const RoundKeySchedule& ks, const SBox64& s, bool zy_enabled);

template <typename EncryptOne>
std::vector<Block48> cbc_encrypt(std::span<const Block48> blocks, std::uint64_t iv, EncryptOne&& encrypt_one) {
    std::vector<Block48> out;
    out.reserve(blocks.size());
    Block48 chain(iv);
    for (const auto& p : blocks) {
        chain = encrypt_one(p ^ chain);
        out.push_back(chain);
    }
    return out;
}

template <typename DecryptOne>
std::vector<Block48> cbc_decrypt(std::span<const Block48> blocks, std::uint64_t iv, DecryptOne&& decrypt_one) {
    std::vector<Block48> out;
    out.reserve(blocks.size());
    Block48 chain(iv);
    for (const auto& c : blocks) {
        out.push_back(decrypt_one(c) ^ chain);
        chain = c;
    }
    return out;
}

/// Everything needed to run the block cipher on one channel:
/// pre-permutation, Feistel rounds in CBC mode, post-permutation.
struct BlockCipher {
    RoundKeySchedule schedule;
    SBox64 sbox;
    bool zy_enabled = true;
    BitPermutation48 pre;
    BitPermutation48 post;
    std::uint64_t iv = 0;

    std::vector<Block48> encrypt(std::span<const Block48> plain) const;
    std::vector<Block48> decrypt(std::span<const Block48> cipher) const;
};

/// Big-endian packing of 6-byte groups; bytes.size() must be a multiple of 6.
std::vector<Block48> bytes_to_blocks(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> blocks_to_bytes(std::span<const Block48> blocks);

}  // namespace lclmzy

#endif  // LCLMZY_CIPHER_HPP_
