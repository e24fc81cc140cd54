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

#include "lclmzy/cipher.hpp"

#include <numeric>
#include <string>

#include "lclmzy/error.hpp"
#include "lclmzy/trigram.hpp"

namespace lclmzy {

namespace {

void check_schedule(const RoundKeySchedule& ks) {
    if (ks.subkeys.size() % 2 != 0) {
        throw Error(ErrorKind::kBadScheduleLength, "schedule must hold two subkeys per round");
    }
}

constexpr std::array<std::uint8_t, 12> invert_qf() {
    std::array<std::uint8_t, 12> inv{};
    for (std::uint8_t i = 0; i < 12; ++i) inv[kQfTable[i]] = i;
    return inv;
}

constexpr auto kQfInverse = invert_qf();

std::uint16_t permute12(std::uint16_t w, const std::array<std::uint8_t, 12>& table) {
    std::uint16_t out = 0;
    for (unsigned i = 0; i < 12; ++i) {
        const unsigned bit = (w >> (11 - table[i])) & 1u;
        out = static_cast<std::uint16_t>(out | bit << (11 - i));
    }
    return out;
}

}  // namespace

BitPermutation48::BitPermutation48() {
    std::iota(perm_.begin(), perm_.end(), std::uint8_t{0});
    inverse_ = perm_;
}

BitPermutation48::BitPermutation48(const std::array<std::uint8_t, 48>& perm) : perm_(perm) {
    std::array<bool, 48> seen{};
    for (std::uint8_t i = 0; i < 48; ++i) {
        const auto p = perm_[i];
        if (p >= 48 || seen[p]) {
            throw Error(ErrorKind::kBadPermutationLength, "bit permutation is not a permutation of 0..47");
        }
        seen[p] = true;
        inverse_[p] = i;
    }
}

BitPermutation48 BitPermutation48::from_positions(const PositionSequence& positions) {
    if (positions.size() != 48) {
        throw Error(ErrorKind::kBadPermutationLength,
                    "bit permutation needs 48 positions, got " + std::to_string(positions.size()));
    }
    std::array<std::uint8_t, 48> perm{};
    for (std::size_t i = 0; i < 48; ++i) perm[i] = static_cast<std::uint8_t>(positions[i]);
    return BitPermutation48(perm);
}

Block48 outer_permutation(Block48 b, const BitPermutation48& p, bool inverse) {
    const auto& table = inverse ? p.inverse_ : p.perm_;
    std::uint64_t out = 0;
    for (unsigned i = 0; i < 48; ++i) {
        out = out << 1 | b.bit(table[i]);
    }
    return Block48(out);
}

std::uint16_t qf_permute(std::uint16_t w) { return permute12(w & 0xFFFu, kQfTable); }

std::uint16_t qf_inverse(std::uint16_t w) { return permute12(w & 0xFFFu, kQfInverse); }

std::uint16_t round_function_f(std::uint16_t w, std::uint16_t subkey, const SBox64& s, bool zy_enabled) {
    const std::uint16_t t = (w ^ subkey) & 0xFFFu;
    const std::uint16_t substituted = static_cast<std::uint16_t>(s[t >> 6] << 6 | s[t & 0x3F]);
    const std::uint16_t mixed = qf_permute(substituted);
    if (!zy_enabled) return mixed;
    const auto hi = zy_encrypt(Hexagram(static_cast<std::uint8_t>(mixed >> 6))).bits();
    const auto lo = zy_encrypt(Hexagram(static_cast<std::uint8_t>(mixed & 0x3F))).bits();
    return static_cast<std::uint16_t>(hi << 6 | lo);
}

Block48 feistel_encrypt_block(Block48 b, const RoundKeySchedule& ks, const SBox64& s, bool zy) {
    check_schedule(ks);
    const std::size_t rounds = ks.rounds();
    std::uint16_t l1 = b.quarter(0), l2 = b.quarter(1), r1 = b.quarter(2), r2 = b.quarter(3);
    for (std::size_t j = 0; j < rounds; ++j) {
        const auto m1 = static_cast<std::uint16_t>(l1 ^ round_function_f(r1, ks.subkeys[2 * j], s, zy));
        const auto m2 = static_cast<std::uint16_t>(l2 ^ round_function_f(r2, ks.subkeys[2 * j + 1], s, zy));
        if (j + 1 < rounds) {
            l1 = r1;
            l2 = r2;
            r1 = m1;
            r2 = m2;
        } else {
            // Final round: no half swap; the mixed quarters (m1, m2, r1, r2)
            // leave rotated one quarter to the left.
            return Block48::from_quarters(m2, r1, r2, m1);
        }
    }
    return b;
}

Block48 feistel_decrypt_block(Block48 b, const RoundKeySchedule& ks, const SBox64& s, bool zy) {
    check_schedule(ks);
    const std::size_t rounds = ks.rounds();
    if (rounds == 0) return b;
    // Undo the output rotation: (A, B, C, D) -> (D, A, B, C).
    std::uint16_t l1 = b.quarter(3), l2 = b.quarter(0), r1 = b.quarter(1), r2 = b.quarter(2);
    for (std::size_t step = 0; step < rounds; ++step) {
        const std::size_t j = rounds - 1 - step;
        if (step == 0) {
            l1 = static_cast<std::uint16_t>(l1 ^ round_function_f(r1, ks.subkeys[2 * j], s, zy));
            l2 = static_cast<std::uint16_t>(l2 ^ round_function_f(r2, ks.subkeys[2 * j + 1], s, zy));
        } else {
            const auto prev_l1 = static_cast<std::uint16_t>(r1 ^ round_function_f(l1, ks.subkeys[2 * j], s, zy));
            const auto prev_l2 = static_cast<std::uint16_t>(r2 ^ round_function_f(l2, ks.subkeys[2 * j + 1], s, zy));
            r1 = l1;
            r2 = l2;
            l1 = prev_l1;
            l2 = prev_l2;
        }
    }
    return Block48::from_quarters(l1, l2, r1, r2);
}

std::vector<Block48> BlockCipher::encrypt(std::span<const Block48> plain) const {
    std::vector<Block48> staged;
    staged.reserve(plain.size());
    for (const auto& p : plain) staged.push_back(outer_permutation(p, pre));
    auto chained = cbc_encrypt(std::span<const Block48>(staged), iv,
                               [&](Block48 x) { return feistel_encrypt_block(x, schedule, sbox, zy_enabled); });
    for (auto& c : chained) c = outer_permutation(c, post);
    return chained;
}

std::vector<Block48> BlockCipher::decrypt(std::span<const Block48> cipher) const {
    std::vector<Block48> staged;
    staged.reserve(cipher.size());
    for (const auto& c : cipher) staged.push_back(outer_permutation(c, post, true));
    auto plain = cbc_decrypt(std::span<const Block48>(staged), iv,
                             [&](Block48 x) { return feistel_decrypt_block(x, schedule, sbox, zy_enabled); });
    for (auto& p : plain) p = outer_permutation(p, pre, true);
    return plain;
}

std::vector<Block48> bytes_to_blocks(std::span<const std::uint8_t> bytes) {
    if (bytes.size() % 6 != 0) {
        throw Error(ErrorKind::kBadLength, "byte count is not a multiple of the 6-byte block size");
    }
    std::vector<Block48> blocks;
    blocks.reserve(bytes.size() / 6);
    for (std::size_t i = 0; i < bytes.size(); i += 6) {
        std::uint64_t w = 0;
        for (std::size_t k = 0; k < 6; ++k) w = w << 8 | bytes[i + k];
        blocks.emplace_back(w);
    }
    return blocks;
}

std::vector<std::uint8_t> blocks_to_bytes(std::span<const Block48> blocks) {
    std::vector<std::uint8_t> bytes;
    bytes.reserve(blocks.size() * 6);
    for (const auto& b : blocks) {
        for (int k = 5; k >= 0; --k) bytes.push_back(static_cast<std::uint8_t>(b.bits() >> (8 * k)));
    }
    return bytes;
}

}  // namespace lclmzy
