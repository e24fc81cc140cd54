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

#include "lclmzy/keymat.hpp"

#include <openssl/evp.h>

#include <cmath>

#include "lclmzy/error.hpp"
#include "lclmzy/trigram.hpp"

namespace lclmzy {

namespace {

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

double unit_frac(double v) { return v - std::floor(v); }

}  // namespace

DigestBytes sha256(std::span<const std::uint8_t> data) {
    DigestBytes out{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
        len != out.size()) {
        throw Error(ErrorKind::kIoError, "SHA-256 computation failed");
    }
    return out;
}

DigestBytes sha256(std::string_view text) {
    return sha256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string digest_to_hex(const DigestBytes& digest) {
    static constexpr char kHex[] = "0123456789abcdef";
    std::string s;
    s.reserve(64);
    for (auto b : digest) {
        s.push_back(kHex[b >> 4]);
        s.push_back(kHex[b & 0xF]);
    }
    return s;
}

DigestBytes digest_from_hex(std::string_view hex) {
    if (hex.size() != 64) {
        throw Error(ErrorKind::kParseError, "digest must be 64 hex characters");
    }
    DigestBytes out{};
    for (std::size_t i = 0; i < 32; ++i) {
        const int hi = hex_value(hex[2 * i]);
        const int lo = hex_value(hex[2 * i + 1]);
        if (hi < 0 || lo < 0) {
            throw Error(ErrorKind::kParseError, "digest contains a non-hex character");
        }
        out[i] = static_cast<std::uint8_t>(hi << 4 | lo);
    }
    return out;
}

ChaosState perturb_initial_values(const DigestBytes& m, const ChaosState& base) {
    double sum = 0.0;
    for (auto b : m) sum += b;
    const double mean = sum / 32.0;

    auto chain = [&](std::size_t first) {
        std::uint8_t acc = 0;
        for (std::size_t i = first; i < first + 8; ++i) acc ^= m[i];
        return unit_frac((static_cast<double>(acc) + mean) / 256.0);
    };
    return ChaosState{unit_frac(base.x + chain(0)), unit_frac(base.y + chain(8)),
                      unit_frac(base.z + chain(16))};
}

InitialValues derive_initial_values(std::uint64_t sum, const ChaosState& base) {
    InitialValues out;
    out.digest = sha256(std::to_string(sum));
    out.state = perturb_initial_values(out.digest, base);
    return out;
}

RoundKeySchedule build_round_keys(std::string_view hex_key, const PositionSequence& t2,
                                  std::size_t rounds, bool zy_enabled) {
    const std::size_t nbits = rounds * kKeyBitsPerRound;
    if (hex_key.size() != rounds * kHexDigitsPerRound) {
        throw Error(ErrorKind::kBadKeyLength, "hex key needs " + std::to_string(rounds * kHexDigitsPerRound) +
                                                  " digits for " + std::to_string(rounds) + " rounds, got " +
                                                  std::to_string(hex_key.size()));
    }
    if (t2.size() != nbits) {
        throw Error(ErrorKind::kBadPermutationLength,
                    "key scramble needs " + std::to_string(nbits) + " positions, got " + std::to_string(t2.size()));
    }

    std::vector<std::uint8_t> bits;
    bits.reserve(nbits);
    for (char c : hex_key) {
        const int v = hex_value(c);
        if (v < 0) {
            throw Error(ErrorKind::kInvalidHexKey, std::string("'") + c + "' is not a hex digit");
        }
        for (int i = 3; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((v >> i) & 1));
    }

    std::vector<std::uint8_t> scrambled(nbits);
    for (std::size_t i = 0; i < nbits; ++i) scrambled[i] = bits[t2[i]];

    RoundKeySchedule ks;
    ks.subkeys.reserve(2 * rounds);
    for (std::size_t g = 0; g < nbits / 12; ++g) {
        std::uint16_t word = 0;
        for (std::size_t half = 0; half < 2; ++half) {
            std::uint8_t six = 0;
            for (std::size_t i = 0; i < 6; ++i) {
                six = static_cast<std::uint8_t>(six << 1 | scrambled[12 * g + 6 * half + i]);
            }
            if (zy_enabled) six = zy_encrypt(Hexagram(six)).bits();
            word = static_cast<std::uint16_t>(word << 6 | six);
        }
        ks.subkeys.push_back(word);
    }
    return ks;
}

std::uint64_t derive_iv(const IntegerSequence& z, std::size_t offset) {
    if (offset > z.values.size() || z.values.size() - offset < 6) {
        throw Error(ErrorKind::kInsufficientSequence, "IV needs 6 integers");
    }
    std::uint64_t iv = 0;
    for (std::size_t i = 0; i < 6; ++i) {
        iv = iv << 8 | (z.values[offset + i] & 0xFFu);
    }
    return iv;
}

}  // namespace lclmzy
