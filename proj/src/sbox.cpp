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

#include "lclmzy/sbox.hpp"

#include <numeric>
#include <sstream>

#include "lclmzy/error.hpp"

namespace lclmzy {

namespace {

constexpr std::array<std::uint8_t, 64> make_zigzag() {
    std::array<std::uint8_t, 64> order{};
    int r = 0, c = 0;
    for (int k = 0; k < 64; ++k) {
        order[k] = static_cast<std::uint8_t>(r * 8 + c);
        if ((r + c) % 2 == 0) {  // moving up-right
            if (c == 7) {
                ++r;
            } else if (r == 0) {
                ++c;
            } else {
                --r;
                ++c;
            }
        } else {  // moving down-left
            if (r == 7) {
                ++c;
            } else if (c == 0) {
                ++r;
            } else {
                ++r;
                --c;
            }
        }
    }
    return order;
}

constexpr auto kZigzag = make_zigzag();

}  // namespace

SBox64::SBox64() { std::iota(table_.begin(), table_.end(), std::uint8_t{0}); }

SBox64::SBox64(const Table& table) : table_(table) {
    std::array<bool, 64> seen{};
    for (auto v : table_) {
        if (v >= 64 || seen[v]) {
            throw Error(ErrorKind::kNotBijective, "S-box table is not a permutation of 0..63");
        }
        seen[v] = true;
    }
}

SBox64 SBox64::inverse() const {
    Table inv{};
    for (std::size_t i = 0; i < 64; ++i) inv[table_[i]] = static_cast<std::uint8_t>(i);
    return SBox64(inv);
}

std::string SBox64::dump() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < 8; ++r) {
        for (std::size_t c = 0; c < 8; ++c) {
            os << (c ? " " : "") << static_cast<int>(table_[r * 8 + c]);
        }
        os << '\n';
    }
    return os.str();
}

UniqueCollection collect_unique_mod64(std::span<const double> values, std::size_t start) {
    std::array<bool, 64> seen{};
    SBox64::Table table{};
    std::size_t found = 0;
    for (std::size_t i = start; i < values.size(); ++i) {
        const auto v = to_integer(values[i], Modulus::k64);
        if (!seen[v]) {
            seen[v] = true;
            table[found++] = static_cast<std::uint8_t>(v);
            if (found == 64) {
                return UniqueCollection{SBox64(table), i - start + 1};
            }
        }
    }
    throw Error(ErrorKind::kSequenceExhausted,
                "sequence ended after " + std::to_string(found) + " distinct S-box values");
}

SBox64 scramble(const SBox64& s1, const PositionSequence& t1) {
    if (t1.size() != 64 || !is_permutation(t1.perm)) {
        throw Error(ErrorKind::kBadPermutationLength, "S-box scramble needs a permutation of 64 positions");
    }
    SBox64::Table out{};
    for (std::size_t i = 0; i < 64; ++i) out[i] = s1[t1[i]];
    return SBox64(out);
}

const std::array<std::uint8_t, 64>& zigzag_order() { return kZigzag; }

SBox64 zigzag_scan(const SBox64& s2) {
    SBox64::Table out{};
    for (std::size_t k = 0; k < 64; ++k) out[k] = s2[kZigzag[k]];
    return SBox64(out);
}

std::uint8_t substitute(const SBox64& s, std::uint8_t v) {
    if (v >= 64) {
        throw Error(ErrorKind::kValueOutOfRange, "S-box input must be below 64");
    }
    return s[v];
}

SBox64 build_sbox(const SBox64& collected, const PositionSequence& t1) {
    return zigzag_scan(scramble(collected, t1));
}

}  // namespace lclmzy
