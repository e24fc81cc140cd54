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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "lclmzy/error.hpp"
#include "lclmzy/sbox.hpp"

using namespace lclmzy;

namespace {

// A real whose three-decimal quantization mod 64 equals v.
double encode(unsigned v) { return v / 1e6 + 5e-7; }

PositionSequence reversed64() {
    PositionSequence p;
    p.perm.resize(64);
    std::iota(p.perm.rbegin(), p.perm.rend(), 0u);
    return p;
}

// Zigzag by walking the anti-diagonals, independent of the library table.
std::vector<unsigned> zigzag_oracle() {
    std::vector<unsigned> order;
    for (int d = 0; d < 15; ++d) {
        std::vector<unsigned> diag;
        for (int r = 0; r < 8; ++r) {
            const int c = d - r;
            if (c >= 0 && c < 8) diag.push_back(static_cast<unsigned>(r * 8 + c));
        }
        // even diagonals run bottom-left to top-right
        if (d % 2 == 0) std::reverse(diag.begin(), diag.end());
        order.insert(order.end(), diag.begin(), diag.end());
    }
    return order;
}

}  // namespace

TEST_CASE("collect_unique_mod64") {
    std::vector<double> ordered;
    for (unsigned v = 0; v < 64; ++v) ordered.push_back(encode(v));
    const auto id = collect_unique_mod64(ordered, 0);
    CHECK(id.sbox == SBox64::identity());
    CHECK(id.consumed == 64);

    std::vector<double> dup(1000, encode(5));
    try {
        collect_unique_mod64(dup, 0);
        FAIL("expected SequenceExhausted");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kSequenceExhausted);
    }

    std::vector<double> traced{encode(3), encode(3), encode(7), encode(3), encode(7), encode(1)};
    for (unsigned v = 0; v < 64; ++v) traced.push_back(encode(v));
    const auto t = collect_unique_mod64(traced, 0);
    CHECK(t.sbox[0] == 3);
    CHECK(t.sbox[1] == 7);
    CHECK(t.sbox[2] == 1);
    CHECK(t.sbox[3] == 0);
    CHECK(t.sbox[4] == 2);
    // 6 leading values, then 0..63 where 1, 3 and 7 are already taken; the
    // last new value is 63 at offset 6 + 63.
    CHECK(t.consumed == 70);

    const auto offset = collect_unique_mod64(traced, 6);
    CHECK(offset.sbox == SBox64::identity());
    CHECK(offset.consumed == 64);
}

TEST_CASE("SBox64 rejects tables that are not permutations") {
    SBox64::Table t{};
    CHECK_THROWS_AS(SBox64{t}, Error);
    std::iota(t.begin(), t.end(), std::uint8_t{0});
    t[5] = 64;
    CHECK_THROWS_AS(SBox64{t}, Error);
}

TEST_CASE("scramble") {
    std::mt19937_64 rng(1);
    SBox64::Table t{};
    std::iota(t.begin(), t.end(), std::uint8_t{0});
    std::shuffle(t.begin(), t.end(), rng);
    const SBox64 s1(t);

    PositionSequence id;
    id.perm.resize(64);
    std::iota(id.perm.begin(), id.perm.end(), 0u);
    CHECK(scramble(s1, id) == s1);

    const auto rev = scramble(SBox64::identity(), reversed64());
    for (unsigned i = 0; i < 64; ++i) CHECK(rev[i] == 63 - i);

    PositionSequence p;
    p.perm.resize(64);
    std::iota(p.perm.begin(), p.perm.end(), 0u);
    std::shuffle(p.perm.begin(), p.perm.end(), rng);
    PositionSequence inv;
    inv.perm.resize(64);
    for (std::uint32_t i = 0; i < 64; ++i) inv.perm[p[i]] = i;
    CHECK(scramble(scramble(s1, p), inv) == s1);

    PositionSequence short_perm;
    short_perm.perm = {0, 1, 2};
    CHECK_THROWS_AS(scramble(s1, short_perm), Error);
}

TEST_CASE("zigzag order") {
    const auto& z = zigzag_order();
    const std::vector<unsigned> prefix{0, 1, 8, 16, 9, 2, 3, 10, 17, 24, 32, 25, 18, 11, 4, 5};
    for (std::size_t i = 0; i < prefix.size(); ++i) CHECK(z[i] == prefix[i]);
    const auto oracle = zigzag_oracle();
    for (std::size_t i = 0; i < 64; ++i) CHECK(z[i] == oracle[i]);
    CHECK(z[63] == 63);

    const auto scanned = zigzag_scan(SBox64::identity());
    for (std::size_t i = 0; i < 64; ++i) CHECK(scanned[i] == z[i]);

    // Reading the inverse zigzag table in zigzag order lands on 0..63.
    SBox64::Table inv{};
    for (std::size_t k = 0; k < 64; ++k) inv[z[k]] = static_cast<std::uint8_t>(k);
    CHECK(zigzag_scan(SBox64(inv)) == SBox64::identity());
}

TEST_CASE("substitute") {
    CHECK(substitute(SBox64::identity(), 42) == 42);
    const auto rev = scramble(SBox64::identity(), reversed64());
    CHECK(substitute(rev, 0) == 63);
    CHECK_THROWS_AS(substitute(rev, 64), Error);

    std::array<int, 64> hits{};
    for (std::uint8_t v = 0; v < 64; ++v) ++hits[substitute(rev, v)];
    for (int h : hits) CHECK(h == 1);
    CHECK(rev.inverse()[rev[17]] == 17);
}

TEST_CASE("built S-boxes are bijective and deterministic") {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> xs(2000);
        for (auto& x : xs) x = u(rng);
        const auto collected = collect_unique_mod64(xs, 64);
        const auto t1 = to_position_sequence(xs, 0, 64);
        const auto a = build_sbox(collected.sbox, t1);
        const auto b = build_sbox(collect_unique_mod64(xs, 64).sbox, to_position_sequence(xs, 0, 64));
        REQUIRE(a == b);
        auto sorted = a.table();
        std::sort(sorted.begin(), sorted.end());
        for (unsigned i = 0; i < 64; ++i) REQUIRE(sorted[i] == i);
    }
}

TEST_CASE("dump prints eight rows") {
    const auto text = SBox64::identity().dump();
    CHECK(std::count(text.begin(), text.end(), '\n') == 8);
    CHECK(text.rfind("56 57 58 59 60 61 62 63\n") != std::string::npos);
}
