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

#include <random>
#include <string>

#include "doctest.h"
#include "lclmzy/bundle.hpp"
#include "lclmzy/error.hpp"

using namespace lclmzy;

namespace {

std::string replace_line(std::string text, const std::string& key, const std::string& replacement) {
    const auto pos = text.find(key + " = ");
    const auto end = text.find('\n', pos);
    return text.replace(pos, end - pos + 1, replacement);
}

std::string parse_error(const std::string& text) {
    try {
        parse_bundle(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kParseError);
        return e.what();
    }
    FAIL("bundle parsed unexpectedly");
    return {};
}

}  // namespace

TEST_CASE("default bundle serializes as documented") {
    const KeyBundle b;
    const auto text = serialize_bundle(b);
    CHECK(text.rfind("magic = LCLMZY 1\n", 0) == 0);
    CHECK(text.find("x1 = 0.2\n") != std::string::npos);
    CHECK(text.find("b = 1.99\n") != std::string::npos);
    CHECK(text.find("rounds = 8\n") != std::string::npos);
    CHECK(text.find("digest_b = -\n") != std::string::npos);
    CHECK(parse_bundle(text) == b);
    CHECK(parse_bundle(text).base.x == 0.2);
}

TEST_CASE("randomized bundles round trip exactly") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        KeyBundle b;
        b.params.b = 1.69 + 0.3 * u(rng);
        b.base = ChaosState{u(rng), u(rng), u(rng)};
        b.rounds = 1 + rng() % 16;
        b.zy_enabled = rng() % 2;
        b.width = 6 * (1 + rng() % 60);
        b.height = 1 + rng() % 300;
        refresh_keys(b, rng, 1 + rng() % 20);
        for (auto& d : b.digests) {
            if (rng() % 4 == 0) continue;
            DigestBytes bytes{};
            for (auto& x : bytes) x = static_cast<std::uint8_t>(rng());
            d = bytes;
        }
        REQUIRE(parse_bundle(serialize_bundle(b)) == b);
    }
}

TEST_CASE("bundle parse errors") {
    const auto good = serialize_bundle(KeyBundle{});

    const auto missing = parse_error(replace_line(good, "digest_b", ""));
    CHECK(missing.find("digest_b") != std::string::npos);

    CHECK(parse_error(replace_line(good, "magic", "magic = LCLMZY 2\n")).find("line 1") != std::string::npos);
    CHECK(parse_error(replace_line(good, "a", "a 1\n")).find("line 2") != std::string::npos);
    CHECK(parse_error(good + "a = 1\n").find("duplicate") != std::string::npos);
    CHECK(parse_error(good + "colour = red\n").find("unknown") != std::string::npos);
    CHECK(parse_error(replace_line(good, "zy", "zy = yes\n")).find("zy") != std::string::npos);
    CHECK(parse_error(replace_line(good, "x2", "x2 = nan\n")).find("x2") != std::string::npos);
    CHECK(parse_error(replace_line(good, "digest_g", "digest_g = abc\n")).find("digest_g") != std::string::npos);
    parse_error(replace_line(good, "digitkey", "digitkey = 1289\n"));
    parse_error(replace_line(good, "hexkey", "hexkey = ABC\n"));
}

TEST_CASE("bundle validation") {
    KeyBundle b;
    CHECK_NOTHROW(b.validate());
    b.rounds = 4;
    CHECK_THROWS_AS(b.validate(), Error);
    b.hex_key.resize(24, 'A');
    CHECK_NOTHROW(b.validate());
    b.width = 7;
    b.height = 1;
    CHECK_THROWS_AS(b.validate(), Error);
}
