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
#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "lclmzy/error.hpp"
#include "lclmzy/keymat.hpp"
#include "lclmzy/pipeline.hpp"
#include "test_support.hpp"

using namespace lclmzy;

namespace {

std::string hex_prefix(const std::vector<std::uint8_t>& v, std::size_t n) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        s += digits[v[i] >> 4];
        s += digits[v[i] & 15];
    }
    return s;
}

std::string digest_of(const std::vector<std::uint8_t>& v) { return digest_to_hex(sha256(v)); }

std::size_t differing(const Plane& a, const Plane& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) n += a.samples[i] != b.samples[i];
    return n;
}

struct Golden {
    const char* digest;
    unsigned attempt;
    const char* head;
    const char* cipher_sha;
};

}  // namespace

TEST_CASE("consumption map at the default size") {
    constexpr ConsumptionMap m{57600, 8};
    static_assert(m.t1_start() == 57600);
    static_assert(m.t2_start() == 57664);
    static_assert(m.t2_length() == 192);
    static_assert(m.sbox_start() == 57856);
    static_assert(m.sequence_length() == 120000);
    CHECK(m.sbox_start() < m.sequence_length());
}

TEST_CASE("zero plane context matches reference") {
    const KeyBundle bundle;
    const Plane zero(240, 240, 0);
    CHECK(obfuscated_sum(zero, bundle) == 6854400);

    const auto ctx = build_channel_context(zero, bundle);
    CHECK(digest_to_hex(ctx.digest) == "91e83162b2302679faa385e7385bbef6aec5e07a820e40683f945ef268b5a22f");
    CHECK(ctx.reseed_attempt == 0);
    CHECK(ctx.sequences.x1.values.size() == 120000);

    const std::array<std::uint8_t, 64> sbox{27, 22, 42, 56, 28, 45, 21, 2,  47, 34, 13, 54, 18, 40, 7,  37,
                                             32, 0,  55, 60, 3,  1,  9,  61, 35, 26, 19, 5,  20, 8,  24, 57,
                                             11, 17, 16, 50, 36, 10, 33, 52, 44, 63, 14, 25, 48, 29, 15, 12,
                                             49, 62, 23, 39, 6,  43, 46, 51, 41, 38, 58, 30, 59, 4,  53, 31};
    CHECK(ctx.sbox == SBox64(sbox));

    const std::vector<std::uint16_t> keys{0x83c, 0x8b2, 0xf4f, 0x062, 0xc7f, 0x8fe, 0x33e, 0x070,
                                          0x07f, 0xf40, 0x813, 0x73c, 0x0b3, 0xf13, 0xff3, 0xce3};
    CHECK(ctx.schedule.subkeys == keys);
    CHECK(ctx.iv == 0xb4e547b39f45ULL);

    const std::array<std::uint8_t, 48> pre{36, 3,  37, 4,  14, 45, 35, 38, 46, 5,  15, 22, 13, 26, 31, 30,
                                           23, 27, 42, 21, 39, 47, 10, 16, 6,  32, 20, 12, 11, 28, 24, 34,
                                           43, 1,  33, 40, 8,  18, 19, 29, 17, 7,  9,  25, 0,  44, 2,  41};
    CHECK(ctx.pre == BitPermutation48(pre));
    CHECK(ctx.t4.perm == ctx.t3.perm);
}

TEST_CASE("gradient image ciphertext matches reference") {
    const auto img = testing::gradient_raster();
    const KeyBundle bundle;
    const Golden golden[3] = {
        {"9a407fb0db0f9d381c5f3d75f233db4536a9516f50758ef723a80743d1083205", 0, "af123af9003d52e789a64353",
         "69ffcf1cdafc32fc320422a0ac6fb4761ccf2faea6e73a6eb1715a9b02601bf7"},
        {"41943f828a1b9d0b1323ab8f51d1b29dfcf306232511fa42d88d629646f0ac91", 0, "3d12446a0ca823ad345d3a6b",
         "0a557756f2c0fca9253b959dcb7e4d3de407356d6b14900b31450c478c3b8722"},
        {"1ea973f57f83a1126b1d007db537de872da36e0e03e484942e67a71f68f88478", 0, "1db67600beb318f32bd85246",
         "7f914eed1fb33fd38d99ecb0b9b1bda3c9b6d624755084a09cf59b5a4b4b9e22"},
    };
    const auto result = encrypt_image(img, bundle);
    for (std::size_t c = 0; c < 3; ++c) {
        CAPTURE(c);
        const auto ctx = build_channel_context(img.planes[c], bundle);
        CHECK(digest_to_hex(ctx.digest) == golden[c].digest);
        CHECK(ctx.reseed_attempt == golden[c].attempt);
        const auto& ct = result.cipher.channels[c];
        CHECK(ct.size() == 57600);
        CHECK(hex_prefix(ct, 12) == golden[c].head);
        CHECK(digest_of(ct) == golden[c].cipher_sha);
        CHECK(result.bundle.digests[c] == ctx.digest);
    }
}

TEST_CASE("disabling the zy layer changes the ciphertext") {
    const auto img = testing::gradient_raster();
    KeyBundle bundle;
    bundle.zy_enabled = false;
    const auto ctx = build_channel_context(img.planes[0], bundle);
    const auto ct = encrypt_channel(img.planes[0], ctx, bundle);
    CHECK(hex_prefix(ct, 12) == "ed6d02b8cc1a0955ff417c42");
    CHECK(digest_of(ct) == "9aba998fca7e8efe8c8e35fe4006f5cc78a42ac12c624dc278aa691bc16b8409");
    CHECK(decrypt_channel(ct, bundle, ctx.digest) == img.planes[0]);
}

TEST_CASE("divergent orbit is re-seeded") {
    const auto img = testing::constant_raster(240, 240, 8);
    const KeyBundle bundle;
    const auto ctx = build_channel_context(img.planes[0], bundle);
    CHECK(digest_to_hex(ctx.digest) == "43d7f5b7b81df987fb7f1acf921aa15231a6ba585577c2e89f67add5d38f5996");
    CHECK(ctx.reseed_attempt == 1);
    const auto ct = encrypt_channel(img.planes[0], ctx, bundle);
    CHECK(hex_prefix(ct, 12) == "b0ebce8e7c994b3d5e5878ac");
    CHECK(digest_of(ct) == "718f0fd485a753f47da1edb79a36868dac4b555a3aa7e2b15d576897e1728b78");
    CHECK(decrypt_channel(ct, bundle, ctx.digest) == img.planes[0]);
}

TEST_CASE("encryption is deterministic") {
    const auto img = testing::random_raster(240, 240, 5);
    const KeyBundle bundle;
    const auto a = encrypt_image(img, bundle);
    const auto b = encrypt_image(img, bundle);
    CHECK(a.cipher == b.cipher);
    CHECK(a.bundle == b.bundle);
}

TEST_CASE("one pixel changes the digest") {
    const KeyBundle bundle;
    auto p = testing::random_plane(240, 240, 6);
    const auto d1 = build_channel_context(p, bundle).digest;
    p.at(120, 77) ^= 1;
    CHECK(build_channel_context(p, bundle).digest != d1);
}

TEST_CASE("decrypt inverts encrypt") {
    KeyBundle bundle;
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        bundle.zy_enabled = seed % 2 == 0;
        const auto img = testing::random_raster(240, 240, 100 + seed);
        const auto enc = encrypt_image(img, bundle);
        CHECK(decrypt_image(enc.cipher, enc.bundle) == img);
    }
}

TEST_CASE("non default geometry and rounds") {
    KeyBundle bundle;
    bundle.width = 60;
    bundle.height = 33;
    bundle.rounds = 3;
    bundle.hex_key = bundle.hex_key.substr(0, 18);
    const auto img = testing::random_raster(90, 50, 9);
    const auto enc = encrypt_image(img, bundle);
    CHECK(enc.cipher.channels[0].size() == 60 * 33);
    CHECK(decrypt_image(enc.cipher, enc.bundle) == compress_image(img, 60, 33));
}

TEST_CASE("decryption under wrong material fails to recover") {
    const auto img = testing::random_raster(240, 240, 11);
    const auto enc = encrypt_image(img, KeyBundle{});

    SUBCASE("tampered byte") {
        auto cipher = enc.cipher;
        cipher.channels[0][1000] ^= 0xFF;
        const auto out = decrypt_image(cipher, enc.bundle);
        // the hit block is garbled and its bit flips carry into the next block
        CHECK(differing(out.planes[0], img.planes[0]) > 6);
        CHECK(out.planes[1] == img.planes[1]);
    }
    SUBCASE("wrong digit key") {
        auto bundle = enc.bundle;
        bundle.digit_key = "7215304626";
        const auto out = decrypt_image(enc.cipher, bundle);
        for (std::size_t c = 0; c < 3; ++c) CHECK(out.planes[c] != img.planes[c]);
    }
    SUBCASE("swapped digests") {
        auto bundle = enc.bundle;
        std::swap(bundle.digests[0], bundle.digests[1]);
        const auto out = decrypt_image(enc.cipher, bundle);
        CHECK(differing(out.planes[0], img.planes[0]) > 57000);
        CHECK(differing(out.planes[1], img.planes[1]) > 57000);
        CHECK(out.planes[2] == img.planes[2]);
    }
}

TEST_CASE("decryption argument errors") {
    const auto img = testing::random_raster(240, 240, 12);
    const auto enc = encrypt_image(img, KeyBundle{});
    auto truncated = enc.cipher.channels[0];
    truncated.pop_back();
    try {
        decrypt_channel(truncated, enc.bundle, Channel::kR);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kBadLength);
    }
    KeyBundle no_digest = enc.bundle;
    no_digest.digests[2].reset();
    try {
        decrypt_channel(enc.cipher.channels[2], no_digest, Channel::kB);
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::kMissingDigest);
    }
}

TEST_CASE("cipher file format") {
    const auto img = testing::random_raster(240, 240, 13);
    const auto enc = encrypt_image(img, KeyBundle{});
    const auto bytes = encode_cipher_file(enc.cipher);
    CHECK(bytes.size() == 16 + 3 * 57600);
    CHECK(looks_like_cipher_file(bytes));
    CHECK(decode_cipher_file(bytes) == enc.cipher);

    auto bad = bytes;
    bad[0] = 'X';
    CHECK_FALSE(looks_like_cipher_file(bad));
    CHECK_THROWS_AS(decode_cipher_file(bad), Error);
    auto shorter = bytes;
    shorter.pop_back();
    CHECK_THROWS_AS(decode_cipher_file(shorter), Error);

    CHECK(CipherImage::from_raster(enc.cipher.as_raster()) == enc.cipher);
}
