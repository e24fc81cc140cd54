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

#include "lclmzy/pipeline.hpp"

#include <cmath>
#include <cstring>
#include <algorithm>
#include <future>
#include <optional>
#include <string>

#include "lclmzy/error.hpp"
#include "lclmzy/trigram.hpp"

namespace lclmzy {

namespace {

constexpr std::array<std::uint8_t, 8> kCipherMagic{'L', 'C', 'L', 'M', 'Z', 'Y', 0x00, 0x01};

double unit_frac(double v) { return v - std::floor(v); }

ChaosState reseeded(const ChaosState& s, unsigned attempt) {
    if (attempt == 0) return s;
    return ChaosState{unit_frac(s.x + attempt * kReseedOffsets[0]), unit_frac(s.y + attempt * kReseedOffsets[1]),
                      unit_frac(s.z + attempt * kReseedOffsets[2])};
}

void check_plane(const Plane& plane, const KeyBundle& bundle) {
    if (plane.width != bundle.width || plane.height != bundle.height) {
        throw Error(ErrorKind::kDimensionMismatch,
                    "plane is " + std::to_string(plane.width) + "x" + std::to_string(plane.height) +
                        " but the bundle expects " + std::to_string(bundle.width) + "x" +
                        std::to_string(bundle.height));
    }
}

template <typename T>
std::vector<T> gather(std::span<const T> src, const PositionSequence& perm) {
    std::vector<T> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) out[i] = src[perm[i]];
    return out;
}

template <typename T>
std::vector<T> scatter(std::span<const T> src, const PositionSequence& perm) {
    std::vector<T> out(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) out[perm[i]] = src[i];
    return out;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b) {
    return std::uint32_t{b[0]} << 24 | std::uint32_t{b[1]} << 16 | std::uint32_t{b[2]} << 8 | b[3];
}

}  // namespace

BlockCipher ChannelContext::cipher() const { return BlockCipher{schedule, sbox, zy_enabled, pre, post, iv}; }

std::uint64_t obfuscated_sum(const Plane& plane, const KeyBundle& bundle) {
    std::uint64_t sum = 0;
    for (auto v : obfuscate_bytes(plane.samples, bundle.digit_key)) sum += v;
    return sum;
}

ChannelContext build_channel_context(const Plane& plane, const KeyBundle& bundle) {
    bundle.validate();
    check_plane(plane, bundle);
    const auto initial = derive_initial_values(obfuscated_sum(plane, bundle), bundle.base);
    return build_channel_context_from_digest(initial.digest, bundle);
}

ChannelContext build_channel_context_from_digest(const DigestBytes& digest, const KeyBundle& bundle) {
    bundle.validate();
    const ConsumptionMap map{bundle.width * bundle.height, bundle.rounds};

    ChannelContext ctx;
    ctx.digest = digest;
    ctx.perturbed = perturb_initial_values(digest, bundle.base);
    ctx.zy_enabled = bundle.zy_enabled;

    std::optional<UniqueCollection> collected;
    for (unsigned attempt = 0; attempt < kMaxReseedAttempts && !collected; ++attempt) {
        try {
            ctx.init = reseeded(ctx.perturbed, attempt);
            ctx.reseed_attempt = attempt;
            ctx.sequences = generate_sequences(ctx.init, bundle.params, kDefaultBurnIn, map.sequence_length());
            collected = collect_unique_mod64(ctx.sequences.x2.values, map.sbox_start());
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::kNonFiniteState && e.kind() != ErrorKind::kSequenceExhausted) throw;
        }
    }
    if (!collected) {
        throw Error(ErrorKind::kNonFiniteState,
                    "no usable orbit after " + std::to_string(kMaxReseedAttempts) + " re-seeding attempts");
    }

    const auto& x1 = ctx.sequences.x1.values;
    const auto& x2 = ctx.sequences.x2.values;
    const auto& x3 = ctx.sequences.x3.values;
    ctx.t3 = to_position_sequence(x2, map.t3_start(), map.samples);
    ctx.t1 = to_position_sequence(x2, map.t1_start(), 64);
    ctx.t2 = to_position_sequence(x2, map.t2_start(), map.t2_length());
    ctx.t4 = to_position_sequence(x1, map.t4_start(), map.samples);
    ctx.sbox = build_sbox(collected->sbox, ctx.t1);
    ctx.schedule = build_round_keys(bundle.hex_key, ctx.t2, bundle.rounds, bundle.zy_enabled);

    const auto z1 = to_integer_sequence(std::span(x3).subspan(ConsumptionMap::iv_start(), 6), Modulus::k256);
    ctx.iv = derive_iv(z1, 0);
    ctx.pre = BitPermutation48::from_positions(to_position_sequence(x3, ConsumptionMap::pre_start(), 48));
    ctx.post = BitPermutation48::from_positions(to_position_sequence(x3, ConsumptionMap::post_start(), 48));
    return ctx;
}

std::vector<std::uint8_t> encrypt_channel(const Plane& plane, const ChannelContext& ctx, const KeyBundle& bundle) {
    check_plane(plane, bundle);
    // The 0..255 clamp before scrambling is the identity on 8-bit samples.
    const auto p1 = obfuscate_bytes(plane.samples, bundle.digit_key);
    const auto p2 = gather<std::uint8_t>(p1, ctx.t3);
    const auto p3 = gather<std::uint8_t>(p2, ctx.t4);
    const auto blocks = bytes_to_blocks(p3);
    return blocks_to_bytes(ctx.cipher().encrypt(blocks));
}

Plane decrypt_channel(std::span<const std::uint8_t> cipher, const KeyBundle& bundle, const DigestBytes& digest) {
    bundle.validate();
    if (cipher.size() != bundle.width * bundle.height) {
        throw Error(ErrorKind::kBadLength, "channel ciphertext has " + std::to_string(cipher.size()) +
                                               " bytes, expected " + std::to_string(bundle.width * bundle.height));
    }
    const auto ctx = build_channel_context_from_digest(digest, bundle);
    const auto p3 = blocks_to_bytes(ctx.cipher().decrypt(bytes_to_blocks(cipher)));
    const auto p2 = scatter<std::uint8_t>(p3, ctx.t4);
    const auto p1 = scatter<std::uint8_t>(p2, ctx.t3);
    return Plane(bundle.width, bundle.height, deobfuscate_bytes(p1, bundle.digit_key));
}

Plane decrypt_channel(std::span<const std::uint8_t> cipher, const KeyBundle& bundle, Channel channel) {
    const auto& digest = bundle.digest(channel);
    if (!digest) {
        throw Error(ErrorKind::kMissingDigest,
                    std::string("bundle has no digest for channel ") + channel_name(channel));
    }
    return decrypt_channel(cipher, bundle, *digest);
}

Raster CipherImage::as_raster() const {
    Raster img(width, height);
    for (std::size_t c = 0; c < 3; ++c) img.planes[c] = Plane(width, height, channels[c]);
    return img;
}

CipherImage CipherImage::from_raster(const Raster& img) {
    CipherImage c;
    c.width = img.width;
    c.height = img.height;
    for (std::size_t i = 0; i < 3; ++i) c.channels[i] = img.planes[i].samples;
    return c;
}

EncryptResult encrypt_image(const Raster& img, const KeyBundle& bundle) {
    bundle.validate();
    const Raster compressed = compress_image(img, bundle.width, bundle.height);

    struct ChannelOutput {
        DigestBytes digest;
        std::vector<std::uint8_t> bytes;
    };
    std::array<std::future<ChannelOutput>, 3> jobs;
    for (auto ch : kChannels) {
        jobs[static_cast<std::size_t>(ch)] = std::async(std::launch::async, [&compressed, &bundle, ch] {
            const auto& plane = compressed.plane(ch);
            const auto ctx = build_channel_context(plane, bundle);
            return ChannelOutput{ctx.digest, encrypt_channel(plane, ctx, bundle)};
        });
    }

    EncryptResult out;
    out.bundle = bundle;
    out.cipher.width = bundle.width;
    out.cipher.height = bundle.height;
    for (std::size_t c = 0; c < 3; ++c) {
        auto r = jobs[c].get();
        out.bundle.digests[c] = r.digest;
        out.cipher.channels[c] = std::move(r.bytes);
    }
    return out;
}

Raster decrypt_image(const CipherImage& cipher, const KeyBundle& bundle) {
    bundle.validate();
    if (cipher.width != bundle.width || cipher.height != bundle.height) {
        throw Error(ErrorKind::kDimensionMismatch, "cipher image geometry differs from the bundle");
    }
    for (auto ch : kChannels) {
        if (!bundle.digest(ch)) {
            throw Error(ErrorKind::kMissingDigest, std::string("bundle has no digest for channel ") + channel_name(ch));
        }
    }
    std::array<std::future<Plane>, 3> jobs;
    for (auto ch : kChannels) {
        const auto c = static_cast<std::size_t>(ch);
        jobs[c] = std::async(std::launch::async,
                             [&cipher, &bundle, ch, c] { return decrypt_channel(cipher.channels[c], bundle, ch); });
    }
    Raster out(bundle.width, bundle.height);
    for (std::size_t c = 0; c < 3; ++c) out.planes[c] = jobs[c].get();
    return out;
}

std::vector<std::uint8_t> encode_cipher_file(const CipherImage& c) {
    std::vector<std::uint8_t> out(kCipherMagic.begin(), kCipherMagic.end());
    put_u32(out, static_cast<std::uint32_t>(c.width));
    put_u32(out, static_cast<std::uint32_t>(c.height));
    for (const auto& ch : c.channels) {
        if (ch.size() != c.width * c.height) {
            throw Error(ErrorKind::kBadLength, "channel payload does not match the cipher geometry");
        }
        out.insert(out.end(), ch.begin(), ch.end());
    }
    return out;
}

bool looks_like_cipher_file(std::span<const std::uint8_t> bytes) {
    return bytes.size() >= kCipherMagic.size() && std::equal(kCipherMagic.begin(), kCipherMagic.end(), bytes.begin());
}

CipherImage decode_cipher_file(std::span<const std::uint8_t> bytes) {
    if (!looks_like_cipher_file(bytes)) {
        throw Error(ErrorKind::kParseError, "missing cipher file magic");
    }
    if (bytes.size() < 16) {
        throw Error(ErrorKind::kBadLength, "cipher file header is truncated");
    }
    CipherImage c;
    c.width = get_u32(bytes.subspan(8, 4));
    c.height = get_u32(bytes.subspan(12, 4));
    const std::size_t plane = c.width * c.height;
    if (bytes.size() - 16 != 3 * plane) {
        throw Error(ErrorKind::kBadLength, "cipher payload has " + std::to_string(bytes.size() - 16) +
                                               " bytes, expected " + std::to_string(3 * plane));
    }
    for (std::size_t i = 0; i < 3; ++i) {
        const auto first = bytes.begin() + 16 + static_cast<std::ptrdiff_t>(i * plane);
        c.channels[i].assign(first, first + static_cast<std::ptrdiff_t>(plane));
    }
    return c;
}

CipherImage read_cipher_file(const std::filesystem::path& path) { return decode_cipher_file(read_file(path)); }

void write_cipher_file(const std::filesystem::path& path, const CipherImage& c) {
    write_file(path, encode_cipher_file(c));
}

}  // namespace lclmzy
