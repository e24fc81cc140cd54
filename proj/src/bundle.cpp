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

#include "lclmzy/bundle.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <vector>

#include "lclmzy/error.hpp"
#include "lclmzy/trigram.hpp"

namespace lclmzy {

namespace {

constexpr std::string_view kMagic = "LCLMZY 1";

constexpr std::array<std::string_view, 15> kKeys{
    "magic", "a", "b", "x1", "x2", "x3", "rounds", "zy", "width", "height",
    "hexkey", "digitkey", "digest_r", "digest_g", "digest_b"};

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + msg);
}

struct Field {
    std::string value;
    std::size_t line;
};

double parse_double(const Field& f, std::string_view key) {
    double v = 0.0;
    const auto* end = f.value.data() + f.value.size();
    const auto res = std::from_chars(f.value.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
        fail(f.line, "'" + std::string(key) + "' is not a finite number: " + f.value);
    }
    return v;
}

std::size_t parse_count(const Field& f, std::string_view key) {
    std::size_t v = 0;
    const auto* end = f.value.data() + f.value.size();
    const auto res = std::from_chars(f.value.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        fail(f.line, "'" + std::string(key) + "' is not a non-negative integer: " + f.value);
    }
    return v;
}

}  // namespace

void KeyBundle::validate() const {
    if (!std::isfinite(params.a) || !std::isfinite(params.b) || !std::isfinite(base.x) || !std::isfinite(base.y) ||
        !std::isfinite(base.z)) {
        throw Error(ErrorKind::kValueOutOfRange, "map parameters and initial values must be finite");
    }
    if (rounds == 0 || rounds > kMaxRounds) {
        throw Error(ErrorKind::kValueOutOfRange, "rounds must be in 1.." + std::to_string(kMaxRounds));
    }
    if (width == 0 || height == 0 || (width * height) % 6 != 0) {
        throw Error(ErrorKind::kBadLength, "width*height must be a positive multiple of 6");
    }
    if (hex_key.size() != rounds * kHexDigitsPerRound) {
        throw Error(ErrorKind::kBadKeyLength, "hex key needs " + std::to_string(rounds * kHexDigitsPerRound) +
                                                  " digits, got " + std::to_string(hex_key.size()));
    }
    for (char c : hex_key) {
        if (!std::isxdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorKind::kInvalidHexKey, std::string("'") + c + "' is not a hex digit");
        }
    }
    validate_key_digits(digit_key);
}

std::string serialize_bundle(const KeyBundle& b) {
    std::ostringstream os;
    os << "magic = " << kMagic << '\n'
       << "a = " << format_double(b.params.a) << '\n'
       << "b = " << format_double(b.params.b) << '\n'
       << "x1 = " << format_double(b.base.x) << '\n'
       << "x2 = " << format_double(b.base.y) << '\n'
       << "x3 = " << format_double(b.base.z) << '\n'
       << "rounds = " << b.rounds << '\n'
       << "zy = " << (b.zy_enabled ? 1 : 0) << '\n'
       << "width = " << b.width << '\n'
       << "height = " << b.height << '\n'
       << "hexkey = " << b.hex_key << '\n'
       << "digitkey = " << b.digit_key << '\n';
    const char* names[] = {"digest_r", "digest_g", "digest_b"};
    for (std::size_t c = 0; c < 3; ++c) {
        os << names[c] << " = " << (b.digests[c] ? digest_to_hex(*b.digests[c]) : std::string("-")) << '\n';
    }
    return os.str();
}

KeyBundle parse_bundle(std::string_view text) {
    std::map<std::string, Field, std::less<>> fields;
    std::size_t line_no = 0;
    while (!text.empty()) {
        ++line_no;
        const auto nl = text.find('\n');
        const auto raw = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

        const auto line = trim(raw);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail(line_no, "expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) {
            fail(line_no, "unknown key '" + std::string(key) + "'");
        }
        if (fields.count(key)) fail(line_no, "duplicate key '" + std::string(key) + "'");
        if (key == "magic" && value != kMagic) fail(line_no, "bad magic '" + std::string(value) + "'");
        fields.emplace(std::string(key), Field{std::string(value), line_no});
    }
    for (auto key : kKeys) {
        if (!fields.count(key)) fail(line_no, "missing key '" + std::string(key) + "'");
    }

    KeyBundle b;
    b.params.a = parse_double(fields.at("a"), "a");
    b.params.b = parse_double(fields.at("b"), "b");
    b.base.x = parse_double(fields.at("x1"), "x1");
    b.base.y = parse_double(fields.at("x2"), "x2");
    b.base.z = parse_double(fields.at("x3"), "x3");
    b.rounds = parse_count(fields.at("rounds"), "rounds");
    const auto& zy = fields.at("zy");
    if (zy.value != "0" && zy.value != "1") fail(zy.line, "'zy' must be 0 or 1");
    b.zy_enabled = zy.value == "1";
    b.width = parse_count(fields.at("width"), "width");
    b.height = parse_count(fields.at("height"), "height");
    b.hex_key = fields.at("hexkey").value;
    b.digit_key = fields.at("digitkey").value;
    const char* names[] = {"digest_r", "digest_g", "digest_b"};
    for (std::size_t c = 0; c < 3; ++c) {
        const auto& f = fields.at(names[c]);
        if (f.value == "-") continue;
        try {
            b.digests[c] = digest_from_hex(f.value);
        } catch (const Error& e) {
            fail(f.line, std::string(names[c]) + ": " + e.what());
        }
    }
    try {
        b.validate();
    } catch (const Error& e) {
        throw Error(ErrorKind::kParseError, std::string("inconsistent bundle: ") + e.what());
    }
    return b;
}

KeyBundle read_bundle(const std::filesystem::path& path) {
    const auto bytes = read_file(path);
    return parse_bundle(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

void write_bundle(const std::filesystem::path& path, const KeyBundle& bundle) {
    const auto text = serialize_bundle(bundle);
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

}  // namespace lclmzy
