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

#include "lclmzy/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <string>
#include <system_error>

#include "lclmzy/error.hpp"

namespace lclmzy {

namespace {

class PnmCursor {
public:
    explicit PnmCursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            if (std::isspace(bytes_[pos_])) {
                ++pos_;
            } else if (bytes_[pos_] == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    std::size_t number(const char* what) {
        skip_space_and_comments();
        std::size_t v = 0;
        std::size_t digits = 0;
        while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
            v = v * 10 + (bytes_[pos_++] - '0');
            if (++digits > 9) throw Error(ErrorKind::kParseError, std::string("PPM ") + what + " is too large");
        }
        if (digits == 0) throw Error(ErrorKind::kParseError, std::string("PPM header is missing the ") + what);
        return v;
    }

    std::size_t pos() const { return pos_; }
    void advance() { ++pos_; }
    bool at_space() const { return pos_ < bytes_.size() && std::isspace(bytes_[pos_]); }

private:
    std::span<const std::uint8_t> bytes_;
    std::size_t pos_ = 0;
};

}  // namespace

Plane::Plane(std::size_t w, std::size_t h, std::vector<std::uint8_t> data)
    : width(w), height(h), samples(std::move(data)) {
    if (samples.size() != w * h) {
        throw Error(ErrorKind::kBadLength, "plane data does not match its dimensions");
    }
}

const char* channel_name(Channel c) {
    switch (c) {
        case Channel::kR: return "R";
        case Channel::kG: return "G";
        case Channel::kB: return "B";
    }
    return "?";
}

Raster::Raster(std::size_t w, std::size_t h) : width(w), height(h) {
    for (auto& p : planes) p = Plane(w, h);
}

Raster Raster::from_interleaved(std::size_t w, std::size_t h, std::span<const std::uint8_t> rgb) {
    if (rgb.size() != w * h * 3) {
        throw Error(ErrorKind::kBadLength, "interleaved RGB data does not match " + std::to_string(w) + "x" +
                                               std::to_string(h));
    }
    Raster img(w, h);
    for (std::size_t i = 0; i < w * h; ++i) {
        for (std::size_t c = 0; c < 3; ++c) img.planes[c].samples[i] = rgb[3 * i + c];
    }
    return img;
}

std::vector<std::uint8_t> Raster::interleaved() const {
    std::vector<std::uint8_t> rgb(width * height * 3);
    for (std::size_t i = 0; i < width * height; ++i) {
        for (std::size_t c = 0; c < 3; ++c) rgb[3 * i + c] = planes[c].samples[i];
    }
    return rgb;
}

Plane compress_plane(const Plane& in, std::size_t width, std::size_t height) {
    if (in.empty()) {
        throw Error(ErrorKind::kEmptyImage, "cannot resample an empty plane");
    }
    if (in.width == width && in.height == height) return in;
    Plane out(width, height);
    for (std::size_t r = 0; r < height; ++r) {
        const std::size_t sr = r * in.height / height;
        for (std::size_t c = 0; c < width; ++c) {
            out.at(r, c) = in.at(sr, c * in.width / width);
        }
    }
    return out;
}

Raster compress_image(const Raster& in, std::size_t width, std::size_t height) {
    if (in.width == 0 || in.height == 0) {
        throw Error(ErrorKind::kEmptyImage, "cannot resample an empty image");
    }
    Raster out(width, height);
    for (std::size_t c = 0; c < 3; ++c) out.planes[c] = compress_plane(in.planes[c], width, height);
    return out;
}

Raster decode_ppm(std::span<const std::uint8_t> bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
        throw Error(ErrorKind::kParseError, "not a binary PPM (P6) file");
    }
    PnmCursor cur(bytes.subspan(2));
    const std::size_t w = cur.number("width");
    const std::size_t h = cur.number("height");
    const std::size_t maxval = cur.number("maxval");
    if (maxval != 255) {
        throw Error(ErrorKind::kParseError, "only maxval 255 is supported, got " + std::to_string(maxval));
    }
    if (w == 0 || h == 0) {
        throw Error(ErrorKind::kEmptyImage, "PPM has zero dimension");
    }
    if (!cur.at_space()) {
        throw Error(ErrorKind::kParseError, "PPM header must end with a single whitespace byte");
    }
    cur.advance();
    const std::size_t offset = 2 + cur.pos();
    if (bytes.size() - offset < w * h * 3) {
        throw Error(ErrorKind::kParseError, "PPM pixel data is truncated");
    }
    return Raster::from_interleaved(w, h, bytes.subspan(offset, w * h * 3));
}

std::vector<std::uint8_t> encode_ppm(const Raster& img) {
    const std::string header = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    const auto rgb = img.interleaved();
    out.insert(out.end(), rgb.begin(), rgb.end());
    return out;
}

Raster read_ppm(const std::filesystem::path& path) { return decode_ppm(read_file(path)); }

void write_ppm(const std::filesystem::path& path, const Raster& img) { write_file(path, encode_ppm(img)); }

Raster read_raw_rgb(const std::filesystem::path& path, std::size_t width, std::size_t height) {
    return Raster::from_interleaved(width, height, read_file(path));
}

void write_raw_rgb(const std::filesystem::path& path, const Raster& img) { write_file(path, img.interleaved()); }

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::kIoError, "cannot open " + path.string());
    }
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) {
        throw Error(ErrorKind::kIoError, "read failed for " + path.string());
    }
    return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::kIoError, "cannot open " + tmp.string() + " for writing");
        }
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) {
            throw Error(ErrorKind::kIoError, "write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp, ec);
        throw Error(ErrorKind::kIoError, "cannot move output into place at " + path.string());
    }
}

}  // namespace lclmzy
