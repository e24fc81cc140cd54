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

#ifndef LCLMZY_IMAGE_HPP_
#define LCLMZY_IMAGE_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace lclmzy {

/// One 8-bit sample plane, row-major.
struct Plane {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> samples;

    Plane() = default;
    Plane(std::size_t w, std::size_t h, std::uint8_t fill = 0) : width(w), height(h), samples(w * h, fill) {}
    Plane(std::size_t w, std::size_t h, std::vector<std::uint8_t> data);

    std::size_t size() const noexcept { return samples.size(); }
    bool empty() const noexcept { return samples.empty(); }
    std::uint8_t& at(std::size_t row, std::size_t col) { return samples[row * width + col]; }
    std::uint8_t at(std::size_t row, std::size_t col) const { return samples[row * width + col]; }

    friend bool operator==(const Plane&, const Plane&) = default;
};

enum class Channel : std::uint8_t { kR = 0, kG = 1, kB = 2 };

inline constexpr std::array<Channel, 3> kChannels{Channel::kR, Channel::kG, Channel::kB};
const char* channel_name(Channel c);

struct Raster {
    std::size_t width = 0;
    std::size_t height = 0;
    std::array<Plane, 3> planes;

    Raster() = default;
    Raster(std::size_t w, std::size_t h);

    Plane& plane(Channel c) { return planes[static_cast<std::size_t>(c)]; }
    const Plane& plane(Channel c) const { return planes[static_cast<std::size_t>(c)]; }

    /// RGBRGB... interleaved bytes.
    static Raster from_interleaved(std::size_t w, std::size_t h, std::span<const std::uint8_t> rgb);
    std::vector<std::uint8_t> interleaved() const;

    friend bool operator==(const Raster&, const Raster&) = default;
};

inline constexpr std::size_t kDefaultSide = 240;

/// Nearest-neighbour resampling: output (r, c) takes input
/// (floor(r * in_h / out_h), floor(c * in_w / out_w)).
Plane compress_plane(const Plane& input, std::size_t width, std::size_t height);
Raster compress_image(const Raster& input, std::size_t width = kDefaultSide, std::size_t height = kDefaultSide);

// Binary PPM, maxval 255 only.
Raster decode_ppm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_ppm(const Raster& img);
Raster read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const Raster& img);

Raster read_raw_rgb(const std::filesystem::path& path, std::size_t width, std::size_t height);
void write_raw_rgb(const std::filesystem::path& path, const Raster& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
/// Writes through a sibling temporary and renames it into place.
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace lclmzy

#endif  // LCLMZY_IMAGE_HPP_
