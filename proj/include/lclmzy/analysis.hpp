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

#ifndef LCLMZY_ANALYSIS_HPP_
#define LCLMZY_ANALYSIS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lclmzy/image.hpp"

namespace lclmzy {

using Histogram = std::array<std::size_t, 256>;

Histogram histogram(const Plane& plane);

/// Shannon entropy in bits over the 256 gray levels.
double entropy(const Plane& plane);

enum class Direction : std::uint8_t { kHorizontal, kVertical, kDiagonal };

inline constexpr std::array<Direction, 3> kDirections{Direction::kHorizontal, Direction::kVertical,
                                                      Direction::kDiagonal};
const char* direction_name(Direction d);

inline constexpr std::size_t kDefaultCorrelationPairs = 8000;

/// Correlation of n randomly anchored neighbour pairs (1/N moments).
/// Anchors are drawn uniformly with replacement from positions whose
/// neighbour exists: right, below, or below-right. Returns nullopt when
/// either sample has zero variance.
std::optional<double> adjacent_correlation(const Plane& plane, Direction direction,
                                           std::size_t n = kDefaultCorrelationPairs, std::uint64_t seed = 1);

/// Same statistic over explicit sample pairs.
std::optional<double> correlation(const std::vector<double>& u, const std::vector<double>& v);

struct Differential {
    double npcr = 0.0;  // percent
    double uaci = 0.0;  // percent
};

Differential npcr_uaci(const Plane& c1, const Plane& c2);

double mse(const Plane& reference, const Plane& test);
/// +infinity when the planes are identical.
double psnr(const Plane& reference, const Plane& test);

enum class NoiseKind : std::uint8_t { kGaussian, kSaltPepper, kSpeckle };
const char* noise_name(NoiseKind kind);

/// salt & pepper: each sample becomes 0 or 255 with probability `level`;
/// gaussian: adds N(0, level * 255^2), rounded and clamped;
/// speckle: sample * (1 + n), n ~ N(0, level), rounded and clamped.
Plane add_noise(const Plane& plane, NoiseKind kind, double level, std::uint64_t seed);

/// Zeroes the w x h region whose top-left corner is column x, row y.
Plane crop_attack(const Plane& plane, std::size_t x, std::size_t y, std::size_t w, std::size_t h);

struct ChannelMetrics {
    double entropy = 0.0;
    std::array<std::optional<double>, 3> correlation;  // by Direction
};

struct MetricReport {
    std::array<ChannelMetrics, 3> channels;
    std::optional<std::array<Differential, 3>> differential;  // against a reference image
    std::optional<std::array<double, 3>> psnr;
};

MetricReport analyze_image(const Raster& img, std::size_t pairs = kDefaultCorrelationPairs, std::uint64_t seed = 1);
MetricReport analyze_pair(const Raster& img, const Raster& reference, std::size_t pairs = kDefaultCorrelationPairs,
                          std::uint64_t seed = 1);

/// `metric.channel.direction = value` lines.
std::string format_report(const MetricReport& report);
std::string histogram_csv(const Histogram& h);

}  // namespace lclmzy

#endif  // LCLMZY_ANALYSIS_HPP_
