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
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "doctest.h"
#include "lclmzy/analysis.hpp"
#include "lclmzy/error.hpp"
#include "test_support.hpp"

using namespace lclmzy;

namespace {

std::size_t differing(const Plane& a, const Plane& b) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) n += a.samples[i] != b.samples[i];
    return n;
}

}  // namespace

TEST_CASE("histogram and entropy") {
    const Plane constant(240, 240, 9);
    CHECK(entropy(constant) == 0.0);
    CHECK(histogram(constant)[9] == 57600);

    Plane uniform(240, 240);
    for (std::size_t i = 0; i < uniform.samples.size(); ++i) uniform.samples[i] = static_cast<std::uint8_t>(i % 256);
    CHECK(entropy(uniform) == doctest::Approx(8.0).epsilon(1e-12));

    const auto h = histogram(testing::random_plane(240, 240, 3));
    CHECK(std::accumulate(h.begin(), h.end(), std::size_t{0}) == 57600);
    const double e = entropy(testing::random_plane(240, 240, 3));
    CHECK(e > 7.99);
    CHECK(e <= 8.0);

    CHECK_THROWS_AS(entropy(Plane{}), Error);
}

TEST_CASE("adjacent correlation extremes") {
    Plane rows(240, 240);
    for (std::size_t r = 0; r < 240; ++r) {
        for (std::size_t c = 0; c < 240; ++c) rows.at(r, c) = static_cast<std::uint8_t>(r);
    }
    CHECK(*adjacent_correlation(rows, Direction::kHorizontal) == doctest::Approx(1.0));
    CHECK_FALSE(adjacent_correlation(rows, Direction::kHorizontal, 8000, 2).value() < 0.999999);

    Plane mirrored(240, 240);
    for (std::size_t r = 0; r < 240; ++r) {
        for (std::size_t c = 0; c < 240; ++c) {
            mirrored.at(r, c) = static_cast<std::uint8_t>(c % 2 == 0 ? r : 255 - r);
        }
    }
    CHECK(*adjacent_correlation(mirrored, Direction::kHorizontal) == doctest::Approx(-1.0));

    CHECK_FALSE(adjacent_correlation(Plane(240, 240, 4), Direction::kDiagonal).has_value());
    CHECK_THROWS_AS(adjacent_correlation(Plane(1, 240, 4), Direction::kHorizontal), Error);

    const auto noise = testing::random_plane(240, 240, 8);
    for (auto d : kDirections) {
        const auto r = adjacent_correlation(noise, d, 8000, 5);
        REQUIRE(r.has_value());
        CHECK(std::abs(*r) < 0.05);
        CHECK(*r == *adjacent_correlation(noise, d, 8000, 5));
    }
}

TEST_CASE("npcr and uaci") {
    const auto a = testing::random_plane(240, 240, 1);
    const auto same = npcr_uaci(a, a);
    CHECK(same.npcr == 0.0);
    CHECK(same.uaci == 0.0);

    const Plane zero(240, 240, 0);
    const auto plus = npcr_uaci(zero, Plane(240, 240, 1));
    CHECK(plus.npcr == doctest::Approx(100.0));
    CHECK(plus.uaci == doctest::Approx(100.0 / 255.0));

    const auto b = testing::random_plane(240, 240, 2);
    const auto ab = npcr_uaci(a, b);
    const auto ba = npcr_uaci(b, a);
    CHECK(ab.npcr == ba.npcr);
    CHECK(ab.uaci == ba.uaci);
    CHECK(ab.npcr == doctest::Approx(99.61).epsilon(0.002));
    CHECK(ab.uaci == doctest::Approx(33.46).epsilon(0.01));

    CHECK_THROWS_AS(npcr_uaci(a, Plane(10, 10)), Error);
}

TEST_CASE("psnr") {
    const auto a = testing::random_plane(240, 240, 1);
    CHECK(psnr(a, a) == std::numeric_limits<double>::infinity());
    const Plane base(240, 240, 100);
    CHECK(psnr(base, Plane(240, 240, 101)) == doctest::Approx(48.13080360867909));
    CHECK(mse(base, Plane(240, 240, 102)) == 4.0);
    CHECK(psnr(base, Plane(240, 240, 101)) > psnr(base, Plane(240, 240, 102)));
    CHECK(psnr(base, Plane(240, 240, 102)) > psnr(base, Plane(240, 240, 104)));
}

TEST_CASE("noise models") {
    const Plane gray(240, 240, 128);
    for (auto k : {NoiseKind::kGaussian, NoiseKind::kSaltPepper, NoiseKind::kSpeckle}) {
        CAPTURE(noise_name(k));
        CHECK(add_noise(gray, k, 0.0, 1) == gray);
        CHECK(add_noise(gray, k, 0.01, 7) == add_noise(gray, k, 0.01, 7));
    }

    const auto full = add_noise(gray, NoiseKind::kSaltPepper, 1.0, 3);
    for (auto s : full.samples) REQUIRE((s == 0 || s == 255));

    // binomial(57600, 0.005): mean 288, sigma about 16.9
    const auto flipped = differing(add_noise(gray, NoiseKind::kSaltPepper, 0.005, 4), gray);
    CHECK(flipped >= 237);
    CHECK(flipped <= 339);

    const auto g = add_noise(gray, NoiseKind::kGaussian, 0.01, 5);
    CHECK(differing(g, gray) > 50000);
    CHECK(psnr(gray, add_noise(gray, NoiseKind::kGaussian, 1e-6, 5)) >
          psnr(gray, add_noise(gray, NoiseKind::kGaussian, 1e-4, 5)));
    CHECK_THROWS_AS(add_noise(gray, NoiseKind::kSaltPepper, 1.5, 1), Error);
    CHECK_THROWS_AS(add_noise(gray, NoiseKind::kGaussian, -1.0, 1), Error);
}

TEST_CASE("crop attack") {
    const Plane p(240, 240, 200);
    CHECK(crop_attack(p, 10, 10, 0, 0) == p);
    CHECK(crop_attack(p, 0, 0, 240, 240) == Plane(240, 240, 0));
    const auto cropped = crop_attack(p, 96, 96, 48, 48);
    CHECK(differing(cropped, p) == 2304);
    CHECK(cropped.at(96, 96) == 0);
    CHECK(cropped.at(95, 96) == 200);
    CHECK(cropped.at(143, 143) == 0);
    CHECK(cropped.at(144, 143) == 200);
    CHECK_THROWS_AS(crop_attack(p, 200, 0, 48, 48), Error);
}

TEST_CASE("report formatting") {
    const auto img = testing::random_raster(64, 64, 1);
    const auto report = analyze_pair(img, testing::random_raster(64, 64, 2));
    const auto text = format_report(report);
    CHECK(text.find("entropy.R = ") != std::string::npos);
    CHECK(text.find("correlation.B.diagonal = ") != std::string::npos);
    CHECK(text.find("npcr.G = ") != std::string::npos);
    CHECK(text.find("psnr.R = ") != std::string::npos);
    const auto csv = histogram_csv(histogram(img.planes[0]));
    CHECK(std::count(csv.begin(), csv.end(), '\n') >= 256);
}
