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

#include "lclmzy/analysis.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "lclmzy/error.hpp"

namespace lclmzy {

namespace {

void check_same_shape(const Plane& a, const Plane& b) {
    if (a.width != b.width || a.height != b.height) {
        throw Error(ErrorKind::kDimensionMismatch, "planes differ in size");
    }
}

std::uint8_t clamp_round(double v) { return static_cast<std::uint8_t>(std::clamp(std::round(v), 0.0, 255.0)); }

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, 6);
    return std::string(buf, r.ptr);
}

}  // namespace

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::kHorizontal: return "horizontal";
        case Direction::kVertical: return "vertical";
        case Direction::kDiagonal: return "diagonal";
    }
    return "?";
}

const char* noise_name(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::kGaussian: return "gaussian";
        case NoiseKind::kSaltPepper: return "sp";
        case NoiseKind::kSpeckle: return "speckle";
    }
    return "?";
}

Histogram histogram(const Plane& plane) {
    Histogram h{};
    for (auto v : plane.samples) ++h[v];
    return h;
}

double entropy(const Plane& plane) {
    if (plane.empty()) {
        throw Error(ErrorKind::kEmptyPlane, "entropy of an empty plane");
    }
    const auto h = histogram(plane);
    const double n = static_cast<double>(plane.size());
    double e = 0.0;
    for (auto count : h) {
        if (count == 0) continue;
        const double p = static_cast<double>(count) / n;
        e -= p * std::log2(p);
    }
    return e;
}

std::optional<double> correlation(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() != v.size() || u.empty()) {
        throw Error(ErrorKind::kDimensionMismatch, "correlation needs equally sized nonempty samples");
    }
    const double n = static_cast<double>(u.size());
    double eu = 0.0, ev = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        eu += u[i];
        ev += v[i];
    }
    eu /= n;
    ev /= n;
    double du = 0.0, dv = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        du += (u[i] - eu) * (u[i] - eu);
        dv += (v[i] - ev) * (v[i] - ev);
        cov += (u[i] - eu) * (v[i] - ev);
    }
    du /= n;
    dv /= n;
    cov /= n;
    if (du == 0.0 || dv == 0.0) return std::nullopt;
    return cov / (std::sqrt(du) * std::sqrt(dv));
}

std::optional<double> adjacent_correlation(const Plane& plane, Direction direction, std::size_t n,
                                           std::uint64_t seed) {
    const std::size_t dr = direction == Direction::kHorizontal ? 0 : 1;
    const std::size_t dc = direction == Direction::kVertical ? 0 : 1;
    if (plane.width <= dc || plane.height <= dr || n == 0) {
        throw Error(ErrorKind::kPlaneTooSmall, "plane has no valid neighbour pairs in that direction");
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> row(0, plane.height - 1 - dr);
    std::uniform_int_distribution<std::size_t> col(0, plane.width - 1 - dc);
    std::vector<double> u(n), v(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto r = row(rng);
        const auto c = col(rng);
        u[i] = plane.at(r, c);
        v[i] = plane.at(r + dr, c + dc);
    }
    return correlation(u, v);
}

Differential npcr_uaci(const Plane& c1, const Plane& c2) {
    check_same_shape(c1, c2);
    if (c1.empty()) {
        throw Error(ErrorKind::kEmptyPlane, "NPCR/UACI of empty planes");
    }
    std::size_t changed = 0;
    double intensity = 0.0;
    for (std::size_t i = 0; i < c1.size(); ++i) {
        changed += c1.samples[i] != c2.samples[i];
        intensity += std::abs(static_cast<int>(c1.samples[i]) - static_cast<int>(c2.samples[i]));
    }
    const double n = static_cast<double>(c1.size());
    return Differential{100.0 * static_cast<double>(changed) / n, 100.0 * intensity / (n * 255.0)};
}

double mse(const Plane& reference, const Plane& test) {
    check_same_shape(reference, test);
    if (reference.empty()) {
        throw Error(ErrorKind::kEmptyPlane, "MSE of empty planes");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i) {
        const double d = static_cast<double>(reference.samples[i]) - static_cast<double>(test.samples[i]);
        acc += d * d;
    }
    return acc / static_cast<double>(reference.size());
}

double psnr(const Plane& reference, const Plane& test) {
    const double e = mse(reference, test);
    if (e == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(255.0 * 255.0 / e);
}

Plane add_noise(const Plane& plane, NoiseKind kind, double level, std::uint64_t seed) {
    if (!(level >= 0.0) || !std::isfinite(level)) {
        throw Error(ErrorKind::kValueOutOfRange, "noise level must be a finite non-negative number");
    }
    if (kind == NoiseKind::kSaltPepper && level > 1.0) {
        throw Error(ErrorKind::kValueOutOfRange, "salt and pepper density must not exceed 1");
    }
    Plane out = plane;
    if (level == 0.0) return out;
    std::mt19937_64 rng(seed);
    switch (kind) {
        case NoiseKind::kSaltPepper: {
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (auto& s : out.samples) {
                const double draw = u(rng);
                if (draw < level) s = draw < level / 2.0 ? 0 : 255;
            }
            break;
        }
        case NoiseKind::kGaussian: {
            std::normal_distribution<double> n(0.0, std::sqrt(level) * 255.0);
            for (auto& s : out.samples) s = clamp_round(s + n(rng));
            break;
        }
        case NoiseKind::kSpeckle: {
            std::normal_distribution<double> n(0.0, std::sqrt(level));
            for (auto& s : out.samples) s = clamp_round(s * (1.0 + n(rng)));
            break;
        }
    }
    return out;
}

Plane crop_attack(const Plane& plane, std::size_t x, std::size_t y, std::size_t w, std::size_t h) {
    if (x > plane.width || y > plane.height || w > plane.width - x || h > plane.height - y) {
        throw Error(ErrorKind::kRegionOutOfBounds, "crop region leaves the plane");
    }
    Plane out = plane;
    for (std::size_t r = y; r < y + h; ++r) {
        std::fill_n(out.samples.begin() + static_cast<std::ptrdiff_t>(r * plane.width + x), w, 0);
    }
    return out;
}

MetricReport analyze_image(const Raster& img, std::size_t pairs, std::uint64_t seed) {
    MetricReport report;
    for (auto ch : kChannels) {
        auto& m = report.channels[static_cast<std::size_t>(ch)];
        const auto& plane = img.plane(ch);
        m.entropy = entropy(plane);
        for (auto d : kDirections) {
            m.correlation[static_cast<std::size_t>(d)] = adjacent_correlation(plane, d, pairs, seed);
        }
    }
    return report;
}

MetricReport analyze_pair(const Raster& img, const Raster& reference, std::size_t pairs, std::uint64_t seed) {
    auto report = analyze_image(img, pairs, seed);
    std::array<Differential, 3> diff{};
    std::array<double, 3> p{};
    for (std::size_t c = 0; c < 3; ++c) {
        diff[c] = npcr_uaci(reference.planes[c], img.planes[c]);
        p[c] = psnr(reference.planes[c], img.planes[c]);
    }
    report.differential = diff;
    report.psnr = p;
    return report;
}

std::string format_report(const MetricReport& r) {
    std::ostringstream os;
    for (auto ch : kChannels) {
        const auto& m = r.channels[static_cast<std::size_t>(ch)];
        const std::string name = channel_name(ch);
        os << "entropy." << name << " = " << fmt(m.entropy) << '\n';
        for (auto d : kDirections) {
            const auto& v = m.correlation[static_cast<std::size_t>(d)];
            os << "correlation." << name << '.' << direction_name(d) << " = " << (v ? fmt(*v) : "undefined") << '\n';
        }
    }
    if (r.differential) {
        for (auto ch : kChannels) {
            const auto& d = (*r.differential)[static_cast<std::size_t>(ch)];
            os << "npcr." << channel_name(ch) << " = " << fmt(d.npcr) << '\n';
            os << "uaci." << channel_name(ch) << " = " << fmt(d.uaci) << '\n';
        }
    }
    if (r.psnr) {
        for (auto ch : kChannels) {
            os << "psnr." << channel_name(ch) << " = " << fmt((*r.psnr)[static_cast<std::size_t>(ch)]) << '\n';
        }
    }
    return os.str();
}

std::string histogram_csv(const Histogram& h) {
    std::ostringstream os;
    os << "level,count\n";
    for (std::size_t i = 0; i < h.size(); ++i) os << i << ',' << h[i] << '\n';
    return os.str();
}

}  // namespace lclmzy
