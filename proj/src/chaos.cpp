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

#include "lclmzy/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lclmzy/error.hpp"

namespace lclmzy {

ChaosState step(const ChaosState& s, const ChaosParams& p) {
    const ChaosState next{p.b * s.x * (1.0 - s.z), p.b * s.y * (1.0 - s.z),
                          p.a * (s.x * s.x) + s.y * s.y};
    if (!std::isfinite(next.x) || !std::isfinite(next.y) || !std::isfinite(next.z)) {
        throw Error(ErrorKind::kNonFiniteState, "map iterate left the finite range");
    }
    return next;
}

Trajectory generate_sequences(const ChaosState& init, const ChaosParams& params,
                              std::size_t burn_in, std::size_t length) {
    if (length == 0) {
        throw Error(ErrorKind::kInvalidLength, "sequence length must be at least 1");
    }
    ChaosState s = init;
    for (std::size_t i = 0; i < burn_in; ++i) {
        s = step(s, params);
    }
    Trajectory t;
    t.x1.source = Coordinate::kX;
    t.x2.source = Coordinate::kY;
    t.x3.source = Coordinate::kZ;
    t.x1.values.reserve(length);
    t.x2.values.reserve(length);
    t.x3.values.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        s = step(s, params);
        t.x1.values.push_back(s.x);
        t.x2.values.push_back(s.y);
        t.x3.values.push_back(s.z);
    }
    return t;
}

std::uint16_t to_integer(double value, Modulus modulus) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::kNonFiniteState, "cannot quantize a non-finite value");
    }
    const double scaled = value * 1e3;
    const double frac = scaled - std::floor(scaled);
    const auto whole = static_cast<std::int64_t>(std::floor(frac * 1e3));
    return static_cast<std::uint16_t>(whole % static_cast<std::int64_t>(modulus));
}

IntegerSequence to_integer_sequence(std::span<const double> values, Modulus modulus) {
    if (modulus != Modulus::k64 && modulus != Modulus::k256) {
        throw Error(ErrorKind::kInvalidModulus, "modulus must be 64 or 256");
    }
    IntegerSequence out;
    out.modulus = modulus;
    out.values.reserve(values.size());
    for (double v : values) {
        out.values.push_back(to_integer(v, modulus));
    }
    return out;
}

PositionSequence to_position_sequence(std::span<const double> values, std::size_t window_start,
                                      std::size_t window_len) {
    if (window_start > values.size() || window_len > values.size() - window_start) {
        throw Error(ErrorKind::kWindowOutOfRange,
                    "window [" + std::to_string(window_start) + ", +" + std::to_string(window_len) +
                        ") exceeds sequence of length " + std::to_string(values.size()));
    }
    const auto window = values.subspan(window_start, window_len);
    PositionSequence out;
    out.perm.resize(window_len);
    std::iota(out.perm.begin(), out.perm.end(), 0u);
    std::stable_sort(out.perm.begin(), out.perm.end(),
                     [&](std::uint32_t l, std::uint32_t r) { return window[l] < window[r]; });
    return out;
}

bool is_permutation(std::span<const std::uint32_t> perm) {
    std::vector<bool> seen(perm.size(), false);
    for (auto p : perm) {
        if (p >= perm.size() || seen[p]) {
            return false;
        }
        seen[p] = true;
    }
    return true;
}

}  // namespace lclmzy
