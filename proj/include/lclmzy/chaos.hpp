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

#ifndef LCLMZY_CHAOS_HPP_
#define LCLMZY_CHAOS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace lclmzy {

/// Parameters of the lag-complex logistic map. The map is chaotic for
/// a = 1 and b in [1.69, 2).
struct ChaosParams {
    double a = 1.0;
    double b = 1.99;

    friend bool operator==(const ChaosParams&, const ChaosParams&) = default;
};

struct ChaosState {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const ChaosState&, const ChaosState&) = default;
};

enum class Coordinate : std::uint8_t { kX = 1, kY = 2, kZ = 3 };

struct RealSequence {
    std::vector<double> values;
    Coordinate source = Coordinate::kX;
};

/// The three recorded coordinate streams X1 (x), X2 (y), X3 (z).
struct Trajectory {
    RealSequence x1;
    RealSequence x2;
    RealSequence x3;
};

struct PositionSequence {
    std::vector<std::uint32_t> perm;

    std::size_t size() const noexcept { return perm.size(); }
    std::uint32_t operator[](std::size_t i) const { return perm[i]; }
};

enum class Modulus : std::uint16_t { k64 = 64, k256 = 256 };

struct IntegerSequence {
    std::vector<std::uint16_t> values;
    Modulus modulus = Modulus::k256;
};

inline constexpr std::size_t kDefaultBurnIn = 1000;

/// One iteration of
///   x' = b x (1 - z),  y' = b y (1 - z),  z' = a x^2 + y^2.
/// Throws NonFiniteState when any output component is NaN or infinite.
ChaosState step(const ChaosState& state, const ChaosParams& params);

/// Discards `burn_in` iterates, then records `length` of them.
Trajectory generate_sequences(const ChaosState& init, const ChaosParams& params,
                              std::size_t burn_in, std::size_t length);

/// floor((X*1e3 - floor(X*1e3)) * 1e3) mod modulus, elementwise.
IntegerSequence to_integer_sequence(std::span<const double> values, Modulus modulus);
std::uint16_t to_integer(double value, Modulus modulus);

/// Stable argsort of values[window_start, window_start + window_len):
/// perm[k] is the in-window index of the k-th smallest value.
PositionSequence to_position_sequence(std::span<const double> values, std::size_t window_start,
                                      std::size_t window_len);

bool is_permutation(std::span<const std::uint32_t> perm);

}  // namespace lclmzy

#endif  // LCLMZY_CHAOS_HPP_
