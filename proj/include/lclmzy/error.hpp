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

#ifndef LCLMZY_ERROR_HPP_
#define LCLMZY_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace lclmzy {

enum class ErrorKind {
    kNonFiniteState,
    kInvalidLength,
    kWindowOutOfRange,
    kInvalidModulus,
    kLengthNotDivisibleBy3,
    kInvalidKeyDigit,
    kBadKeyLength,
    kBadPermutationLength,
    kInvalidHexKey,
    kInsufficientSequence,
    kSequenceExhausted,
    kNotBijective,
    kValueOutOfRange,
    kBadScheduleLength,
    kEmptyImage,
    kBadLength,
    kMissingDigest,
    kParseError,
    kIoError,
    kEmptyPlane,
    kPlaneTooSmall,
    kDimensionMismatch,
    kRegionOutOfBounds,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags
/// so callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lclmzy

#endif  // LCLMZY_ERROR_HPP_
