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

#include "lclmzy/error.hpp"

namespace lclmzy {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kNonFiniteState: return "NonFiniteState";
        case ErrorKind::kInvalidLength: return "InvalidLength";
        case ErrorKind::kWindowOutOfRange: return "WindowOutOfRange";
        case ErrorKind::kInvalidModulus: return "InvalidModulus";
        case ErrorKind::kLengthNotDivisibleBy3: return "LengthNotDivisibleBy3";
        case ErrorKind::kInvalidKeyDigit: return "InvalidKeyDigit";
        case ErrorKind::kBadKeyLength: return "BadKeyLength";
        case ErrorKind::kBadPermutationLength: return "BadPermutationLength";
        case ErrorKind::kInvalidHexKey: return "InvalidHexKey";
        case ErrorKind::kInsufficientSequence: return "InsufficientSequence";
        case ErrorKind::kSequenceExhausted: return "SequenceExhausted";
        case ErrorKind::kNotBijective: return "NotBijective";
        case ErrorKind::kValueOutOfRange: return "ValueOutOfRange";
        case ErrorKind::kBadScheduleLength: return "BadScheduleLength";
        case ErrorKind::kEmptyImage: return "EmptyImage";
        case ErrorKind::kBadLength: return "BadLength";
        case ErrorKind::kMissingDigest: return "MissingDigest";
        case ErrorKind::kParseError: return "ParseError";
        case ErrorKind::kIoError: return "IoError";
        case ErrorKind::kEmptyPlane: return "EmptyPlane";
        case ErrorKind::kPlaneTooSmall: return "PlaneTooSmall";
        case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
        case ErrorKind::kRegionOutOfBounds: return "RegionOutOfBounds";
    }
    return "Unknown";
}

}  // namespace lclmzy
