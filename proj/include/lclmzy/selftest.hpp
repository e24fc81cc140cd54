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


#ifndef LCLMZY_SELFTEST_HPP_
#define LCLMZY_SELFTEST_HPP_

#include <string>
#include <vector>

namespace lclmzy {

struct SelfTestResult {
    std::string name;
    bool passed = false;
};

/// Known-answer checks for the trigram transforms, the obfuscation table,
/// the QF table and the zigzag order.
std::vector<SelfTestResult> run_selftest();

}  // namespace lclmzy

#endif  // LCLMZY_SELFTEST_HPP_
