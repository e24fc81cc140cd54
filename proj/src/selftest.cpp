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


#include "lclmzy/selftest.hpp"

#include <array>
#include <cstdint>
#include <string_view>

#include "lclmzy/cipher.hpp"
#include "lclmzy/sbox.hpp"
#include "lclmzy/trigram.hpp"

namespace lclmzy {

std::vector<SelfTestResult> run_selftest() {
    std::vector<SelfTestResult> out;
    auto check = [&out](std::string name, bool ok) { out.push_back({std::move(name), ok}); };

    const auto h = Hexagram::from_string("101100");
    check("hu 101100", hu(h).to_string() == "011110");
    check("zong 101100", zong(h).to_string() == "001101");
    check("cuo 101100", cuo(h).to_string() == "010011");
    check("zy 101101", zy_encrypt(Hexagram::from_string("101101")).to_string() == "001100");

    constexpr std::array<std::string_view, 8> rows{"Qian", "Xun", "Li", "Gen", "Dui", "Kan", "Zhen", "Kun"};
    constexpr std::array<std::uint8_t, 8> row_bits{0b111, 0b110, 0b101, 0b100, 0b011, 0b010, 0b001, 0b000};
    bool table_ok = true;
    for (std::uint8_t v = 0; v < 8; ++v) {
        const auto t = obfuscation_trigram(v);
        table_ok = table_ok && trigram_name(t) == rows[v] && trigram_bits(t) == row_bits[v];
    }
    check("obfuscation table", table_ok);

    constexpr std::array<std::uint8_t, 12> qf{5, 2, 10, 6, 7, 4, 0, 1, 3, 8, 9, 11};
    bool qf_ok = kQfTable == qf;
    for (unsigned i = 0; i < 12; ++i) {
        qf_ok = qf_ok && qf_permute(static_cast<std::uint16_t>(1u << (11 - qf[i]))) == (1u << (11 - i));
    }
    std::array<bool, 4096> seen{};
    for (unsigned w = 0; w < 4096 && qf_ok; ++w) {
        const auto p = qf_permute(static_cast<std::uint16_t>(w));
        qf_ok = p < 4096 && !seen[p] && qf_inverse(p) == w;
        if (qf_ok) seen[p] = true;
    }
    check("qf table", qf_ok);

    constexpr std::array<std::uint8_t, 10> zz{0, 1, 8, 16, 9, 2, 3, 10, 17, 24};
    bool zz_ok = true;
    for (std::size_t i = 0; i < zz.size(); ++i) zz_ok = zz_ok && zigzag_order()[i] == zz[i];
    zz_ok = zz_ok && zigzag_order()[63] == 63;
    check("zigzag prefix", zz_ok);

    return out;
}

}  // namespace lclmzy
