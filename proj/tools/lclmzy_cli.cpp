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


// Command-line front end: encrypt, decrypt, analyze, attack, dump-trajectory, selftest.

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lclmzy/analysis.hpp"
#include "lclmzy/bundle.hpp"
#include "lclmzy/chaos.hpp"
#include "lclmzy/error.hpp"
#include "lclmzy/image.hpp"
#include "lclmzy/pipeline.hpp"
#include "lclmzy/selftest.hpp"

namespace fs = std::filesystem;
using namespace lclmzy;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kIo = 3, kFormat = 4, kSelfTest = 5 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string in;
    std::string out;
    std::string bundle;
    std::string ref;
    std::string histogram;
    std::optional<std::size_t> rounds;
    bool no_zy = false;
    bool fresh_keys = false;
    std::optional<std::uint64_t> seed;
    std::string noise;
    std::optional<double> level;
    std::string crop;
    std::size_t count = 10000;
    std::size_t pairs = kDefaultCorrelationPairs;
};

struct CropBox {
    std::size_t x, y, w, h;
};

CropBox parse_crop(const std::string& s) {
    std::array<std::size_t, 4> v{};
    const char* p = s.data();
    const char* end = s.data() + s.size();
    for (std::size_t i = 0; i < 4; ++i) {
        const auto r = std::from_chars(p, end, v[i]);
        if (r.ec != std::errc{}) throw UsageError("--crop expects X,Y,W,H");
        p = r.ptr;
        if (i < 3) {
            if (p == end || *p != ',') throw UsageError("--crop expects X,Y,W,H");
            ++p;
        }
    }
    if (p != end) throw UsageError("--crop expects X,Y,W,H");
    return {v[0], v[1], v[2], v[3]};
}

NoiseKind parse_noise(const std::string& s) {
    for (auto k : {NoiseKind::kGaussian, NoiseKind::kSaltPepper, NoiseKind::kSpeckle}) {
        if (s == noise_name(k)) return k;
    }
    throw UsageError("--noise must be gaussian, sp or speckle");
}

std::string shortest(double v) {
    char buf[32];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_text(const fs::path& path, const std::string& text) {
    write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
    } else {
        write_text(o.out, text);
    }
}

// Accepts either a PPM or a cipher file; a cipher file is shown as planes.
Raster read_any_image(const fs::path& path) {
    const auto bytes = read_file(path);
    if (looks_like_cipher_file(bytes)) return decode_cipher_file(bytes).as_raster();
    return decode_ppm(bytes);
}

int cmd_encrypt(const Options& o) {
    KeyBundle bundle;
    if (fs::exists(o.bundle)) bundle = read_bundle(o.bundle);
    if (o.rounds) {
        if (*o.rounds == 0 || *o.rounds > kMaxRounds) throw UsageError("--rounds out of range");
        bundle.rounds = *o.rounds;
    }
    if (o.no_zy) bundle.zy_enabled = false;
    if (o.fresh_keys) {
        std::mt19937_64 rng(o.seed ? *o.seed : std::random_device{}());
        refresh_keys(bundle, rng);
    } else if (bundle.hex_key.size() != bundle.rounds * kHexDigitsPerRound) {
        throw UsageError("hex key needs " + std::to_string(bundle.rounds * kHexDigitsPerRound) +
                         " digits for " + std::to_string(bundle.rounds) + " rounds; pass --fresh-keys");
    }
    bundle.digests = {};
    bundle.validate();

    const auto result = encrypt_image(read_ppm(o.in), bundle);
    write_cipher_file(o.out, result.cipher);
    write_bundle(o.bundle, result.bundle);
    return kOk;
}

int cmd_decrypt(const Options& o) {
    const auto bundle = read_bundle(o.bundle);
    write_ppm(o.out, decrypt_image(read_cipher_file(o.in), bundle));
    return kOk;
}

int cmd_analyze(const Options& o) {
    const auto img = read_any_image(o.in);
    const auto seed = o.seed.value_or(1);
    const auto report = o.ref.empty() ? analyze_image(img, o.pairs, seed)
                                      : analyze_pair(img, read_any_image(o.ref), o.pairs, seed);
    if (!o.histogram.empty()) {
        for (auto c : kChannels) {
            write_text(o.histogram + "." + channel_name(c) + ".csv", histogram_csv(histogram(img.plane(c))));
        }
    }
    emit(o, format_report(report));
    return kOk;
}

int cmd_attack(const Options& o) {
    if (o.noise.empty() && o.crop.empty()) throw UsageError("attack needs --noise or --crop");
    if (!o.noise.empty() && !o.level) throw UsageError("--noise needs --level");
    std::optional<NoiseKind> kind;
    if (!o.noise.empty()) kind = parse_noise(o.noise);
    std::optional<CropBox> box;
    if (!o.crop.empty()) box = parse_crop(o.crop);

    const auto bundle = read_bundle(o.bundle);
    const auto cipher = read_cipher_file(o.in);
    const auto reference = decrypt_image(cipher, bundle);

    auto planes = cipher.as_raster();
    const auto seed = o.seed.value_or(1);
    for (std::size_t c = 0; c < 3; ++c) {
        auto& p = planes.planes[c];
        if (kind) p = add_noise(p, *kind, *o.level, seed + c);
        if (box) p = crop_attack(p, box->x, box->y, box->w, box->h);
    }
    const auto attacked = decrypt_image(CipherImage::from_raster(planes), bundle);

    std::ostringstream report;
    if (kind) report << "# noise " << noise_name(*kind) << " level " << shortest(*o.level) << "\n";
    if (kind == NoiseKind::kSpeckle) {
        report << "# speckle level is the variance of multiplicative gaussian noise; small levels barely move pixels\n";
    }
    if (box) report << "# crop " << box->x << "," << box->y << "," << box->w << "," << box->h << "\n";
    for (auto c : kChannels) {
        report << "psnr." << channel_name(c) << " = " << shortest(psnr(reference.plane(c), attacked.plane(c)))
               << "\n";
    }
    if (!o.out.empty()) write_ppm(o.out, attacked);
    std::cout << report.str();
    return kOk;
}

int cmd_dump_trajectory(const Options& o) {
    KeyBundle bundle;
    if (!o.bundle.empty()) bundle = read_bundle(o.bundle);
    std::string csv = "x,y,z\n";
    ChaosState s = bundle.base;
    for (std::size_t i = 0; i < o.count; ++i) {
        s = step(s, bundle.params);
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.z)) {
            throw Error(ErrorKind::kNonFiniteState, "orbit diverged after " + std::to_string(i + 1) + " steps");
        }
        csv += shortest(s.x) + "," + shortest(s.y) + "," + shortest(s.z) + "\n";
    }
    emit(o, csv);
    return kOk;
}

int cmd_selftest() {
    bool ok = true;
    for (const auto& r : run_selftest()) {
        std::cout << (r.passed ? "ok   " : "FAIL ") << r.name << "\n";
        ok = ok && r.passed;
    }
    return ok ? kOk : kSelfTest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Image encryption with a lag-complex logistic map and trigram transforms", "lclmzy"};
    app.require_subcommand(1, 1);
    Options o;

    auto* enc = app.add_subcommand("encrypt", "PPM -> cipher file; writes the completed key bundle");
    enc->add_option("--in", o.in, "input PPM")->required();
    enc->add_option("--out", o.out, "output cipher file")->required();
    enc->add_option("--bundle", o.bundle, "key bundle, read if present and always rewritten")->required();
    enc->add_option("--rounds", o.rounds, "Feistel rounds (default 8)");
    enc->add_flag("--no-zy", o.no_zy, "disable the trigram layer in the round function");
    enc->add_flag("--fresh-keys", o.fresh_keys, "generate random hex and digit keys");
    enc->add_option("--seed", o.seed, "seed for --fresh-keys");

    auto* dec = app.add_subcommand("decrypt", "cipher file + bundle -> PPM");
    dec->add_option("--in", o.in, "input cipher file")->required();
    dec->add_option("--out", o.out, "output PPM")->required();
    dec->add_option("--bundle", o.bundle, "key bundle")->required();

    auto* ana = app.add_subcommand("analyze", "entropy, correlation and optional differential metrics");
    ana->add_option("--in", o.in, "PPM or cipher file")->required();
    ana->add_option("--ref", o.ref, "reference image for NPCR/UACI/PSNR");
    ana->add_option("--out", o.out, "report path (default stdout)");
    ana->add_option("--seed", o.seed, "correlation sampling seed");
    ana->add_option("--pairs", o.pairs, "correlation sample pairs");
    ana->add_option("--histogram", o.histogram, "write PREFIX.<channel>.csv histograms");

    auto* att = app.add_subcommand("attack", "apply noise or cropping to a cipher file, decrypt, report PSNR");
    att->add_option("--in", o.in, "input cipher file")->required();
    att->add_option("--bundle", o.bundle, "key bundle")->required();
    att->add_option("--out", o.out, "decrypted attacked PPM");
    att->add_option("--noise", o.noise, "gaussian | sp | speckle");
    att->add_option("--level", o.level, "noise variance or density");
    att->add_option("--crop", o.crop, "X,Y,W,H region to zero");
    att->add_option("--seed", o.seed, "noise seed");

    auto* traj = app.add_subcommand("dump-trajectory", "x,y,z CSV of the map from the bundle initial values");
    traj->add_option("--bundle", o.bundle, "key bundle (default parameters if omitted)");
    traj->add_option("--out", o.out, "CSV path (default stdout)");
    traj->add_option("--count", o.count, "number of iterations");

    auto* self = app.add_subcommand("selftest", "known-answer checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (enc->parsed()) return cmd_encrypt(o);
        if (dec->parsed()) return cmd_decrypt(o);
        if (ana->parsed()) return cmd_analyze(o);
        if (att->parsed()) return cmd_attack(o);
        if (traj->parsed()) return cmd_dump_trajectory(o);
        if (self->parsed()) return cmd_selftest();
    } catch (const UsageError& e) {
        std::cerr << "lclmzy: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "lclmzy: " << e.what() << "\n";
        return e.kind() == ErrorKind::kIoError ? kIo : kFormat;
    } catch (const std::exception& e) {
        std::cerr << "lclmzy: " << e.what() << "\n";
        return kFormat;
    }
    return kUsage;
}
