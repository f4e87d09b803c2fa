/*
 * Copyright (c) 2026 the pdct authors
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

#include "pdct/imageio.hpp"

#include <algorithm>
#include <fstream>
#include <random>

namespace pdct {
namespace {

bool is_space(std::uint8_t c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

// PGM headers allow '#' comments running to end of line anywhere whitespace
// may appear.
void skip_space_and_comments(std::span<const std::uint8_t> b, std::size_t& pos) {
    while (pos < b.size()) {
        if (is_space(b[pos])) {
            ++pos;
        } else if (b[pos] == '#') {
            while (pos < b.size() && b[pos] != '\n') ++pos;
        } else {
            break;
        }
    }
}

int parse_number(std::span<const std::uint8_t> b, std::size_t& pos, const char* field) {
    skip_space_and_comments(b, pos);
    if (pos >= b.size() || b[pos] < '0' || b[pos] > '9')
        throw PgmError(std::string("expected ") + field, pos);
    long value = 0;
    while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
        value = value * 10 + (b[pos] - '0');
        if (value > 1'000'000) throw PgmError(std::string(field) + " out of range", pos);
        ++pos;
    }
    return static_cast<int>(value);
}

}  // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    std::size_t pos = 0;
    if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5')
        throw PgmError("not a binary PGM (magic P5)", 0);
    pos = 2;
    const int width = parse_number(bytes, pos, "width");
    const int height = parse_number(bytes, pos, "height");
    const int maxval = parse_number(bytes, pos, "maxval");
    if (width < 1 || height < 1) throw PgmError("dimensions must be positive", pos);
    if (maxval < 1 || maxval > 255) throw PgmError("maxval must be in [1, 255]", pos);
    if (pos >= bytes.size() || !is_space(bytes[pos]))
        throw PgmError("expected single whitespace before payload", pos);
    ++pos;  // exactly one separator byte, then raw samples
    const std::size_t need = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - pos < need) throw PgmError("truncated payload", bytes.size());
    GrayImage img;
    img.width = width;
    img.height = height;
    img.samples.assign(bytes.begin() + static_cast<std::ptrdiff_t>(pos),
                       bytes.begin() + static_cast<std::ptrdiff_t>(pos + need));
    return img;
}

std::vector<std::uint8_t> write_pgm(const GrayImage& img) {
    if (img.width < 1 || img.height < 1 ||
        img.samples.size() != static_cast<std::size_t>(img.width) * img.height)
        throw std::invalid_argument("write_pgm: inconsistent image");
    const std::string header =
        "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), img.samples.begin(), img.samples.end());
    return out;
}

GrayImage load_pgm(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string());
    std::vector<std::uint8_t> bytes{std::istreambuf_iterator<char>(f),
                                    std::istreambuf_iterator<char>()};
    return read_pgm(bytes);
}

void save_pgm(const std::filesystem::path& path, const GrayImage& img) {
    const auto bytes = write_pgm(img);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path.string() + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
    if (!f) throw std::runtime_error("short write to " + path.string());
}

GrayImage synth_image(std::string_view kind, int width, int height, std::uint32_t seed) {
    if (width < 1 || height < 1) throw std::invalid_argument("synth_image: zero dimension");
    GrayImage img;
    img.width = width;
    img.height = height;
    img.samples.resize(static_cast<std::size_t>(width) * static_cast<std::size_t>(height));
    if (kind == "flat") {
        std::fill(img.samples.begin(), img.samples.end(), std::uint8_t{128});
    } else if (kind == "gradient") {
        const int span = std::max(1, width + height - 2);
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                img.samples[static_cast<std::size_t>(y) * width + x] =
                    static_cast<std::uint8_t>((x + y) * 255 / span);
    } else if (kind == "checker") {
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x)
                img.samples[static_cast<std::size_t>(y) * width + x] =
                    ((x / 8 + y / 8) % 2 == 0) ? 32 : 224;
    } else if (kind == "noise") {
        std::mt19937 rng(seed);
        for (auto& s : img.samples) s = static_cast<std::uint8_t>(rng() & 0xFF);
    } else {
        throw std::invalid_argument("synth_image: unknown kind " + std::string(kind));
    }
    return img;
}

}  // namespace pdct
