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

#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"

using namespace pdct;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("smallest image serializes to the canonical header") {
    GrayImage img;
    img.width = 1;
    img.height = 1;
    img.samples = {0};
    const auto bytes = write_pgm(img);
    const std::string header = "P5\n1 1\n255\n";
    REQUIRE(bytes.size() == header.size() + 1);
    CHECK(std::string(bytes.begin(), bytes.begin() + static_cast<long>(header.size())) == header);
    CHECK(bytes.back() == 0);
}

TEST_CASE("write then read is the identity") {
    for (const char* kind : {"flat", "gradient", "checker", "noise"}) {
        const GrayImage img = synth_image(kind, 24, 16, 42);
        CHECK(read_pgm(write_pgm(img)) == img);
    }
}

TEST_CASE("comments in the header are skipped") {
    const auto plain = bytes_of("P5\n2 2\n255\nabcd");
    auto commented = bytes_of("P5\n# corpus image\n2 2 # dims\n# maxval next\n255\nabcd");
    CHECK(read_pgm(plain) == read_pgm(commented));
}

TEST_CASE("malformed inputs fail with a byte offset") {
    CHECK_THROWS_WITH_AS((void)read_pgm(bytes_of("P6\n1 1\n255\nx")),
                         "not a binary PGM (magic P5) (byte 0)", PgmError);
    CHECK_THROWS_AS((void)read_pgm(bytes_of("P5\n1 1\n65535\nxx")), PgmError);
    CHECK_THROWS_AS((void)read_pgm(bytes_of("P5\n0 1\n255\n")), PgmError);
    CHECK_THROWS_AS((void)read_pgm(bytes_of("P5\n4 4\n255\nshort")), PgmError);
    CHECK_THROWS_AS((void)read_pgm(bytes_of("P5\nw h\n255\nx")), PgmError);

    try {
        (void)read_pgm(bytes_of("P5\n4 4\n255\nshort"));
        FAIL("expected a parse error");
    } catch (const PgmError& e) {
        CHECK(e.offset() == 16);  // end of the truncated input
    }
}

TEST_CASE("parser stops at the declared payload") {
    auto padded = bytes_of("P5\n2 1\n255\nabEXTRA");
    const GrayImage img = read_pgm(padded);
    CHECK(img.samples == std::vector<std::uint8_t>{'a', 'b'});
}

TEST_CASE("synthetic kinds are deterministic") {
    const GrayImage flat = synth_image("flat", 16, 8);
    for (auto s : flat.samples) CHECK(s == 128);

    const GrayImage checker = synth_image("checker", 16, 16);
    CHECK(checker.at(0, 0) == 32);
    CHECK(checker.at(8, 0) == 224);
    CHECK(checker.at(0, 8) == 224);
    CHECK(checker.at(8, 8) == 32);

    const GrayImage a = synth_image("noise", 32, 32, 7);
    const GrayImage b = synth_image("noise", 32, 32, 7);
    const GrayImage c = synth_image("noise", 32, 32, 8);
    CHECK(a == b);
    CHECK(a.samples != c.samples);

    const GrayImage g = synth_image("gradient", 16, 16);
    CHECK(g.at(0, 0) == 0);
    CHECK(g.at(15, 15) == 255);

    CHECK_THROWS_AS((void)synth_image("plasma", 8, 8), std::invalid_argument);
    CHECK_THROWS_AS((void)synth_image("flat", 0, 8), std::invalid_argument);
}

TEST_CASE("file round trip") {
    const auto path = std::filesystem::temp_directory_path() / "pdct_io_test.pgm";
    const GrayImage img = synth_image("noise", 40, 24, 3);
    save_pgm(path, img);
    CHECK(load_pgm(path) == img);
    std::filesystem::remove(path);
    CHECK_THROWS((void)load_pgm(path));
}
