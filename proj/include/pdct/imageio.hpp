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

#ifndef PDCT_IMAGEIO_HPP
#define PDCT_IMAGEIO_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pdct {

struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> samples;  // row-major, width*height

    std::uint8_t at(int x, int y) const {
        return samples[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) +
                       static_cast<std::size_t>(x)];
    }
    bool operator==(const GrayImage&) const = default;
};

// Parse failure with the byte offset where the input stopped making sense.
class PgmError : public std::runtime_error {
  public:
    PgmError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

// Binary PGM (P5), maxval <= 255, comment-tolerant header.
GrayImage read_pgm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> write_pgm(const GrayImage& img);

GrayImage load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const GrayImage& img);

// kind: flat | gradient | checker | noise. Deterministic in (kind, seed, x, y).
GrayImage synth_image(std::string_view kind, int width, int height, std::uint32_t seed = 0);

}  // namespace pdct

#endif  // PDCT_IMAGEIO_HPP
