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

#ifndef PDCT_CODEC_HPP
#define PDCT_CODEC_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "pdct/imageio.hpp"
#include "pdct/zonal.hpp"

namespace pdct {

using QuantInts = std::array<std::array<int, kBlockSize>, kBlockSize>;
using QuantBlock = std::array<std::array<long long, kBlockSize>, kBlockSize>;

struct QuantTable {
    QuantInts base{};  // positive integer steps
};

// JPEG luminance steps (Annex K), row 0 starting 16, 11, 10, 16, ...
QuantTable jpeg_luminance_quant();

// merged[i][j] = base[i][j] / (d_i * d_j); dividing unscaled integer
// coefficients by it equals dividing scaled ones by the base table.
Block8 merged_table(const QuantTable& q, const TransformSpec& spec);

struct CodecConfig {
    std::string transform = "modified-rdct";
    bool pruned = false;
    bool level_shift = false;  // subtract 128 before the forward transform
    QuantTable quant = jpeg_luminance_quant();
};

// round-half-away-from-zero(b[i][j] / step); entries outside the 4x4
// corner forced to zero when pruned.
QuantBlock quantize_scaled(const Block8& b_scaled, const QuantTable& q, bool pruned);
QuantBlock quantize_merged(const Block8& b_unscaled, const Block8& merged, bool pruned);

struct BlockResult {
    QuantBlock quantized{};
    Block8 reconstructed{};  // clamped to [0, 255]
};

BlockResult compress_block(const Block8& a, const CodecConfig& cfg);

struct ImageMetrics {
    double psnr_db = 0.0;
    double nz_pct = 0.0;             // zero quantized positions, percent of 64 * blocks
    double energy_compaction = 0.0;  // energy-weighted block average
};

struct CompressResult {
    GrayImage reconstructed;
    ImageMetrics metrics;
};

// Pads to multiples of 8 by edge replication; PSNR is computed on the
// original extent, NZ and energy over all coded blocks.
CompressResult compress_image(const GrayImage& img, const CodecConfig& cfg);

// 10*log10(255^2 / MSE); +inf for identical images.
double psnr(const GrayImage& a, const GrayImage& b);

struct MetricsRow {
    std::string transform;
    bool pruned = false;
    std::string image;
    ImageMetrics metrics;
};

struct CorpusResult {
    std::vector<MetricsRow> per_image;  // sorted by (image, transform, pruned)
    std::vector<MetricsRow> averages;   // image = "average", per config
};

using NamedImage = std::pair<std::string, GrayImage>;

CorpusResult corpus_average(const std::vector<NamedImage>& corpus,
                            const std::vector<CodecConfig>& configs);

std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsRow& row);

}  // namespace pdct

#endif  // PDCT_CODEC_HPP
