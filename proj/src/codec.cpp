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

#include "pdct/codec.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pdct {
namespace {

double round_half_away(double v) {
    return v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5);
}

// The 4-row pruned kernel shares rows 0..3 with the full modified RDCT, so
// coding with it is the full kernel restricted to the 4x4 corner.
struct Resolved {
    const TransformSpec* spec;
    bool pruned;
};

Resolved resolve(const CodecConfig& cfg) {
    const TransformSpec* spec = &transform_by_name(cfg.transform);
    bool pruned = cfg.pruned;
    if (spec->rows == kLowBand) {
        spec = &transform_by_name("modified-rdct");
        pruned = true;
    }
    return {spec, pruned};
}

struct Pipeline {
    const TransformSpec* spec;
    bool pruned;
    bool level_shift;
    QuantTable quant;
    Block8 merged;

    explicit Pipeline(const CodecConfig& cfg) {
        const Resolved r = resolve(cfg);
        spec = r.spec;
        pruned = r.pruned;
        level_shift = cfg.level_shift;
        quant = cfg.quant;
        merged = merged_table(quant, *spec);
    }

    BlockResult run(const Block8& a) const {
        Block8 in = a;
        if (level_shift)
            for (auto& row : in)
                for (auto& v : row) v -= 128.0;
        const Forward2D f = forward_2d(*spec, in, /*scaled=*/false);
        BlockResult r;
        r.quantized = quantize_merged(f.coeffs, merged, pruned);
        Block8 dequant{};  // back into the scaled coefficient domain
        for (int i = 0; i < kBlockSize; ++i)
            for (int j = 0; j < kBlockSize; ++j)
                dequant[i][j] = static_cast<double>(r.quantized[i][j]) * quant.base[i][j];
        r.reconstructed = inverse_2d(*spec, dequant, /*scaled=*/true);
        for (auto& row : r.reconstructed)
            for (auto& v : row) {
                if (level_shift) v += 128.0;
                v = std::clamp(v, 0.0, 255.0);
            }
        return r;
    }
};

std::string format4(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << v;
    return os.str();
}

}  // namespace

QuantTable jpeg_luminance_quant() {
    QuantTable q;
    q.base = {{{16, 11, 10, 16, 24, 40, 51, 61},
               {12, 12, 14, 19, 26, 58, 60, 55},
               {14, 13, 16, 24, 40, 57, 69, 56},
               {14, 17, 22, 29, 51, 87, 80, 62},
               {18, 22, 37, 56, 68, 109, 103, 77},
               {24, 35, 55, 64, 81, 104, 113, 92},
               {49, 64, 78, 87, 103, 121, 120, 101},
               {72, 92, 95, 98, 112, 100, 103, 99}}};
    return q;
}

Block8 merged_table(const QuantTable& q, const TransformSpec& spec) {
    Block8 m{};
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < spec.rows; ++j) {
            if (q.base[i][j] < 1) throw std::invalid_argument("quant steps must be >= 1");
            m[i][j] = q.base[i][j] / (spec.scaling[i] * spec.scaling[j]);
        }
    // out-of-band rows of a 4-row spec keep the base steps; they are never
    // divided into, only defensively nonzero
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j)
            if (m[i][j] == 0.0) m[i][j] = q.base[i][j];
    return m;
}

QuantBlock quantize_scaled(const Block8& b_scaled, const QuantTable& q, bool pruned) {
    QuantBlock out{};
    const int band = pruned ? kLowBand : kBlockSize;
    for (int i = 0; i < band; ++i)
        for (int j = 0; j < band; ++j)
            out[i][j] = static_cast<long long>(round_half_away(b_scaled[i][j] / q.base[i][j]));
    return out;
}

QuantBlock quantize_merged(const Block8& b_unscaled, const Block8& merged, bool pruned) {
    QuantBlock out{};
    const int band = pruned ? kLowBand : kBlockSize;
    for (int i = 0; i < band; ++i)
        for (int j = 0; j < band; ++j)
            out[i][j] = static_cast<long long>(round_half_away(b_unscaled[i][j] / merged[i][j]));
    return out;
}

BlockResult compress_block(const Block8& a, const CodecConfig& cfg) {
    return Pipeline(cfg).run(a);
}

CompressResult compress_image(const GrayImage& img, const CodecConfig& cfg) {
    if (img.width < 1 || img.height < 1 ||
        img.samples.size() != static_cast<std::size_t>(img.width) * img.height)
        throw std::invalid_argument("compress_image: empty or inconsistent image");
    const Pipeline pipe(cfg);
    const int bw = (img.width + kBlockSize - 1) / kBlockSize;
    const int bh = (img.height + kBlockSize - 1) / kBlockSize;

    GrayImage recon;
    recon.width = img.width;
    recon.height = img.height;
    recon.samples.resize(img.samples.size());

    long long zeros = 0;
    std::vector<Block8> pixel_blocks;
    pixel_blocks.reserve(static_cast<std::size_t>(bw) * bh);

    for (int by = 0; by < bh; ++by)
        for (int bx = 0; bx < bw; ++bx) {
            Block8 a;
            for (int y = 0; y < kBlockSize; ++y)
                for (int x = 0; x < kBlockSize; ++x) {
                    // edge replication outside the original extent
                    const int sx = std::min(bx * kBlockSize + x, img.width - 1);
                    const int sy = std::min(by * kBlockSize + y, img.height - 1);
                    a[y][x] = img.at(sx, sy);
                }
            pixel_blocks.push_back(a);
            const BlockResult r = pipe.run(a);
            for (const auto& row : r.quantized)
                for (long long v : row) zeros += v == 0 ? 1 : 0;
            for (int y = 0; y < kBlockSize; ++y) {
                const int sy = by * kBlockSize + y;
                if (sy >= img.height) break;
                for (int x = 0; x < kBlockSize; ++x) {
                    const int sx = bx * kBlockSize + x;
                    if (sx >= img.width) break;
                    const long long p = std::llround(r.reconstructed[y][x]);
                    recon.samples[static_cast<std::size_t>(sy) * img.width + sx] =
                        static_cast<std::uint8_t>(std::clamp(p, 0LL, 255LL));
                }
            }
        }

    CompressResult out{std::move(recon), {}};
    out.metrics.psnr_db = psnr(img, out.reconstructed);
    out.metrics.nz_pct =
        100.0 * static_cast<double>(zeros) / (64.0 * static_cast<double>(bw) * bh);
    out.metrics.energy_compaction = energy_compaction_summary(pixel_blocks).weighted;
    return out;
}

double psnr(const GrayImage& a, const GrayImage& b) {
    if (a.width != b.width || a.height != b.height)
        throw std::invalid_argument("psnr: image dimensions differ");
    double sse = 0.0;
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const double d = static_cast<double>(a.samples[i]) - static_cast<double>(b.samples[i]);
        sse += d * d;
    }
    if (sse == 0.0) return std::numeric_limits<double>::infinity();
    const double mse = sse / static_cast<double>(a.samples.size());
    return 10.0 * std::log10(255.0 * 255.0 / mse);
}

CorpusResult corpus_average(const std::vector<NamedImage>& corpus,
                            const std::vector<CodecConfig>& configs) {
    if (corpus.empty()) throw std::invalid_argument("corpus_average: empty corpus");
    CorpusResult result;
    for (const auto& cfg : configs) {
        const Resolved r = resolve(cfg);
        ImageMetrics sum;
        for (const auto& [name, img] : corpus) {
            const auto c = compress_image(img, cfg);
            result.per_image.push_back({r.spec->name, r.pruned, name, c.metrics});
            sum.psnr_db += c.metrics.psnr_db;
            sum.nz_pct += c.metrics.nz_pct;
            sum.energy_compaction += c.metrics.energy_compaction;
        }
        const double n = static_cast<double>(corpus.size());
        result.averages.push_back({r.spec->name,
                                   r.pruned,
                                   "average",
                                   {sum.psnr_db / n, sum.nz_pct / n, sum.energy_compaction / n}});
    }
    auto key = [](const MetricsRow& m) { return std::tie(m.image, m.transform, m.pruned); };
    std::sort(result.per_image.begin(), result.per_image.end(),
              [&](const MetricsRow& x, const MetricsRow& y) { return key(x) < key(y); });
    std::sort(result.averages.begin(), result.averages.end(),
              [](const MetricsRow& x, const MetricsRow& y) {
                  return std::tie(x.transform, x.pruned) < std::tie(y.transform, y.pruned);
              });
    return result;
}

std::string metrics_csv_header() { return "transform,pruned,image,psnr_db,nz_pct,energy_compaction"; }

std::string metrics_csv_row(const MetricsRow& row) {
    return row.transform + "," + (row.pruned ? "true" : "false") + "," + row.image + "," +
           format4(row.metrics.psnr_db) + "," + format4(row.metrics.nz_pct) + "," +
           format4(row.metrics.energy_compaction);
}

}  // namespace pdct
