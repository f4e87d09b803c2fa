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

#include "pdct/zonal.hpp"

#include <stdexcept>

namespace pdct {
namespace {

// A = L * B * L^t with L = spec.left_inverse (8 x rows), B rows x rows
// stored in the corner of an 8x8 block.
Block8 left_inverse_apply(const TransformSpec& spec, const Block8& b, bool scaled) {
    Block8 bs = b;
    if (!scaled) {
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.rows; ++j) bs[i][j] *= spec.scaling[i] * spec.scaling[j];
    }
    std::array<std::array<double, kBlockSize>, kBlockSize> mid{};  // L * B, 8 x rows
    for (int m = 0; m < kBlockSize; ++m)
        for (int j = 0; j < spec.rows; ++j) {
            double acc = 0.0;
            for (int i = 0; i < spec.rows; ++i) acc += spec.left_inverse[m][i] * bs[i][j];
            mid[m][j] = acc;
        }
    Block8 out{};
    for (int m = 0; m < kBlockSize; ++m)
        for (int n = 0; n < kBlockSize; ++n) {
            double acc = 0.0;
            for (int j = 0; j < spec.rows; ++j) acc += mid[m][j] * spec.left_inverse[n][j];
            out[m][n] = acc;
        }
    return out;
}

}  // namespace

Forward2D forward_2d(const TransformSpec& spec, const Block8& a, bool scaled) {
    if (spec.rows != kLowBand && spec.rows != kBlockSize)
        throw std::invalid_argument("forward_2d: spec must have 4 or 8 rows");
    Forward2D r;
    r.rows = spec.rows;
    r.coeffs = forward_2d_core(spec, a);
    r.ops = (kBlockSize + spec.rows) * ops_1d(spec);
    if (scaled)
        for (int i = 0; i < spec.rows; ++i)
            for (int j = 0; j < spec.rows; ++j) r.coeffs[i][j] *= spec.scaling[i] * spec.scaling[j];
    return r;
}

Block8 inverse_2d(const TransformSpec& spec, const Block8& b, bool scaled) {
    if (spec.rows != kBlockSize)
        throw std::invalid_argument("inverse_2d: 8x8 block needs an 8-row spec");
    return left_inverse_apply(spec, b, scaled);
}

Block8 inverse_2d(const TransformSpec& spec, const Block4& b, bool scaled) {
    if (spec.rows != kLowBand)
        throw std::invalid_argument("inverse_2d: 4x4 block needs a 4-row spec");
    Block8 padded{};
    for (int i = 0; i < kLowBand; ++i)
        for (int j = 0; j < kLowBand; ++j) padded[i][j] = b[i][j];
    return left_inverse_apply(spec, padded, scaled);
}

std::optional<double> energy_compaction(const Block8& a) {
    const auto b = forward_2d(transform_by_name("modified-rdct"), a, /*scaled=*/true);
    double total = 0.0, low = 0.0;
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j) {
            const double e = b.coeffs[i][j] * b.coeffs[i][j];
            total += e;
            if (i < kLowBand && j < kLowBand) low += e;
        }
    if (total == 0.0) return std::nullopt;
    return low / total;
}

EnergySummary energy_compaction_summary(std::span<const Block8> blocks) {
    EnergySummary s;
    double total = 0.0, low = 0.0, fractions = 0.0;
    const auto& spec = transform_by_name("modified-rdct");
    for (const auto& a : blocks) {
        const auto b = forward_2d(spec, a, /*scaled=*/true);
        double bt = 0.0, bl = 0.0;
        for (int i = 0; i < kBlockSize; ++i)
            for (int j = 0; j < kBlockSize; ++j) {
                const double e = b.coeffs[i][j] * b.coeffs[i][j];
                bt += e;
                if (i < kLowBand && j < kLowBand) bl += e;
            }
        if (bt == 0.0) {
            ++s.skipped;
            continue;
        }
        total += bt;
        low += bl;
        fractions += bl / bt;
        ++s.blocks;
    }
    if (s.blocks > 0) {
        s.weighted = low / total;
        s.unweighted = fractions / static_cast<double>(s.blocks);
    }
    return s;
}

}  // namespace pdct
