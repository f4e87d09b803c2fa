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

#ifndef PDCT_ZONAL_HPP
#define PDCT_ZONAL_HPP

#include <array>
#include <optional>
#include <span>

#include "pdct/kernels.hpp"
#include "pdct/opcount.hpp"

namespace pdct {

using Block8 = std::array<std::array<double, kBlockSize>, kBlockSize>;
using Block4 = std::array<std::array<double, kLowBand>, kLowBand>;

// Separable T*A*T^t: 8 column passes, then spec.rows row passes. Output
// occupies the top-left rows x rows corner; unused cells stay T{}.
template <typename T>
std::array<std::array<T, kBlockSize>, kBlockSize> forward_2d_core(
    const TransformSpec& spec, const std::array<std::array<T, kBlockSize>, kBlockSize>& a) {
    std::array<std::array<T, kBlockSize>, kBlockSize> mid{};
    for (int j = 0; j < kBlockSize; ++j) {
        std::array<T, kBlockSize> col{};
        for (int i = 0; i < kBlockSize; ++i) col[i] = a[i][j];
        const auto y = apply_1d(spec, col);
        for (int i = 0; i < spec.rows; ++i) mid[i][j] = y[i];
    }
    std::array<std::array<T, kBlockSize>, kBlockSize> out{};
    for (int i = 0; i < spec.rows; ++i) {
        const auto y = apply_1d(spec, mid[i]);
        for (int j = 0; j < spec.rows; ++j) out[i][j] = y[j];
    }
    return out;
}

struct Forward2D {
    Block8 coeffs{};  // zero outside the rows x rows corner
    int rows = kBlockSize;
    OpCount ops;  // scheduled arithmetic only; diagonal scaling merges into quantization
};

// scaled=false gives T*A*T^t; scaled=true gives C^*A*C^t = D(TAT^t)D.
Forward2D forward_2d(const TransformSpec& spec, const Block8& a, bool scaled);

// Left-inverse reconstruction; b must match spec.rows (8-row and 4-row
// overloads). For the pruned kernel this equals the full 8-row inverse of
// the zero-padded block. scaled says which domain b is in.
Block8 inverse_2d(const TransformSpec& spec, const Block8& b, bool scaled);
Block8 inverse_2d(const TransformSpec& spec, const Block4& b, bool scaled);

// Fraction of scaled 2-D coefficient energy in the 4x4 low-frequency
// corner under the full 8-row kernel; empty for an all-zero block.
std::optional<double> energy_compaction(const Block8& a);

struct EnergySummary {
    double weighted = 0.0;    // corner energy over total energy, image-wide
    double unweighted = 0.0;  // plain mean of per-block fractions
    long long blocks = 0;     // blocks with nonzero energy
    long long skipped = 0;    // all-zero blocks left out of both averages
};

EnergySummary energy_compaction_summary(std::span<const Block8> blocks);

}  // namespace pdct

#endif  // PDCT_ZONAL_HPP
