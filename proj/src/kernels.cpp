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

#include "pdct/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pdct {
namespace {

// Full 8x8 modified RDCT. Rows 0..3 are the pruned kernel; rows 4..7 are
// the {0,+-1} completion consistent with the 14-addition schedule.
constexpr int kModifiedRdctRows[8][8] = {
    {1, 1, 1, 1, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 0, 0, -1},
    {1, 0, 0, -1, -1, 0, 0, 1},
    {0, 0, -1, 0, 0, 1, 0, 0},
    {1, -1, -1, 1, 1, -1, -1, 1},
    {0, -1, 0, 0, 0, 0, 1, 0},
    {0, -1, 1, 0, 0, 1, -1, 0},
    {0, 0, 0, -1, 1, 0, 0, 0},
};

Mat8 exact_dct_matrix() {
    Mat8 c{};
    constexpr double pi = std::numbers::pi;
    for (int k = 0; k < kBlockSize; ++k) {
        for (int n = 0; n < kBlockSize; ++n) {
            c[k][n] = k == 0 ? 1.0 / std::sqrt(8.0)
                             : 0.5 * std::cos((2 * n + 1) * k * pi / 16.0);
        }
    }
    return c;
}

double round_half_away(double v) {
    return v >= 0.0 ? std::floor(v + 0.5) : std::ceil(v - 0.5);
}

// scaling[i] = 1/sqrt(row_i . row_i)
void set_row_scaling(TransformSpec& spec) {
    for (int i = 0; i < spec.rows; ++i) {
        double norm2 = 0.0;
        for (int j = 0; j < kBlockSize; ++j) norm2 += spec.matrix[i][j] * spec.matrix[i][j];
        spec.scaling[i] = 1.0 / std::sqrt(norm2);
    }
}

// Gauss-Jordan inverse with partial pivoting; the sign kernel is square and
// nonsingular, so this is its pseudo-inverse.
Mat8 invert8(const Mat8& m) {
    Mat8 a = m;
    Mat8 inv{};
    for (int i = 0; i < 8; ++i) inv[i][i] = 1.0;
    for (int col = 0; col < 8; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 8; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        if (std::abs(a[pivot][col]) < 1e-9)
            throw std::runtime_error("kernel matrix is singular, no pseudo-inverse");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const double d = a[col][col];
        for (int j = 0; j < 8; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < 8; ++r) {
            if (r == col) continue;
            const double f = a[r][col];
            if (f == 0.0) continue;
            for (int j = 0; j < 8; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

void set_left_inverse(TransformSpec& spec) {
    if (spec.inverse_kind == InverseKind::kTransposeOrthonormal) {
        // (D*T)^t, stored 8 x rows
        for (int j = 0; j < kBlockSize; ++j)
            for (int i = 0; i < spec.rows; ++i)
                spec.left_inverse[j][i] = spec.scaling[i] * spec.matrix[i][j];
    } else {
        Mat8 scaled{};
        for (int i = 0; i < kBlockSize; ++i)
            for (int j = 0; j < kBlockSize; ++j)
                scaled[i][j] = spec.scaling[i] * spec.matrix[i][j];
        spec.left_inverse = invert8(scaled);
    }
}

}  // namespace

TransformSpec build_pruned() {
    TransformSpec spec;
    spec.name = "pruned";
    spec.rows = kLowBand;
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < kBlockSize; ++j) spec.matrix[i][j] = kModifiedRdctRows[i][j];
    spec.integer_entries = true;
    spec.schedule = Schedule::kPruned10;
    spec.inverse_kind = InverseKind::kTransposeOrthonormal;
    set_row_scaling(spec);
    set_left_inverse(spec);
    return spec;
}

TransformSpec build_modified_rdct() {
    TransformSpec spec;
    spec.name = "modified-rdct";
    spec.rows = kBlockSize;
    for (int i = 0; i < spec.rows; ++i)
        for (int j = 0; j < kBlockSize; ++j) spec.matrix[i][j] = kModifiedRdctRows[i][j];
    spec.integer_entries = true;
    spec.schedule = Schedule::kModifiedRdct14;
    spec.inverse_kind = InverseKind::kTransposeOrthonormal;
    set_row_scaling(spec);
    set_left_inverse(spec);
    return spec;
}

TransformSpec build_exact_dct() {
    TransformSpec spec;
    spec.name = "dct";
    spec.rows = kBlockSize;
    spec.matrix = exact_dct_matrix();
    for (auto& s : spec.scaling) s = 1.0;  // rows already orthonormal
    spec.schedule = Schedule::kChen;
    spec.inverse_kind = InverseKind::kTransposeOrthonormal;
    set_left_inverse(spec);
    return spec;
}

TransformSpec build_sdct() {
    TransformSpec spec;
    spec.name = "sdct";
    spec.rows = kBlockSize;
    const Mat8 c = exact_dct_matrix();
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j)
            spec.matrix[i][j] = c[i][j] > 0.0 ? 1.0 : c[i][j] < 0.0 ? -1.0 : 0.0;
    spec.integer_entries = true;
    spec.inverse_kind = InverseKind::kPseudoInverse;  // rows are not orthogonal
    set_row_scaling(spec);
    set_left_inverse(spec);
    return spec;
}

TransformSpec build_rdct() {
    TransformSpec spec;
    spec.name = "rdct";
    spec.rows = kBlockSize;
    const Mat8 c = exact_dct_matrix();
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j) spec.matrix[i][j] = round_half_away(2.0 * c[i][j]);
    spec.integer_entries = true;
    spec.inverse_kind = InverseKind::kTransposeOrthonormal;
    set_row_scaling(spec);
    set_left_inverse(spec);
    return spec;
}

namespace {
const std::vector<TransformSpec>& registry() {
    static const std::vector<TransformSpec> specs = {
        build_pruned(), build_modified_rdct(), build_exact_dct(), build_sdct(), build_rdct(),
    };
    return specs;
}
}  // namespace

const TransformSpec& transform_by_name(std::string_view name) {
    for (const auto& s : registry())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown transform: " + std::string(name));
}

std::vector<std::string> transform_names() {
    std::vector<std::string> names;
    for (const auto& s : registry()) names.push_back(s.name);
    return names;
}

OpCount direct_ops_1d(const TransformSpec& spec) {
    OpCount c;
    for (int i = 0; i < spec.rows; ++i) {
        int terms = 0;
        for (int j = 0; j < kBlockSize; ++j) {
            const double m = spec.matrix[i][j];
            if (m == 0.0) continue;
            ++terms;
            if (m != 1.0 && m != -1.0) ++c.mult;
        }
        if (terms > 1) c.add += terms - 1;
    }
    return c;
}

OpCount ops_1d(const TransformSpec& spec) {
    switch (spec.schedule) {
        case Schedule::kPruned10:
            return kPrunedOps1D;
        case Schedule::kModifiedRdct14:
            return kModifiedRdctOps1D;
        case Schedule::kChen:
            return kChenOps1D;
        case Schedule::kNone:
            break;
    }
    return direct_ops_1d(spec);
}

std::pair<Vec4, OpCount> fast_forward_pruned(const Vec8& x) {
    return {pruned_schedule(x), kPrunedOps1D};
}

std::pair<Vec8, OpCount> fast_forward_modified_rdct(const Vec8& x) {
    return {modified_rdct_schedule(x), kModifiedRdctOps1D};
}

std::pair<Vec8, OpCount> fast_forward_exact(const Vec8& x) {
    return {chen_schedule(x), kChenOps1D};
}

Vec8 direct_apply(const TransformSpec& spec, const Vec8& x) {
    return direct_form(spec, x);
}

}  // namespace pdct
