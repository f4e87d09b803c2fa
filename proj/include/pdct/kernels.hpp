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

// 8-point transform kernels: the 10-addition pruned low-frequency kernel,
// its parent 14-addition full kernel, the exact DCT-II (direct and
// Chen-style fast), and the signed/rounded DCT comparators.

#ifndef PDCT_KERNELS_HPP
#define PDCT_KERNELS_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdct/opcount.hpp"

namespace pdct {

inline constexpr int kBlockSize = 8;  // transform length
inline constexpr int kLowBand = 4;    // retained low-frequency coefficients

using Vec8 = std::array<double, 8>;
using Vec4 = std::array<double, 4>;
using Mat8 = std::array<std::array<double, 8>, 8>;  // row-major, rows x 8

enum class InverseKind {
    kTransposeOrthonormal,  // rows of D*T are orthonormal, inverse is the transpose
    kPseudoInverse,         // rows not orthogonal, reconstruction via pinv(D*T)
};

// Fast 1-D forward schedule attached to a kernel, if any.
enum class Schedule { kNone, kPruned10, kModifiedRdct14, kChen };

// A named transform kernel: matrix rows, the orthogonalization diagonal D,
// and the reconstruction operator.
struct TransformSpec {
    std::string name;
    int rows = kBlockSize;            // 4 or 8
    Mat8 matrix{};                    // first `rows` rows are valid
    std::array<double, 8> scaling{};  // diagonal of D, one entry per row
    bool integer_entries = false;     // every entry in {-1, 0, 1}
    Schedule schedule = Schedule::kNone;
    InverseKind inverse_kind = InverseKind::kTransposeOrthonormal;
    Mat8 left_inverse{};              // 8 x rows one-sided inverse of D*T

    bool has_fast_schedule() const { return schedule != Schedule::kNone; }
};

// ---------------------------------------------------------------------------
// Fast forward schedules. Templates over the scalar so the same flow graph
// runs on double, integers, and the op-counting scalar.

// Coefficients X0..X3 of the full kernel in 10 additions.
template <typename T>
std::array<T, 4> pruned_schedule(const std::array<T, 8>& x) {
    const T a = x[0] + x[7];
    const T b = x[1] + x[6];
    const T c = x[2] + x[5];
    const T d = x[3] + x[4];
    const T e = a + d;
    return {e + b + c, x[0] - x[7], a - d, x[5] - x[2]};
}

// All eight coefficients in 14 additions; the first four match
// pruned_schedule for every input.
template <typename T>
std::array<T, 8> modified_rdct_schedule(const std::array<T, 8>& x) {
    const T a = x[0] + x[7];
    const T b = x[1] + x[6];
    const T c = x[2] + x[5];
    const T d = x[3] + x[4];
    const T e = a + d;
    const T f = b + c;
    return {e + f,         x[0] - x[7], a - d,       x[5] - x[2],
            e - f,         x[6] - x[1], c - b,       x[4] - x[3]};
}

namespace detail {
// cos(k*pi/16)/2 and friends, folded with the orthonormal output scale
inline constexpr double kChenR8 = 0.35355339059327376220;  // 1/sqrt(8)
inline constexpr double kChenR2 = 0.70710678118654752440;  // cos(pi/4)
inline constexpr double kChenC1 = 0.49039264020161522457;  // cos(pi/16)/2
inline constexpr double kChenS1 = 0.09754516100806413392;  // sin(pi/16)/2
inline constexpr double kChenC2 = 0.46193976625564337806;  // cos(pi/8)/2
inline constexpr double kChenS2 = 0.19134171618254488586;  // sin(pi/8)/2
inline constexpr double kChenC3 = 0.41573480615127261854;  // cos(3pi/16)/2
inline constexpr double kChenS3 = 0.27778511650980111237;  // sin(3pi/16)/2
}  // namespace detail

// Exact orthonormal DCT-II via a Chen-style factorization:
// 16 multiplications, 26 additions.
template <typename T>
std::array<T, 8> chen_schedule(const std::array<T, 8>& x) {
    using namespace detail;
    const T a0 = x[0] + x[7];
    const T a1 = x[1] + x[6];
    const T a2 = x[2] + x[5];
    const T a3 = x[3] + x[4];
    const T a4 = x[3] - x[4];
    const T a5 = x[2] - x[5];
    const T a6 = x[1] - x[6];
    const T a7 = x[0] - x[7];

    // even half
    const T b0 = a0 + a3;
    const T b1 = a1 + a2;
    const T b2 = a1 - a2;
    const T b3 = a0 - a3;
    const T x0 = kChenR8 * (b0 + b1);
    const T x4 = kChenR8 * (b0 - b1);
    const T x2 = kChenC2 * b3 + kChenS2 * b2;
    const T x6 = kChenS2 * b3 - kChenC2 * b2;

    // odd half: pi/4 rotator, then two output rotations
    const T m5 = kChenR2 * (a6 - a5);
    const T m6 = kChenR2 * (a6 + a5);
    const T c4 = a4 + m5;
    const T c5 = a4 - m5;
    const T c6 = a7 - m6;
    const T c7 = a7 + m6;
    const T x1 = kChenC1 * c7 + kChenS1 * c4;
    const T x3 = kChenC3 * c6 - kChenS3 * c5;
    const T x5 = kChenS3 * c6 + kChenC3 * c5;
    const T x7 = kChenS1 * c7 - kChenC1 * c4;

    return {x0, x1, x2, x3, x4, x5, x6, x7};
}

// Plain matrix-vector product of spec.matrix, no scaling. {-1,0,1} entries
// become adds/subtracts, so integer kernels are exact over integer input;
// any other entry costs one multiplication per term.
template <typename T>
std::array<T, 8> direct_form(const TransformSpec& spec, const std::array<T, 8>& x) {
    std::array<T, 8> out{};
    for (int i = 0; i < spec.rows; ++i) {
        T acc{};
        bool seeded = false;
        for (int j = 0; j < kBlockSize; ++j) {
            const double m = spec.matrix[i][j];
            if (m == 0.0) continue;
            if (!seeded) {
                acc = (m == 1.0) ? x[j] : (m == -1.0) ? -x[j] : x[j] * m;
                seeded = true;
            } else if (m == 1.0) {
                acc = acc + x[j];
            } else if (m == -1.0) {
                acc = acc - x[j];
            } else {
                acc = acc + x[j] * m;
            }
        }
        if (seeded) out[i] = acc;
    }
    return out;
}

// One 1-D forward pass as the 2-D engine sees it: the kernel's fast
// schedule when present, direct form otherwise. Only the first spec.rows
// outputs are meaningful.
template <typename T>
std::array<T, 8> apply_1d(const TransformSpec& spec, const std::array<T, 8>& x) {
    switch (spec.schedule) {
        case Schedule::kPruned10: {
            const auto r = pruned_schedule(x);
            return {r[0], r[1], r[2], r[3], T{}, T{}, T{}, T{}};
        }
        case Schedule::kModifiedRdct14:
            return modified_rdct_schedule(x);
        case Schedule::kChen:
            return chen_schedule(x);
        case Schedule::kNone:
            break;
    }
    return direct_form(spec, x);
}

// ---------------------------------------------------------------------------
// Kernel builders and registry.

TransformSpec build_pruned();         // 4x8 low-frequency kernel, "pruned"
TransformSpec build_modified_rdct();  // full 8x8 parent, "modified-rdct"
TransformSpec build_exact_dct();      // orthonormal DCT-II, "dct"
TransformSpec build_sdct();           // sign of the DCT matrix, "sdct"
TransformSpec build_rdct();           // round of 2x the DCT matrix, "rdct"

const TransformSpec& transform_by_name(std::string_view name);
std::vector<std::string> transform_names();

// 1-D costs of the fast schedules
inline constexpr OpCount kPrunedOps1D{0, 10, 0};
inline constexpr OpCount kModifiedRdctOps1D{0, 14, 0};
inline constexpr OpCount kChenOps1D{16, 26, 0};

// closed-form cost of direct_form / apply_1d for this kernel
OpCount direct_ops_1d(const TransformSpec& spec);
OpCount ops_1d(const TransformSpec& spec);

// Forward transforms with their exact operation tallies.
std::pair<Vec4, OpCount> fast_forward_pruned(const Vec8& x);
std::pair<Vec8, OpCount> fast_forward_modified_rdct(const Vec8& x);
std::pair<Vec8, OpCount> fast_forward_exact(const Vec8& x);

// Oracle route for the fast schedules; tail entries beyond spec.rows are 0.
Vec8 direct_apply(const TransformSpec& spec, const Vec8& x);

}  // namespace pdct

#endif  // PDCT_KERNELS_HPP
