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

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pdct/opcount.hpp"

using namespace pdct;

namespace {

// independent integer oracle: plain row-by-row dot products
std::array<long long, 8> int_matvec(const TransformSpec& spec, const std::array<long long, 8>& x) {
    std::array<long long, 8> y{};
    for (int i = 0; i < spec.rows; ++i) {
        long long acc = 0;
        for (int j = 0; j < kBlockSize; ++j)
            acc += static_cast<long long>(spec.matrix[i][j]) * x[j];
        y[i] = acc;
    }
    return y;
}

}  // namespace

TEST_CASE("registry holds the five kernels and rejects strangers") {
    const auto names = transform_names();
    for (const char* n : {"pruned", "modified-rdct", "dct", "sdct", "rdct"})
        CHECK(std::find(names.begin(), names.end(), n) != names.end());
    CHECK_THROWS_AS((void)transform_by_name("dst"), std::invalid_argument);
}

TEST_CASE("pruned kernel rows and scaling") {
    const auto& t = transform_by_name("pruned");
    REQUIRE(t.rows == 4);
    const double expect[4][8] = {
        {1, 1, 1, 1, 1, 1, 1, 1},
        {1, 0, 0, 0, 0, 0, 0, -1},
        {1, 0, 0, -1, -1, 0, 0, 1},
        {0, 0, -1, 0, 0, 1, 0, 0},
    };
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j) CHECK(t.matrix[i][j] == expect[i][j]);
    CHECK(t.scaling[0] == doctest::Approx(1.0 / std::sqrt(8.0)).epsilon(1e-15));
    CHECK(t.scaling[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(t.scaling[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(t.scaling[3] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(t.integer_entries);
    CHECK(t.inverse_kind == InverseKind::kTransposeOrthonormal);
}

TEST_CASE("modified rdct rows are mutually orthogonal with the expected norms") {
    const auto& t = transform_by_name("modified-rdct");
    REQUIRE(t.rows == 8);
    const double norms[8] = {8, 2, 4, 2, 8, 2, 4, 2};
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            double dot = 0;
            for (int j = 0; j < 8; ++j) dot += t.matrix[i][j] * t.matrix[k][j];
            CHECK(dot == (i == k ? norms[i] : 0.0));
        }
    // first four rows are the pruned kernel
    const auto& p = transform_by_name("pruned");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 8; ++j) CHECK(t.matrix[i][j] == p.matrix[i][j]);
}

TEST_CASE("fast schedules match plain dot products bit-exactly on integers") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<int> pix(-255, 255);
    const auto& pruned = transform_by_name("pruned");
    const auto& full = transform_by_name("modified-rdct");
    for (int iter = 0; iter < 2000; ++iter) {
        std::array<long long, 8> x{};
        for (auto& v : x) v = pix(rng);
        const auto want_p = int_matvec(pruned, x);
        const auto got_p = pruned_schedule(x);
        for (int i = 0; i < 4; ++i) CHECK(got_p[i] == want_p[i]);
        const auto want_f = int_matvec(full, x);
        const auto got_f = modified_rdct_schedule(x);
        for (int i = 0; i < 8; ++i) CHECK(got_f[i] == want_f[i]);
    }
}

TEST_CASE("known coefficient vectors") {
    const Vec8 ramp = {1, 2, 3, 4, 5, 6, 7, 8};
    const auto [p, pops] = fast_forward_pruned(ramp);
    CHECK(p == Vec4{36, -7, 0, 3});
    CHECK(pops == OpCount{0, 10, 0});
    const auto [f, fops] = fast_forward_modified_rdct(ramp);
    CHECK(f == Vec8{36, -7, 0, 3, 0, 5, 0, 1});
    CHECK(fops == OpCount{0, 14, 0});

    const Vec8 ones = {1, 1, 1, 1, 1, 1, 1, 1};
    CHECK(fast_forward_pruned(ones).first == Vec4{8, 0, 0, 0});
}

TEST_CASE("exact dct matrix is orthonormal and the fast factorization reproduces it") {
    const auto& dct = transform_by_name("dct");
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            double dot = 0;
            for (int j = 0; j < 8; ++j) dot += dct.matrix[i][j] * dct.matrix[k][j];
            CHECK(dot == doctest::Approx(i == k ? 1.0 : 0.0).epsilon(1e-12));
        }
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> val(-255.0, 255.0);
    for (int iter = 0; iter < 500; ++iter) {
        Vec8 x{};
        for (auto& v : x) v = val(rng);
        const auto fast = chen_schedule(x);
        const auto direct = direct_form(dct, x);
        for (int i = 0; i < 8; ++i) CHECK(fast[i] == doctest::Approx(direct[i]).epsilon(1e-12));
    }
}

TEST_CASE("instrumented schedule costs") {
    auto run = [](auto&& schedule) {
        OpCount tally;
        std::array<Counted, 8> x;
        for (int i = 0; i < 8; ++i) x[i] = Counted(i * 3 - 7, &tally);
        schedule(x);
        return tally;
    };
    CHECK(run([](const auto& x) { return pruned_schedule(x); }) == OpCount{0, 10, 0});
    CHECK(run([](const auto& x) { return modified_rdct_schedule(x); }) == OpCount{0, 14, 0});
    CHECK(run([](const auto& x) { return chen_schedule(x); }) == OpCount{16, 26, 0});
    CHECK(kPrunedOps1D == OpCount{0, 10, 0});
    CHECK(kModifiedRdctOps1D == OpCount{0, 14, 0});
    CHECK(kChenOps1D == OpCount{16, 26, 0});
}

TEST_CASE("direct-form cost comes from the matrix sparsity") {
    CHECK(direct_ops_1d(transform_by_name("dct")) == OpCount{64, 56, 0});
    CHECK(direct_ops_1d(transform_by_name("sdct")) == OpCount{0, 56, 0});
    CHECK(direct_ops_1d(transform_by_name("pruned")) == OpCount{0, 12, 0});
    CHECK(direct_ops_1d(transform_by_name("modified-rdct")) == OpCount{0, 24, 0});
}

TEST_CASE("sdct is the sign matrix of the dct and carries a true pseudo-inverse") {
    const auto& sdct = transform_by_name("sdct");
    const auto& dct = transform_by_name("dct");
    CHECK(sdct.inverse_kind == InverseKind::kPseudoInverse);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            CHECK(std::abs(sdct.matrix[i][j]) == 1.0);
            CHECK(sdct.matrix[i][j] * dct.matrix[i][j] > 0.0);
        }
    // left_inverse * (D * S) == I
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            double dot = 0;
            for (int j = 0; j < 8; ++j)
                dot += sdct.left_inverse[i][j] * sdct.scaling[j] * sdct.matrix[j][k];
            CHECK(dot == doctest::Approx(i == k ? 1.0 : 0.0).epsilon(1e-12));
        }
}

TEST_CASE("rdct entries are 0/+-1 with the expected row norms") {
    const auto& rdct = transform_by_name("rdct");
    const double norms[8] = {8, 6, 4, 6, 8, 6, 4, 6};
    for (int i = 0; i < 8; ++i) {
        double norm = 0;
        for (int j = 0; j < 8; ++j) {
            CHECK((rdct.matrix[i][j] == 0.0 || std::abs(rdct.matrix[i][j]) == 1.0));
            norm += rdct.matrix[i][j] * rdct.matrix[i][j];
        }
        CHECK(norm == norms[i]);
    }
}

TEST_CASE("diagonal scaling keeps signs, zeros, and the scaled route exact") {
    const auto& t = transform_by_name("pruned");
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> pix(-255, 255);
    for (int iter = 0; iter < 500; ++iter) {
        Vec8 x{};
        for (auto& v : x) v = pix(rng);
        const auto y = fast_forward_pruned(x).first;
        std::array<double, 4> scaled{};
        std::array<double, 4> route{};  // (D*T)x computed off the matrix
        for (int i = 0; i < 4; ++i) {
            scaled[i] = t.scaling[i] * y[i];
            double acc = 0;
            for (int j = 0; j < 8; ++j) acc += t.scaling[i] * t.matrix[i][j] * x[j];
            route[i] = acc;
            CHECK((scaled[i] == 0.0) == (y[i] == 0.0));
            if (y[i] != 0.0) CHECK(std::signbit(scaled[i]) == std::signbit(y[i]));
            CHECK(scaled[i] == doctest::Approx(route[i]).epsilon(1e-12));
        }
        auto mag = [](double a, double b) { return std::abs(a) < std::abs(b); };
        CHECK(std::max_element(scaled.begin(), scaled.end(), mag) - scaled.begin() ==
              std::max_element(route.begin(), route.end(), mag) - route.begin());
    }
}
