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

#ifndef PDCT_OPBENCH_HPP
#define PDCT_OPBENCH_HPP

#include <string>
#include <string_view>
#include <vector>

#include "pdct/opcount.hpp"

namespace pdct {

enum class Dim { k1D, k2D };

enum class CountSource {
    kMeasured,    // instrumented run of an in-repo fast schedule
    kDirectForm,  // counted off the matrix entries
    kReference,   // published count for an out-of-scope fast algorithm
};

const char* to_string(Dim d);
const char* to_string(CountSource s);

struct ComplexityRow {
    std::string method;
    Dim dim = Dim::k1D;
    bool pruned = false;
    OpCount ops;
    CountSource source = CountSource::kMeasured;
};

// Instrumented run when a fast schedule covers (transform, pruned),
// direct-form fallback otherwise.
ComplexityRow measure(std::string_view transform, Dim dim, bool pruned);

// Full complexity table: measured rows for the in-repo schedules, the DCT
// definition counted off its matrix, reference constants for the rest.
std::vector<ComplexityRow> complexity_table();

struct SavingsRow {
    std::string method;  // competitor, nonpruned fast algorithm
    Dim dim = Dim::k1D;
    long long competitor_ops = 0;  // mult + add + shift
    long long proposed_ops = 0;    // pruned totals: 10 (1-D), 120 (2-D)
    double savings_pct = 0.0;
};

std::vector<SavingsRow> savings_report();

std::string complexity_csv(const std::vector<ComplexityRow>& rows);
std::string savings_csv(const std::vector<SavingsRow>& rows);

}  // namespace pdct

#endif  // PDCT_OPBENCH_HPP
