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

#include "pdct/opbench.hpp"

#include <array>
#include <iomanip>
#include <sstream>

#include "pdct/kernels.hpp"
#include "pdct/zonal.hpp"

namespace pdct {
namespace {

OpCount run_counted_1d(Schedule s) {
    OpCount tally;
    std::array<Counted, kBlockSize> x;
    for (int i = 0; i < kBlockSize; ++i) x[i] = Counted(i + 1, &tally);
    switch (s) {
        case Schedule::kPruned10:
            pruned_schedule(x);
            break;
        case Schedule::kModifiedRdct14:
            modified_rdct_schedule(x);
            break;
        case Schedule::kChen:
            chen_schedule(x);
            break;
        case Schedule::kNone:
            break;
    }
    return tally;
}

OpCount run_counted_2d(const TransformSpec& spec) {
    OpCount tally;
    std::array<std::array<Counted, kBlockSize>, kBlockSize> a;
    for (int i = 0; i < kBlockSize; ++i)
        for (int j = 0; j < kBlockSize; ++j) a[i][j] = Counted(i * kBlockSize + j + 1, &tally);
    forward_2d_core(spec, a);
    return tally;
}

ComplexityRow direct_row(std::string method, const TransformSpec& base, Dim dim, bool pruned) {
    TransformSpec direct = base;
    direct.schedule = Schedule::kNone;
    if (pruned) direct.rows = kLowBand;
    const OpCount one = direct_ops_1d(direct);
    const OpCount ops = dim == Dim::k1D ? one : (kBlockSize + direct.rows) * one;
    return {std::move(method), dim, pruned, ops, CountSource::kDirectForm};
}

}  // namespace

const char* to_string(Dim d) { return d == Dim::k1D ? "1D" : "2D"; }

const char* to_string(CountSource s) {
    switch (s) {
        case CountSource::kMeasured:
            return "measured";
        case CountSource::kDirectForm:
            return "direct-form";
        case CountSource::kReference:
            return "reference";
    }
    return "?";
}

ComplexityRow measure(std::string_view transform, Dim dim, bool pruned) {
    const TransformSpec& named = transform_by_name(transform);
    const bool want_pruned = pruned || named.rows == kLowBand;

    // which in-repo schedule, if any, covers the request
    const TransformSpec* fast = nullptr;
    if (named.schedule == Schedule::kPruned10 && want_pruned) {
        fast = &named;
    } else if (named.schedule == Schedule::kModifiedRdct14) {
        // rows 0..3 of the full kernel are the pruned kernel
        fast = want_pruned ? &transform_by_name("pruned") : &named;
    } else if (named.schedule == Schedule::kChen && !want_pruned) {
        fast = &named;
    }

    if (fast) {
        const OpCount ops = dim == Dim::k1D ? run_counted_1d(fast->schedule) : run_counted_2d(*fast);
        return {std::string(named.name), dim, want_pruned, ops, CountSource::kMeasured};
    }
    return direct_row(std::string(named.name), named, dim, want_pruned);
}

std::vector<ComplexityRow> complexity_table() {
    std::vector<ComplexityRow> rows;
    const std::array<std::pair<Dim, bool>, 4> combos = {
        {{Dim::k1D, false}, {Dim::k1D, true}, {Dim::k2D, false}, {Dim::k2D, true}}};

    const TransformSpec& dct = transform_by_name("dct");
    for (const auto& [dim, pruned] : combos)
        rows.push_back(direct_row("dct-definition", dct, dim, pruned));

    for (const auto& [dim, pruned] : combos) {
        if (!pruned) {
            auto row = measure("dct", dim, false);
            row.method = "chen";
            rows.push_back(std::move(row));
        } else {
            // published pruned Chen counts; no pruned factorization in-repo
            rows.push_back({"chen", dim, true,
                            dim == Dim::k1D ? OpCount{6, 12, 0} : OpCount{72, 144, 0},
                            CountSource::kReference});
        }
    }

    struct Ref {
        const char* method;
        OpCount ops[4];  // 1-D full, 1-D pruned, 2-D full, 2-D pruned
    };
    const Ref refs[] = {
        {"sdct", {{0, 24, 0}, {0, 20, 0}, {0, 384, 0}, {0, 240, 0}}},
        {"bas-2008", {{0, 18, 2}, {0, 14, 1}, {0, 288, 32}, {0, 168, 12}}},
        {"bas-2009", {{0, 18, 0}, {0, 14, 0}, {0, 288, 0}, {0, 168, 0}}},
        {"bas-2013", {{0, 24, 0}, {0, 20, 0}, {0, 384, 0}, {0, 240, 0}}},
        {"rdct", {{0, 22, 0}, {0, 16, 0}, {0, 352, 0}, {0, 192, 0}}},
    };
    for (const auto& r : refs)
        for (int c = 0; c < 4; ++c)
            rows.push_back({r.method, combos[c].first, combos[c].second, r.ops[c],
                            CountSource::kReference});

    for (const auto& [dim, pruned] : combos) rows.push_back(measure("modified-rdct", dim, pruned));
    return rows;
}

std::vector<SavingsRow> savings_report() {
    const long long proposed_1d = measure("modified-rdct", Dim::k1D, true).ops.total();
    const long long proposed_2d = measure("modified-rdct", Dim::k2D, true).ops.total();

    // nonpruned competitor totals from the complexity table, plus the
    // proposed transform against itself
    struct Competitor {
        const char* method;
        long long ops_1d;
        long long ops_2d;
    };
    const Competitor comp[] = {
        {"sdct", 24, 384},          {"bas-2013", 24, 384}, {"rdct", 22, 352},
        {"bas-2008", 20, 320},      {"bas-2009", 18, 288}, {"modified-rdct", 14, 224},
        {"pruned", proposed_1d, proposed_2d},
    };
    std::vector<SavingsRow> rows;
    for (const auto& c : comp) {
        rows.push_back({c.method, Dim::k1D, c.ops_1d, proposed_1d,
                        100.0 * static_cast<double>(c.ops_1d - proposed_1d) /
                            static_cast<double>(c.ops_1d)});
        rows.push_back({c.method, Dim::k2D, c.ops_2d, proposed_2d,
                        100.0 * static_cast<double>(c.ops_2d - proposed_2d) /
                            static_cast<double>(c.ops_2d)});
    }
    return rows;
}

std::string complexity_csv(const std::vector<ComplexityRow>& rows) {
    std::ostringstream os;
    os << "method,dim,pruned,mult,add,shift,source\n";
    for (const auto& r : rows)
        os << r.method << ',' << to_string(r.dim) << ',' << (r.pruned ? "true" : "false") << ','
           << r.ops.mult << ',' << r.ops.add << ',' << r.ops.shift << ',' << to_string(r.source)
           << '\n';
    return os.str();
}

std::string savings_csv(const std::vector<SavingsRow>& rows) {
    std::ostringstream os;
    os << "competitor,dim,competitor_ops,proposed_ops,savings_pct\n";
    os << std::fixed << std::setprecision(4);
    for (const auto& r : rows)
        os << r.method << ',' << to_string(r.dim) << ',' << r.competitor_ops << ','
           << r.proposed_ops << ',' << r.savings_pct << '\n';
    return os.str();
}

}  // namespace pdct
