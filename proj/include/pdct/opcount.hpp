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

#ifndef PDCT_OPCOUNT_HPP
#define PDCT_OPCOUNT_HPP

namespace pdct {

// Arithmetic cost of one transform invocation. Subtraction counts as an
// addition; sign flips and multiplications by 0/+-1 are wiring, not ops.
struct OpCount {
    long long mult = 0;
    long long add = 0;
    long long shift = 0;

    constexpr long long total() const { return mult + add + shift; }

    constexpr OpCount& operator+=(const OpCount& o) {
        mult += o.mult;
        add += o.add;
        shift += o.shift;
        return *this;
    }
    friend constexpr OpCount operator+(OpCount a, const OpCount& b) { return a += b; }
    friend constexpr OpCount operator*(long long k, const OpCount& c) {
        return {k * c.mult, k * c.add, k * c.shift};
    }
    friend constexpr bool operator==(const OpCount&, const OpCount&) = default;
};

// Double-valued scalar that tallies every +, -, * into a caller-owned
// OpCount. The transform schedules are templates over the scalar type;
// running them on Counted yields the exact cost of the flow graph.
class Counted {
public:
    Counted() = default;
    Counted(double v, OpCount* tally) : v_(v), tally_(tally) {}

    double value() const { return v_; }

    friend Counted operator+(const Counted& a, const Counted& b) {
        OpCount* t = a.tally_ ? a.tally_ : b.tally_;
        if (t) ++t->add;
        return {a.v_ + b.v_, t};
    }
    friend Counted operator-(const Counted& a, const Counted& b) {
        OpCount* t = a.tally_ ? a.tally_ : b.tally_;
        if (t) ++t->add;
        return {a.v_ - b.v_, t};
    }
    friend Counted operator*(double c, const Counted& a) {
        if (a.tally_) ++a.tally_->mult;
        return {c * a.v_, a.tally_};
    }
    friend Counted operator*(const Counted& a, double c) { return c * a; }

    // free: a dashed arrow in the flow graph, folded into the next adder
    Counted operator-() const { return {-v_, tally_}; }

private:
    double v_ = 0.0;
    OpCount* tally_ = nullptr;
};

}  // namespace pdct

#endif  // PDCT_OPCOUNT_HPP
