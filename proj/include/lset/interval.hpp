// Copyright 2026 The lset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "lset/bitstring.hpp"
#include "lset/error.hpp"

namespace lset {

// Prefix-aligned (dyadic) subinterval of the width-n universe: the set of
// all width-n strings extending a committed prefix of length k <= n. Its
// member count is 2^(n-k). Immutable value type.
class DyadicInterval {
public:
    DyadicInterval(size_t width, BitString prefix)
        : width_(width), prefix_(std::move(prefix)) {
        if (prefix_.width() > width_) {
            throw Error("prefix length " + std::to_string(prefix_.width()) +
                        " exceeds interval width " + std::to_string(width_));
        }
    }

    // The whole universe: empty prefix, all 2^n strings.
    static DyadicInterval full(size_t width) {
        return DyadicInterval(width, BitString());
    }

    size_t width() const { return width_; }
    const BitString& prefix() const { return prefix_; }

    bool is_singleton() const { return prefix_.width() == width_; }

    // log2 of the member count, i.e. the number of uncommitted bits.
    size_t log2_size() const { return width_ - prefix_.width(); }

    uint64_t size() const {
        if (log2_size() > 63) {
            throw Error("interval size exceeds 2^63; use log2_size");
        }
        return uint64_t{1} << log2_size();
    }

    // Halves the interval: left extends the prefix by 0, right by 1. The
    // halves are disjoint and their union is this interval. Splitting a
    // singleton is an error: the search must stop and read the label.
    std::pair<DyadicInterval, DyadicInterval> split() const {
        if (is_singleton()) {
            throw Error("cannot split singleton interval " + to_string());
        }
        return {DyadicInterval(width_, prefix_.appended(false)),
                DyadicInterval(width_, prefix_.appended(true))};
    }

    bool contains(const BitString& x) const {
        if (x.width() != width_) {
            throw WidthError("contains: member width " +
                             std::to_string(x.width()) +
                             " vs interval width " + std::to_string(width_));
        }
        return x.has_prefix(prefix_);
    }

    // (glb, lub): the prefix padded with 0s and with 1s. Every member m
    // satisfies glb <= m <= lub under lex_cmp.
    std::pair<BitString, BitString> bounds() const {
        return {prefix_.extended(width_, false), prefix_.extended(width_, true)};
    }

    // Textual form used in traces, e.g. "3:01".
    std::string to_string() const {
        return std::to_string(width_) + ":" + prefix_.to_string();
    }

    bool operator==(const DyadicInterval& other) const {
        return width_ == other.width_ && prefix_ == other.prefix_;
    }

private:
    size_t width_;
    BitString prefix_;
};

}  // namespace lset
