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

#include "lset/diagonal.hpp"

#include <random>
#include <string>

namespace lset {

namespace {

void check_coding_width(size_t width) {
    if (width > PredicateCoding::kMaxWidth) {
        throw Error("coding width " + std::to_string(width) + " exceeds " +
                    std::to_string(PredicateCoding::kMaxWidth));
    }
}

}  // namespace

PredicateCoding::PredicateCoding(size_t width,
                                 std::vector<LabelledSet> predicates)
    : width_(width), predicates_(std::move(predicates)) {
    check_coding_width(width);
    uint64_t codes = uint64_t{1} << width_;
    if (predicates_.size() != codes) {
        throw Error("coding needs " + std::to_string(codes) +
                    " predicates, got " + std::to_string(predicates_.size()));
    }
    for (const LabelledSet& p : predicates_) {
        if (p.width() != width_ || !p.is_bitmap()) {
            throw Error("coding predicates must be width-" +
                        std::to_string(width_) + " bitmaps");
        }
    }
}

PredicateCoding PredicateCoding::canonical(size_t width) {
    check_coding_width(width);
    uint64_t codes = uint64_t{1} << width;
    std::vector<LabelledSet> table;
    table.reserve(codes);
    for (uint64_t i = 0; i < codes; ++i) {
        std::vector<bool> labels(codes);
        for (uint64_t j = 0; j < codes && j < 64; ++j) {
            labels[j] = (i >> j) & 1u;
        }
        table.push_back(LabelledSet::from_truth_table(width, labels));
    }
    return PredicateCoding(width, std::move(table));
}

PredicateCoding PredicateCoding::randomized(size_t width, uint64_t seed) {
    check_coding_width(width);
    std::mt19937_64 rng(seed);
    uint64_t codes = uint64_t{1} << width;
    std::vector<LabelledSet> table;
    table.reserve(codes);
    for (uint64_t i = 0; i < codes; ++i) {
        std::vector<bool> labels(codes);
        for (uint64_t j = 0; j < codes; ++j) labels[j] = rng() & 1u;
        table.push_back(LabelledSet::from_truth_table(width, labels));
    }
    return PredicateCoding(width, std::move(table));
}

const LabelledSet& PredicateCoding::decode(const BitString& code) const {
    if (code.width() != width_) {
        throw WidthError("code width " + std::to_string(code.width()) +
                         " vs coding width " + std::to_string(width_));
    }
    return predicates_[code.to_index()];
}

LabelledSet diagonal_predicate(const PredicateCoding& coding) {
    uint64_t codes = uint64_t{1} << coding.width();
    std::vector<bool> labels(codes);
    for (uint64_t y = 0; y < codes; ++y) {
        labels[y] = !coding.decode_at(y).label_at_index(y);
    }
    return LabelledSet::from_truth_table(coding.width(), labels);
}

std::vector<CodingWitness> verify_antisurjection(const PredicateCoding& coding) {
    LabelledSet diag = diagonal_predicate(coding);
    uint64_t codes = uint64_t{1} << coding.width();
    std::vector<CodingWitness> witnesses;
    witnesses.reserve(codes);
    for (uint64_t y = 0; y < codes; ++y) {
        BitString code = BitString::from_index(coding.width(), y);
        witnesses.push_back({code, code, coding.decode_at(y).label_at_index(y),
                             diag.label_at_index(y)});
    }
    return witnesses;
}

}  // namespace lset
