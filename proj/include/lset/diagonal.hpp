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
#include <vector>

#include "lset/bitstring.hpp"
#include "lset/labelled_set.hpp"

namespace lset {

// A width-n coding of predicates: a total map from width-n codes to
// predicates over width-n strings. Predicates are held extensionally as
// labelled sets (a predicate over width-n strings and a labelled set are the
// same object). No such coding can reach every predicate: the diagonal
// predicate below escapes it, witnessed at the code itself.
class PredicateCoding {
public:
    // 2^(2w) bits of table storage; 14 keeps that at 32 MiB.
    static constexpr size_t kMaxWidth = 14;

    // predicates[i] is the predicate decoded from the code with index i;
    // exactly 2^width entries of width `width` are required.
    PredicateCoding(size_t width, std::vector<LabelledSet> predicates);

    // decode(code) = the predicate whose truth table value is the code's
    // index.
    static PredicateCoding canonical(size_t width);

    // Uniformly random truth table per code, from a seeded generator.
    static PredicateCoding randomized(size_t width, uint64_t seed);

    size_t width() const { return width_; }

    const LabelledSet& decode(const BitString& code) const;
    const LabelledSet& decode_at(uint64_t code_index) const {
        return predicates_[code_index];
    }

private:
    size_t width_;
    std::vector<LabelledSet> predicates_;
};

// The predicate mapping each code y to 1 - decode(y)(y). It disagrees with
// decode(y) at y for every code y, so it lies outside the coding's image.
LabelledSet diagonal_predicate(const PredicateCoding& coding);

// Per-code disagreement record; point is always the code itself and the two
// evaluations there always differ.
struct CodingWitness {
    BitString code;
    BitString point;
    bool decode_value;      // decode(code)(point)
    bool diagonal_value;    // diagonal(point)
};

// One witness per code, 2^n entries.
std::vector<CodingWitness> verify_antisurjection(const PredicateCoding& coding);

}  // namespace lset
