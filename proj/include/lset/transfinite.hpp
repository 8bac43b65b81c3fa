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

#include <compare>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "lset/error.hpp"
#include "lset/ordinal.hpp"

namespace lset {

// A binary sequence of ordinal length with finite support: the positions in
// `support` hold 1, every other position below `length` holds 0. Finite
// support keeps comparison, first difference and compression total and
// exact. Immutable value type.
class TransfiniteBitString {
public:
    // The empty sequence.
    TransfiniteBitString() = default;

    // Support positions are sorted and deduplicated; each must be strictly
    // below length.
    TransfiniteBitString(OrdinalCNF length, std::vector<OrdinalCNF> support);

    const OrdinalCNF& length() const { return length_; }
    std::span<const OrdinalCNF> support() const { return support_; }

    bool bit_at(const OrdinalCNF& pos) const;

    bool operator==(const TransfiniteBitString&) const = default;

private:
    OrdinalCNF length_;
    std::vector<OrdinalCNF> support_;
};

// Sequence of length + 1 with the label written at the new final position.
TransfiniteBitString append_label(const TransfiniteBitString& s, bool label);

// Inverse of append_label: the sequence without its final position, plus the
// bit that was there. The length must be a successor ordinal.
std::pair<TransfiniteBitString, bool> strip_label(const TransfiniteBitString& s);

// Least position where a and b differ: the minimum of the symmetric
// difference of their supports. Lengths must agree.
std::optional<OrdinalCNF> t_first_diff(const TransfiniteBitString& a,
                                       const TransfiniteBitString& b);

// One-hot sequence at the first difference, or empty support when a == b.
TransfiniteBitString t_ultra_distance(const TransfiniteBitString& a,
                                      const TransfiniteBitString& b);

// Lexicographic order on equal-length sequences: decided by the bit at the
// first differing position.
std::strong_ordering t_lex_cmp(const TransfiniteBitString& a,
                               const TransfiniteBitString& b);

// Losslessly re-indexes a sequence of infinite length to length w through a
// fixed block-interleaving bijection; finite-length sequences are already
// cardinal-length and pass through unchanged. Support cardinality is
// preserved and decompress_sequence inverts exactly.
//
// The bijection: a length Sum w^e_i * c_i splits into B = Sum c_i blocks,
// block (i, j) covering [prefix_i + w^e_i * j, prefix_i + w^e_i * (j+1)).
// A position is (block b, remainder r) with r < w^e_i; the remainder's
// digits (its coefficient at each power below e_i, highest first) fold into
// one natural k with the Cantor pairing function, and the position maps to
// B*k + b. Exponents above 64 are rejected.
TransfiniteBitString compress_sequence(const TransfiniteBitString& s);

// Inverse of compress_sequence relative to the original length; requires
// compressed.length() == cardinal_of(original_length) and every support
// position in the image of the bijection.
TransfiniteBitString decompress_sequence(const TransfiniteBitString& compressed,
                                         const OrdinalCNF& original_length);

}  // namespace lset
