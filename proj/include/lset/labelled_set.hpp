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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "lset/bitstring.hpp"
#include "lset/error.hpp"

namespace lset {

// A point of the universe together with its membership label. A view over
// the set's storage, never the storage format itself: labels must remain
// strippable for function application.
struct LabelledPoint {
    BitString point;
    bool label;
};

// The width-n universe with one membership label bit per point.
//
// Two backends:
//  - explicit bitmap: 2^n label bits, addressed by the numeric value of the
//    point read as a binary numeral (position 0 most significant), so lex
//    order equals index order and enumeration is a linear scan;
//  - predicate oracle: a host-supplied total membership decision procedure,
//    for widths where 2^n labels are infeasible. The predicate must be safe
//    for concurrent evaluation.
//
// Immutable after build; safe to share across concurrent query workers.
class LabelledSet {
public:
    using Predicate = std::function<bool(const BitString&)>;

    // Widest bitmap built by default (2^24 = 16 Mi labels).
    static constexpr size_t kDefaultBitmapCap = 24;

    // Bitmap backend labelling exactly the listed members with 1.
    // Duplicates are tolerated (set semantics). Throws WidthError naming the
    // offending entry on a width mismatch, and Error when width exceeds the
    // bitmap cap (use the oracle backend instead).
    static LabelledSet build_from_members(size_t width,
                                          std::span<const BitString> members,
                                          size_t bitmap_cap = kDefaultBitmapCap);

    // Bitmap backend from an explicit truth table of 2^width labels,
    // labels[i] belonging to the point with index i.
    static LabelledSet from_truth_table(size_t width,
                                        const std::vector<bool>& labels);

    // Oracle backend.
    static LabelledSet from_predicate(size_t width, Predicate pred);

    // Bitmap backend materialized by evaluating a predicate on every point.
    static LabelledSet bitmap_from_predicate(size_t width, const Predicate& pred,
                                             size_t bitmap_cap = kDefaultBitmapCap);

    size_t width() const { return width_; }
    bool is_bitmap() const { return !oracle_; }

    // Membership label of x: 1 iff x is in the set.
    bool label_of(const BitString& x) const;

    LabelledPoint at(const BitString& x) const { return {x, label_of(x)}; }

    // Bitmap fast path, addressed by point index.
    bool label_at_index(uint64_t index) const {
        return (bits_[index >> 3] >> (index & 7)) & 1u;
    }

    uint64_t universe_size() const;   // bitmap backend only
    uint64_t member_count() const;    // bitmap backend only

    // Pointwise union: 1 absorbs 0. Both operands must be bitmap backend
    // with equal widths.
    friend LabelledSet labelled_union(const LabelledSet& a, const LabelledSet& b);

    // Labels exactly the image of the member set under f: strips the
    // labels, applies f to each member, and labels the results. f must be
    // total on width-n strings and return width-n strings. Bitmap only.
    LabelledSet map_function(const std::function<BitString(const BitString&)>& f) const;

    // Labels flipped pointwise. Bitmap only.
    LabelledSet complement() const;

    // Serialized form (bit-exact): magic "LSET1", width as one unsigned
    // byte, backend tag 0x01, then ceil(2^n/8) label bytes with index 0 in
    // the least significant bit of the first byte. Oracle backends are not
    // serializable.
    void save(std::ostream& os) const;
    static LabelledSet load(std::istream& is);

    // Bitmap backends only.
    bool operator==(const LabelledSet& other) const;

private:
    LabelledSet(size_t width, std::vector<uint8_t> bits, uint64_t member_count)
        : width_(width), bits_(std::move(bits)), member_count_(member_count) {}
    LabelledSet(size_t width, Predicate pred)
        : width_(width), oracle_(std::move(pred)) {}

    void require_bitmap(const char* op) const;
    void check_width(const BitString& x) const;

    size_t width_ = 0;
    std::vector<uint8_t> bits_;    // bitmap backend: bit i at bits_[i/8], bit i%8
    uint64_t member_count_ = 0;    // bitmap backend: number of 1 labels
    Predicate oracle_;             // oracle backend when non-empty
};

LabelledSet labelled_union(const LabelledSet& a, const LabelledSet& b);

// One bitstring per line; blank lines and lines starting with '#' are
// ignored; all entries must share one width. Returned width is empty when
// the file lists no members. ParseError positions are 1-based line numbers.
struct MembersFile {
    std::optional<size_t> width;
    std::vector<BitString> members;
};

MembersFile read_members(std::istream& is);

}  // namespace lset
