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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lset/error.hpp"

namespace lset {

// Fixed-width binary sequence. Position 0 is the first (leftmost) bit, the
// first branching choice from the root of the prefix tree. Values are
// immutable after construction and safe to share across threads.
//
// Storage is packed: bit p lives in word p/64 at bit 63 - p%64, so whole
// words compare in lexicographic order and the first differing position
// falls out of a count-leading-zeros.
class BitString {
public:
    // Empty string (width 0).
    BitString() = default;

    // All-zero string of the given width.
    explicit BitString(size_t width)
        : width_(width), words_((width + 63) / 64, 0) {}

    // Parses a string of '0'/'1' characters; any other character is a
    // ParseError carrying its position.
    static BitString parse(std::string_view text);

    // The width-n string whose bits spell `index` as a binary numeral,
    // position 0 most significant. Requires width <= 64 and index < 2^width.
    static BitString from_index(size_t width, uint64_t index);

    size_t width() const { return width_; }

    bool bit(size_t pos) const {
        return (words_[pos >> 6] >> (63 - (pos & 63))) & 1u;
    }

    // Copy with one bit replaced.
    BitString with_bit(size_t pos, bool value) const;

    // Copy extended to new_width, new positions holding `fill`.
    BitString extended(size_t new_width, bool fill) const;

    // Copy with one bit appended at the end.
    BitString appended(bool value) const { return extended(width_ + 1, value); }

    // True iff the first p.width() bits equal p.
    bool has_prefix(const BitString& p) const;

    // Numeric value of the bits read as a binary numeral (position 0 most
    // significant). Requires width <= 64.
    uint64_t to_index() const;

    std::string to_string() const;

    bool operator==(const BitString& other) const {
        return width_ == other.width_ && words_ == other.words_;
    }

private:
    void set_bit(size_t pos, bool value);

    size_t width_ = 0;
    std::vector<uint64_t> words_;

    friend std::strong_ordering lex_cmp(const BitString&, const BitString&);
    friend std::optional<size_t> first_diff(const BitString&, const BitString&);
    friend BitString ultra_distance(const BitString&, const BitString&);
};

// Lexicographic order on equal-width strings: decided by the bit at the
// first differing position, 0 < 1. Throws WidthError on mismatched widths.
std::strong_ordering lex_cmp(const BitString& a, const BitString& b);

// Least position where a and b differ, or nullopt when a == b.
std::optional<size_t> first_diff(const BitString& a, const BitString& b);

// Distance valued in bitstrings: all-zero when a == b, otherwise one-hot at
// first_diff(a, b). Distances are compared with lex_cmp, never as numbers;
// an earlier divergence yields a lexicographically larger distance.
BitString ultra_distance(const BitString& a, const BitString& b);

}  // namespace lset
