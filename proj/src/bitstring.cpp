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

#include "lset/bitstring.hpp"

#include <bit>
#include <cassert>

namespace lset {

namespace {

void check_same_width(const BitString& a, const BitString& b) {
    if (a.width() != b.width()) {
        throw WidthError("width mismatch: " + std::to_string(a.width()) +
                         " vs " + std::to_string(b.width()));
    }
}

}  // namespace

BitString BitString::parse(std::string_view text) {
    BitString out(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') {
            out.set_bit(i, true);
        } else if (text[i] != '0') {
            throw ParseError("invalid character '" + std::string(1, text[i]) +
                                 "' at position " + std::to_string(i),
                             i);
        }
    }
    return out;
}

BitString BitString::from_index(size_t width, uint64_t index) {
    if (width > 64) {
        throw Error("from_index requires width <= 64, got " +
                    std::to_string(width));
    }
    if (width < 64 && (index >> width) != 0) {
        throw Error("index " + std::to_string(index) +
                    " out of range for width " + std::to_string(width));
    }
    BitString out(width);
    if (width > 0) out.words_[0] = index << (64 - width);
    return out;
}

void BitString::set_bit(size_t pos, bool value) {
    assert(pos < width_);
    uint64_t mask = uint64_t{1} << (63 - (pos & 63));
    if (value) {
        words_[pos >> 6] |= mask;
    } else {
        words_[pos >> 6] &= ~mask;
    }
}

BitString BitString::with_bit(size_t pos, bool value) const {
    if (pos >= width_) {
        throw Error("bit position " + std::to_string(pos) +
                    " out of range for width " + std::to_string(width_));
    }
    BitString out = *this;
    out.set_bit(pos, value);
    return out;
}

BitString BitString::extended(size_t new_width, bool fill) const {
    if (new_width < width_) {
        throw Error("extended cannot shrink width " + std::to_string(width_) +
                    " to " + std::to_string(new_width));
    }
    BitString out(new_width);
    for (size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w];
    if (fill) {
        for (size_t p = width_; p < new_width; ++p) out.set_bit(p, true);
    }
    return out;
}

bool BitString::has_prefix(const BitString& p) const {
    if (p.width_ > width_) return false;
    size_t full = p.width_ / 64;
    for (size_t w = 0; w < full; ++w) {
        if (words_[w] != p.words_[w]) return false;
    }
    size_t rem = p.width_ % 64;
    if (rem) {
        uint64_t mask = ~uint64_t{0} << (64 - rem);
        if ((words_[full] & mask) != (p.words_[full] & mask)) return false;
    }
    return true;
}

uint64_t BitString::to_index() const {
    if (width_ > 64) {
        throw Error("to_index requires width <= 64, got " +
                    std::to_string(width_));
    }
    if (width_ == 0) return 0;
    return words_[0] >> (64 - width_);
}

std::string BitString::to_string() const {
    std::string s(width_, '0');
    for (size_t i = 0; i < width_; ++i) {
        if (bit(i)) s[i] = '1';
    }
    return s;
}

std::strong_ordering lex_cmp(const BitString& a, const BitString& b) {
    check_same_width(a, b);
    for (size_t w = 0; w < a.words_.size(); ++w) {
        if (a.words_[w] != b.words_[w]) {
            return a.words_[w] < b.words_[w] ? std::strong_ordering::less
                                             : std::strong_ordering::greater;
        }
    }
    return std::strong_ordering::equal;
}

std::optional<size_t> first_diff(const BitString& a, const BitString& b) {
    check_same_width(a, b);
    for (size_t w = 0; w < a.words_.size(); ++w) {
        uint64_t x = a.words_[w] ^ b.words_[w];
        if (x) return w * 64 + static_cast<size_t>(std::countl_zero(x));
    }
    return std::nullopt;
}

BitString ultra_distance(const BitString& a, const BitString& b) {
    auto pos = first_diff(a, b);
    BitString d(a.width());
    if (pos) d.set_bit(*pos, true);
    return d;
}

}  // namespace lset
