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

#include "lset/transfinite.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <string>

namespace lset {

namespace {

using u128 = unsigned __int128;

// Exponents above this would make remainder encoding loops unbounded in
// practice; the pairing fold overflows 64 bits long before this anyway.
constexpr uint64_t kMaxCompressExponent = 64;

uint64_t cantor_pair(uint64_t a, uint64_t b) {
    u128 s = u128(a) + b;
    u128 v = s * (s + 1) / 2 + b;
    if (v > std::numeric_limits<uint64_t>::max()) {
        throw Error("compressed position overflows 64 bits");
    }
    return uint64_t(v);
}

std::pair<uint64_t, uint64_t> cantor_unpair(uint64_t z) {
    uint64_t w = uint64_t((std::sqrt(8.0L * (long double)z + 1.0L) - 1.0L) / 2.0L);
    while (u128(w + 1) * (w + 2) / 2 <= z) ++w;
    while (u128(w) * (w + 1) / 2 > z) --w;
    uint64_t t = uint64_t(u128(w) * (w + 1) / 2);
    uint64_t b = z - t;
    return {w - b, b};
}

uint64_t total_blocks(const OrdinalCNF& length) {
    u128 blocks = 0;
    for (const auto& t : length.terms()) {
        if (t.exponent > kMaxCompressExponent) {
            throw Error("compression supports exponents up to " +
                        std::to_string(kMaxCompressExponent));
        }
        blocks += t.coefficient;
    }
    if (blocks == 0 || blocks > std::numeric_limits<uint64_t>::max()) {
        throw Error("invalid block count for compression");
    }
    return uint64_t(blocks);
}

// Digit coefficients of a remainder below w^E, highest power first, folded
// into one natural with the Cantor pairing.
uint64_t encode_remainder(std::span<const OrdinalCNF::Term> terms, uint64_t E) {
    if (E == 0) {
        assert(terms.empty());
        return 0;
    }
    auto digit = [&](uint64_t exponent) -> uint64_t {
        for (const auto& t : terms) {
            if (t.exponent == exponent) return t.coefficient;
        }
        return 0;
    };
    uint64_t code = digit(E - 1);
    for (uint64_t e = E - 1; e-- > 0;) code = cantor_pair(code, digit(e));
    return code;
}

std::vector<uint64_t> decode_remainder(uint64_t code, uint64_t E) {
    // digits[e] = coefficient of w^e
    std::vector<uint64_t> digits(E, 0);
    if (E == 0) {
        if (code != 0) throw Error("position not in the compression image");
        return digits;
    }
    for (uint64_t e = 0; e + 1 < E; ++e) {
        auto [rest, d] = cantor_unpair(code);
        digits[e] = d;
        code = rest;
    }
    digits[E - 1] = code;
    return digits;
}

struct PositionCode {
    uint64_t block;
    uint64_t code;
};

[[noreturn]] void position_out_of_range(const OrdinalCNF& pos,
                                        const OrdinalCNF& length) {
    throw Error("position " + pos.to_string() + " is not below length " +
                length.to_string());
}

PositionCode compress_position(const OrdinalCNF& length, const OrdinalCNF& pos) {
    uint64_t blocks_before = 0;
    auto pterms = pos.terms();
    size_t pi = 0;
    for (const auto& lt : length.terms()) {
        if (lt.exponent > kMaxCompressExponent) {
            throw Error("compression supports exponents up to " +
                        std::to_string(kMaxCompressExponent));
        }
        if (pi >= pterms.size()) {
            // the position equals the block prefix: slot 0, remainder 0
            return {blocks_before, encode_remainder({}, lt.exponent)};
        }
        const auto& pt = pterms[pi];
        if (pt.exponent > lt.exponent) position_out_of_range(pos, length);
        if (pt.exponent < lt.exponent) {
            return {blocks_before,
                    encode_remainder(pterms.subspan(pi), lt.exponent)};
        }
        if (pt.coefficient < lt.coefficient) {
            return {blocks_before + pt.coefficient,
                    encode_remainder(pterms.subspan(pi + 1), lt.exponent)};
        }
        if (pt.coefficient > lt.coefficient) position_out_of_range(pos, length);
        // full term matched; move past this block group
        blocks_before += lt.coefficient;
        ++pi;
    }
    position_out_of_range(pos, length);
}

OrdinalCNF decompress_position(const OrdinalCNF& length, uint64_t blocks_total,
                               uint64_t value) {
    uint64_t block = value % blocks_total;
    uint64_t code = value / blocks_total;

    std::vector<OrdinalCNF::Term> terms;
    uint64_t acc = 0;
    for (const auto& lt : length.terms()) {
        if (block < acc + lt.coefficient) {
            uint64_t slot = block - acc;
            if (slot > 0) terms.push_back({lt.exponent, slot});
            auto digits = decode_remainder(code, lt.exponent);
            for (uint64_t e = lt.exponent; e-- > 0;) {
                if (digits[e] > 0) terms.push_back({e, digits[e]});
            }
            return OrdinalCNF::from_terms(std::move(terms));
        }
        acc += lt.coefficient;
        terms.push_back({lt.exponent, lt.coefficient});
    }
    throw Error("block index out of range");  // unreachable: block < blocks_total
}

void check_same_length(const TransfiniteBitString& a,
                       const TransfiniteBitString& b) {
    if (a.length() != b.length()) {
        throw WidthError("length mismatch: " + a.length().to_string() + " vs " +
                         b.length().to_string());
    }
}

}  // namespace

TransfiniteBitString::TransfiniteBitString(OrdinalCNF length,
                                           std::vector<OrdinalCNF> support)
    : length_(std::move(length)), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()),
                   support_.end());
    for (const auto& p : support_) {
        if (p >= length_) {
            throw Error("support position " + p.to_string() +
                        " is not below length " + length_.to_string());
        }
    }
}

bool TransfiniteBitString::bit_at(const OrdinalCNF& pos) const {
    if (pos >= length_) {
        throw Error("position " + pos.to_string() + " is not below length " +
                    length_.to_string());
    }
    return std::binary_search(support_.begin(), support_.end(), pos);
}

TransfiniteBitString append_label(const TransfiniteBitString& s, bool label) {
    OrdinalCNF new_length = ord_add(s.length(), OrdinalCNF(1));
    std::vector<OrdinalCNF> support(s.support().begin(), s.support().end());
    if (label) support.push_back(s.length());
    return TransfiniteBitString(std::move(new_length), std::move(support));
}

std::pair<TransfiniteBitString, bool> strip_label(const TransfiniteBitString& s) {
    auto terms = s.length().terms();
    if (terms.empty() || terms.back().exponent != 0) {
        throw Error("cannot strip a label from length " +
                    s.length().to_string() + ": not a successor ordinal");
    }
    std::vector<OrdinalCNF::Term> shorter(terms.begin(), terms.end());
    if (--shorter.back().coefficient == 0) shorter.pop_back();
    OrdinalCNF new_length = OrdinalCNF::from_terms(std::move(shorter));

    bool label = false;
    std::vector<OrdinalCNF> support;
    for (const auto& p : s.support()) {
        if (p == new_length) {
            label = true;
        } else {
            support.push_back(p);
        }
    }
    return {TransfiniteBitString(std::move(new_length), std::move(support)),
            label};
}

std::optional<OrdinalCNF> t_first_diff(const TransfiniteBitString& a,
                                       const TransfiniteBitString& b) {
    check_same_length(a, b);
    auto sa = a.support();
    auto sb = b.support();
    size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        auto o = sa[i] <=> sb[j];
        if (o == 0) {
            ++i;
            ++j;
        } else {
            return o < 0 ? sa[i] : sb[j];
        }
    }
    if (i < sa.size()) return sa[i];
    if (j < sb.size()) return sb[j];
    return std::nullopt;
}

TransfiniteBitString t_ultra_distance(const TransfiniteBitString& a,
                                      const TransfiniteBitString& b) {
    auto fd = t_first_diff(a, b);
    std::vector<OrdinalCNF> support;
    if (fd) support.push_back(*fd);
    return TransfiniteBitString(a.length(), std::move(support));
}

std::strong_ordering t_lex_cmp(const TransfiniteBitString& a,
                               const TransfiniteBitString& b) {
    auto fd = t_first_diff(a, b);
    if (!fd) return std::strong_ordering::equal;
    return a.bit_at(*fd) ? std::strong_ordering::greater
                         : std::strong_ordering::less;
}

TransfiniteBitString compress_sequence(const TransfiniteBitString& s) {
    if (s.length().is_finite()) return s;
    const uint64_t blocks = total_blocks(s.length());
    std::vector<OrdinalCNF> mapped;
    mapped.reserve(s.support().size());
    for (const auto& p : s.support()) {
        auto pc = compress_position(s.length(), p);
        u128 value = u128(pc.code) * blocks + pc.block;
        if (value > std::numeric_limits<uint64_t>::max()) {
            throw Error("compressed position overflows 64 bits");
        }
        mapped.emplace_back(uint64_t(value));
    }
    return TransfiniteBitString(OrdinalCNF::omega(), std::move(mapped));
}

TransfiniteBitString decompress_sequence(const TransfiniteBitString& compressed,
                                         const OrdinalCNF& original_length) {
    if (compressed.length() != cardinal_of(original_length)) {
        throw WidthError("compressed length " +
                         compressed.length().to_string() +
                         " does not match cardinal of " +
                         original_length.to_string());
    }
    if (original_length.is_finite()) return compressed;

    const uint64_t blocks = total_blocks(original_length);
    std::vector<OrdinalCNF> mapped;
    mapped.reserve(compressed.support().size());
    for (const auto& p : compressed.support()) {
        mapped.push_back(
            decompress_position(original_length, blocks, p.finite_value()));
    }
    return TransfiniteBitString(original_length, std::move(mapped));
}

}  // namespace lset
