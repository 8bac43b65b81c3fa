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

#include "lset/labelled_set.hpp"

#include <bit>
#include <istream>
#include <ostream>
#include <string>

namespace lset {

namespace {

constexpr char kMagic[5] = {'L', 'S', 'E', 'T', '1'};
constexpr uint8_t kBitmapTag = 0x01;

size_t label_bytes(size_t width) {
    // ceil(2^width / 8)
    return width >= 3 ? (size_t{1} << (width - 3)) : 1;
}

uint64_t popcount_bytes(const std::vector<uint8_t>& bits, size_t width) {
    uint64_t n = 0;
    for (uint8_t b : bits) n += static_cast<unsigned>(std::popcount(b));
    (void)width;
    return n;
}

void check_cap(size_t width, size_t cap) {
    if (width > cap) {
        throw Error("width " + std::to_string(width) + " exceeds bitmap cap " +
                    std::to_string(cap) + "; use the predicate oracle backend");
    }
}

}  // namespace

LabelledSet LabelledSet::build_from_members(size_t width,
                                            std::span<const BitString> members,
                                            size_t bitmap_cap) {
    check_cap(width, bitmap_cap);
    std::vector<uint8_t> bits(label_bytes(width), 0);
    for (size_t i = 0; i < members.size(); ++i) {
        const BitString& m = members[i];
        if (m.width() != width) {
            throw WidthError("member " + std::to_string(i) + " (\"" +
                             m.to_string() + "\") has width " +
                             std::to_string(m.width()) + ", expected " +
                             std::to_string(width));
        }
        uint64_t idx = m.to_index();
        bits[idx >> 3] |= uint8_t(1u << (idx & 7));
    }
    uint64_t count = popcount_bytes(bits, width);
    return LabelledSet(width, std::move(bits), count);
}

LabelledSet LabelledSet::from_truth_table(size_t width,
                                          const std::vector<bool>& labels) {
    check_cap(width, kDefaultBitmapCap);
    uint64_t universe = uint64_t{1} << width;
    if (labels.size() != universe) {
        throw Error("truth table has " + std::to_string(labels.size()) +
                    " entries, expected " + std::to_string(universe));
    }
    std::vector<uint8_t> bits(label_bytes(width), 0);
    uint64_t count = 0;
    for (uint64_t i = 0; i < universe; ++i) {
        if (labels[i]) {
            bits[i >> 3] |= uint8_t(1u << (i & 7));
            ++count;
        }
    }
    return LabelledSet(width, std::move(bits), count);
}

LabelledSet LabelledSet::from_predicate(size_t width, Predicate pred) {
    if (!pred) throw Error("oracle backend requires a non-empty predicate");
    return LabelledSet(width, std::move(pred));
}

LabelledSet LabelledSet::bitmap_from_predicate(size_t width,
                                               const Predicate& pred,
                                               size_t bitmap_cap) {
    check_cap(width, bitmap_cap);
    uint64_t universe = uint64_t{1} << width;
    std::vector<uint8_t> bits(label_bytes(width), 0);
    uint64_t count = 0;
    for (uint64_t i = 0; i < universe; ++i) {
        if (pred(BitString::from_index(width, i))) {
            bits[i >> 3] |= uint8_t(1u << (i & 7));
            ++count;
        }
    }
    return LabelledSet(width, std::move(bits), count);
}

void LabelledSet::require_bitmap(const char* op) const {
    if (!is_bitmap()) {
        throw Error(std::string(op) + " is not supported on the oracle backend");
    }
}

void LabelledSet::check_width(const BitString& x) const {
    if (x.width() != width_) {
        throw WidthError("query width " + std::to_string(x.width()) +
                         " vs set width " + std::to_string(width_));
    }
}

bool LabelledSet::label_of(const BitString& x) const {
    check_width(x);
    if (oracle_) return oracle_(x);
    return label_at_index(x.to_index());
}

uint64_t LabelledSet::universe_size() const {
    require_bitmap("universe_size");
    return uint64_t{1} << width_;
}

uint64_t LabelledSet::member_count() const {
    require_bitmap("member_count");
    return member_count_;
}

LabelledSet labelled_union(const LabelledSet& a, const LabelledSet& b) {
    a.require_bitmap("labelled_union");
    b.require_bitmap("labelled_union");
    if (a.width_ != b.width_) {
        throw WidthError("labelled_union: widths " + std::to_string(a.width_) +
                         " vs " + std::to_string(b.width_));
    }
    std::vector<uint8_t> bits(a.bits_.size());
    for (size_t i = 0; i < bits.size(); ++i) bits[i] = a.bits_[i] | b.bits_[i];
    uint64_t count = popcount_bytes(bits, a.width_);
    return LabelledSet(a.width_, std::move(bits), count);
}

LabelledSet LabelledSet::map_function(
    const std::function<BitString(const BitString&)>& f) const {
    require_bitmap("map_function");
    uint64_t universe = uint64_t{1} << width_;
    std::vector<uint8_t> bits(bits_.size(), 0);
    uint64_t count = 0;
    for (uint64_t i = 0; i < universe; ++i) {
        if (!label_at_index(i)) continue;
        BitString y = f(BitString::from_index(width_, i));
        if (y.width() != width_) {
            throw WidthError("map_function: image of \"" +
                             BitString::from_index(width_, i).to_string() +
                             "\" has width " + std::to_string(y.width()) +
                             ", expected " + std::to_string(width_));
        }
        uint64_t j = y.to_index();
        uint8_t mask = uint8_t(1u << (j & 7));
        if (!(bits[j >> 3] & mask)) {
            bits[j >> 3] |= mask;
            ++count;
        }
    }
    return LabelledSet(width_, std::move(bits), count);
}

LabelledSet LabelledSet::complement() const {
    require_bitmap("complement");
    uint64_t universe = uint64_t{1} << width_;
    std::vector<uint8_t> bits(bits_.size());
    for (size_t i = 0; i < bits.size(); ++i) bits[i] = uint8_t(~bits_[i]);
    // mask the unused tail of the last byte
    if (width_ < 3) bits[0] &= uint8_t((1u << universe) - 1);
    return LabelledSet(width_, std::move(bits), universe - member_count_);
}

void LabelledSet::save(std::ostream& os) const {
    require_bitmap("save");
    if (width_ > 255) throw Error("serialized width must fit one byte");
    os.write(kMagic, sizeof kMagic);
    uint8_t w = static_cast<uint8_t>(width_);
    os.write(reinterpret_cast<const char*>(&w), 1);
    os.write(reinterpret_cast<const char*>(&kBitmapTag), 1);
    os.write(reinterpret_cast<const char*>(bits_.data()),
             static_cast<std::streamsize>(bits_.size()));
    if (!os) throw Error("failed writing labelled set");
}

LabelledSet LabelledSet::load(std::istream& is) {
    char magic[5];
    if (!is.read(magic, sizeof magic) ||
        !std::equal(magic, magic + 5, kMagic)) {
        throw Error("bad set file: missing LSET1 magic");
    }
    uint8_t w = 0, tag = 0;
    if (!is.read(reinterpret_cast<char*>(&w), 1) ||
        !is.read(reinterpret_cast<char*>(&tag), 1)) {
        throw Error("bad set file: truncated header");
    }
    if (tag != kBitmapTag) {
        throw Error("bad set file: unknown backend tag " + std::to_string(tag));
    }
    if (w > kDefaultBitmapCap) {
        throw Error("bad set file: width " + std::to_string(w) +
                    " exceeds bitmap cap " + std::to_string(kDefaultBitmapCap));
    }
    std::vector<uint8_t> bits(label_bytes(w));
    if (!is.read(reinterpret_cast<char*>(bits.data()),
                 static_cast<std::streamsize>(bits.size()))) {
        throw Error("bad set file: truncated label bitmap");
    }
    if (w < 3) bits[0] &= uint8_t((1u << (1u << w)) - 1);
    uint64_t count = popcount_bytes(bits, w);
    return LabelledSet(w, std::move(bits), count);
}

bool LabelledSet::operator==(const LabelledSet& other) const {
    require_bitmap("operator==");
    other.require_bitmap("operator==");
    return width_ == other.width_ && bits_ == other.bits_;
}

MembersFile read_members(std::istream& is) {
    MembersFile out;
    std::string line;
    size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        size_t end = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + begin, end - begin + 1);
        if (body.front() == '#') continue;
        BitString m;
        try {
            m = BitString::parse(body);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                             lineno);
        }
        if (out.width && m.width() != *out.width) {
            throw ParseError("line " + std::to_string(lineno) + ": \"" +
                                 std::string(body) + "\" has width " +
                                 std::to_string(m.width()) +
                                 ", expected " + std::to_string(*out.width),
                             lineno);
        }
        out.width = m.width();
        out.members.push_back(std::move(m));
    }
    return out;
}

}  // namespace lset
