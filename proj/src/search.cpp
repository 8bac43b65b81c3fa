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

#include "lset/search.hpp"

#include <cassert>

#include <nlohmann/json.hpp>

#include "lset/interval.hpp"

namespace lset {

namespace {

void check_query_width(const LabelledSet& set, const BitString& x) {
    if (x.width() != set.width()) {
        throw WidthError("query width " + std::to_string(x.width()) +
                         " vs set width " + std::to_string(set.width()));
    }
}

void require_bitmap_backend(const LabelledSet& set, const char* op) {
    if (!set.is_bitmap()) {
        throw Error(std::string(op) + " requires the bitmap backend");
    }
}

}  // namespace

SearchTrace bisection_decide(const LabelledSet& set, const BitString& x) {
    check_query_width(set, x);
    const size_t n = set.width();

    SearchTrace trace;
    trace.query = x;
    trace.path.reserve(n + 1);

    DyadicInterval interval = DyadicInterval::full(n);
    trace.path.push_back(interval.prefix());
    for (size_t k = 0; k < n; ++k) {
        auto [left, right] = interval.split();
        bool b = x.bit(k);
        ++trace.bits_read;             // one query bit examined
        interval = b ? right : left;
        assert(interval.contains(x));
        ++trace.steps;
        trace.path.push_back(interval.prefix());
    }
    trace.result = set.label_of(x);
    ++trace.bits_read;                 // the label read at the singleton
    ++trace.steps;
    return trace;
}

std::string trace_json(const SearchTrace& trace) {
    nlohmann::ordered_json j;
    j["query"] = trace.query.to_string();
    j["result"] = trace.result ? 1 : 0;
    j["bits_read"] = trace.bits_read;
    j["steps"] = trace.steps;
    auto path = nlohmann::ordered_json::array();
    for (const BitString& p : trace.path) path.push_back(p.to_string());
    j["path"] = std::move(path);
    return j.dump();
}

ScanTrace naive_scan_decide(const LabelledSet& set, const BitString& x) {
    check_query_width(set, x);
    require_bitmap_backend(set, "naive_scan_decide");

    const uint64_t target = x.to_index();
    ScanTrace trace;
    for (uint64_t i = 0;; ++i) {
        ++trace.comparisons;
        if (i == target) break;
    }
    trace.result = set.label_at_index(target);
    return trace;
}

AlternatingEnumerator::AlternatingEnumerator(const LabelledSet& set)
    : set_(&set) {
    require_bitmap_backend(set, "alternating_enumeration");
    universe_ = set.universe_size();
}

uint64_t AlternatingEnumerator::advance(uint64_t cursor, bool target) const {
    while (cursor < universe_ && set_->label_at_index(cursor) != target) {
        ++cursor;
    }
    return cursor;
}

std::optional<AlternatingEnumerator::Raw> AlternatingEnumerator::next_raw() {
    if (emitted_ == universe_) return std::nullopt;
    member_cursor_ = advance(member_cursor_, true);
    nonmember_cursor_ = advance(nonmember_cursor_, false);

    bool take_member;
    if (member_cursor_ >= universe_) {
        take_member = false;
    } else if (nonmember_cursor_ >= universe_) {
        take_member = true;
    } else {
        take_member = member_turn_;
    }

    Raw item;
    item.label = take_member;
    item.position = emitted_++;
    if (take_member) {
        item.index = member_cursor_++;
    } else {
        item.index = nonmember_cursor_++;
    }
    member_turn_ = !take_member;
    return item;
}

std::optional<EnumerationItem> AlternatingEnumerator::next() {
    auto raw = next_raw();
    if (!raw) return std::nullopt;
    return EnumerationItem{BitString::from_index(set_->width(), raw->index),
                           raw->label, raw->position};
}

EnumDecision decide_via_enumeration(const LabelledSet& set, const BitString& x) {
    check_query_width(set, x);
    require_bitmap_backend(set, "decide_via_enumeration");

    const uint64_t target = x.to_index();
    AlternatingEnumerator en(set);
    uint64_t steps = 0;
    while (auto item = en.next_raw()) {
        ++steps;
        if (item->index == target) {
            return {item->label, steps, steps * (set.width() + 1)};
        }
    }
    throw Error("enumeration ended before reaching the query");  // unreachable
}

}  // namespace lset
