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
#include <optional>
#include <ranges>
#include <string>
#include <vector>

#include "lset/bitstring.hpp"
#include "lset/labelled_set.hpp"

namespace lset {

// Result of a bisection decision together with its exact information cost.
// bits_read counts every bit examined: one per query bit plus the final
// label read, so it is always width + 1 — exact, not a bound. path holds the
// prefix of every interval visited, from the full interval down to the
// singleton {query}; path[k] is the first k bits of the query.
struct SearchTrace {
    BitString query;
    bool result = false;
    uint64_t bits_read = 0;
    uint64_t steps = 0;                // loop iterations incl. the label read
    std::vector<BitString> path;
};

// Decides membership by dyadic bisection: halve the interval, descend into
// the half containing the query (chosen by the next query bit), repeat to
// the singleton, then read its label. Works on both backends.
SearchTrace bisection_decide(const LabelledSet& set, const BitString& x);

// Stable-field-name JSON rendering of a trace:
// {"query":"010","result":1,"bits_read":4,"steps":4,"path":["","0","01","010"]}
std::string trace_json(const SearchTrace& trace);

// Linear-scan baseline: walk the universe in lex order until the query is
// reached. comparisons counts the points examined. Bitmap backend only.
struct ScanTrace {
    bool result = false;
    uint64_t comparisons = 0;
};

ScanTrace naive_scan_decide(const LabelledSet& set, const BitString& x);

struct EnumerationItem {
    BitString point;
    bool label = false;
    uint64_t position = 0;             // consecutive from 0
};

// Enumerates the whole universe by alternating classes: member, non-member,
// member, ... each class in lex order, members first; once one class is
// exhausted the remainder of the other follows in lex order. Every point is
// emitted exactly once. Bitmap backend only.
class AlternatingEnumerator {
public:
    explicit AlternatingEnumerator(const LabelledSet& set);

    struct Raw {
        uint64_t index;
        bool label;
        uint64_t position;
    };

    // Index-level item, avoiding BitString materialization on hot paths.
    std::optional<Raw> next_raw();

    std::optional<EnumerationItem> next();

private:
    uint64_t advance(uint64_t cursor, bool target) const;

    const LabelledSet* set_;
    uint64_t universe_ = 0;
    uint64_t emitted_ = 0;
    uint64_t member_cursor_ = 0;
    uint64_t nonmember_cursor_ = 0;
    bool member_turn_ = true;
};

// Decision by scanning the alternating enumeration until the query appears.
// steps counts items consumed (at most 2^n); bits_consumed reports the
// items-times-(width+1) bit equivalent for comparison against the bisection
// cost. Bitmap backend only.
struct EnumDecision {
    bool result = false;
    uint64_t steps = 0;
    uint64_t bits_consumed = 0;
};

EnumDecision decide_via_enumeration(const LabelledSet& set, const BitString& x);

enum class QuantifierKind { AllTrue, AllFalse, Witness };

// AllTrue/AllFalse for constant streams; otherwise the first index where
// the stream departs from its first value, with the deviating value.
struct QuantifierVerdict {
    QuantifierKind kind = QuantifierKind::AllTrue;
    size_t witness_index = 0;
    bool witness_value = false;

    bool operator==(const QuantifierVerdict&) const = default;
};

// Empty streams are AllTrue (vacuous universal).
template <std::ranges::input_range R>
QuantifierVerdict quantifier_eval(R&& values) {
    size_t i = 0;
    bool first_value = false;
    for (bool v : values) {
        if (i == 0) {
            first_value = v;
        } else if (v != first_value) {
            return {QuantifierKind::Witness, i, v};
        }
        ++i;
    }
    if (i == 0 || first_value) return {QuantifierKind::AllTrue, 0, false};
    return {QuantifierKind::AllFalse, 0, false};
}

}  // namespace lset
