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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lset/error.hpp"

namespace lset {

// An ordinal below w^w in Cantor normal form: a finite sum of terms
// w^exponent * coefficient with strictly decreasing natural exponents and
// positive coefficients. The empty sum is 0. This range is closed under
// successor, addition and multiplication. Immutable value type.
class OrdinalCNF {
public:
    struct Term {
        uint64_t exponent;
        uint64_t coefficient;

        bool operator==(const Term&) const = default;
    };

    // Zero.
    OrdinalCNF() = default;

    // A finite ordinal.
    explicit OrdinalCNF(uint64_t n) {
        if (n > 0) terms_.push_back({0, n});
    }

    // From explicit terms; rejects non-canonical input (exponents not
    // strictly decreasing, or a zero coefficient).
    static OrdinalCNF from_terms(std::vector<Term> terms);

    static OrdinalCNF omega() { return from_terms({{1, 1}}); }

    // One term w^exponent * coefficient.
    static OrdinalCNF power(uint64_t exponent, uint64_t coefficient = 1) {
        return from_terms({{exponent, coefficient}});
    }

    std::span<const Term> terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_finite() const {
        return terms_.empty() || terms_.front().exponent == 0;
    }

    // The natural-number value; requires is_finite().
    uint64_t finite_value() const;

    // Text syntax used by the CLI: "w^2*3+w+4" with w for omega. Parses the
    // full arithmetic grammar (sums, products, parentheses) and evaluates
    // to canonical form.
    static OrdinalCNF parse(std::string_view text);
    std::string to_string() const;

    bool operator==(const OrdinalCNF&) const = default;
    std::strong_ordering operator<=>(const OrdinalCNF& other) const;

private:
    std::vector<Term> terms_;
};

// Strict total order on canonical forms: the term lists compare
// lexicographically, higher exponent dominating.
std::strong_ordering ord_cmp(const OrdinalCNF& a, const OrdinalCNF& b);

// Ordinal addition (non-commutative): the left terms strictly below the
// right argument's leading exponent are absorbed.
OrdinalCNF ord_add(const OrdinalCNF& a, const OrdinalCNF& b);

// Ordinal multiplication: left-distributes over the right argument's terms;
// a finite right factor scales the leading coefficient only.
OrdinalCNF ord_mul(const OrdinalCNF& a, const OrdinalCNF& b);

// Lossless compression of an ordinal to its cardinal: finite ordinals are
// their own cardinals; every infinite ordinal below w^w is countable, so
// its cardinal is w.
OrdinalCNF cardinal_of(const OrdinalCNF& b);

}  // namespace lset
