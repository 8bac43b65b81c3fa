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

#include "lset/ordinal.hpp"

#include <limits>

namespace lset {

namespace {

uint64_t checked_add(uint64_t a, uint64_t b) {
    if (a > std::numeric_limits<uint64_t>::max() - b) {
        throw Error("ordinal coefficient overflow");
    }
    return a + b;
}

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (b != 0 && a > std::numeric_limits<uint64_t>::max() / b) {
        throw Error("ordinal coefficient overflow");
    }
    return a * b;
}

}  // namespace

OrdinalCNF OrdinalCNF::from_terms(std::vector<Term> terms) {
    for (size_t i = 0; i < terms.size(); ++i) {
        if (terms[i].coefficient == 0) {
            throw Error("non-canonical ordinal: zero coefficient");
        }
        if (i > 0 && terms[i - 1].exponent <= terms[i].exponent) {
            throw Error("non-canonical ordinal: exponents not strictly decreasing");
        }
    }
    OrdinalCNF out;
    out.terms_ = std::move(terms);
    return out;
}

uint64_t OrdinalCNF::finite_value() const {
    if (!is_finite()) throw Error("ordinal " + to_string() + " is not finite");
    return terms_.empty() ? 0 : terms_.front().coefficient;
}

std::strong_ordering OrdinalCNF::operator<=>(const OrdinalCNF& other) const {
    const auto& a = terms_;
    const auto& b = other.terms_;
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (auto o = a[i].exponent <=> b[i].exponent; o != 0) return o;
        if (auto o = a[i].coefficient <=> b[i].coefficient; o != 0) return o;
    }
    return a.size() <=> b.size();
}

std::strong_ordering ord_cmp(const OrdinalCNF& a, const OrdinalCNF& b) {
    return a <=> b;
}

OrdinalCNF ord_add(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (b.is_zero()) return a;
    const uint64_t lead = b.terms().front().exponent;
    std::vector<OrdinalCNF::Term> out;
    uint64_t merged = b.terms().front().coefficient;
    for (const auto& t : a.terms()) {
        if (t.exponent > lead) {
            out.push_back(t);
        } else if (t.exponent == lead) {
            merged = checked_add(merged, t.coefficient);
        }
        // lower terms of a are absorbed
    }
    out.push_back({lead, merged});
    out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
    return OrdinalCNF::from_terms(std::move(out));
}

OrdinalCNF ord_mul(const OrdinalCNF& a, const OrdinalCNF& b) {
    if (a.is_zero() || b.is_zero()) return OrdinalCNF();
    const uint64_t a_lead_exp = a.terms().front().exponent;
    OrdinalCNF acc;
    for (const auto& t : b.terms()) {
        OrdinalCNF part;
        if (t.exponent > 0) {
            part = OrdinalCNF::power(checked_add(a_lead_exp, t.exponent),
                                     t.coefficient);
        } else {
            // finite right factor: scale the leading coefficient, keep the tail
            std::vector<OrdinalCNF::Term> terms(a.terms().begin(),
                                                a.terms().end());
            terms.front().coefficient =
                checked_mul(terms.front().coefficient, t.coefficient);
            part = OrdinalCNF::from_terms(std::move(terms));
        }
        acc = ord_add(acc, part);
    }
    return acc;
}

OrdinalCNF cardinal_of(const OrdinalCNF& b) {
    return b.is_finite() ? b : OrdinalCNF::omega();
}

// --- text syntax ------------------------------------------------------------

namespace {

class OrdinalParser {
public:
    explicit OrdinalParser(std::string_view text) : text_(text) {}

    OrdinalCNF run() {
        OrdinalCNF value = parse_sum();
        skip_spaces();
        if (pos_ != text_.size()) {
            fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        }
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("ordinal syntax error at position " +
                             std::to_string(pos_) + ": " + why,
                         pos_);
    }

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }

    bool eat(char c) {
        skip_spaces();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    uint64_t parse_nat() {
        skip_spaces();
        if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9') {
            fail("expected a number");
        }
        uint64_t value = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            uint64_t digit = uint64_t(text_[pos_] - '0');
            if (value > (std::numeric_limits<uint64_t>::max() - digit) / 10) {
                fail("number too large");
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

    OrdinalCNF parse_atom() {
        skip_spaces();
        if (pos_ >= text_.size()) fail("expected a term");
        if (eat('(')) {
            OrdinalCNF inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (text_[pos_] == 'w') {
            ++pos_;
            uint64_t exponent = 1;
            if (eat('^')) exponent = parse_nat();
            return OrdinalCNF::power(exponent);
        }
        return OrdinalCNF(parse_nat());
    }

    OrdinalCNF parse_product() {
        OrdinalCNF value = parse_atom();
        while (eat('*')) value = ord_mul(value, parse_atom());
        return value;
    }

    OrdinalCNF parse_sum() {
        OrdinalCNF value = parse_product();
        while (eat('+')) value = ord_add(value, parse_product());
        return value;
    }

    std::string_view text_;
    size_t pos_ = 0;
};

}  // namespace

OrdinalCNF OrdinalCNF::parse(std::string_view text) {
    return OrdinalParser(text).run();
}

std::string OrdinalCNF::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const Term& t = terms_[i];
        if (i > 0) out += "+";
        if (t.exponent == 0) {
            out += std::to_string(t.coefficient);
            continue;
        }
        out += "w";
        if (t.exponent > 1) out += "^" + std::to_string(t.exponent);
        if (t.coefficient > 1) out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

}  // namespace lset
