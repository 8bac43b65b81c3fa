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

// Acceptance suite: every exact law the engine promises, checked at the
// stated scope. Each criterion prints one PASS/FAIL line; the process exits
// nonzero if any criterion fails.

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lset/bench.hpp"
#include "lset/bitstring.hpp"
#include "lset/diagonal.hpp"
#include "lset/interval.hpp"
#include "lset/labelled_set.hpp"
#include "lset/ordinal.hpp"
#include "lset/search.hpp"
#include "lset/transfinite.hpp"
#include "ordinal_oracle.hpp"

using namespace lset;

namespace {

constexpr uint64_t kMasterSeed = 20260810;

struct Outcome {
    uint64_t checks = 0;
    uint64_t violations = 0;
    std::string detail;
};

LabelledSet random_set(size_t width, double density, std::mt19937_64& rng) {
    uint64_t universe = uint64_t{1} << width;
    uint64_t threshold =
        density >= 1.0 ? UINT64_MAX : uint64_t(density * 18446744073709551616.0L);
    std::vector<bool> labels(universe);
    for (uint64_t i = 0; i < universe; ++i) labels[i] = rng() < threshold;
    return LabelledSet::from_truth_table(width, labels);
}

LabelledSet constant_set(size_t width, bool value) {
    return LabelledSet::from_truth_table(
        width, std::vector<bool>(uint64_t{1} << width, value));
}

// AC-2 shares AC-1's sweep; its result is stashed here by run_ac1.
Outcome g_bit_count_law;

Outcome run_ac1() {
    Outcome res;
    g_bit_count_law = {};
    std::mt19937_64 rng(kMasterSeed);
    const double densities[] = {0.1, 0.3, 0.5, 0.7, 0.9};

    for (size_t n = 0; n <= 12; ++n) {
        std::vector<LabelledSet> sets;
        sets.push_back(constant_set(n, false));
        sets.push_back(constant_set(n, true));
        for (int s = 0; s < 50; ++s) {
            sets.push_back(random_set(n, densities[s % 5], rng));
        }
        for (const LabelledSet& set : sets) {
            for (uint64_t i = 0; i < set.universe_size(); ++i) {
                BitString x = BitString::from_index(n, i);
                bool direct = set.label_of(x);
                SearchTrace bisect = bisection_decide(set, x);
                EnumDecision via_enum = decide_via_enumeration(set, x);

                ++res.checks;
                if (bisect.result != direct || via_enum.result != direct) {
                    ++res.violations;
                }
                ++g_bit_count_law.checks;
                if (bisect.bits_read != n + 1) ++g_bit_count_law.violations;
            }
        }
    }
    res.detail = "widths 0..12, 52 sets each, every point, three routes";
    g_bit_count_law.detail = "bits_read == n+1 on every trace of AC-1";
    return res;
}

Outcome run_ac2() { return g_bit_count_law; }

Outcome run_ac3() {
    Outcome res;
    auto check_triple = [&](const BitString& x, const BitString& y,
                            const BitString& z) {
        BitString dxy = ultra_distance(x, y);
        BitString dyz = ultra_distance(y, z);
        BitString dxz = ultra_distance(x, z);
        const BitString& m = lex_cmp(dxy, dyz) >= 0 ? dxy : dyz;
        ++res.checks;
        if (lex_cmp(m, dxz) < 0) ++res.violations;
    };

    for (size_t n = 3; n <= 6; ++n) {
        uint64_t universe = uint64_t{1} << n;
        for (uint64_t a = 0; a < universe; ++a) {
            for (uint64_t b = 0; b < universe; ++b) {
                for (uint64_t c = 0; c < universe; ++c) {
                    check_triple(BitString::from_index(n, a),
                                 BitString::from_index(n, b),
                                 BitString::from_index(n, c));
                }
            }
        }
    }

    std::mt19937_64 rng(kMasterSeed + 3);
    for (int trial = 0; trial < 1000000; ++trial) {
        check_triple(BitString::from_index(64, rng()),
                     BitString::from_index(64, rng()),
                     BitString::from_index(64, rng()));
    }
    res.detail = "exhaustive n=3..6 plus 1e6 random triples at n=64";
    return res;
}

Outcome run_ac4() {
    Outcome res;
    // order laws, exhaustive at n <= 6
    for (size_t n = 0; n <= 6; ++n) {
        uint64_t universe = uint64_t{1} << n;
        std::vector<BitString> xs;
        xs.reserve(universe);
        for (uint64_t i = 0; i < universe; ++i) {
            xs.push_back(BitString::from_index(n, i));
        }
        for (uint64_t a = 0; a < universe; ++a) {
            for (uint64_t b = 0; b < universe; ++b) {
                auto ab = lex_cmp(xs[a], xs[b]);
                auto ba = lex_cmp(xs[b], xs[a]);
                ++res.checks;
                bool total = (ab == 0) == (xs[a] == xs[b]);
                bool antisym = (ab < 0 && ba > 0) || (ab > 0 && ba < 0) ||
                               (ab == 0 && ba == 0);
                if (!total || !antisym) ++res.violations;
            }
        }
        for (uint64_t a = 0; a < universe; ++a) {
            for (uint64_t b = 0; b < universe; ++b) {
                if (lex_cmp(xs[a], xs[b]) > 0) continue;
                for (uint64_t c = 0; c < universe; ++c) {
                    if (lex_cmp(xs[b], xs[c]) > 0) continue;
                    ++res.checks;
                    if (lex_cmp(xs[a], xs[c]) > 0) ++res.violations;
                }
            }
        }
    }
    // containment vs bounds sandwich, exhaustive over prefixes at n <= 10
    for (size_t n = 0; n <= 10; ++n) {
        uint64_t universe = uint64_t{1} << n;
        for (size_t k = 0; k <= n; ++k) {
            for (uint64_t p = 0; p < (uint64_t{1} << k); ++p) {
                DyadicInterval interval(n, BitString::from_index(k, p));
                auto [glb, lub] = interval.bounds();
                for (uint64_t v = 0; v < universe; ++v) {
                    BitString x = BitString::from_index(n, v);
                    bool sandwich =
                        lex_cmp(glb, x) <= 0 && lex_cmp(x, lub) <= 0;
                    ++res.checks;
                    if (interval.contains(x) != sandwich) ++res.violations;
                }
            }
        }
    }
    res.detail = "order laws n<=6; contains iff bounds sandwich n<=10";
    return res;
}

Outcome run_ac5() {
    Outcome res;
    std::mt19937_64 rng(kMasterSeed + 5);
    for (size_t n = 0; n <= 8; ++n) {
        LabelledSet empty = constant_set(n, false);
        for (int trial = 0; trial < 20; ++trial) {
            LabelledSet a = random_set(n, 0.5, rng);
            LabelledSet b = random_set(n, 0.5, rng);
            LabelledSet c = random_set(n, 0.5, rng);
            LabelledSet u = labelled_union(a, b);
            for (uint64_t i = 0; i < u.universe_size(); ++i) {
                ++res.checks;
                bool expected = a.label_at_index(i) || b.label_at_index(i);
                if (u.label_at_index(i) != expected) ++res.violations;
            }
            ++res.checks;
            if (!(u == labelled_union(b, a))) ++res.violations;
            ++res.checks;
            if (!(labelled_union(u, c) == labelled_union(a, labelled_union(b, c)))) {
                ++res.violations;
            }
            ++res.checks;
            if (!(labelled_union(a, a) == a)) ++res.violations;
            ++res.checks;
            if (!(labelled_union(a, empty) == a)) ++res.violations;
        }
    }
    res.detail = "pointwise max plus algebraic laws, n<=8, 20 pairs per n";
    return res;
}

Outcome run_ac6() {
    Outcome res;
    for (size_t n = 1; n <= 3; ++n) {
        uint64_t codes = uint64_t{1} << n;
        auto check_coding = [&](const PredicateCoding& coding) {
            LabelledSet diag = diagonal_predicate(coding);
            for (uint64_t y = 0; y < codes; ++y) {
                ++res.checks;
                if (diag.label_at_index(y) ==
                    coding.decode_at(y).label_at_index(y)) {
                    ++res.violations;
                }
            }
            auto witnesses = verify_antisurjection(coding);
            for (const auto& w : witnesses) {
                ++res.checks;
                if (!(w.code == w.point) || w.decode_value == w.diagonal_value) {
                    ++res.violations;
                }
            }
        };
        check_coding(PredicateCoding::canonical(n));
        for (uint64_t i = 0; i < 1000; ++i) {
            check_coding(PredicateCoding::randomized(n, kMasterSeed + 6000 + i));
        }
    }
    res.detail = "1000 seeded codings per n in {1,2,3} plus canonical, seeds " +
                 std::to_string(kMasterSeed + 6000) + "..";
    return res;
}

Outcome run_ac7() {
    Outcome res;
    std::mt19937_64 rng(kMasterSeed + 7);
    auto random_tri = [&] {
        return testing::Tri{rng() % 4, rng() % 5, rng() % 9};
    };
    auto from_tri = [](const testing::Tri& t) {
        std::vector<OrdinalCNF::Term> terms;
        if (t.a) terms.push_back({2, t.a});
        if (t.b) terms.push_back({1, t.b});
        if (t.c) terms.push_back({0, t.c});
        return OrdinalCNF::from_terms(std::move(terms));
    };

    for (int trial = 0; trial < 10000; ++trial) {
        testing::Tri x = random_tri();
        testing::Tri y = random_tri();
        OrdinalCNF cx = from_tri(x);
        OrdinalCNF cy = from_tri(y);
        ++res.checks;
        if (ord_cmp(cx, cy) != testing::tri_cmp(x, y)) ++res.violations;
        ++res.checks;
        if (!(ord_add(cx, cy) == from_tri(testing::tri_add(x, y)))) {
            ++res.violations;
        }
    }
    // products often leave the oracle's below-w^3 range; sample until 1e4 land
    uint64_t mul_pairs = 0;
    while (mul_pairs < 10000) {
        testing::Tri x = random_tri();
        testing::Tri y = random_tri();
        if (auto p = testing::tri_mul(x, y)) {
            ++res.checks;
            ++mul_pairs;
            if (!(ord_mul(from_tri(x), from_tri(y)) == from_tri(*p))) {
                ++res.violations;
            }
        }
    }

    // compression round trip on random finite-support sequences
    uint64_t sequences = 0;
    for (int trial = 0; trial < 10000; ++trial) {
        uint64_t lead = rng() % 9 + 1;
        uint64_t mid = lead < 9 && rng() % 2 ? rng() % 6 + 1 : 0;
        uint64_t tail = lead < 9 && rng() % 2 ? rng() % 50 + 1 : 0;
        OrdinalCNF length = OrdinalCNF::power(2, lead);
        if (mid) length = ord_add(length, OrdinalCNF::power(1, mid));
        if (tail) length = ord_add(length, OrdinalCNF(tail));

        std::vector<OrdinalCNF> support;
        for (int i = rng() % 12; i-- > 0;) {
            std::vector<OrdinalCNF::Term> terms;
            uint64_t zone = rng() % 3;
            if (zone == 1 && mid > 0) {
                terms.push_back({2, lead});
                if (uint64_t b = rng() % mid) terms.push_back({1, b});
                if (uint64_t c = rng() % 1000) terms.push_back({0, c});
            } else if (zone == 2 && tail > 0) {
                terms.push_back({2, lead});
                if (mid) terms.push_back({1, mid});
                if (uint64_t c = rng() % tail) terms.push_back({0, c});
            } else {
                if (uint64_t a = rng() % lead) terms.push_back({2, a});
                if (uint64_t b = rng() % 7) terms.push_back({1, b});
                if (uint64_t c = rng() % 1000) terms.push_back({0, c});
            }
            support.push_back(OrdinalCNF::from_terms(std::move(terms)));
        }
        TransfiniteBitString s(length, std::move(support));
        TransfiniteBitString compressed = compress_sequence(s);
        ++res.checks;
        ++sequences;
        bool ok = compressed.length() == cardinal_of(s.length()) &&
                  compressed.support().size() == s.support().size() &&
                  decompress_sequence(compressed, s.length()) == s;
        if (!ok) ++res.violations;
    }
    res.detail = "1e4 ordinal pairs (" + std::to_string(mul_pairs) +
                 " products in range) and " + std::to_string(sequences) +
                 " compression round trips";
    return res;
}

Outcome run_ac8() {
    Outcome res;
    WorkloadSpec spec;
    spec.width = 20;
    spec.query_count = 10000;
    spec.seed = kMasterSeed + 8;
    spec.set_density = 0.5;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    nlohmann::ordered_json report = run_bench(spec, threads);

    uint64_t bits_min = report["bisection"]["bits_read_min"];
    uint64_t bits_max = report["bisection"]["bits_read_max"];
    double mean = report["naive_scan"]["comparisons_mean"];
    bool agreement = report["agreement"];

    res.checks = 3;
    if (!(bits_min == 21 && bits_max == 21)) ++res.violations;
    if (!(mean >= 131072.0)) ++res.violations;
    if (!agreement) ++res.violations;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "n=20, 1e4 queries: bits_read %" PRIu64 "..%" PRIu64
                  ", naive mean %.0f (floor 131072)",
                  bits_min, bits_max, mean);
    res.detail = buf;
    return res;
}

Outcome run_ac9() {
    Outcome res;
    std::mt19937_64 rng(kMasterSeed + 9);

    auto check_enumeration = [&](const LabelledSet& set) {
        uint64_t universe = set.universe_size();
        std::vector<uint64_t> members, nonmembers;
        for (uint64_t i = 0; i < universe; ++i) {
            (set.label_at_index(i) ? members : nonmembers).push_back(i);
        }
        // the stated rule, applied literally
        std::vector<std::pair<uint64_t, bool>> expect;
        size_t m = 0, o = 0;
        bool member_next = true;
        while (m < members.size() && o < nonmembers.size()) {
            if (member_next) expect.emplace_back(members[m++], true);
            else expect.emplace_back(nonmembers[o++], false);
            member_next = !member_next;
        }
        while (m < members.size()) expect.emplace_back(members[m++], true);
        while (o < nonmembers.size()) expect.emplace_back(nonmembers[o++], false);

        std::vector<bool> seen(universe, false);
        AlternatingEnumerator en(set);
        uint64_t at = 0;
        bool ok = true;
        while (auto item = en.next_raw()) {
            if (at >= universe || item->position != at ||
                item->index != expect[at].first ||
                item->label != expect[at].second || seen[item->index]) {
                ok = false;
                break;
            }
            seen[item->index] = true;
            ++at;
        }
        ok = ok && at == universe;
        ++res.checks;
        if (!ok) ++res.violations;
    };

    for (size_t n = 0; n <= 3; ++n) {
        uint64_t universe = uint64_t{1} << n;
        for (uint64_t mask = 0; mask < (uint64_t{1} << universe); ++mask) {
            std::vector<bool> labels(universe);
            for (uint64_t i = 0; i < universe; ++i) labels[i] = (mask >> i) & 1u;
            check_enumeration(LabelledSet::from_truth_table(n, labels));
        }
    }
    for (size_t n = 4; n <= 8; ++n) {
        check_enumeration(constant_set(n, false));
        check_enumeration(constant_set(n, true));
        for (int trial = 0; trial < 100; ++trial) {
            check_enumeration(random_set(n, 0.1 + 0.2 * (trial % 5), rng));
        }
    }
    res.detail = "every set n<=3; empty/full plus 100 random sets per n=4..8";
    return res;
}

}  // namespace

int main() {
    struct Criterion {
        const char* id;
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"AC-1", "oracle equivalence of the three decision routes", run_ac1},
        {"AC-2", "exact bit-count law bits_read == n+1", run_ac2},
        {"AC-3", "generalized ultrametric strong triangle inequality", run_ac3},
        {"AC-4", "total order and containment laws", run_ac4},
        {"AC-5", "labelled union absorption and lattice laws", run_ac5},
        {"AC-6", "diagonal anti-surjection witnesses", run_ac6},
        {"AC-7", "ordinal arithmetic vs oracle and compression round trip", run_ac7},
        {"AC-8", "search-cost separation at n=20", run_ac8},
        {"AC-9", "alternating enumeration shape", run_ac9},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome out = c.run();
        double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
        bool pass = out.violations == 0;
        if (!pass) ++failures;
        std::printf("%s %-52s %s (%" PRIu64 " checks, %" PRIu64
                    " violations, %.1fs)\n",
                    c.id, c.name, pass ? "PASS" : "FAIL", out.checks,
                    out.violations, secs);
        if (!out.detail.empty()) std::printf("     %s\n", out.detail.c_str());
    }
    if (failures > 0) {
        std::printf("%d criteria FAILED\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
