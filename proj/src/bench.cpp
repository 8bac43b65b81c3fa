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

#include "lset/bench.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>
#include <vector>

#include "lset/labelled_set.hpp"
#include "lset/search.hpp"

namespace lset {

namespace {

using Clock = std::chrono::steady_clock;

int64_t elapsed_ns(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() -
                                                                start)
        .count();
}

LabelledSet random_set(size_t width, double density, std::mt19937_64& rng) {
    uint64_t universe = uint64_t{1} << width;
    // threshold on raw generator output keeps the draw platform-independent
    const long double scale = 18446744073709551616.0L;  // 2^64
    std::vector<bool> labels(universe);
    if (density >= 1.0) {
        labels.assign(universe, true);
    } else {
        uint64_t threshold = uint64_t(density * scale);
        for (uint64_t i = 0; i < universe; ++i) labels[i] = rng() < threshold;
    }
    return LabelledSet::from_truth_table(width, labels);
}

struct Counters {
    uint64_t bits_read_total = 0;
    uint64_t bits_read_min = UINT64_MAX;
    uint64_t bits_read_max = 0;
    uint64_t comparisons_total = 0;
    uint64_t comparisons_min = UINT64_MAX;
    uint64_t comparisons_max = 0;
    uint64_t positives = 0;
    uint64_t disagreements = 0;

    void merge(const Counters& o) {
        bits_read_total += o.bits_read_total;
        bits_read_min = std::min(bits_read_min, o.bits_read_min);
        bits_read_max = std::max(bits_read_max, o.bits_read_max);
        comparisons_total += o.comparisons_total;
        comparisons_min = std::min(comparisons_min, o.comparisons_min);
        comparisons_max = std::max(comparisons_max, o.comparisons_max);
        positives += o.positives;
        disagreements += o.disagreements;
    }
};

}  // namespace

nlohmann::ordered_json run_bench(const WorkloadSpec& spec, unsigned threads) {
    if (spec.query_count == 0) throw Error("bench requires a positive query count");
    if (spec.set_density < 0.0 || spec.set_density > 1.0) {
        throw Error("bench density must lie in [0, 1]");
    }
    if (threads == 0) threads = 1;

    std::mt19937_64 rng(spec.seed);
    LabelledSet set = random_set(spec.width, spec.set_density, rng);

    std::vector<BitString> queries;
    queries.reserve(spec.query_count);
    for (uint64_t q = 0; q < spec.query_count; ++q) {
        uint64_t index = spec.width == 0 ? 0 : rng() >> (64 - spec.width);
        queries.push_back(BitString::from_index(spec.width, index));
    }

    threads = std::min<size_t>(threads, queries.size());
    std::vector<Counters> partial(threads);

    auto started = Clock::now();
    auto worker = [&](unsigned t) {
        Counters& c = partial[t];
        for (size_t q = t; q < queries.size(); q += threads) {
            SearchTrace bisect = bisection_decide(set, queries[q]);
            ScanTrace scan = naive_scan_decide(set, queries[q]);
            c.bits_read_total += bisect.bits_read;
            c.bits_read_min = std::min(c.bits_read_min, bisect.bits_read);
            c.bits_read_max = std::max(c.bits_read_max, bisect.bits_read);
            c.comparisons_total += scan.comparisons;
            c.comparisons_min = std::min(c.comparisons_min, scan.comparisons);
            c.comparisons_max = std::max(c.comparisons_max, scan.comparisons);
            c.positives += bisect.result ? 1 : 0;
            c.disagreements += bisect.result != scan.result ? 1 : 0;
        }
    };

    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }
    int64_t total_ns = elapsed_ns(started);

    Counters c;
    for (const Counters& p : partial) c.merge(p);

    nlohmann::ordered_json report;
    report["spec"] = {{"width", spec.width},
                      {"queries", spec.query_count},
                      {"seed", spec.seed},
                      {"density", spec.set_density}};
    report["set"] = {{"member_count", set.member_count()},
                     {"universe", set.universe_size()}};
    report["bisection"] = {
        {"bits_read_min", c.bits_read_min},
        {"bits_read_max", c.bits_read_max},
        {"bits_read_total", c.bits_read_total},
        {"positives", c.positives}};
    report["naive_scan"] = {
        {"comparisons_min", c.comparisons_min},
        {"comparisons_max", c.comparisons_max},
        {"comparisons_total", c.comparisons_total},
        {"comparisons_mean",
         double(c.comparisons_total) / double(spec.query_count)}};
    report["agreement"] = c.disagreements == 0;
    report["threads"] = threads;
    report["timing_ns"] = {{"total", total_ns}};
    return report;
}

}  // namespace lset
