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

#include <nlohmann/json.hpp>

namespace lset {

// Reproducible benchmark workload: a random set of the given density and a
// batch of random queries, both derived from the seed.
struct WorkloadSpec {
    size_t width = 0;
    uint64_t query_count = 0;    // must be positive
    uint64_t seed = 0;
    double set_density = 0.5;    // fraction of points labelled 1, in [0, 1]
};

// Runs every query through bisection and through the naive lex scan and
// reports exact counters (bits read, comparisons) plus wall time. Counters
// are deterministic for a given spec; only the "timing_ns" object varies
// between runs. Queries are evaluated concurrently over the shared set when
// threads > 1.
nlohmann::ordered_json run_bench(const WorkloadSpec& spec, unsigned threads = 1);

}  // namespace lset
