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

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "lset/bench.hpp"
#include "lset/bitstring.hpp"
#include "lset/diagonal.hpp"
#include "lset/labelled_set.hpp"
#include "lset/ordinal.hpp"
#include "lset/search.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

lset::LabelledSet load_set(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lset::Error("cannot open set file: " + path);
    return lset::LabelledSet::load(in);
}

int cmd_build(const std::string& members_path, const std::string& out_path,
              int forced_width, size_t cap) {
    std::ifstream in(members_path);
    if (!in) throw lset::Error("cannot open members file: " + members_path);
    lset::MembersFile parsed = lset::read_members(in);

    size_t width;
    if (parsed.width) {
        width = *parsed.width;
        if (forced_width >= 0 && size_t(forced_width) != width) {
            throw lset::Error("--width " + std::to_string(forced_width) +
                              " conflicts with member width " +
                              std::to_string(width));
        }
    } else if (forced_width >= 0) {
        width = size_t(forced_width);
    } else {
        throw lset::Error("members file is empty; pass --width to build the empty set");
    }

    lset::LabelledSet set =
        lset::LabelledSet::build_from_members(width, parsed.members, cap);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw lset::Error("cannot open output file: " + out_path);
    set.save(out);
    return kExitOk;
}

int cmd_query(const std::string& set_path, const std::string& bits) {
    lset::LabelledSet set = load_set(set_path);
    lset::BitString x = lset::BitString::parse(bits);
    std::cout << lset::trace_json(lset::bisection_decide(set, x)) << "\n";
    return kExitOk;
}

int cmd_enum(const std::string& set_path, uint64_t limit) {
    lset::LabelledSet set = load_set(set_path);
    lset::AlternatingEnumerator en(set);
    uint64_t emitted = 0;
    while (auto item = en.next()) {
        if (limit > 0 && emitted == limit) break;
        std::cout << item->point.to_string() << " " << (item->label ? 1 : 0)
                  << "\n";
        ++emitted;
    }
    return kExitOk;
}

int cmd_bench(const lset::WorkloadSpec& spec, unsigned threads) {
    std::cout << lset::run_bench(spec, threads).dump(2) << "\n";
    return kExitOk;
}

int cmd_diag(size_t width, bool randomized, uint64_t seed) {
    lset::PredicateCoding coding =
        randomized ? lset::PredicateCoding::randomized(width, seed)
                   : lset::PredicateCoding::canonical(width);
    auto witnesses = lset::verify_antisurjection(coding);

    ordered_json j;
    j["width"] = width;
    j["coding"] = randomized ? "randomized" : "canonical";
    if (randomized) j["seed"] = seed;
    auto rows = ordered_json::array();
    bool all_disagree = true;
    for (const auto& w : witnesses) {
        rows.push_back({{"code", w.code.to_string()},
                        {"witness", w.point.to_string()},
                        {"decode_at_code", w.decode_value ? 1 : 0},
                        {"diagonal_at_code", w.diagonal_value ? 1 : 0}});
        all_disagree = all_disagree && (w.decode_value != w.diagonal_value);
    }
    j["witnesses"] = std::move(rows);
    j["diagonal_escapes_coding"] = all_disagree;
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_ord(const std::string& expr) {
    std::cout << lset::OrdinalCNF::parse(expr).to_string() << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"labelled-set membership engine over fixed-width bitstrings"};
    app.require_subcommand(1);

    std::string members_path, out_path = "set.lset";
    int forced_width = -1;
    size_t cap = lset::LabelledSet::kDefaultBitmapCap;
    auto* build = app.add_subcommand(
        "build", "build a serialized set from a members file");
    build->add_option("members", members_path, "members file, one bitstring per line")
        ->required();
    build->add_option("-o,--output", out_path, "output set file");
    build->add_option("--width", forced_width,
                      "universe width (required only for an empty members file)");
    build->add_option("--cap", cap, "bitmap width cap");

    std::string set_path, query_bits;
    auto* query =
        app.add_subcommand("query", "decide membership by dyadic bisection");
    query->add_option("set", set_path, "set file")->required();
    query->add_option("bits", query_bits, "query bitstring")->required();

    std::string enum_path;
    uint64_t limit = 0;
    auto* enumerate =
        app.add_subcommand("enum", "list the alternating enumeration");
    enumerate->add_option("set", enum_path, "set file")->required();
    enumerate->add_option("--limit", limit, "stop after this many items");

    lset::WorkloadSpec spec;
    unsigned threads = std::thread::hardware_concurrency();
    auto* bench = app.add_subcommand(
        "bench", "compare bisection bit counts against the naive scan");
    bench->add_option("--width", spec.width, "universe width")->required();
    bench->add_option("--queries", spec.query_count, "number of random queries")
        ->default_val(uint64_t{10000});
    bench->add_option("--seed", spec.seed, "workload seed")->default_val(uint64_t{0});
    bench->add_option("--density", spec.set_density,
                      "fraction of points labelled 1")
        ->default_val(0.5);
    bench->add_option("--threads", threads, "worker threads");

    size_t diag_width = 0;
    uint64_t diag_seed = 0;
    bool diag_has_seed = false;
    auto* diag = app.add_subcommand(
        "diag", "print the diagonal anti-surjection witness table");
    diag->add_option("--width", diag_width, "code width")->required();
    auto* seed_opt =
        diag->add_option("--seed", diag_seed, "use a seeded random coding");

    std::string ord_expr;
    auto* ord = app.add_subcommand("ord", "normalize an ordinal expression");
    ord->add_option("expr", ord_expr, "expression, e.g. \"w^2*3+w+4\"")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    diag_has_seed = seed_opt->count() > 0;

    try {
        if (build->parsed()) return cmd_build(members_path, out_path, forced_width, cap);
        if (query->parsed()) return cmd_query(set_path, query_bits);
        if (enumerate->parsed()) return cmd_enum(enum_path, limit);
        if (bench->parsed()) return cmd_bench(spec, threads);
        if (diag->parsed()) return cmd_diag(diag_width, diag_has_seed, diag_seed);
        if (ord->parsed()) return cmd_ord(ord_expr);
    } catch (const lset::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitUsage;
}
