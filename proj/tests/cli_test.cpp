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

// Exercises the lset executable end to end: file formats, JSON output,
// exit codes, and the build/query round trip against the in-process library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lset/bitstring.hpp"
#include "lset/labelled_set.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

class Workspace {
public:
    Workspace() {
        std::mt19937_64 rng(std::random_device{}());
        dir_ = fs::temp_directory_path() /
               ("lset_cli_" + std::to_string(rng()));
        fs::create_directories(dir_);
    }
    ~Workspace() {
        std::error_code ec;
        fs::remove_all(dir_, ec);
    }

    fs::path path(const std::string& name) const { return dir_ / name; }

    fs::path write(const std::string& name, const std::string& content) const {
        fs::path p = path(name);
        std::ofstream out(p, std::ios::binary);
        out << content;
        return p;
    }

    RunResult run(const std::string& args) const {
        fs::path out = path("stdout.txt");
        fs::path err = path("stderr.txt");
        std::string cmd = std::string(LSET_CLI_PATH) + " " + args + " > " +
                          out.string() + " 2> " + err.string();
        int status = std::system(cmd.c_str());
        int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        return {code, slurp(out), slurp(err)};
    }

private:
    fs::path dir_;
};

}  // namespace

TEST_CASE("ord normalizes expressions") {
    Workspace ws;
    RunResult r = ws.run("ord 1+w");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "w\n");

    CHECK(ws.run("ord w^2*3+w+4").out == "w^2*3+w+4\n");
    CHECK(ws.run("ord \"(w+1)*2\"").out == "w*2+1\n");

    RunResult bad = ws.run("ord 1x");
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("unknown commands are usage errors") {
    Workspace ws;
    CHECK(ws.run("frobnicate").exit_code == 1);
    CHECK(ws.run("").exit_code == 1);
    CHECK(ws.run("--help").exit_code == 0);
}

TEST_CASE("build writes the exact serialized form") {
    Workspace ws;
    ws.write("members.txt", "# demo set\n010\n111\n");
    RunResult r = ws.run("build " + ws.path("members.txt").string() + " -o " +
                         ws.path("demo.lset").string());
    REQUIRE(r.exit_code == 0);
    std::string bytes = slurp(ws.path("demo.lset"));
    REQUIRE(bytes.size() == 8);
    CHECK(bytes.substr(0, 5) == "LSET1");
    CHECK(uint8_t(bytes[5]) == 3);
    CHECK(uint8_t(bytes[6]) == 0x01);
    CHECK(uint8_t(bytes[7]) == 0x84);
}

TEST_CASE("build rejects mixed widths naming the line") {
    Workspace ws;
    ws.write("members.txt", "010\n111\n01\n");
    RunResult r = ws.run("build " + ws.path("members.txt").string() + " -o " +
                         ws.path("bad.lset").string());
    CHECK(r.exit_code == 2);
    CHECK(r.err.find("line 3") != std::string::npos);
}

TEST_CASE("build of an empty members file needs an explicit width") {
    Workspace ws;
    ws.write("empty.txt", "# nothing here\n");
    RunResult no_width = ws.run("build " + ws.path("empty.txt").string() +
                                " -o " + ws.path("e.lset").string());
    CHECK(no_width.exit_code == 2);

    RunResult with_width =
        ws.run("build " + ws.path("empty.txt").string() + " --width 4 -o " +
               ws.path("e.lset").string());
    CHECK(with_width.exit_code == 0);
    std::ifstream in(ws.path("e.lset"), std::ios::binary);
    lset::LabelledSet set = lset::LabelledSet::load(in);
    CHECK(set.width() == 4);
    CHECK(set.member_count() == 0);
}

TEST_CASE("query emits the trace JSON") {
    Workspace ws;
    ws.write("members.txt", "010\n111\n");
    REQUIRE(ws.run("build " + ws.path("members.txt").string() + " -o " +
                   ws.path("s.lset").string())
                .exit_code == 0);

    RunResult hit = ws.run("query " + ws.path("s.lset").string() + " 010");
    REQUIRE(hit.exit_code == 0);
    json j = json::parse(hit.out);
    CHECK(j["query"] == "010");
    CHECK(j["result"] == 1);
    CHECK(j["bits_read"] == 4);
    CHECK(j["steps"] == 4);
    CHECK(j["path"] == json::array({"", "0", "01", "010"}));

    RunResult miss = ws.run("query " + ws.path("s.lset").string() + " 011");
    json m = json::parse(miss.out);
    CHECK(m["result"] == 0);
    CHECK(m["bits_read"] == 4);

    RunResult mismatch = ws.run("query " + ws.path("s.lset").string() + " 01");
    CHECK(mismatch.exit_code == 2);
    RunResult garbage = ws.run("query " + ws.path("s.lset").string() + " 01a");
    CHECK(garbage.exit_code == 2);
}

TEST_CASE("enum lists the alternating enumeration") {
    Workspace ws;
    ws.write("members.txt", "00\n11\n");
    REQUIRE(ws.run("build " + ws.path("members.txt").string() + " -o " +
                   ws.path("s.lset").string())
                .exit_code == 0);

    RunResult r = ws.run("enum " + ws.path("s.lset").string() + " --limit 4");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out == "00 1\n01 0\n11 1\n10 0\n");

    RunResult all = ws.run("enum " + ws.path("s.lset").string());
    CHECK(all.out == r.out);
}

TEST_CASE("build then query agrees with the library for every point") {
    Workspace ws;
    std::mt19937_64 rng(160160);
    const size_t n = 10;
    const uint64_t universe = uint64_t{1} << n;

    std::string members;
    std::vector<lset::BitString> picked;
    for (uint64_t i = 0; i < universe; ++i) {
        if (rng() % 4 == 0) {
            lset::BitString x = lset::BitString::from_index(n, i);
            members += x.to_string() + "\n";
            picked.push_back(x);
        }
    }
    ws.write("members.txt", members);
    REQUIRE(ws.run("build " + ws.path("members.txt").string() + " -o " +
                   ws.path("s.lset").string())
                .exit_code == 0);

    lset::LabelledSet expect =
        lset::LabelledSet::build_from_members(n, picked);

    // file-level agreement for the whole universe
    std::ifstream in(ws.path("s.lset"), std::ios::binary);
    lset::LabelledSet loaded = lset::LabelledSet::load(in);
    REQUIRE(loaded == expect);

    // process-level agreement through the query subcommand
    for (uint64_t i = 0; i < universe; ++i) {
        lset::BitString x = lset::BitString::from_index(n, i);
        RunResult r = ws.run("query " + ws.path("s.lset").string() + " " +
                             x.to_string());
        REQUIRE(r.exit_code == 0);
        json j = json::parse(r.out);
        REQUIRE(j["result"] == (expect.label_of(x) ? 1 : 0));
        REQUIRE(j["bits_read"] == n + 1);
    }
}

TEST_CASE("bench reports are deterministic apart from timing") {
    Workspace ws;
    std::string args = "bench --width 8 --queries 500 --seed 99 --density 0.3";
    RunResult a = ws.run(args);
    RunResult b = ws.run(args);
    REQUIRE(a.exit_code == 0);
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    ja.erase("timing_ns");
    jb.erase("timing_ns");
    CHECK(ja.dump() == jb.dump());
    CHECK(ja["bisection"]["bits_read_min"] == 9);
    CHECK(ja["bisection"]["bits_read_max"] == 9);
    CHECK(ja["agreement"] == true);

    RunResult threaded = ws.run(args + " --threads 4");
    json jt = json::parse(threaded.out);
    jt.erase("timing_ns");
    jt.erase("threads");
    ja.erase("threads");
    CHECK(ja.dump() == jt.dump());

    CHECK(ws.run("bench --width 8 --queries 0").exit_code == 2);
    CHECK(ws.run("bench --width 8 --density 1.5").exit_code == 2);
}

TEST_CASE("diag prints the witness table") {
    Workspace ws;
    RunResult r = ws.run("diag --width 2");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["width"] == 2);
    CHECK(j["coding"] == "canonical");
    CHECK(j["diagonal_escapes_coding"] == true);
    REQUIRE(j["witnesses"].size() == 4);
    for (const auto& row : j["witnesses"]) {
        CHECK(row["code"] == row["witness"]);
        CHECK(row["decode_at_code"] != row["diagonal_at_code"]);
    }

    RunResult seeded = ws.run("diag --width 3 --seed 42");
    json s = json::parse(seeded.out);
    CHECK(s["coding"] == "randomized");
    CHECK(s["seed"] == 42);
    CHECK(s["diagonal_escapes_coding"] == true);
    CHECK(s["witnesses"].size() == 8);
}

TEST_CASE("missing files are data errors") {
    Workspace ws;
    CHECK(ws.run("query " + ws.path("nope.lset").string() + " 0").exit_code == 2);
    CHECK(ws.run("build " + ws.path("nope.txt").string() + " -o x.lset").exit_code == 2);

    ws.write("junk.lset", "not a set file");
    CHECK(ws.run("enum " + ws.path("junk.lset").string()).exit_code == 2);
}
