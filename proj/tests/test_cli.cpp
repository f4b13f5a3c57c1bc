/*
   Copyright 2026 The drinfeld-al Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "drinfeld/json_io.hpp"

using namespace drinfeld;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
};

fs::path tmpdir() {
    static fs::path d = [] {
        fs::path p = fs::temp_directory_path() / ("drinfeld_cli_" + std::to_string(::getpid()));
        fs::create_directories(p);
        return p;
    }();
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CliRun run(const std::string& args) {
    fs::path o = tmpdir() / "stdout.txt";
    std::string cmd = std::string(DRINFELD_CLI_PATH) + " " + args + " > " + o.string() + " 2>/dev/null";
    int st = std::system(cmd.c_str());
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, slurp(o)};
}

std::string sample(const char* name) { return std::string(DRINFELD_SAMPLES_DIR) + "/" + name; }

std::string write_tmp(const std::string& name, const std::string& body) {
    fs::path p = tmpdir() / name;
    std::ofstream(p) << body;
    return p.string();
}

}  // namespace

TEST(Verify, DefaultGridPasses) {
    std::string out = (tmpdir() / "default.json").string();
    ASSERT_EQ(run("verify --config " + sample("default_grid.json") + " --out " + out).code, 0);
    json r = json::parse(slurp(out));
    EXPECT_EQ(r.at("version"), 1);
    EXPECT_EQ(r.at("summary").at("fail"), 0);
    EXPECT_GT(r.at("summary").at("pass").get<int>(), 0);
    EXPECT_EQ(r.at("results").size(), static_cast<std::size_t>(r["summary"]["pass"].get<int>() +
                                                                  r["summary"]["not_applicable"].get<int>()));
    for (auto& row : r.at("results")) {
        EXPECT_TRUE(row.contains("identity"));
        EXPECT_NE(row.at("status"), "fail");
    }
}

TEST(Verify, OverlapIsSkippedWithReason) {
    CliRun r = run("verify --config " + sample("overlap.json"));
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j.at("skipped").size(), 1u);
    EXPECT_EQ(j["skipped"][0].at("reason"), "skipped: hypothesis (pi,P)=1");
    EXPECT_EQ(j.at("results").size(), 0u);
}

TEST(Verify, PerturbedIdentityFails) {
    CliRun r = run("verify --config " + sample("perturbed.json"));
    ASSERT_EQ(r.code, 1);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("summary").at("fail"), 1);
    auto& row = j.at("results").at(0);
    EXPECT_EQ(row.at("status"), "fail");
    EXPECT_FALSE(row.at("diff").empty());
    EXPECT_TRUE(row.contains("lhs_table"));
    // the flag form does the same
    std::string cfg = write_tmp("eqtr.json", R"({"field": 3, "pi": "t+1", "P": "t", "weights": [[4,1]], "identities": ["eqTr"]})");
    EXPECT_EQ(run("verify --config " + cfg).code, 0);
    EXPECT_EQ(run("verify --config " + cfg + " --perturb eqTr").code, 1);
}

TEST(Verify, ConfigErrorsExitTwo) {
    EXPECT_EQ(run("verify --config /nonexistent.json").code, 2);
    EXPECT_EQ(run("verify --config " + write_tmp("bad1.json", "{not json")).code, 2);
    EXPECT_EQ(run("verify --config " + write_tmp("bad2.json", R"({"field": 3, "pi": "t+1", "P": "t", "weights": [[4,1]], "colour": 1})")).code, 2);
    EXPECT_EQ(run("verify --config " + write_tmp("bad3.json", R"({"field": 6, "pi": "t+1", "P": "t", "weights": [[4,1]]})")).code, 2);
    EXPECT_EQ(run("verify --config " + write_tmp("bad4.json", R"({"field": 3, "pi": "t+1", "P": "t", "weights": [[4,1]], "identities": ["nope"]})")).code, 2);
    EXPECT_EQ(run("verify").code, 2);
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
}

TEST(Verify, ReportIsDeterministicApartFromWallTime) {
    std::string a = (tmpdir() / "a.json").string(), b = (tmpdir() / "b.json").string();
    ASSERT_EQ(run("verify --config " + sample("default_grid.json") + " --out " + a).code, 0);
    ASSERT_EQ(run("verify --config " + sample("default_grid.json") + " --workers 3 --out " + b).code, 0);
    json ja = json::parse(slurp(a)), jb = json::parse(slurp(b));
    ja["summary"].erase("wall_time_s");
    jb["summary"].erase("wall_time_s");
    EXPECT_EQ(ja["results"], jb["results"]);
    EXPECT_EQ(ja["summary"], jb["summary"]);
}

TEST(Series, GkIsIntegral) {
    CliRun r = run("series gk --q 3 --k 1 --order 10");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("prec"), 10);
    EXPECT_EQ(j.at("k"), 2);
    EXPECT_EQ(j.at("m"), 0);
    ASSERT_FALSE(j.at("coeffs").empty());
    EXPECT_EQ(j["coeffs"][0].at("exp"), 0);
    EXPECT_EQ(j["coeffs"][0].at("num"), "1");
    for (auto& c : j.at("coeffs")) EXPECT_EQ(c.at("den"), "1");
}

TEST(Series, OutputIsByteIdentical) {
    CliRun a = run("series gk --q 2 --k 2 --order 25");
    CliRun b = run("series gk --q 2 --k 2 --order 25");
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_FALSE(a.out.empty());
}

TEST(Series, VpAfterSubtractingOne) {
    std::string g = (tmpdir() / "g1.json").string();
    ASSERT_EQ(run("series gk --q 3 --k 1 --order 30 --out " + g).code, 0);
    CliRun r = run("series vp --in " + g + " --P t --subtract 1");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_TRUE(j.at("vp").is_number());
    EXPECT_GE(j["vp"].get<int>(), 1);
    json j0 = json::parse(run("series vp --in " + g + " --P t").out);
    EXPECT_EQ(j0.at("vp"), 0);
}

TEST(Series, UpMatchesLibrary) {
    std::string g = (tmpdir() / "g1b.json").string();
    ASSERT_EQ(run("series gk --q 3 --k 1 --order 30 --out " + g).code, 0);
    FormModel f = form_from_json(json::parse(slurp(g)));
    const Field* F = make_field(3, 1);
    for (const char* b : {"goss", "cyclotomic"}) {
        CliRun r = run("series up --in " + g + " --P t --backend " + b);
        ASSERT_EQ(r.code, 0) << b;
        FormModel u = form_from_json(json::parse(r.out));
        EXPECT_EQ(u.exp_inf, series_Up(f.exp_inf, parse_poly(F, "t"))) << b;
        EXPECT_EQ(u.exp_inf.prec(), 10);
    }
}

TEST(Series, TraceOfDpModel) {
    std::string g = (tmpdir() / "g1c.json").string(), d = (tmpdir() / "dp.json").string();
    ASSERT_EQ(run("series gk --q 3 --k 1 --order 30 --out " + g).code, 0);
    ASSERT_EQ(run("series dp --in " + g + " --P t --out " + d).code, 0);
    json dj = json::parse(slurp(d));
    EXPECT_EQ(dj.at("level"), "t");
    EXPECT_TRUE(dj.at("al_images").contains("t"));
    CliRun r = run("series trace --in " + d + " --P t");
    ASSERT_EQ(r.code, 0);
    const Field* F = make_field(3, 1);
    Poly P = parse_poly(F, "t");
    FormModel f = form_from_json(json::parse(slurp(g)));
    USeries want = series_Tp(f.exp_inf, f.wt, P).scaled(RatFunc(P).pow(f.wt.m - f.wt.k)).truncated(10);
    EXPECT_EQ(form_from_json(json::parse(r.out)).exp_inf, want);
    // T_p needs p prime to the level, the trace needs p | level
    EXPECT_EQ(run("series tp --in " + d + " --P t").code, 2);
    EXPECT_EQ(run("series trace --in " + g + " --P t").code, 2);
}

TEST(Series, TraceWithoutImageIsUsageError) {
    std::string s = write_tmp("bare.json", R"({"q": 3, "prec": 5, "level": "t", "k": 2, "m": 0,
        "coeffs": [{"exp": 0, "num": "1", "den": "1"}]})");
    EXPECT_EQ(run("series trace --in " + s + " --P t").code, 2);
}

TEST(Series, InjectedFaultsExitThree) {
    std::string g = (tmpdir() / "g1d.json").string();
    ASSERT_EQ(run("series gk --q 3 --k 1 --order 30 --out " + g).code, 0);
    EXPECT_EQ(run("series up --in " + g + " --P t --inject-fault residual").code, 3);
    EXPECT_EQ(run("series up --in " + g + " --P t^2+1 --inject-fault galois").code, 3);
    EXPECT_EQ(run("series up --in " + g + " --P t --inject-fault cosmic").code, 2);
}

TEST(Series, BadArgumentsExitTwo) {
    EXPECT_EQ(run("series gk --q 3").code, 2);
    EXPECT_EQ(run("series gk --q 3 --k 1 --bogus").code, 2);
    EXPECT_EQ(run("series gk --q 6 --k 1").code, 2);
    EXPECT_EQ(run("series up --in /nonexistent --P t").code, 2);
    std::string g = (tmpdir() / "g1e.json").string();
    ASSERT_EQ(run("series gk --q 3 --k 1 --order 10 --out " + g).code, 0);
    EXPECT_EQ(run("series up --in " + g + " --P t^2").code, 2);
    EXPECT_EQ(run("series vincent --q 3 --pi t^2+t --P t").code, 2);
}

TEST(Series, Vincent) {
    CliRun r = run("series vincent --q 3 --n 1 --r 1 --pi t+1 --P t --order 20");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    EXPECT_EQ(j.at("level"), "t^2+t");
    EXPECT_EQ(j.at("k"), 6);
    EXPECT_TRUE(j.at("al_images").contains("t"));
}

TEST(Cusps, Counts) {
    for (auto [lvl, n] : std::vector<std::pair<std::string, std::size_t>>{{"t", 2}, {"t^2+t", 4}}) {
        for (const char* sub : {"cusps", "series cusps"}) {
            CliRun r = run(std::string(sub) + " --q 3 --json --level " + lvl);
            ASSERT_EQ(r.code, 0);
            json j = json::parse(r.out);
            EXPECT_EQ(j.at("cusps").size(), n) << lvl;
            EXPECT_TRUE(j.at("atkin_lehner").contains(lvl));
        }
    }
    EXPECT_EQ(run("cusps --q 3 --level 2*t").code, 2);
    EXPECT_EQ(run("cusps --q 3").code, 2);
}
