// Copyright 2026 The discordlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "discordlab/cli.hpp"
#include "discordlab/discord.hpp"

using namespace discordlab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
    const fs::path dir = fs::temp_directory_path() / "discordlab_cli_test" / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        lines.push_back(line);
    }
    return lines;
}

nlohmann::json report(const fs::path &dir) {
    return nlohmann::json::parse(slurp(dir / "report.json"));
}

std::vector<std::vector<double>> numeric_rows(const std::string &csv) {
    std::vector<std::vector<double>> rows;
    const auto lines = lines_of(csv);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        std::vector<double> row;
        std::istringstream ss(lines[k]);
        for (std::string cell; std::getline(ss, cell, ',');) {
            row.push_back(std::stod(cell));
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace

TEST_CASE("discord command") {
    const fs::path root = scratch("discord");
    const Run r = run({"discord", "--state", "werner:0.5", "--outdir", root.string(),
                       "--stamp", "t"});
    REQUIRE(r.code == kExitOk);
    const auto rep = report(root / "discord-t");
    CHECK(rep["tool"] == "discordlab");
    CHECK(rep["version"] == kToolVersion);
    CHECK(rep["seed"] == kDefaultSeed);
    CHECK(rep["config"]["state"] == "werner:0.5");
    CHECK(std::abs(rep["discord"]["value"].get<double>() - 0.262483) < 1e-4);
    CHECK(rep["closed_form"].get<double>() == doctest::Approx(0.262483).epsilon(1e-6));
    CHECK(rep["consistent"] == true);

    CHECK(run({"discord", "--state", "werner:0", "--outdir", root.string(), "--stamp", "z"})
              .code == kExitOk);
    CHECK(report(root / "discord-z")["discord"]["value"].get<double>() < 1e-9);
}

TEST_CASE("exported zero-discord file round trips through discord") {
    const fs::path root = scratch("export");
    const fs::path file = root / "zd_seed42.json";
    REQUIRE(run({"export-state", "--state", "zd:42", "--out", file.string()}).code == kExitOk);
    const Run r = run({"discord", "--state", "file:" + file.string(), "--outdir",
                       root.string(), "--stamp", "t"});
    REQUIRE(r.code == kExitOk);
    CHECK(report(root / "discord-t")["discord"]["value"].get<double>() < 1e-6);
    CHECK(report(root / "discord-t")["state_label"] == "zd:42");
}

TEST_CASE("vismap command") {
    const fs::path root = scratch("vismap");
    for (const char *c : {"0.2", "0.5"}) {
        const Run r = run({"vismap", "--state", std::string("werner:") + c, "--grid", "101",
                           "--phia", "0", "--phib", "0", "--outdir", root.string(), "--stamp",
                           c});
        REQUIRE(r.code == kExitOk);
    }
    const fs::path a = root / "vismap-0.2";
    const fs::path b = root / "vismap-0.5";
    CHECK(lines_of(slurp(a / "field.csv"))[0] == "alpha,beta,visibility");
    CHECK(lines_of(slurp(a / "closed_form.csv"))[0] == "alpha,beta,visibility");
    CHECK(lines_of(slurp(a / "zerolines.csv"))[0] == "line,beta,alpha,alpha_unwrapped");
    CHECK(lines_of(slurp(a / "field.csv")).size() == 101 * 101 + 1);
    CHECK(slurp(a / "heatmap.ppm").rfind("P5\n101 101\n255\n", 0) == 0);

    CHECK(report(a)["closed_form_max_deviation"].get<double>() < 1e-12);

    const auto za = numeric_rows(slurp(a / "zerolines.csv"));
    const auto zb = numeric_rows(slurp(b / "zerolines.csv"));
    REQUIRE(za.size() == zb.size());
    REQUIRE_FALSE(za.empty());
    for (std::size_t k = 0; k < za.size(); ++k) {
        CHECK(za[k][0] == zb[k][0]);
        CHECK(za[k][1] == zb[k][1]);
        CHECK(std::abs(za[k][2] - zb[k][2]) < 1e-9);
        const double d = std::abs(za[k][2] - std::fmod(za[k][1], std::numbers::pi));
        CHECK(std::min(d, std::numbers::pi - d) < 1e-9);
    }

    REQUIRE(run({"vismap", "--state", "builtin:maximally-mixed", "--grid", "11", "--outdir",
                 root.string(), "--stamp", "mm"})
                .code == kExitOk);
    CHECK(report(root / "vismap-mm")["zero_lines"]["degenerate"] == true);
}

TEST_CASE("compare-costs command") {
    const fs::path root = scratch("costs");
    REQUIRE(run({"compare-costs", "--m", "100", "--n", "10", "--outdir", root.string(),
                 "--stamp", "t"})
                .code == kExitOk);
    const auto rows = lines_of(slurp(root / "compare-costs-t" / "costs.csv"));
    CHECK(rows[0] == "n,protocol,tomography_fixed,tomography_sampled");
    CHECK(rows.back() == "10,10000000,1500,150000");
    CHECK(report(root / "compare-costs-t")["crossover_n"] == 3);

    REQUIRE(run({"compare-costs", "--m", "1", "--n", "3", "--outdir", root.string(), "--stamp",
                 "one"})
                .code == kExitOk);
    CHECK(lines_of(slurp(root / "compare-costs-one" / "costs.csv"))[1] == "2,32,15,60");

    REQUIRE(run({"compare-costs", "--da", "4", "--db", "2", "--n", "3", "--outdir",
                 root.string(), "--stamp", "d42"})
                .code == kExitOk);
    const auto sym = report(root / "compare-costs-d42")["symbolic"];
    CHECK(sym["protocol_exponent"] == 15);
    CHECK(sym["tomography_sampled_exponent"] == 12);
    CHECK(sym["tomography_sampled_multiplier"] == 35);
}

TEST_CASE("simulate command") {
    const fs::path root = scratch("simulate");
    REQUIRE(run({"simulate", "--state", "werner:0.5", "--m", "200", "--n", "5", "--outdir",
                 root.string(), "--stamp", "t"})
                .code == kExitOk);
    const auto rep = report(root / "simulate-t");
    CHECK(rep["protocol"]["measurement_count"] == "625000");
    CHECK(rep["protocol"]["predicted_count"] == "625000");
    CHECK(rep["tomography"]["measurement_count"] == "3000");
    CHECK(fs::exists(root / "simulate-t" / "recon_state.json"));

    REQUIRE(run({"simulate", "--state", "werner:0.5", "--m", "inf", "--n", "7", "--outdir",
                 root.string(), "--stamp", "inf"})
                .code == kExitOk);
    CHECK(report(root / "simulate-inf")["protocol"]["max_deviation_from_exact"].get<double>() <
          1e-12);

    const Run guarded = run({"simulate", "--state", "werner:0.5", "--m", "10000", "--n", "21",
                             "--mode", "protocol", "--outdir", root.string(), "--stamp", "g"});
    CHECK(guarded.code == kExitResourceGuard);
    CHECK(guarded.err.find("40841010000") != std::string::npos);
}

TEST_CASE("reruns are byte identical") {
    const fs::path root = scratch("rerun");
    for (const char *stamp : {"a", "b"}) {
        REQUIRE(run({"simulate", "--state", "ginibre:3", "--m", "300", "--n", "5", "--seed",
                     "77", "--outdir", root.string(), "--stamp", stamp})
                    .code == kExitOk);
    }
    for (const char *f : {"field.csv", "zerolines.csv", "heatmap.ppm", "recon_state.json",
                          "report.json"}) {
        CAPTURE(f);
        CHECK(slurp(root / "simulate-a" / f) == slurp(root / "simulate-b" / f));
    }
    REQUIRE(run({"simulate", "--state", "ginibre:3", "--m", "300", "--n", "5", "--seed", "78",
                 "--outdir", root.string(), "--stamp", "c"})
                .code == kExitOk);
    CHECK(slurp(root / "simulate-a" / "field.csv") != slurp(root / "simulate-c" / "field.csv"));
}

TEST_CASE("seed precedence") {
    const fs::path root = scratch("seed");
    ::setenv(kSeedEnvVar, "1234", 1);
    REQUIRE(run({"discord", "--state", "werner:0.1", "--outdir", root.string(), "--stamp", "env"})
                .code == kExitOk);
    REQUIRE(run({"discord", "--state", "werner:0.1", "--seed", "99", "--outdir", root.string(),
                 "--stamp", "flag"})
                .code == kExitOk);
    ::setenv(kSeedEnvVar, "not-a-number", 1);
    const int bad_env = run({"discord", "--state", "werner:0.1", "--outdir", root.string(),
                             "--stamp", "bad"})
                            .code;
    ::unsetenv(kSeedEnvVar);
    CHECK(report(root / "discord-env")["seed"] == 1234);
    CHECK(report(root / "discord-flag")["seed"] == 99);
    CHECK(bad_env == kExitValidation);
}

TEST_CASE("exit codes") {
    const fs::path root = scratch("codes");
    const std::string out = root.string();
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"discord"}).code == kExitUsage);
    CHECK(run({"discord", "--state", "werner:0.5", "--format", "xml", "--outdir", out}).code ==
          kExitUsage);
    CHECK(run({"vismap", "--state", "werner:0.5", "--grid", "1", "--outdir", out}).code ==
          kExitUsage);
    CHECK(run({"discord", "--state", "werner:1.5", "--outdir", out}).code == kExitValidation);
    CHECK(run({"discord", "--state", "warner:0.5", "--outdir", out}).code == kExitValidation);
    CHECK(run({"discord", "--state", "file:/nonexistent.json", "--outdir", out}).code ==
          kExitValidation);
    CHECK(run({"simulate", "--state", "werner:0.5", "--m", "0", "--outdir", out}).code ==
          kExitUsage);
    CHECK(run({"--version"}).code == kExitOk);

    CHECK(exit_code_for(ErrorKind::ResourceGuard) == kExitResourceGuard);
    CHECK(exit_code_for(ErrorKind::NotConverged) == kExitNumerical);
    CHECK(exit_code_for(ErrorKind::NotPositive) == kExitValidation);
}

TEST_CASE("state specs") {
    CHECK(parse_state_spec("werner:0.25").werner_c == 0.25);
    CHECK(parse_state_spec("builtin:werner:0.25").state.mat() == werner(0.25).mat());
    CHECK(parse_state_spec("singlet").werner_c == 1.0);
    CHECK_FALSE(parse_state_spec("maximally-mixed").werner_c.has_value());
    const auto p = parse_state_spec("product:0,0,1;1,0,0").state.mat();
    CHECK(p == tensor(qubit_state({0, 0, 1}), qubit_state({1, 0, 0})));
    CHECK(parse_state_spec("ginibre:5").state.mat() == random_state({5}).mat());
    CHECK_THROWS_AS(parse_state_spec("product:0,0,1"), Error);
    CHECK_THROWS_AS(parse_state_spec("zd:abc"), Error);
}
