// Copyright 2026 The ghzqec Authors
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


#include "ghzqec/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ghzqec;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args, int expected_code = EXIT_OK) {
    args.push_back("--json");
    args.push_back("-");
    CliRun r = run(args);
    EXPECT_EQ(r.code, expected_code) << r.err;
    return nlohmann::json::parse(r.out);
}

RunConfig config_for(const std::string &code) {
    RunConfig c;
    c.code = code;
    return c;
}

const nlohmann::ordered_json &find_check(const nlohmann::ordered_json &report, const std::string &name) {
    for (const auto &c : report["checks"]) {
        if (c["check"] == name) {
            return c;
        }
    }
    throw std::runtime_error("check not found: " + name);
}

}  // namespace

TEST(resolve_code, selectors) {
    EXPECT_EQ(resolve_code("shor").basis.num_qubits(), 9u);
    EXPECT_EQ(resolve_code("cat:4").basis.num_qubits(), 4u);
    EXPECT_EQ(resolve_code("blocks:2,1;3,1").basis.num_qubits(), 5u);
    EXPECT_EQ(resolve_code("leung41").basis.name(), "leung41");
    EXPECT_EQ(resolve_code("code62").basis.size(), 4u);
    EXPECT_TRUE(resolve_code("t0").t0.has_value());
    for (const char *bad : {"steane", "cat:", "cat:x", "cat:1", "blocks:", "blocks:1,2", "SHOR"}) {
        EXPECT_THROW(resolve_code(bad), std::invalid_argument) << bad;
    }
}

TEST(cmd_build, shor_blocks_and_cat) {
    auto shor = cmd_build(config_for("shor"));
    EXPECT_EQ(shor.exit_code, EXIT_OK);
    EXPECT_EQ(shor.report["basis"]["codewords"].size(), 2u);
    EXPECT_EQ(shor.report["basis"]["codewords"][0]["amplitudes"].size(), 8u);
    EXPECT_LE(shor.report["cross_check"]["max_deviation"].get<double>(), 1e-12);
    EXPECT_EQ(shor.report["schema"], "ghz-qecc-report/1");
    EXPECT_EQ(shor.report["version"], std::string(TOOL_VERSION));

    auto blocks = cmd_build(config_for("blocks:2,3"));
    EXPECT_EQ(blocks.report["basis"]["n"], 6);
    EXPECT_TRUE(blocks.report["cross_check"]["holds"].get<bool>());

    auto cat = cmd_build(config_for("cat:3"));
    const auto &words = cat.report["basis"]["codewords"];
    EXPECT_EQ(words[0]["amplitudes"][0]["bits"], "000");
    EXPECT_EQ(words[1]["amplitudes"][0]["bits"], "111");
    EXPECT_TRUE(cat.report["cross_check"]["holds"].get<bool>());

    auto t0 = cmd_build(config_for("t0"));
    EXPECT_EQ(t0.report["t0"]["minus_signs"], 4);
    EXPECT_TRUE(t0.report["t0"]["orthonormal"]["holds"].get<bool>());
}

TEST(cmd_verify, shor_all_checks_pass) {
    auto r = cmd_verify(config_for("shor"));
    EXPECT_EQ(r.exit_code, EXIT_OK) << r.text;
    EXPECT_TRUE(r.report["exact_pass"].get<bool>());
    EXPECT_EQ(r.report["checks"].size(), all_checks().size());
    EXPECT_EQ(find_check(r.report, "hamming")["result"]["lhs"], 44);
    EXPECT_EQ(find_check(r.report, "logicals")["result"]["ybar"], "-Y1 Y2 Y3 Y4 Y5 Y6 Y7 Y8 Y9 (n=9)");
    EXPECT_NE(r.text.find("PASS  stabilizers  Z1 Z2, Z2 Z3"), std::string::npos) << r.text;
}

TEST(cmd_verify, single_block_kl_fails) {
    auto c = config_for("blocks:5");
    c.checks = {"kl"};
    auto r = cmd_verify(c);
    EXPECT_EQ(r.exit_code, EXIT_CHECK_FAILED);
    EXPECT_NEAR(find_check(r.report, "kl")["result"]["offdiag_max"].get<double>(), 1.0, 1e-12);
}

TEST(cmd_verify, leung_hamming_is_informational) {
    auto c = config_for("leung41");
    c.checks = {"hamming"};
    auto r = cmd_verify(c);
    EXPECT_EQ(r.exit_code, EXIT_OK);
    const auto &h = find_check(r.report, "hamming");
    EXPECT_FALSE(h["result"]["satisfied"].get<bool>());
    EXPECT_FALSE(h["exact"].get<bool>());
    EXPECT_NE(r.text.find("INFO  hamming"), std::string::npos);
}

TEST(cmd_verify, inapplicable_checks) {
    auto c = config_for("code62");
    c.checks = {"stabilizers"};
    EXPECT_THROW(cmd_verify(c), InapplicableCheck);
    c.checks = {"logicals"};
    EXPECT_THROW(cmd_verify(c), InapplicableCheck);
    c.checks = {"bogus"};
    EXPECT_THROW(cmd_verify(c), std::invalid_argument);
    auto all = cmd_verify(config_for("code62"));
    EXPECT_EQ(all.report["skipped"].size(), 2u);
}

TEST(cmd_simulate, shor_pauli1) {
    auto c = config_for("shor");
    c.trials = 1000;
    c.seed = 7;
    auto r = cmd_simulate(c);
    EXPECT_GE(r.report["summary"]["min_fidelity"].get<double>(), 1 - 1e-10);
    EXPECT_EQ(r.report["summary"]["seed"], 7);
    EXPECT_EQ(r.report["summary"]["trials"], 1000);
}

TEST(cmd_simulate, leung_damping_and_empty_run) {
    auto c = config_for("leung41");
    c.model = "damping";
    c.gammas = {0.01};
    c.seed = 3;
    auto r = cmd_simulate(c);
    EXPECT_EQ(r.report["gamma"], 0.01);
    double mean = r.report["summary"]["mean_fidelity"].get<double>();
    EXPECT_GT(mean, 0.9);
    EXPECT_LE(mean, 1.0 + 1e-12);

    auto empty = config_for("shor");
    empty.trials = 0;
    empty.seed = 1;
    auto e = cmd_simulate(empty);
    EXPECT_EQ(e.exit_code, EXIT_OK);
    EXPECT_TRUE(e.report["summary"]["mean_fidelity"].is_null());
}

TEST(cmd_simulate, custom_errors) {
    auto c = config_for("shor");
    c.model = "pauli";
    c.errors = {"Z1 Z2"};
    c.correct = false;
    c.sweep = true;
    auto r = cmd_simulate(c);
    EXPECT_NEAR(r.report["summary"]["min_fidelity"].get<double>(), 1.0, 1e-12);
    auto bad = config_for("code62");
    bad.seed = 1;
    EXPECT_THROW(cmd_simulate(bad), InapplicableCheck);
}

TEST(run_cli, exit_codes) {
    EXPECT_EQ(run({"verify", "--code", "shor"}).code, EXIT_OK);
    EXPECT_EQ(run({"verify", "--blocks", "5", "--checks", "kl"}).code, EXIT_CHECK_FAILED);
    EXPECT_EQ(run({"verify", "--code", "code62", "--checks", "stabilizers"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"build", "--code", "steane"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"build", "--blocks", "3,x"}).code, EXIT_USAGE);
    EXPECT_EQ(run({"frobnicate"}).code, EXIT_USAGE);
    EXPECT_EQ(run({}).code, EXIT_USAGE);
    EXPECT_EQ(run({"--help"}).code, EXIT_OK);
    EXPECT_EQ(run({"braid-check", "--m", "-YX"}).code, EXIT_OK);
    EXPECT_EQ(run({"braid-check", "--m", "-YYY"}).code, EXIT_CHECK_FAILED);
    EXPECT_EQ(run({"ybe-check", "--seed", "1"}).code, EXIT_OK);
    EXPECT_EQ(run({"ghz", "--n", "3"}).code, EXIT_OK);
    EXPECT_EQ(run({"simulate", "--code", "shor", "--trials", "0", "--seed", "1"}).code, EXIT_OK);
}

TEST(run_cli, reports_are_byte_identical) {
    std::vector<std::string> args = {"simulate", "--code", "leung41", "--model", "damping",
                                     "--gamma", "0.05", "--trials", "300", "--seed", "11", "--json", "-"};
    EXPECT_EQ(run(args).out, run(args).out);
    std::vector<std::string> verify = {"verify", "--code", "shor", "--json", "-"};
    EXPECT_EQ(run(verify).out, run(verify).out);
}

TEST(run_cli, missing_seed_is_generated_and_printed) {
    CliRun r = run({"simulate", "--code", "shor", "--trials", "5"});
    EXPECT_EQ(r.code, EXIT_OK);
    EXPECT_NE(r.err.find("no --seed given; using seed "), std::string::npos);
    std::string seed = r.err.substr(r.err.rfind(' ') + 1);
    seed.pop_back();
    EXPECT_NE(r.out.find("seed=" + seed), std::string::npos) << r.out;
}

TEST(run_cli, json_header_and_files) {
    auto j = run_json({"ghz", "--n", "2"});
    EXPECT_EQ(j["schema"], "ghz-qecc-report/1");
    EXPECT_EQ(j["tolerances"]["exact"], 1e-12);
    EXPECT_EQ(j["states"].size(), 4u);

    auto dir = std::filesystem::temp_directory_path() / "ghzqec_cli_test";
    std::filesystem::create_directories(dir);
    auto json_path = (dir / "report.json").string();
    auto jsonl_path = (dir / "trials.jsonl").string();
    auto csv_path = (dir / "trials.csv").string();
    CliRun r = run({"simulate", "--code", "cat:3", "--model", "pauli", "--error", "Z1", "--sweep", "--json", json_path,
                 "--jsonl", jsonl_path, "--csv", csv_path});
    EXPECT_EQ(r.code, EXIT_OK) << r.err;
    std::ifstream in(json_path);
    auto report = nlohmann::json::parse(in);
    EXPECT_EQ(report["syndrome_table"]["defects"].size(), 1u);
    EXPECT_EQ(report["summary"]["min_fidelity"], 0.0);
    std::ifstream lines(jsonl_path);
    size_t count = 0;
    for (std::string line; std::getline(lines, line);) {
        count++;
    }
    EXPECT_EQ(count, 5u);
    EXPECT_TRUE(std::filesystem::exists(csv_path));
    std::filesystem::remove_all(dir);
}

TEST(run_cli, tolerance_override_is_recorded) {
    auto j = run_json({"verify", "--code", "cat:3", "--checks", "stabilizers", "--tol", "1e-9"});
    EXPECT_EQ(j["tolerances"]["exact"], 1e-9);
    EXPECT_EQ(j["checks"][0]["result"]["holds"], true);
}
