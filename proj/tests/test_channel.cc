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


#include "ghzqec/channel.h"

#include <gtest/gtest.h>

#include <cmath>

#include "dense_oracle.h"

using namespace ghzqec;

namespace {

SparseState plus_state() {
    return (SparseState::basis(1, 0) + SparseState::basis(1, 1)).scaled(1 / std::sqrt(2.0));
}

}  // namespace

TEST(kraus, completeness_and_products) {
    for (double gamma : {0.0, 1e-4, 0.1, 0.5, 0.999, 1.0}) {
        KrausChannel c(gamma);
        EXPECT_LE(c.completeness_deviation(), 1e-14) << gamma;
        oracle::Mat e0 = oracle::damping_e0(gamma);
        oracle::Mat e1 = oracle::damping_e1(gamma);
        EXPECT_LE(oracle::max_abs(e0.adjoint() * e0 + e1.adjoint() * e1 - oracle::id2()), 1e-14);
    }
    EXPECT_THROW(KrausChannel(-0.1), std::invalid_argument);
    EXPECT_THROW(KrausChannel(1.5), std::invalid_argument);
    auto products = damping_kraus_products(4, 0.2);
    ASSERT_EQ(products.size(), 5u);
    EXPECT_EQ(products[0].label, "E0^4");
    EXPECT_EQ(products[0].damped_weight, 0u);
    EXPECT_EQ(products[3].label, "E1_3");
    EXPECT_EQ(products[3].factors[2], KrausChannel(0.2).jump());
}

TEST(syndrome_table, shor_single_qubit_paulis) {
    auto basis = build_shor();
    auto stabs = shor_stabilizers();
    auto errors = single_qubit_errors(9, false);
    ASSERT_EQ(errors.size(), 27u);
    auto table = build_syndrome_table(stabs, errors, basis);
    EXPECT_TRUE(table.defects().empty());

    auto z = [](size_t q) { return PauliString::single(9, q, PauliLetter::Z); };
    EXPECT_EQ(syndrome_of(stabs, z(1)), syndrome_of(stabs, z(2)));
    EXPECT_EQ(syndrome_of(stabs, z(1)), syndrome_of(stabs, z(3)));
    const auto &entry = table.entries().at(syndrome_of(stabs, z(1)));
    EXPECT_EQ(entry.correction, z(1));
    EXPECT_EQ(entry.degenerate, (std::vector<PauliString>{z(2), z(3)}));
    EXPECT_EQ(*table.lookup(Syndrome(8, 0)), PauliString::identity(9));
    EXPECT_EQ(syndrome_str(syndrome_of(stabs, PauliString::identity(9))), "00000000");
    // 1 zero entry + 9 X + 9 Y + 3 Z-block classes.
    EXPECT_EQ(table.entries().size(), 22u);
    EXPECT_EQ(table.collisions(), 6u);
}

TEST(syndrome_table, corrections_anticommute_with_flagged_stabilizers) {
    for (const char *text : {"3,3", "2,3", "2,1;3,1", "4,2"}) {
        auto spec = BlockSpec::parse(text);
        auto basis = build_repetition_code(spec);
        auto stabs = block_stabilizers(spec);
        auto errors = single_qubit_errors(spec.total_qubits(), false);
        auto table = build_syndrome_table(stabs, errors, basis);
        for (const auto &[s, entry] : table.entries()) {
            for (size_t i = 0; i < stabs.size(); i++) {
                EXPECT_EQ(commutation_sign(stabs[i], entry.correction) == -1, s[i] == 1) << text;
            }
        }
    }
}

TEST(syndrome_table, single_block_z1_is_a_defect) {
    auto spec = BlockSpec::parse("5");
    auto basis = build_repetition_code(spec);
    auto stabs = block_stabilizers(spec);
    ASSERT_EQ(stabs.size(), 4u);
    std::vector<PauliString> errors = {PauliString::single(5, 1, PauliLetter::Z)};
    auto table = build_syndrome_table(stabs, errors, basis);
    EXPECT_EQ(syndrome_of(stabs, errors[0]), Syndrome(4, 0));
    ASSERT_EQ(table.defects().size(), 1u);
    EXPECT_EQ(table.defects()[0], errors[0]);
}

TEST(syndrome_table, trivial_zero_syndrome_errors_are_not_defects) {
    auto basis = build_shor();
    auto z12 = PauliString::from_dense("ZZIIIIIII");
    EXPECT_TRUE(acts_trivially(z12, basis));
    EXPECT_FALSE(acts_trivially(PauliString::from_dense("ZZZZZZZZZ"), basis));
    std::vector<PauliString> errors = {z12};
    auto table = build_syndrome_table(shor_stabilizers(), errors, basis);
    EXPECT_TRUE(table.defects().empty());
    EXPECT_EQ(table.collisions(), 1u);
}

TEST(extract_syndrome, single_bit_and_superposition) {
    auto basis = build_shor();
    auto stabs = shor_stabilizers();
    auto x1 = PauliString::single(9, 1, PauliLetter::X);
    auto s = extract_syndrome(apply_string(x1, basis.codeword(0)), stabs);
    EXPECT_EQ(syndrome_str(s), "10000000");
    EXPECT_EQ(syndrome_str(extract_syndrome(basis.codeword(0), stabs)), "00000000");
    auto mixed = (basis.codeword(0) + apply_string(x1, basis.codeword(0))).normalized();
    EXPECT_THROW(extract_syndrome(mixed, stabs), SyndromeError);
}

TEST(correct, degenerate_and_round_trip) {
    auto basis = build_shor();
    auto errors = single_qubit_errors(9, false);
    auto table = build_syndrome_table(shor_stabilizers(), errors, basis);

    auto z2 = PauliString::single(9, 2, PauliLetter::Z);
    auto fixed = correct(apply_string(z2, basis.codeword(0)), table);
    EXPECT_EQ(fixed.applied, PauliString::single(9, 1, PauliLetter::Z));
    EXPECT_NEAR(std::norm(inner(basis.codeword(0), fixed.state)), 1.0, 1e-12);

    auto x5 = PauliString::single(9, 5, PauliLetter::X);
    fixed = correct(apply_string(x5, basis.codeword(1)), table);
    EXPECT_NEAR(std::norm(inner(basis.codeword(1), fixed.state)), 1.0, 1e-12);
    EXPECT_EQ(extract_syndrome(fixed.state, table.stabilizers()), Syndrome(8, 0));

    fixed = correct(basis.codeword(0), table);
    EXPECT_EQ(max_abs_diff(fixed.state, basis.codeword(0)), 0.0);

    SyndromeTable empty(shor_stabilizers());
    EXPECT_THROW(correct(apply_string(x5, basis.codeword(0)), empty), std::out_of_range);
}

TEST(damp_trajectory, limiting_cases) {
    auto t = damp_trajectory(KrausChannel(0.0), plus_state(), uint64_t{3});
    EXPECT_TRUE(t.damped.empty());
    EXPECT_LT(max_abs_diff(t.state, plus_state()), 1e-15);

    t = damp_trajectory(KrausChannel(1.0), SparseState::basis(1, 1), uint64_t{3});
    EXPECT_EQ(t.damped, (std::vector<size_t>{1}));
    EXPECT_EQ(t.jump_probabilities[0], 1.0);
    EXPECT_LT(max_abs_diff(t.state, SparseState::basis(1, 0)), 1e-15);
    EXPECT_THROW(damp_trajectory(KrausChannel(0.1), plus_state().scaled(2.0), uint64_t{1}), std::invalid_argument);
}

TEST(damp_trajectory, no_jump_branch_matches_kraus_arithmetic) {
    size_t no_jump = 0;
    for (uint64_t seed = 0; seed < 50; seed++) {
        auto t = damp_trajectory(KrausChannel(0.1), plus_state(), seed);
        EXPECT_NEAR(t.jump_probabilities[0], 0.05, 1e-15);
        EXPECT_LE(t.branch_sum_deviation, 1e-12);
        if (t.damped.empty()) {
            no_jump++;
            oracle::Vec expected = oracle::damping_e0(0.1) * oracle::dense(plus_state());
            expected /= expected.norm();
            EXPECT_LT(oracle::distance(t.state, expected), 1e-15);
            EXPECT_NEAR(std::abs(t.state.amplitude(BasisIndex{1})), std::sqrt(0.9 / 1.9), 1e-15);
        } else {
            EXPECT_LT(max_abs_diff(t.state, SparseState::basis(1, 0)), 1e-15);
        }
    }
    EXPECT_GT(no_jump, 40u);
}

TEST(damp_trajectory, probabilities_sum_to_one_on_codewords) {
    auto basis = build_leung_4_1();
    Rng rng(9);
    for (int trial = 0; trial < 50; trial++) {
        auto t = damp_trajectory(KrausChannel(0.3), basis.codeword(trial % 2), rng);
        EXPECT_LE(t.branch_sum_deviation, 1e-12);
        EXPECT_TRUE(t.state.is_normalized());
        EXPECT_EQ(t.jump_probabilities.size(), 4u);
    }
}

TEST(damp_trajectory, deterministic_given_seed) {
    auto basis = build_leung_4_1();
    auto a = damp_trajectory(KrausChannel(0.4), basis.codeword(0), uint64_t{77});
    auto b = damp_trajectory(KrausChannel(0.4), basis.codeword(0), uint64_t{77});
    EXPECT_EQ(a.damped, b.damped);
    EXPECT_EQ(max_abs_diff(a.state, b.state), 0.0);
}

TEST(logical_inputs, one_qubit_code) {
    auto inputs = logical_inputs(build_shor());
    ASSERT_EQ(inputs.size(), 4u);
    EXPECT_EQ(inputs[2].label, "|0_L>+|1_L>");
    EXPECT_TRUE(inputs[3].state.is_normalized());
    EXPECT_EQ(logical_inputs(build_6_2()).size(), 10u);
}

TEST(run_trials, shor_corrects_every_single_qubit_error) {
    auto basis = build_shor();
    auto model = single_qubit_pauli_model(9);
    auto table = build_syndrome_table(shor_stabilizers(), model.errors, basis);
    auto summary = run_trials(basis, &table, model, 10000, 2024);
    EXPECT_EQ(summary.trials, 10000u);
    EXPECT_GE(summary.min_fidelity, 1 - 1e-10);
    EXPECT_EQ(summary.per_error.size(), 27u);
    for (const auto &r : summary.results) {
        EXPECT_LE(r.fidelity, 1 + 1e-12);
    }
    auto sweep = sweep_pauli_errors(basis, &table, model);
    EXPECT_EQ(sweep.trials, 27u * 4u);
    EXPECT_GE(sweep.min_fidelity, 1 - 1e-10);
}

TEST(run_trials, shor_z1z2_needs_no_correction) {
    auto basis = build_shor();
    PauliErrorModel model{"z1z2", {PauliString::from_dense("ZZIIIIIII")}, false};
    auto summary = sweep_pauli_errors(basis, nullptr, model);
    for (const auto &r : summary.results) {
        EXPECT_NEAR(r.fidelity, 1.0, 1e-12) << r.input;
        EXPECT_FALSE(r.correction.has_value());
    }
}

TEST(run_trials, cat_z1_flips_relative_sign) {
    auto basis = build_cat(3);
    PauliErrorModel model{"z1", {PauliString::single(3, 1, PauliLetter::Z)}, true};
    auto table = build_syndrome_table(cat_stabilizers(3), model.errors, basis);
    ASSERT_EQ(table.defects().size(), 1u);
    auto summary = sweep_pauli_errors(basis, &table, model);
    ASSERT_EQ(summary.results.size(), 4u);
    EXPECT_NEAR(summary.results[0].fidelity, 1.0, 1e-12);
    EXPECT_NEAR(summary.results[1].fidelity, 1.0, 1e-12);
    EXPECT_NEAR(summary.results[2].fidelity, 0.0, 1e-12);
    EXPECT_NEAR(summary.results[3].fidelity, 0.0, 1e-12);
}

TEST(run_trials, reproducible_and_seed_derived) {
    auto basis = build_leung_4_1();
    ErrorModel model = DampingErrorModel{0.2};
    auto a = run_trials(basis, nullptr, model, 200, 5);
    auto b = run_trials(basis, nullptr, model, 200, 5);
    auto c = run_trials(basis, nullptr, model, 200, 6);
    EXPECT_EQ(trials_jsonl(a), trials_jsonl(b));
    EXPECT_NE(trials_jsonl(a), trials_jsonl(c));
    for (size_t i = 0; i < a.results.size(); i++) {
        EXPECT_EQ(a.results[i].seed, derive_seed(5, i));
        EXPECT_GE(a.results[i].fidelity, 0.0);
        EXPECT_LE(a.results[i].fidelity, 1 + 1e-12);
    }
    auto prefix = run_trials(basis, nullptr, model, 50, 5);
    for (size_t i = 0; i < prefix.results.size(); i++) {
        EXPECT_EQ(to_json(prefix.results[i]).dump(), to_json(a.results[i]).dump());
    }
    EXPECT_LT(a.mean_fidelity, 1.0);
}

TEST(run_trials, zero_trials_and_bad_models) {
    auto basis = build_shor();
    auto model = single_qubit_pauli_model(9, false);
    auto s = run_trials(basis, nullptr, model, 0, 1);
    EXPECT_EQ(s.trials, 0u);
    EXPECT_TRUE(std::isnan(s.mean_fidelity));
    EXPECT_TRUE(summary_json(s)["mean_fidelity"].is_null());
    EXPECT_THROW(run_trials(basis, nullptr, single_qubit_pauli_model(9, true), 1, 1), std::invalid_argument);
    PauliErrorModel empty{"none", {}, false};
    EXPECT_THROW(run_trials(basis, nullptr, empty, 1, 1), std::invalid_argument);
}

TEST(exports, jsonl_and_csv) {
    auto basis = build_shor();
    PauliErrorModel model{"z1z2", {PauliString::from_dense("ZZIIIIIII")}, false};
    auto s = sweep_pauli_errors(basis, nullptr, model);
    auto lines = trials_jsonl(s);
    EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 5);
    auto last = nlohmann::json::parse(lines.substr(lines.rfind('\n', lines.size() - 2) + 1));
    EXPECT_EQ(last["record"], "summary");
    auto csv = per_error_csv(s);
    EXPECT_TRUE(csv.starts_with("error,count,mean,min\n\"Z1 Z2 (n=9)\",4,")) << csv;
}
