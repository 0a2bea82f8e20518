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


#include "ghzqec/codes.h"

#include <gtest/gtest.h>

#include "dense_oracle.h"

using namespace ghzqec;

namespace {

oracle::Vec shor_block(int sign) { return oracle::ghz("000", sign); }

oracle::Vec shor_word(int sign) {
    return oracle::kron(oracle::kron(shor_block(sign), shor_block(sign)), shor_block(sign));
}

}  // namespace

TEST(ghz, state_and_canonical_form) {
    auto s = ghz({"0110", GhzSign::minus});
    EXPECT_LT(oracle::distance(s, oracle::ghz("0110", -1)), 1e-15);
    auto [canon, factor] = GHZSpec{"1001", GhzSign::minus}.canonical();
    EXPECT_EQ(canon.bits, "0110");
    EXPECT_EQ(factor, -1);
    EXPECT_LT(max_abs_diff(ghz({"1001", GhzSign::minus}), ghz(canon).scaled(double(factor))), 1e-15);
    EXPECT_EQ(GHZSpec({"1001", GhzSign::plus}).canonical().second, +1);
    EXPECT_EQ(GHZSpec({"01", GhzSign::plus}).str(), "ghz(01, +)");
    EXPECT_THROW(ghz({"", GhzSign::plus}), std::invalid_argument);
}

TEST(ghz, basis_order_and_orthonormality) {
    auto specs = ghz_basis_specs(3);
    ASSERT_EQ(specs.size(), 8u);
    EXPECT_EQ(specs[0].str(), "ghz(000, +)");
    EXPECT_EQ(specs[1].str(), "ghz(000, -)");
    EXPECT_EQ(specs[7].str(), "ghz(011, -)");
    for (size_t n = 1; n <= 5; n++) {
        auto states = ghz_basis(n);
        ASSERT_EQ(states.size(), size_t{1} << n);
        for (size_t i = 0; i < states.size(); i++) {
            for (size_t j = 0; j < states.size(); j++) {
                EXPECT_NEAR(std::abs(inner(states[i], states[j])), i == j ? 1.0 : 0.0, 1e-15);
            }
        }
    }
    EXPECT_THROW(ghz_basis(13), std::invalid_argument);
    EXPECT_THROW(ghz_basis(0), std::invalid_argument);
}

TEST(block_spec, parse_and_counts) {
    auto shor = BlockSpec::parse("3,3");
    EXPECT_EQ(shor.type_count(), 1u);
    EXPECT_EQ(shor.ghz_count(), 3u);
    EXPECT_EQ(shor.total_qubits(), 9u);
    auto two = BlockSpec::parse("2,1;3,1");
    EXPECT_EQ(two.factor_sizes(), (std::vector<size_t>{2, 3}));
    EXPECT_EQ(two.total_qubits(), 5u);
    EXPECT_EQ(two.str(), "2,1;3,1");
    EXPECT_EQ(BlockSpec::parse("5").str(), "5,1");
    EXPECT_EQ(BlockSpec::parse(BlockSpec::parse("4,2;3,1").str()), BlockSpec::parse("4,2;3,1"));
    for (const char *bad : {"", "3,", ",3", "a,b", "3;;2", "1,3", "3,0", "3,3;", "33,2"}) {
        EXPECT_THROW(BlockSpec::parse(bad), std::invalid_argument) << bad;
    }
}

TEST(logical_basis, distance_and_validation) {
    EXPECT_EQ(correctable_from_distance(3), 1u);
    EXPECT_EQ(correctable_from_distance(4), 1u);
    EXPECT_EQ(correctable_from_distance(2), 0u);
    EXPECT_THROW(correctable_from_distance(0), std::invalid_argument);

    auto a = SparseState::from_bits("00");
    auto b = SparseState::from_bits("11");
    EXPECT_THROW(LogicalBasis("x", {a, a}), std::invalid_argument);
    EXPECT_THROW(LogicalBasis("x", {a, b, a}), std::invalid_argument);
    EXPECT_THROW(LogicalBasis("x", {a, SparseState::from_bits("1")}), std::invalid_argument);
    EXPECT_THROW(LogicalBasis("x", {a, b.scaled(2.0)}), std::invalid_argument);
    LogicalBasis ok("x", {a, b}, size_t{3});
    EXPECT_EQ(ok.logical_qubits(), 1u);
    EXPECT_EQ(ok.correctable(), 1u);
}

TEST(shor, codewords_match_dense_exponential) {
    auto basis = build_shor();
    EXPECT_EQ(basis.num_qubits(), 9u);
    EXPECT_EQ(basis.distance(), 3u);
    EXPECT_EQ(basis.codeword(0).nnz(), 8u);
    EXPECT_LT(oracle::distance(basis.codeword(0), shor_word(+1)), 1e-15);
    EXPECT_LT(oracle::distance(basis.codeword(1), shor_word(-1)), 1e-15);

    oracle::Mat mt = oracle::Mat::Zero(512, 512);
    for (const auto &m : shor_generators()) {
        mt += oracle::pauli(m.string().dense_str());
    }
    oracle::Vec zero9 = oracle::basis(9, 0);
    EXPECT_LT(oracle::max_abs(oracle::expm(mt, QUARTER_TURN) * zero9 - shor_word(+1)), 1e-12);
    EXPECT_LT(oracle::max_abs(oracle::expm(mt, -QUARTER_TURN) * zero9 - shor_word(-1)), 1e-12);
    oracle::Vec one9 = oracle::basis(9, 511);
    EXPECT_LT(oracle::max_abs(-(oracle::expm(mt, QUARTER_TURN) * one9) - shor_word(-1)), 1e-12);
}

TEST(shor, both_hamiltonian_forms_agree) {
    auto basis = build_shor();
    for (auto form : {ShorGenerators::yyy, ShorGenerators::yxx}) {
        auto words = realize(shor_hamiltonian(form));
        ASSERT_EQ(words.size(), 2u);
        EXPECT_LT(max_abs_diff(words[0], basis.codeword(0)), 1e-12);
        EXPECT_LT(max_abs_diff(words[1], basis.codeword(1)), 1e-12);
    }
    auto gens = shor_generators(ShorGenerators::yxx);
    EXPECT_EQ(gens[1].string().str(), "-Y4 X5 X6 (n=9)");
}

TEST(repetition, block_generators_are_almost_complex) {
    for (size_t q = 2; q <= 7; q++) {
        auto m = block_generator(q);
        EXPECT_TRUE(AlmostComplexStructure::accepts(m)) << q;
        oracle::Vec out = oracle::expm(oracle::pauli(m.dense_str()), QUARTER_TURN) * oracle::basis(q, 0);
        EXPECT_LT(oracle::max_abs(out - oracle::ghz(std::string(q, '0'), +1)), 1e-12) << q;
    }
    EXPECT_EQ(block_generator(3).dense_str(), "-YYY");
    EXPECT_EQ(block_generator(2).dense_str(), "-YX");
    EXPECT_FALSE(AlmostComplexStructure::accepts(PauliString::from_dense("-YY")));
}

TEST(repetition, codewords_match_dense_products) {
    for (const char *text : {"3,3", "2,3", "2,1;3,1", "4,1;3,2", "5"}) {
        auto spec = BlockSpec::parse(text);
        auto basis = build_repetition_code(spec);
        oracle::Vec zero = oracle::Vec::Ones(1);
        oracle::Vec one = oracle::Vec::Ones(1);
        for (size_t q : spec.factor_sizes()) {
            zero = oracle::kron(zero, oracle::ghz(std::string(q, '0'), +1));
            one = oracle::kron(one, oracle::ghz(std::string(q, '0'), -1));
        }
        EXPECT_LT(oracle::distance(basis.codeword(0), zero), 1e-15) << text;
        EXPECT_LT(oracle::distance(basis.codeword(1), one), 1e-15) << text;
        EXPECT_EQ(basis.name(), "blocks:" + spec.str());
        auto words = realize(repetition_hamiltonian(spec));
        EXPECT_LT(max_abs_diff(words[1], basis.codeword(1)), 1e-12) << text;
    }
    EXPECT_LT(max_abs_diff(build_repetition(BlockSpec::parse("3,3"), 0), build_shor().codeword(0)), 1e-15);
}

TEST(repetition, mixed_block_signs) {
    auto spec = BlockSpec::parse("2,2");
    std::vector<GhzSign> signs = {GhzSign::plus, GhzSign::minus};
    auto s = build_repetition(spec, 1, signs);
    oracle::Vec expected = oracle::kron(oracle::ghz("00", +1), oracle::ghz("00", -1));
    EXPECT_LT(oracle::distance(s, expected), 1e-15);
    std::vector<GhzSign> wrong = {GhzSign::plus};
    EXPECT_THROW(build_repetition(spec, 1, wrong), std::invalid_argument);
    EXPECT_THROW(build_repetition(spec, 2), std::invalid_argument);
}

TEST(repetition, wide_layout_is_sparse) {
    auto s = build_repetition(BlockSpec::parse("3,10"), 0);
    EXPECT_EQ(s.num_qubits(), 30u);
    EXPECT_EQ(s.nnz(), 1024u);
    for (const auto &[index, amp] : s.amplitudes()) {
        EXPECT_NEAR(std::abs(amp), 1.0 / 32, 1e-15);
    }
}

TEST(cat, codewords_and_identities) {
    auto basis = build_cat(3);
    EXPECT_LT(oracle::distance(basis.codeword(0), oracle::bits("000")), 1e-15);
    EXPECT_LT(oracle::distance(basis.codeword(1), oracle::bits("111")), 1e-15);
    EXPECT_EQ(cat_generator(4).string().dense_str(), "-YXXX");
    EXPECT_THROW(build_cat(0), std::invalid_argument);
}

TEST(leung, codewords_match_displayed_form) {
    auto basis = build_leung_4_1();
    oracle::Vec zero = (oracle::bits("0000") + oracle::bits("1111")) / std::sqrt(2.0);
    oracle::Vec one = (oracle::bits("0011") + oracle::bits("1100")) / std::sqrt(2.0);
    EXPECT_LT(oracle::distance(basis.codeword(0), zero), 1e-15);
    EXPECT_LT(oracle::distance(basis.codeword(1), one), 1e-15);
    oracle::Mat b = oracle::expm(oracle::pauli("-YXXX"), QUARTER_TURN);
    EXPECT_LT(oracle::max_abs(b * oracle::bits("0000") - zero), 1e-12);
    EXPECT_LT(oracle::max_abs(b * oracle::bits("0011") - one), 1e-12);
    EXPECT_EQ(basis.claimed_t(), 1u);
}

TEST(code62, codewords_match_dense_rotation) {
    auto basis = build_6_2();
    ASSERT_EQ(basis.size(), 4u);
    EXPECT_EQ(basis.logical_qubits(), 2u);
    oracle::Mat b = oracle::expm(oracle::pauli("-YXXXXX"), QUARTER_TURN);
    const char *inputs[] = {"000000", "001001", "000110", "110000"};
    for (size_t i = 0; i < 4; i++) {
        EXPECT_LT(oracle::distance(basis.codeword(i), b * oracle::bits(inputs[i])), 1e-12) << inputs[i];
    }
    oracle::Vec eleven = (oracle::bits("110000") - oracle::bits("001111")) / std::sqrt(2.0);
    EXPECT_LT(oracle::distance(basis.codeword(3), eleven), 1e-12);
}

TEST(t0, images_are_signed_bell_columns) {
    auto t0 = build_3_1_t0();
    ASSERT_EQ(t0.images.size(), 8u);
    EXPECT_EQ(t0.labels[5], "Z1X1");
    EXPECT_EQ(t0.errors[5], PauliString::from_dense("YII"));
    oracle::Mat b = oracle::expm(oracle::pauli("-YYY"), QUARTER_TURN);
    oracle::Vec psi = oracle::ghz("000", +1);
    for (size_t i = 0; i < 8; i++) {
        oracle::Vec image = oracle::pauli(t0.errors[i].dense_str()) * psi;
        EXPECT_LT(oracle::distance(t0.images[i], image), 1e-15);
        EXPECT_LT(oracle::max_abs(image - double(t0.reference_signs[i]) * (b * oracle::bits(t0.reference_bits[i]))),
                  1e-12)
            << t0.labels[i];
    }
    std::vector<std::string> bits = {"000", "011", "101", "110", "111", "100", "010", "001"};
    std::vector<int> signs = {+1, +1, +1, +1, -1, -1, -1, -1};
    EXPECT_EQ(t0.reference_bits, bits);
    EXPECT_EQ(t0.reference_signs, signs);
}

TEST(encode, superposes_codewords) {
    auto basis = build_cat(2);
    std::vector<Amplitude> amps = {0.6, Amplitude(0, 0.8)};
    auto s = encode(amps, basis);
    EXPECT_EQ(s.amplitude("00"), Amplitude(0.6));
    EXPECT_EQ(s.amplitude("11"), Amplitude(0, 0.8));
    std::vector<Amplitude> bad = {1, 1};
    EXPECT_THROW(encode(bad, basis), std::invalid_argument);
    std::vector<Amplitude> short_list = {1};
    EXPECT_THROW(encode(short_list, basis), std::invalid_argument);
}

TEST(logical_basis, json_form) {
    auto j = to_json(build_shor());
    EXPECT_EQ(j["name"], "shor");
    EXPECT_EQ(j["n"], 9);
    EXPECT_EQ(j["k"], 1);
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["t"], 1);
    EXPECT_EQ(j["codewords"].size(), 2u);
    EXPECT_EQ(j["codewords"][0]["amplitudes"].size(), 8u);
}
