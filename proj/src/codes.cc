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

#include <bit>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ghzqec {

namespace {

constexpr double CROSS_CHECK_TOL = 1e-12;

std::string complement(std::string_view bits) {
    std::string out(bits);
    for (char &c : out) {
        c = c == '0' ? '1' : '0';
    }
    return out;
}

size_t parse_count(std::string_view digits, std::string_view context) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw std::invalid_argument("Malformed block spec '" + std::string(context) + "'");
    }
    return value;
}

void require_match(const SparseState &a, const SparseState &b, const std::string &what) {
    double dev = max_abs_diff(a, b);
    if (dev > CROSS_CHECK_TOL) {
        throw std::logic_error(what + ": constructions disagree by " + std::to_string(dev));
    }
}

}  // namespace

std::pair<GHZSpec, int> GHZSpec::canonical() const {
    if (bits.empty() || bits.front() == '0') {
        return {*this, +1};
    }
    // (|s-bar> - |s>) = -(|s> - |s-bar>)
    return {GHZSpec{complement(bits), sign}, sign == GhzSign::plus ? +1 : -1};
}

std::string GHZSpec::str() const {
    return "ghz(" + bits + ", " + sign_char(sign) + ")";
}

SparseState ghz(const GHZSpec &spec) {
    if (spec.bits.empty() || spec.bits.size() > MAX_QUBITS) {
        throw std::invalid_argument("GHZ bitstring length must be in [1, 64]");
    }
    size_t n = spec.bits.size();
    BasisIndex s = SparseState::index_of(spec.bits);
    BasisIndex sbar = SparseState::index_of(complement(spec.bits));
    SparseState out(n);
    out.add(s, std::numbers::sqrt2 / 2);
    out.add(sbar, sign_value(spec.sign) * std::numbers::sqrt2 / 2);
    return out;
}

std::vector<GHZSpec> ghz_basis_specs(size_t n) {
    if (n == 0 || n > MAX_EXHAUSTIVE_QUBITS) {
        throw std::invalid_argument("ghz_basis: n must be in [1, 12]");
    }
    std::vector<GHZSpec> specs;
    const BasisIndex half = BasisIndex{1} << (n - 1);
    for (BasisIndex s = 0; s < half; s++) {
        std::string bits = SparseState(n).bits(s);
        specs.push_back({bits, GhzSign::plus});
        specs.push_back({bits, GhzSign::minus});
    }
    return specs;
}

std::vector<SparseState> ghz_basis(size_t n) {
    std::vector<SparseState> out;
    for (const auto &spec : ghz_basis_specs(n)) {
        out.push_back(ghz(spec));
    }
    return out;
}

BlockSpec::BlockSpec(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw std::invalid_argument("Block spec needs at least one block");
    }
    for (const auto &b : blocks_) {
        if (b.qubits < 2 || b.repetitions < 1) {
            throw std::invalid_argument(
                "Block spec requires q >= 2 and n >= 1, got (" + std::to_string(b.qubits) + "," +
                std::to_string(b.repetitions) + ")");
        }
    }
    if (total_qubits() > MAX_QUBITS) {
        throw std::invalid_argument("Block spec exceeds 64 qubits");
    }
}

BlockSpec BlockSpec::parse(std::string_view text) {
    std::vector<Block> blocks;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find(';', start);
        std::string_view item = text.substr(start, end == std::string_view::npos ? text.size() - start : end - start);
        size_t comma = item.find(',');
        if (comma == std::string_view::npos) {
            blocks.push_back({parse_count(item, text), 1});
        } else {
            blocks.push_back({parse_count(item.substr(0, comma), text), parse_count(item.substr(comma + 1), text)});
        }
        if (end == std::string_view::npos) {
            break;
        }
        start = end + 1;
    }
    return BlockSpec(std::move(blocks));
}

size_t BlockSpec::ghz_count() const {
    size_t total = 0;
    for (const auto &b : blocks_) {
        total += b.repetitions;
    }
    return total;
}

size_t BlockSpec::total_qubits() const {
    size_t total = 0;
    for (const auto &b : blocks_) {
        total += b.repetitions * b.qubits;
    }
    return total;
}

std::vector<size_t> BlockSpec::factor_sizes() const {
    std::vector<size_t> sizes;
    for (const auto &b : blocks_) {
        sizes.insert(sizes.end(), b.repetitions, b.qubits);
    }
    return sizes;
}

std::string BlockSpec::str() const {
    std::string out;
    for (const auto &b : blocks_) {
        if (!out.empty()) {
            out += ';';
        }
        out += std::to_string(b.qubits) + "," + std::to_string(b.repetitions);
    }
    return out;
}

size_t correctable_from_distance(size_t d) {
    if (d == 0) {
        throw std::invalid_argument("distance must be positive");
    }
    return d % 2 == 0 ? (d - 2) / 2 : (d - 1) / 2;
}

LogicalBasis::LogicalBasis(
    std::string name, std::vector<SparseState> codewords, std::optional<size_t> distance,
    std::optional<size_t> claimed_t)
    : name_(std::move(name)), codewords_(std::move(codewords)), distance_(distance), claimed_t_(claimed_t) {
    if (codewords_.empty() || !std::has_single_bit(codewords_.size())) {
        throw std::invalid_argument("LogicalBasis needs a power-of-two number of codewords");
    }
    n_ = codewords_.front().num_qubits();
    k_ = static_cast<size_t>(std::countr_zero(codewords_.size()));
    for (size_t i = 0; i < codewords_.size(); i++) {
        if (codewords_[i].num_qubits() != n_) {
            throw std::invalid_argument("LogicalBasis codewords have different widths");
        }
        for (size_t j = i; j < codewords_.size(); j++) {
            Amplitude expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner(codewords_[i], codewords_[j]) - expected) > 1e-12) {
                throw std::invalid_argument("LogicalBasis codewords are not orthonormal");
            }
        }
    }
}

std::optional<size_t> LogicalBasis::correctable() const {
    if (!distance_) {
        return std::nullopt;
    }
    return correctable_from_distance(*distance_);
}

std::vector<SparseState> realize(const HamiltonianForm &form) {
    std::vector<SparseState> out;
    for (const auto &col : form.columns) {
        SparseState s = evolve(form.generators, col.theta, SparseState::from_bits(col.input_bits));
        out.push_back(col.sign == +1 ? s : s.scaled(-1.0));
    }
    return out;
}

std::vector<AlmostComplexStructure> shor_generators(ShorGenerators form) {
    PauliString m = PauliString::from_dense(form == ShorGenerators::yyy ? "-YYY" : "-YXX");
    return {
        AlmostComplexStructure(embed(m, 1, 9)),
        AlmostComplexStructure(embed(m, 4, 9)),
        AlmostComplexStructure(embed(m, 7, 9)),
    };
}

HamiltonianForm shor_hamiltonian(ShorGenerators form) {
    HamiltonianForm h;
    h.description = form == ShorGenerators::yyy ? "e^{+-pi/4 M_t}|0>^9, M_t = M_1 + M_4 + M_7, M = -Y Y Y"
                                                : "B_1 B_4 B_7 |0>^9, B = e^{pi/4 M}, M = -Y X X";
    h.generators = shor_generators(form);
    h.columns = {{"000000000", QUARTER_TURN}, {"000000000", -QUARTER_TURN}};
    return h;
}

LogicalBasis build_shor() {
    SparseState plus = ghz({"000", GhzSign::plus});
    SparseState minus = ghz({"000", GhzSign::minus});
    SparseState zero = tensor(tensor(plus, plus), plus);
    SparseState one = tensor(tensor(minus, minus), minus);
    return LogicalBasis("shor", {zero, one}, size_t{3});
}

PauliString block_generator(size_t q) {
    if (q < 1) {
        throw std::invalid_argument("block_generator: q must be positive");
    }
    std::string dense = "-Y" + std::string(q - 1, q % 2 == 1 ? 'Y' : 'X');
    return PauliString::from_dense(dense);
}

std::vector<AlmostComplexStructure> block_generators(const BlockSpec &spec) {
    const size_t n = spec.total_qubits();
    std::vector<AlmostComplexStructure> out;
    size_t position = 1;
    for (size_t q : spec.factor_sizes()) {
        out.emplace_back(embed(block_generator(q), position, n));
        position += q;
    }
    return out;
}

HamiltonianForm repetition_hamiltonian(const BlockSpec &spec) {
    HamiltonianForm h;
    h.description = "e^{+-pi/4 sum_i M_t^(i)}|0>^N over blocks " + spec.str();
    h.generators = block_generators(spec);
    std::string zeros(spec.total_qubits(), '0');
    h.columns = {{zeros, QUARTER_TURN}, {zeros, -QUARTER_TURN}};
    return h;
}

SparseState build_repetition(const BlockSpec &spec, int bit, std::span<const GhzSign> block_signs) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("build_repetition: bit must be 0 or 1");
    }
    const auto sizes = spec.factor_sizes();
    if (!block_signs.empty() && block_signs.size() != sizes.size()) {
        throw std::invalid_argument("build_repetition: need one sign per GHZ factor");
    }
    std::optional<SparseState> explicit_form;
    for (size_t f = 0; f < sizes.size(); f++) {
        GhzSign sign = GhzSign::plus;
        if (bit == 1) {
            sign = block_signs.empty() ? GhzSign::minus : block_signs[f];
        }
        SparseState factor = ghz({std::string(sizes[f], '0'), sign});
        explicit_form = explicit_form ? tensor(*explicit_form, factor) : factor;
    }

    // Hamiltonian route: one rotation per factor, theta = +-pi/4 by factor sign.
    const auto gens = block_generators(spec);
    SparseState hamiltonian = SparseState::basis(spec.total_qubits(), 0);
    if (block_signs.empty()) {
        hamiltonian = evolve(gens, bit == 0 ? QUARTER_TURN : -QUARTER_TURN, hamiltonian);
    } else {
        for (size_t f = 0; f < gens.size(); f++) {
            double theta = (bit == 0 || block_signs[f] == GhzSign::plus) ? QUARTER_TURN : -QUARTER_TURN;
            hamiltonian = rotate(gens[f], theta, hamiltonian);
        }
    }
    require_match(*explicit_form, hamiltonian, "build_repetition(" + spec.str() + ")");
    return *explicit_form;
}

LogicalBasis build_repetition_code(const BlockSpec &spec) {
    return LogicalBasis(
        "blocks:" + spec.str(), {build_repetition(spec, 0), build_repetition(spec, 1)}, std::nullopt, size_t{1});
}

AlmostComplexStructure cat_generator(size_t n) {
    return AlmostComplexStructure(PauliString::from_dense("-Y" + std::string(n - 1, 'X')));
}

LogicalBasis build_cat(size_t n) {
    if (n == 0 || n > MAX_QUBITS) {
        throw std::invalid_argument("build_cat: n must be in [1, 64]");
    }
    const BasisIndex ones = n >= 64 ? ~BasisIndex{0} : (BasisIndex{1} << n) - 1;
    SparseState zero = SparseState::basis(n, 0);
    SparseState one = SparseState::basis(n, ones);
    const auto m = cat_generator(n);
    const double h = std::numbers::sqrt2 / 2;
    require_match(rotate(m, QUARTER_TURN, zero), (zero + one).scaled(h), "cat e^{+pi/4 M}");
    require_match(rotate(m, -QUARTER_TURN, zero), (zero - one).scaled(h), "cat e^{-pi/4 M}");
    require_match(apply_string(m.string(), zero - one), zero + one, "cat M(|0_L> - |1_L>)");
    return LogicalBasis("cat:" + std::to_string(n), {zero, one});
}

HamiltonianForm leung_hamiltonian() {
    HamiltonianForm h;
    h.description = "e^{pi/4 M}(|0000>, |0011>), M = -Y X X X";
    h.generators = {AlmostComplexStructure(PauliString::from_dense("-YXXX"))};
    h.columns = {{"0000", QUARTER_TURN}, {"0011", QUARTER_TURN}};
    return h;
}

LogicalBasis build_leung_4_1() {
    SparseState zero = ghz({"0000", GhzSign::plus});
    SparseState one = ghz({"0011", GhzSign::plus});
    auto ham = realize(leung_hamiltonian());
    require_match(zero, ham[0], "leung41 |0_L>");
    require_match(one, ham[1], "leung41 |1_L>");
    return LogicalBasis("leung41", {zero, one}, std::nullopt, size_t{1});
}

HamiltonianForm code62_hamiltonian() {
    HamiltonianForm h;
    h.description = "e^{pi/4 M}(|000000>, |001001>, |000110>, |110000>), M = -Y X X X X X";
    h.generators = {AlmostComplexStructure(PauliString::from_dense("-YXXXXX"))};
    for (const char *bits : {"000000", "001001", "000110", "110000"}) {
        h.columns.push_back({bits, QUARTER_TURN});
    }
    return h;
}

LogicalBasis build_6_2() {
    // With M = -Y X^5, M|b> = |b-bar> when b starts with 0 and -|b-bar> otherwise.
    std::vector<SparseState> words;
    for (const auto &col : code62_hamiltonian().columns) {
        GhzSign sign = col.input_bits.front() == '0' ? GhzSign::plus : GhzSign::minus;
        words.push_back(ghz({col.input_bits, sign}));
    }
    auto ham = realize(code62_hamiltonian());
    for (size_t i = 0; i < words.size(); i++) {
        require_match(words[i], ham[i], "code62 codeword " + std::to_string(i));
    }
    return LogicalBasis("code62", std::move(words), std::nullopt, size_t{1});
}

T0Construction build_3_1_t0() {
    const auto m = AlmostComplexStructure(PauliString::from_dense("-YYY"));
    SparseState psi = rotate(m, QUARTER_TURN, SparseState::basis(3, 0));
    require_match(psi, ghz({"000", GhzSign::plus}), "t0 |psi_L>");

    auto z = [](size_t q) { return PauliString::single(3, q, PauliLetter::Z); };
    auto x = [](size_t q) { return PauliString::single(3, q, PauliLetter::X); };
    std::vector<PauliString> errors = {
        PauliString::identity(3), x(1), x(2), x(3), z(1), z(1) * x(1), z(2) * x(2), z(3) * x(3)};
    std::vector<std::string> labels = {"Id", "X1", "X2", "X3", "Z1", "Z1X1", "Z2X2", "Z3X3"};

    std::vector<SparseState> references;
    for (BasisIndex b = 0; b < 8; b++) {
        references.push_back(rotate(m, QUARTER_TURN, SparseState::basis(3, b)));
    }

    T0Construction out{LogicalBasis("t0", {psi}, std::nullopt, size_t{0}), errors, labels, {}, {}, {}};
    for (const auto &e : errors) {
        SparseState image = apply_string(e, psi);
        bool found = false;
        for (BasisIndex b = 0; b < 8 && !found; b++) {
            Amplitude overlap = inner(references[b], image);
            if (std::abs(std::abs(overlap) - 1.0) <= CROSS_CHECK_TOL) {
                out.reference_bits.push_back(SparseState(3).bits(b));
                out.reference_signs.push_back(overlap.real() > 0 ? +1 : -1);
                found = true;
            }
        }
        if (!found) {
            throw std::logic_error("t0 image is not a Bell-matrix column");
        }
        out.images.push_back(std::move(image));
    }
    return out;
}

SparseState encode(std::span<const Amplitude> amplitudes, const LogicalBasis &basis) {
    if (amplitudes.size() != basis.size()) {
        throw std::invalid_argument(
            "encode: expected " + std::to_string(basis.size()) + " amplitudes, got " +
            std::to_string(amplitudes.size()));
    }
    double norm = 0;
    for (const auto &a : amplitudes) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1.0) > NORMALIZATION_TOL) {
        throw std::invalid_argument("encode: amplitude vector is not normalized");
    }
    SparseState out(basis.num_qubits());
    for (size_t j = 0; j < amplitudes.size(); j++) {
        out = out + basis.codeword(j).scaled(amplitudes[j]);
    }
    return out;
}

nlohmann::ordered_json to_json(const LogicalBasis &basis) {
    nlohmann::ordered_json j;
    j["name"] = basis.name();
    j["n"] = basis.num_qubits();
    j["k"] = basis.logical_qubits();
    j["d"] = basis.distance() ? nlohmann::ordered_json(*basis.distance()) : nlohmann::ordered_json(nullptr);
    j["t"] = basis.correctable() ? nlohmann::ordered_json(*basis.correctable()) : nlohmann::ordered_json(nullptr);
    j["claimed_t"] =
        basis.claimed_t() ? nlohmann::ordered_json(*basis.claimed_t()) : nlohmann::ordered_json(nullptr);
    auto words = nlohmann::ordered_json::array();
    for (const auto &w : basis.codewords()) {
        words.push_back(to_json(w));
    }
    j["codewords"] = std::move(words);
    return j;
}

}  // namespace ghzqec
