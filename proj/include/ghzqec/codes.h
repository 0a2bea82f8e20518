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

#ifndef GHZQEC_CODES_H
#define GHZQEC_CODES_H

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ghzqec/braid.h"
#include "ghzqec/pauli.h"
#include "ghzqec/state.h"
#include "json.hpp"

namespace ghzqec {

enum class GhzSign { plus, minus };

inline int sign_value(GhzSign s) { return s == GhzSign::plus ? +1 : -1; }
inline char sign_char(GhzSign s) { return s == GhzSign::plus ? '+' : '-'; }

/// (|s> +- |s-bar>)/sqrt(2) on n = s.size() qubits.
struct GHZSpec {
    std::string bits;
    GhzSign sign = GhzSign::plus;

    size_t num_qubits() const { return bits.size(); }
    /// Equivalent spec whose first bit is 0, with the global factor (+1 or -1)
    /// that relates the two states: ghz(*this) == factor * ghz(canonical).
    std::pair<GHZSpec, int> canonical() const;
    std::string str() const;
};

SparseState ghz(const GHZSpec &spec);

/// Canonical specs (first bit 0) in order s = 0, 1, ..., each with + then -.
std::vector<GHZSpec> ghz_basis_specs(size_t n);
/// All 2^n GHZ states; n <= 12.
std::vector<SparseState> ghz_basis(size_t n);

struct Block {
    size_t qubits;       // q_i
    size_t repetitions;  // n_i

    bool operator==(const Block &) const = default;
};

/// Generalized repetition layout: ordered (q_i, n_i) pairs.
///
/// Text form is "q,n;q,n;..." ("3,3" is the nine-qubit Shor layout). A bare
/// "q" means one repetition.
class BlockSpec {
   public:
    explicit BlockSpec(std::vector<Block> blocks);
    static BlockSpec parse(std::string_view text);

    const std::vector<Block> &blocks() const { return blocks_; }
    size_t type_count() const { return blocks_.size(); }  // I
    size_t ghz_count() const;                              // B
    size_t total_qubits() const;                           // N
    /// Qubit sizes of the B GHZ factors, in tensor order.
    std::vector<size_t> factor_sizes() const;
    std::string str() const;

    bool operator==(const BlockSpec &) const = default;

   private:
    std::vector<Block> blocks_;
};

/// t = (d-2)/2 for even d, (d-1)/2 for odd d.
size_t correctable_from_distance(size_t d);

/// Orthonormal codeword list plus [n, k, d] metadata.
class LogicalBasis {
   public:
    /// Throws std::invalid_argument unless the codewords are orthonormal to 1e-12
    /// and their count is a power of two.
    LogicalBasis(
        std::string name,
        std::vector<SparseState> codewords,
        std::optional<size_t> distance = std::nullopt,
        std::optional<size_t> claimed_t = std::nullopt);

    const std::string &name() const { return name_; }
    size_t num_qubits() const { return n_; }
    size_t logical_qubits() const { return k_; }
    size_t size() const { return codewords_.size(); }
    const std::vector<SparseState> &codewords() const { return codewords_; }
    const SparseState &codeword(size_t i) const { return codewords_.at(i); }
    std::optional<size_t> distance() const { return distance_; }
    /// Derived from the distance when set.
    std::optional<size_t> correctable() const;
    /// Unverified claim carried for reporting only.
    std::optional<size_t> claimed_t() const { return claimed_t_; }

   private:
    std::string name_;
    std::vector<SparseState> codewords_;
    size_t n_;
    size_t k_;
    std::optional<size_t> distance_;
    std::optional<size_t> claimed_t_;
};

/// Codewords written as e^{theta M_t} applied to product basis kets.
struct HamiltonianForm {
    struct Column {
        std::string input_bits;
        double theta;
        int sign = +1;  // global factor applied after the rotation
    };

    std::string description;
    std::vector<AlmostComplexStructure> generators;
    std::vector<Column> columns;
};

std::vector<SparseState> realize(const HamiltonianForm &form);

enum class ShorGenerators {
    yyy,  // M = -Y Y Y per block
    yxx,  // M = -Y X X per block
};

/// M_1, M_4, M_7 on nine qubits.
std::vector<AlmostComplexStructure> shor_generators(ShorGenerators form = ShorGenerators::yyy);
HamiltonianForm shor_hamiltonian(ShorGenerators form = ShorGenerators::yyy);
/// [9,1,3] from the explicit block product.
LogicalBasis build_shor();

/// Per-block generator producing (|0^q> + |1^q>)/sqrt(2) from |0^q>:
/// -Y^{(x) q} for odd q, -Y (x) X^{(x)(q-1)} for even q.
PauliString block_generator(size_t q);
/// One generator per GHZ factor, embedded on N qubits.
std::vector<AlmostComplexStructure> block_generators(const BlockSpec &spec);
HamiltonianForm repetition_hamiltonian(const BlockSpec &spec);

/// Product over GHZ factors of ghz(0^q, +) for bit 0 and ghz(0^q, -) for bit 1.
/// `block_signs`, when given, overrides the per-factor sign of the bit-1 word.
/// The result is cross-checked against the Hamiltonian route.
SparseState build_repetition(const BlockSpec &spec, int bit, std::span<const GhzSign> block_signs = {});
LogicalBasis build_repetition_code(const BlockSpec &spec);

/// -Y (x) X^{(x)(n-1)}.
AlmostComplexStructure cat_generator(size_t n);
/// {|0^n>, |1^n>}. Construction verifies (|0_L> +- |1_L>)/sqrt(2) = e^{+-pi/4 M}|0_L>
/// and M(|0_L> - |1_L>) = |0_L> + |1_L>.
LogicalBasis build_cat(size_t n);

HamiltonianForm leung_hamiltonian();
/// |0_L> = (|0000> + |1111>)/sqrt(2), |1_L> = (|0011> + |1100>)/sqrt(2).
LogicalBasis build_leung_4_1();

HamiltonianForm code62_hamiltonian();
/// e^{pi/4 M}|b> for b in {000000, 001001, 000110, 110000}, M = -Y X^5.
LogicalBasis build_6_2();

struct T0Construction {
    LogicalBasis basis;
    std::vector<PauliString> errors;
    std::vector<std::string> labels;
    std::vector<SparseState> images;
    /// Each image equals reference_signs[j] * e^{pi/4 M}|reference_bits[j]>, M = -Y Y Y.
    std::vector<std::string> reference_bits;
    std::vector<int> reference_signs;
};

/// |psi_L> = (|000> + |111>)/sqrt(2) and its images under
/// {Id, X1, X2, X3, Z1, Z1X1, Z2X2, Z3X3}.
T0Construction build_3_1_t0();

/// sum_j amplitudes[j] * codeword_j. The amplitude vector must be normalized.
SparseState encode(std::span<const Amplitude> amplitudes, const LogicalBasis &basis);

nlohmann::ordered_json to_json(const LogicalBasis &basis);

}  // namespace ghzqec

#endif
