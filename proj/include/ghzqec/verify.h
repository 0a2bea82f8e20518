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

#ifndef GHZQEC_VERIFY_H
#define GHZQEC_VERIFY_H

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ghzqec/braid.h"
#include "ghzqec/codes.h"
#include "ghzqec/kraus.h"
#include "ghzqec/pauli.h"
#include "ghzqec/state.h"
#include "json.hpp"

namespace ghzqec {

inline constexpr double EXACT_TOL = 1e-12;

/// Pairwise commuting Pauli strings, each squaring to +Id.
class StabilizerSet {
   public:
    /// Throws std::invalid_argument if the generators do not commute, square to
    /// -Id, or differ in width.
    explicit StabilizerSet(std::vector<PauliString> generators);

    const std::vector<PauliString> &generators() const { return generators_; }
    const PauliString &operator[](size_t i) const { return generators_.at(i); }
    size_t size() const { return generators_.size(); }
    size_t num_qubits() const { return generators_.front().num_qubits(); }

   private:
    std::vector<PauliString> generators_;
};

/// Z1Z2, Z2Z3, Z4Z5, Z5Z6, Z7Z8, Z8Z9, X1..X6, X4..X9.
StabilizerSet shor_stabilizers();
/// Z_i Z_{i+1} inside each GHZ factor plus X-strings covering each adjacent
/// pair of factors. For "3,3" this is exactly shor_stabilizers().
StabilizerSet block_stabilizers(const BlockSpec &spec);
/// Z_i Z_{i+1}, i = 1..n-1.
StabilizerSet cat_stabilizers(size_t n);
/// Z1Z2, Z3Z4, X1X2X3X4.
StabilizerSet leung_stabilizers();

struct FixViolation {
    std::string generator;
    size_t codeword;
    double deviation;
};

struct FixReport {
    bool holds = false;
    double max_deviation = 0;
    size_t generators = 0;
    size_t codewords = 0;
    std::vector<FixViolation> violations;
};

/// g|psi> == |psi> for every generator and codeword.
FixReport stabilizer_fix_check(const StabilizerSet &stabs, const LogicalBasis &basis, double tol = EXACT_TOL);

struct LogicalOpReport {
    bool holds = false;
    double xbar_deviation = 0;  // max over xbar|0_L> - |1_L>, xbar|1_L> - |0_L>
    double zbar_deviation = 0;  // max over zbar|0_L> - |0_L>, zbar|1_L> + |1_L>
    PauliString ybar;           // zbar * xbar
    double ybar_deviation = 0;  // ybar|1_L> - |0_L>
    /// Present when generators were supplied.
    std::optional<PauliString> generator_product{};
    std::optional<bool> ybar_matches_product{};
    std::optional<double> rotation_deviation{};  // e^{pi/2 M_t} vs ybar on codewords
};

/// For a one-qubit code: xbar swaps the codewords, zbar fixes |0_L> and negates
/// |1_L>, and ybar = zbar * xbar maps |1_L> to |0_L>. With generators, also
/// checks ybar == prod M_i as signed strings and e^{pi/2 sum M_i} == ybar on
/// both codewords.
LogicalOpReport logical_op_check(
    const LogicalBasis &basis,
    const PauliString &xbar,
    const PauliString &zbar,
    std::span<const AlmostComplexStructure> generators = {},
    double tol = EXACT_TOL);

/// Id followed by X_q, Y_q, Z_q for q = 1..n (real-Y convention).
std::vector<PauliString> single_qubit_errors(size_t n, bool include_identity = true);

struct MatrixLocation {
    size_t error_a = 0;
    size_t error_b = 0;
    size_t logical_i = 0;
    size_t logical_j = 0;
};

struct KLReport {
    std::vector<std::string> error_labels;
    /// c[a][b] = <0_L| E_a^dag E_b |0_L>.
    std::vector<std::vector<Amplitude>> c_matrix;
    double offdiag_max = 0;
    double diag_mismatch_max = 0;
    MatrixLocation worst_offdiag;
    MatrixLocation worst_diag;
    double hermiticity_deviation = 0;
    double tol = EXACT_TOL;
    bool pass = false;
};

/// Knill-Laflamme conditions <i_L|E_a^dag E_b|j_L> = c_ab delta_ij. The error
/// list must contain the identity.
KLReport kl_check(const LogicalBasis &basis, std::span<const PauliString> errors, double tol = EXACT_TOL);

struct ApproxKLPoint {
    double gamma = 0;
    double offdiag_max = 0;
    double diag_mismatch_max = 0;
    double max_violation = 0;
    /// Diagonal mismatch of the (E0^n, E0^n) pair.
    double weight0_diag_mismatch = 0;
};

struct ApproxKLReport {
    std::vector<ApproxKLPoint> points;
    /// Least-squares slope of log(max_violation) against log(gamma); NaN when
    /// fewer than two points have a positive violation.
    double slope = 0;
};

/// Approximate KL quantities for the weight <= 1 damping products at each gamma.
/// Gammas must lie in [0, 1); gamma = 0 is the identity channel.
ApproxKLReport approximate_kl(const LogicalBasis &basis, std::span<const double> gammas);

/// Same computation on caller-supplied Kraus products (the first entry is the
/// "weight-0" product).
ApproxKLPoint approximate_kl_point(const LogicalBasis &basis, std::span<const KrausProduct> products, double gamma);

using BigInt = boost::multiprecision::cpp_int;

struct HammingReport {
    size_t t = 0;
    size_t blocks = 0;  // B
    size_t qubits = 0;  // N
    BigInt lhs;         // 2^t (1 + B + 2N)
    BigInt rhs;         // 2^N
    bool satisfied = false;
    bool saturated = false;
};

HammingReport hamming_bound(size_t t, size_t blocks, size_t qubits);

struct OrthonormalReport {
    bool holds = false;
    double max_deviation = 0;
    size_t worst_i = 0;
    size_t worst_j = 0;
    size_t count = 0;
};

/// Gram matrix == Id for a full basis (exactly 2^n states).
OrthonormalReport orthonormal_basis_check(std::span<const SparseState> states, double tol = EXACT_TOL);

nlohmann::ordered_json to_json(const FixReport &r);
nlohmann::ordered_json to_json(const LogicalOpReport &r);
nlohmann::ordered_json to_json(const KLReport &r, bool include_matrix = false);
nlohmann::ordered_json to_json(const ApproxKLReport &r);
nlohmann::ordered_json to_json(const HammingReport &r);
nlohmann::ordered_json to_json(const OrthonormalReport &r);

/// c-matrix as CSV: header row of labels, then "label,re+imj,..." rows.
std::string c_matrix_csv(const KLReport &r);

}  // namespace ghzqec

#endif
