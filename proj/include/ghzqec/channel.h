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

#ifndef GHZQEC_CHANNEL_H
#define GHZQEC_CHANNEL_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ghzqec/codes.h"
#include "ghzqec/kraus.h"
#include "ghzqec/pauli.h"
#include "ghzqec/random.h"
#include "ghzqec/state.h"
#include "ghzqec/verify.h"
#include "json.hpp"

namespace ghzqec {

/// Tolerance on |<g>| = 1 when reading a syndrome from expectations.
inline constexpr double SYNDROME_TOL = 1e-9;
/// Tolerance on p(E0) + p(E1) = 1 per damping step.
inline constexpr double BRANCH_SUM_TOL = 1e-12;

/// Bit i is 1 iff stabilizer i anticommutes with the error.
using Syndrome = std::vector<uint8_t>;

Syndrome syndrome_of(const StabilizerSet &stabs, const PauliString &error);
/// "01000000".
std::string syndrome_str(const Syndrome &s);

/// Raised when a state is not a +-1 eigenstate of some stabilizer.
class SyndromeError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct SyndromeEntry {
    PauliString correction;
    /// Later errors that produced the same syndrome.
    std::vector<PauliString> degenerate;
};

class SyndromeTable {
   public:
    explicit SyndromeTable(StabilizerSet stabs);

    const StabilizerSet &stabilizers() const { return stabs_; }
    const std::map<Syndrome, SyndromeEntry> &entries() const { return entries_; }
    /// Zero-syndrome errors that act nontrivially on the codespace.
    const std::vector<PauliString> &defects() const { return defects_; }
    /// Number of errors folded into an existing entry.
    size_t collisions() const;

    /// nullptr when the syndrome has no entry.
    const PauliString *lookup(const Syndrome &s) const;

    /// Keeps the first correction seen for a syndrome. Returns true if `error`
    /// became the representative.
    bool insert(const PauliString &error);
    void add_defect(const PauliString &error) { defects_.push_back(error); }

   private:
    StabilizerSet stabs_;
    std::map<Syndrome, SyndromeEntry> entries_;
    std::vector<PauliString> defects_;
};

/// True if error|i_L> = c|i_L> for every codeword with one common c.
bool acts_trivially(const PauliString &error, const LogicalBasis &basis, double tol = EXACT_TOL);

/// The zero syndrome always maps to the identity. Errors are inserted in order,
/// so the first-listed error represents its syndrome.
SyndromeTable build_syndrome_table(
    const StabilizerSet &stabs, std::span<const PauliString> errors, const LogicalBasis &basis);

/// Bit i from the sign of <g_i>. Throws SyndromeError when some |<g_i>| is not
/// within SYNDROME_TOL of 1.
Syndrome extract_syndrome(const SparseState &state, const StabilizerSet &stabs);

struct Correction {
    SparseState state;
    Syndrome syndrome;
    PauliString applied;
};

/// Reads the syndrome and applies the table's correction. Throws SyndromeError
/// on a bad state and std::out_of_range on a syndrome with no entry.
Correction correct(const SparseState &state, const SyndromeTable &table);

struct Trajectory {
    SparseState state;
    /// 1-based qubits where E1 was chosen, in order.
    std::vector<size_t> damped{};
    /// p(E1) at each qubit step.
    std::vector<double> jump_probabilities{};
    /// max |p(E0) + p(E1) - 1| over the steps.
    double branch_sum_deviation = 0;
};

/// Qubit by qubit, chooses E0 or E1 with the branch's squared norm as its
/// probability, applies it and renormalizes. Requires a normalized state.
Trajectory damp_trajectory(const KrausChannel &channel, const SparseState &state, Rng &rng);
Trajectory damp_trajectory(const KrausChannel &channel, const SparseState &state, uint64_t seed);

/// Uniformly chosen error from a fixed list, optionally followed by correction.
struct PauliErrorModel {
    std::string name;
    std::vector<PauliString> errors;
    bool correct = true;
};

/// Independent amplitude damping on every qubit; no recovery.
struct DampingErrorModel {
    double gamma = 0;
};

using ErrorModel = std::variant<PauliErrorModel, DampingErrorModel>;

PauliErrorModel single_qubit_pauli_model(size_t n, bool correct = true);
std::string model_name(const ErrorModel &model);

struct LogicalInput {
    std::string label;
    SparseState state;
};

/// |i_L> for every codeword, then (|0_L> +- |i_L>)/sqrt(2) for i >= 1. For a
/// one-qubit code: |0_L>, |1_L>, |0_L>+|1_L>, |0_L>-|1_L>.
std::vector<LogicalInput> logical_inputs(const LogicalBasis &basis);

struct TrialResult {
    size_t trial = 0;
    uint64_t seed = 0;
    std::string input;
    std::string error;
    std::optional<Syndrome> syndrome;
    std::optional<std::string> correction;
    double fidelity = 0;
};

struct ErrorStats {
    size_t count = 0;
    double mean = 0;
    double min = 0;
};

struct TrialSummary {
    std::string code;
    std::string model;
    uint64_t seed = 0;
    size_t trials = 0;
    /// NaN when trials == 0.
    double mean_fidelity = 0;
    double min_fidelity = 0;
    std::map<std::string, ErrorStats> per_error{};
    std::vector<TrialResult> results{};
};

/// Trial i draws from Rng(derive_seed(seed, i)), so results do not depend on
/// evaluation order. A Pauli model with correction needs a table.
TrialSummary run_trials(
    const LogicalBasis &basis,
    const SyndromeTable *table,
    const ErrorModel &model,
    size_t trials,
    uint64_t seed);

/// Every (error, input) pair once, in list order; trial seeds are 0.
TrialSummary sweep_pauli_errors(const LogicalBasis &basis, const SyndromeTable *table, const PauliErrorModel &model);

nlohmann::ordered_json to_json(const SyndromeTable &table);
nlohmann::ordered_json to_json(const TrialResult &r);
/// Summary record without the per-trial stream.
nlohmann::ordered_json summary_json(const TrialSummary &s);
/// One TrialResult per line, then the summary record.
std::string trials_jsonl(const TrialSummary &s);
/// error,count,mean,min
std::string per_error_csv(const TrialSummary &s);

}  // namespace ghzqec

#endif
