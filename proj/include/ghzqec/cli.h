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

#ifndef GHZQEC_CLI_H
#define GHZQEC_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ghzqec/braid.h"
#include "ghzqec/channel.h"
#include "ghzqec/codes.h"
#include "ghzqec/verify.h"
#include "json.hpp"

namespace ghzqec {

inline constexpr std::string_view REPORT_SCHEMA = "ghz-qecc-report/1";
inline constexpr std::string_view TOOL_VERSION = "0.1.0";

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_CHECK_FAILED = 1;
inline constexpr int EXIT_USAGE = 2;

/// Thrown for requests that are well formed but make no sense for the code.
class InapplicableCheck : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Everything the commands need to know about a named code.
struct CodeInfo {
    std::string selector;
    LogicalBasis basis;
    /// Codewords from the rotation route, compared against `basis`.
    std::vector<SparseState> hamiltonian_words{};
    std::string construction{};
    std::optional<StabilizerSet> stabilizers{};
    std::optional<PauliString> xbar{};
    std::optional<PauliString> zbar{};
    /// The code's almost-complex structures, one per GHZ factor.
    std::vector<AlmostComplexStructure> generators{};
    /// Compare ybar with the product of `generators`.
    bool ybar_is_generator_product = false;
    std::optional<size_t> hamming_t{};
    size_t hamming_blocks = 0;
    /// Generator used for the braid relation, on width + 1 qubits.
    PauliString braid_structure;
    std::optional<T0Construction> t0{};
};

/// shor, cat:N, blocks:SPEC, leung41, code62, t0. Throws std::invalid_argument
/// for anything else.
CodeInfo resolve_code(std::string_view selector);

inline const std::vector<std::string> &all_checks() {
    static const std::vector<std::string> checks = {
        "stabilizers", "logicals", "kl", "approx-kl", "hamming", "braid", "ybe"};
    return checks;
}

struct RunConfig {
    std::string command;
    std::string code = "shor";
    std::vector<std::string> checks;
    std::string model = "pauli1";
    std::vector<std::string> errors;
    bool correct = true;
    bool sweep = false;
    std::vector<double> gammas;
    size_t trials = 1000;
    std::optional<uint64_t> seed;
    double tol = EXACT_TOL;
    std::optional<std::string> json_path;
    std::optional<std::string> jsonl_path;
    std::optional<std::string> csv_path;
    size_t ghz_qubits = 3;
    std::string structure = "-YX";
    size_t braid_qubits = 0;
    double theta = QUARTER_TURN;
};

struct CommandResult {
    nlohmann::ordered_json report;
    std::string text;
    int exit_code = EXIT_OK;
    /// Extra artifacts (path, contents) written after the report.
    std::vector<std::pair<std::string, std::string>> files;
};

/// Header fields shared by every report.
nlohmann::ordered_json report_header(std::string_view command, const RunConfig &config);

CommandResult cmd_build(const RunConfig &config);
CommandResult cmd_verify(const RunConfig &config);
CommandResult cmd_simulate(const RunConfig &config);
CommandResult cmd_ghz(const RunConfig &config);
CommandResult cmd_braid_check(const RunConfig &config);
CommandResult cmd_ybe_check(const RunConfig &config);

/// Parses argv-style arguments (without the program name), runs the command and
/// returns the exit status.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ghzqec

#endif
