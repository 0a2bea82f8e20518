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

#include <cmath>
#include <limits>
#include <sstream>

namespace ghzqec {

namespace {

double fidelity(const SparseState &a, const SparseState &b) {
    return std::norm(inner(a, b));
}

nlohmann::ordered_json nan_as_null(double v) {
    return std::isnan(v) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(v);
}

void accumulate(TrialSummary &summary) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    summary.trials = summary.results.size();
    if (summary.results.empty()) {
        summary.mean_fidelity = nan;
        summary.min_fidelity = nan;
        return;
    }
    double total = 0;
    double lowest = std::numeric_limits<double>::infinity();
    for (const auto &r : summary.results) {
        total += r.fidelity;
        lowest = std::min(lowest, r.fidelity);
        auto [it, fresh] = summary.per_error.try_emplace(r.error);
        ErrorStats &stats = it->second;
        if (fresh) {
            stats.min = r.fidelity;
        }
        stats.count++;
        stats.mean += r.fidelity;
        stats.min = std::min(stats.min, r.fidelity);
    }
    for (auto &[label, stats] : summary.per_error) {
        stats.mean /= static_cast<double>(stats.count);
    }
    summary.mean_fidelity = total / static_cast<double>(summary.results.size());
    summary.min_fidelity = lowest;
}

TrialResult pauli_trial(
    const LogicalInput &input, const PauliString &error, const SyndromeTable *table, bool do_correct) {
    TrialResult r;
    r.input = input.label;
    r.error = error.str();
    SparseState corrupted = apply_string(error, input.state);
    if (do_correct) {
        Correction c = correct(corrupted, *table);
        r.syndrome = c.syndrome;
        r.correction = c.applied.str();
        r.fidelity = fidelity(input.state, c.state);
    } else {
        if (table != nullptr) {
            r.syndrome = extract_syndrome(corrupted, table->stabilizers());
        }
        r.fidelity = fidelity(input.state, corrupted);
    }
    return r;
}

}  // namespace

Syndrome syndrome_of(const StabilizerSet &stabs, const PauliString &error) {
    Syndrome s;
    s.reserve(stabs.size());
    for (const auto &g : stabs.generators()) {
        s.push_back(commutation_sign(g, error) == +1 ? 0 : 1);
    }
    return s;
}

std::string syndrome_str(const Syndrome &s) {
    std::string out;
    for (uint8_t b : s) {
        out.push_back(b ? '1' : '0');
    }
    return out;
}

SyndromeTable::SyndromeTable(StabilizerSet stabs) : stabs_(std::move(stabs)) {
    entries_.emplace(Syndrome(stabs_.size(), 0), SyndromeEntry{PauliString::identity(stabs_.num_qubits()), {}});
}

size_t SyndromeTable::collisions() const {
    size_t total = 0;
    for (const auto &[s, entry] : entries_) {
        total += entry.degenerate.size();
    }
    return total;
}

const PauliString *SyndromeTable::lookup(const Syndrome &s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? nullptr : &it->second.correction;
}

bool SyndromeTable::insert(const PauliString &error) {
    if (error.num_qubits() != stabs_.num_qubits()) {
        throw std::invalid_argument("SyndromeTable: error width mismatch");
    }
    Syndrome s = syndrome_of(stabs_, error);
    auto it = entries_.find(s);
    if (it == entries_.end()) {
        entries_.emplace(std::move(s), SyndromeEntry{error, {}});
        return true;
    }
    if (it->second.correction != error) {
        it->second.degenerate.push_back(error);
    }
    return false;
}

bool acts_trivially(const PauliString &error, const LogicalBasis &basis, double tol) {
    const Amplitude c = inner(basis.codeword(0), apply_string(error, basis.codeword(0)));
    if (std::abs(std::abs(c) - 1) > tol) {
        return false;
    }
    for (const auto &w : basis.codewords()) {
        if (max_abs_diff(apply_string(error, w), w.scaled(c)) > tol) {
            return false;
        }
    }
    return true;
}

SyndromeTable build_syndrome_table(
    const StabilizerSet &stabs, std::span<const PauliString> errors, const LogicalBasis &basis) {
    if (stabs.num_qubits() != basis.num_qubits()) {
        throw std::invalid_argument("build_syndrome_table: stabilizer and code widths differ");
    }
    SyndromeTable table(stabs);
    const Syndrome zero(stabs.size(), 0);
    for (const auto &e : errors) {
        if (syndrome_of(stabs, e) == zero && !acts_trivially(e, basis)) {
            table.add_defect(e);
        }
        table.insert(e);
    }
    return table;
}

Syndrome extract_syndrome(const SparseState &state, const StabilizerSet &stabs) {
    if (state.num_qubits() != stabs.num_qubits()) {
        throw std::invalid_argument("extract_syndrome: width mismatch");
    }
    Syndrome s;
    s.reserve(stabs.size());
    for (const auto &g : stabs.generators()) {
        double e = expectation(g, state);
        if (e >= 1 - SYNDROME_TOL) {
            s.push_back(0);
        } else if (e <= -1 + SYNDROME_TOL) {
            s.push_back(1);
        } else {
            std::ostringstream msg;
            msg << "<" << g.str() << "> = " << e << " is not +-1; state is not a stabilizer eigenstate";
            throw SyndromeError(msg.str());
        }
    }
    return s;
}

Correction correct(const SparseState &state, const SyndromeTable &table) {
    Syndrome s = extract_syndrome(state, table.stabilizers());
    const PauliString *fix = table.lookup(s);
    if (fix == nullptr) {
        throw std::out_of_range("No correction for syndrome " + syndrome_str(s));
    }
    return {apply_string(*fix, state), std::move(s), *fix};
}

Trajectory damp_trajectory(const KrausChannel &channel, const SparseState &state, Rng &rng) {
    if (!state.is_normalized()) {
        throw std::invalid_argument("damp_trajectory requires a normalized state");
    }
    Trajectory t{.state = state};
    for (size_t q = 1; q <= state.num_qubits(); q++) {
        SparseState kept = apply_local(channel.no_jump(), q, t.state);
        SparseState jumped = apply_local(channel.jump(), q, t.state);
        const double p0 = kept.norm_squared();
        const double p1 = jumped.norm_squared();
        t.branch_sum_deviation = std::max(t.branch_sum_deviation, std::abs(p0 + p1 - 1));
        if (std::abs(p0 + p1 - 1) > BRANCH_SUM_TOL) {
            throw std::logic_error("damp_trajectory: branch probabilities do not sum to 1");
        }
        t.jump_probabilities.push_back(p1);
        if (rng.uniform() < p1) {
            t.state = jumped.normalized();
            t.damped.push_back(q);
        } else {
            t.state = kept.normalized();
        }
    }
    return t;
}

Trajectory damp_trajectory(const KrausChannel &channel, const SparseState &state, uint64_t seed) {
    Rng rng(seed);
    return damp_trajectory(channel, state, rng);
}

PauliErrorModel single_qubit_pauli_model(size_t n, bool correct) {
    return {"pauli1", single_qubit_errors(n, false), correct};
}

std::string model_name(const ErrorModel &model) {
    if (const auto *p = std::get_if<PauliErrorModel>(&model)) {
        return p->name;
    }
    return "damping";
}

std::vector<LogicalInput> logical_inputs(const LogicalBasis &basis) {
    std::vector<LogicalInput> out;
    for (size_t i = 0; i < basis.size(); i++) {
        out.push_back({"|" + std::to_string(i) + "_L>", basis.codeword(i)});
    }
    const double h = 1 / std::sqrt(2.0);
    for (size_t i = 1; i < basis.size(); i++) {
        const std::string tag = "|" + std::to_string(i) + "_L>";
        out.push_back({"|0_L>+" + tag, (basis.codeword(0) + basis.codeword(i)).scaled(h)});
        out.push_back({"|0_L>-" + tag, (basis.codeword(0) - basis.codeword(i)).scaled(h)});
    }
    return out;
}

TrialSummary run_trials(
    const LogicalBasis &basis,
    const SyndromeTable *table,
    const ErrorModel &model,
    size_t trials,
    uint64_t seed) {
    TrialSummary summary{.code = basis.name(), .model = model_name(model), .seed = seed};
    const auto inputs = logical_inputs(basis);
    const auto *pauli = std::get_if<PauliErrorModel>(&model);
    if (pauli != nullptr) {
        if (pauli->errors.empty()) {
            throw std::invalid_argument("run_trials: Pauli model has no errors");
        }
        if (pauli->correct && table == nullptr) {
            throw std::invalid_argument("run_trials: correction requested without a syndrome table");
        }
    }
    std::optional<KrausChannel> channel;
    if (const auto *d = std::get_if<DampingErrorModel>(&model)) {
        channel.emplace(d->gamma);
    }

    for (size_t i = 0; i < trials; i++) {
        const uint64_t trial_seed = derive_seed(seed, i);
        Rng rng(trial_seed);
        const LogicalInput &input = inputs[rng.below(inputs.size())];
        TrialResult r;
        if (pauli != nullptr) {
            const PauliString &e = pauli->errors[rng.below(pauli->errors.size())];
            r = pauli_trial(input, e, table, pauli->correct);
        } else {
            Trajectory t = damp_trajectory(*channel, input.state, rng);
            r.input = input.label;
            if (t.damped.empty()) {
                r.error = "none";
            } else {
                for (size_t k = 0; k < t.damped.size(); k++) {
                    r.error += (k ? " E1_" : "E1_") + std::to_string(t.damped[k]);
                }
            }
            r.fidelity = fidelity(input.state, t.state);
        }
        r.trial = i;
        r.seed = trial_seed;
        summary.results.push_back(std::move(r));
    }
    accumulate(summary);
    return summary;
}

TrialSummary sweep_pauli_errors(const LogicalBasis &basis, const SyndromeTable *table, const PauliErrorModel &model) {
    if (model.correct && table == nullptr) {
        throw std::invalid_argument("sweep_pauli_errors: correction requested without a syndrome table");
    }
    TrialSummary summary{.code = basis.name(), .model = model.name};
    const auto inputs = logical_inputs(basis);
    size_t index = 0;
    for (const auto &e : model.errors) {
        for (const auto &input : inputs) {
            TrialResult r = pauli_trial(input, e, table, model.correct);
            r.trial = index++;
            summary.results.push_back(std::move(r));
        }
    }
    accumulate(summary);
    return summary;
}

nlohmann::ordered_json to_json(const SyndromeTable &table) {
    auto stabs = nlohmann::ordered_json::array();
    for (const auto &g : table.stabilizers().generators()) {
        stabs.push_back(g.str());
    }
    auto entries = nlohmann::ordered_json::array();
    for (const auto &[s, entry] : table.entries()) {
        auto degenerate = nlohmann::ordered_json::array();
        for (const auto &e : entry.degenerate) {
            degenerate.push_back(e.str());
        }
        entries.push_back({{"syndrome", syndrome_str(s)}, {"correction", entry.correction.str()}, {"degenerate", degenerate}});
    }
    auto defects = nlohmann::ordered_json::array();
    for (const auto &e : table.defects()) {
        defects.push_back(e.str());
    }
    return {
        {"stabilizers", stabs},
        {"entries", entries},
        {"collisions", table.collisions()},
        {"defects", defects},
    };
}

nlohmann::ordered_json to_json(const TrialResult &r) {
    nlohmann::ordered_json j = {
        {"trial", r.trial},
        {"seed", r.seed},
        {"input", r.input},
        {"error", r.error},
    };
    j["syndrome"] = r.syndrome ? nlohmann::ordered_json(syndrome_str(*r.syndrome)) : nlohmann::ordered_json(nullptr);
    j["correction"] = r.correction ? nlohmann::ordered_json(*r.correction) : nlohmann::ordered_json(nullptr);
    j["fidelity"] = r.fidelity;
    return j;
}

nlohmann::ordered_json summary_json(const TrialSummary &s) {
    auto per_error = nlohmann::ordered_json::array();
    for (const auto &[label, stats] : s.per_error) {
        per_error.push_back({{"error", label}, {"count", stats.count}, {"mean", stats.mean}, {"min", stats.min}});
    }
    return {
        {"record", "summary"},
        {"code", s.code},
        {"model", s.model},
        {"seed", s.seed},
        {"trials", s.trials},
        {"mean_fidelity", nan_as_null(s.mean_fidelity)},
        {"min_fidelity", nan_as_null(s.min_fidelity)},
        {"per_error", per_error},
    };
}

std::string trials_jsonl(const TrialSummary &s) {
    std::string out;
    for (const auto &r : s.results) {
        out += to_json(r).dump();
        out += '\n';
    }
    out += summary_json(s).dump();
    out += '\n';
    return out;
}

std::string per_error_csv(const TrialSummary &s) {
    std::ostringstream out;
    out.precision(17);
    out << "error,count,mean,min\n";
    for (const auto &[label, stats] : s.per_error) {
        out << '"' << label << "\"," << stats.count << ',' << stats.mean << ',' << stats.min << '\n';
    }
    return out.str();
}

}  // namespace ghzqec
