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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

namespace ghzqec {

namespace {

using json = nlohmann::ordered_json;

constexpr size_t DEFAULT_QYBE_SAMPLES = 200;
constexpr uint64_t DEFAULT_VERIFY_SEED = 1;

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(6);
    out << v;
    return out.str();
}

size_t parse_size(std::string_view text, std::string_view what) {
    size_t value = 0;
    size_t used = 0;
    try {
        value = std::stoul(std::string(text), &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("Invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

PauliString x_over(size_t n, size_t first, size_t count) {
    PauliString p(n);
    for (size_t q = first; q < first + count; q++) {
        p = p.with_letter(q, PauliLetter::X);
    }
    return p;
}

PauliString same_letter(size_t n, PauliLetter l) {
    PauliString p(n);
    for (size_t q = 1; q <= n; q++) {
        p = p.with_letter(q, l);
    }
    return p;
}

PauliString braid_generator(size_t k) {
    return PauliString::from_dense("-Y" + std::string(k - 1, 'X'));
}

CodeInfo shor_info() {
    const auto form = shor_hamiltonian();
    CodeInfo info{.selector = "shor", .basis = build_shor(), .braid_structure = braid_generator(3)};
    info.hamiltonian_words = realize(form);
    info.construction = form.description;
    info.stabilizers = shor_stabilizers();
    info.xbar = same_letter(9, PauliLetter::Z);
    info.zbar = same_letter(9, PauliLetter::X);
    info.generators = form.generators;
    info.ybar_is_generator_product = true;
    info.hamming_t = 1;
    info.hamming_blocks = 3;
    return info;
}

CodeInfo blocks_info(const std::string &text) {
    BlockSpec spec = BlockSpec::parse(text);
    const auto form = repetition_hamiltonian(spec);
    const auto sizes = spec.factor_sizes();
    const size_t n = spec.total_qubits();
    CodeInfo info{
        .selector = "blocks:" + spec.str(),
        .basis = build_repetition_code(spec),
        .braid_structure = braid_generator(sizes.front())};
    info.hamiltonian_words = realize(form);
    info.construction = form.description;
    info.stabilizers = block_stabilizers(spec);
    PauliString xbar(n);
    size_t offset = 1;
    for (size_t q : sizes) {
        xbar = xbar.with_letter(offset, PauliLetter::Z);
        offset += q;
    }
    info.xbar = xbar;
    info.zbar = x_over(n, 1, sizes.front());
    info.generators = form.generators;
    info.hamming_t = info.basis.claimed_t();
    info.hamming_blocks = spec.ghz_count();
    return info;
}

CodeInfo cat_info(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("cat:N needs N >= 2");
    }
    const auto m = cat_generator(n);
    CodeInfo info{.selector = "cat:" + std::to_string(n), .basis = build_cat(n), .braid_structure = m.string()};
    const SparseState zero = SparseState::basis(n, 0);
    const SparseState plus = rotate(m, QUARTER_TURN, zero);
    const SparseState minus = rotate(m, -QUARTER_TURN, zero);
    const double h = std::numbers::sqrt2 / 2;
    info.hamiltonian_words = {(plus + minus).scaled(h), (plus - minus).scaled(h)};
    info.construction = "|0_L>, |1_L> = (e^{pi/4 M} +- e^{-pi/4 M})|0^n>/sqrt(2), M = " + m.string().dense_str();
    info.stabilizers = cat_stabilizers(n);
    info.xbar = same_letter(n, PauliLetter::X);
    info.zbar = PauliString::single(n, 1, PauliLetter::Z);
    info.generators = {m};
    return info;
}

CodeInfo leung_info() {
    const auto form = leung_hamiltonian();
    CodeInfo info{.selector = "leung41", .basis = build_leung_4_1(), .braid_structure = braid_generator(4)};
    info.hamiltonian_words = realize(form);
    info.construction = form.description;
    info.stabilizers = leung_stabilizers();
    info.xbar = PauliString::from_dense("+XXII");
    info.zbar = PauliString::from_dense("+ZIZI");
    info.generators = form.generators;
    info.hamming_t = 1;
    info.hamming_blocks = 1;
    return info;
}

CodeInfo code62_info() {
    const auto form = code62_hamiltonian();
    CodeInfo info{.selector = "code62", .basis = build_6_2(), .braid_structure = braid_generator(6)};
    info.hamiltonian_words = realize(form);
    info.construction = form.description;
    info.generators = form.generators;
    info.hamming_t = 1;
    info.hamming_blocks = 1;
    return info;
}

CodeInfo t0_info() {
    T0Construction t0 = build_3_1_t0();
    const auto m = AlmostComplexStructure(PauliString::from_dense("-YYY"));
    CodeInfo info{.selector = "t0", .basis = t0.basis, .braid_structure = braid_generator(3)};
    info.hamiltonian_words = {rotate(m, QUARTER_TURN, SparseState::basis(3, 0))};
    info.construction = "e^{pi/4 M}|000>, M = -Y Y Y";
    info.generators = {m};
    info.hamming_t = 0;
    info.hamming_blocks = 1;
    info.t0 = std::move(t0);
    return info;
}

double dual_deviation(const CodeInfo &info) {
    double dev = 0;
    for (size_t i = 0; i < info.basis.size(); i++) {
        dev = std::max(dev, max_abs_diff(info.basis.codeword(i), info.hamiltonian_words.at(i)));
    }
    return dev;
}

json t0_json(const T0Construction &t0, double tol) {
    const auto m = AlmostComplexStructure(PauliString::from_dense("-YYY"));
    auto images = json::array();
    size_t minus = 0;
    double dev = 0;
    for (size_t i = 0; i < t0.images.size(); i++) {
        SparseState column = rotate(m, QUARTER_TURN, SparseState::from_bits(t0.reference_bits[i]));
        dev = std::max(dev, max_abs_diff(t0.images[i], column.scaled(static_cast<double>(t0.reference_signs[i]))));
        minus += t0.reference_signs[i] < 0 ? 1 : 0;
        images.push_back({
            {"error", t0.labels[i]},
            {"column", t0.reference_bits[i]},
            {"sign", t0.reference_signs[i]},
            {"state", to_json(t0.images[i])},
        });
    }
    const auto ortho = orthonormal_basis_check(t0.images, tol);
    return {
        {"label", "E|psi_L> = +- e^{pi/4 M}|b>, M = -Y Y Y"},
        {"images", images},
        {"minus_signs", minus},
        {"column_deviation", dev},
        {"orthonormal", to_json(ortho)},
    };
}

struct CheckOutcome {
    json entry;
    bool exact = true;
    bool pass = false;
};

std::string stabilizer_label(const StabilizerSet &stabs) {
    std::string out;
    for (size_t i = 0; i < stabs.size(); i++) {
        std::string s = stabs[i].str();
        s = s.substr(0, s.find(" (n="));
        if (s.front() == '+') {
            s.erase(0, 1);
        }
        out += (i ? ", " : "") + s;
    }
    return out + " fix every codeword";
}

CheckOutcome check_stabilizers(const CodeInfo &info, double tol) {
    if (!info.stabilizers) {
        throw InapplicableCheck("stabilizers: " + info.selector + " has no stabilizer description");
    }
    auto r = stabilizer_fix_check(*info.stabilizers, info.basis, tol);
    return {{{"check", "stabilizers"}, {"label", stabilizer_label(*info.stabilizers)}, {"exact", true},
             {"pass", r.holds}, {"result", to_json(r)}},
            true, r.holds};
}

CheckOutcome check_logicals(const CodeInfo &info, double tol) {
    if (!info.xbar || info.basis.logical_qubits() != 1) {
        throw InapplicableCheck("logicals: " + info.selector + " is not a one-qubit code with known logicals");
    }
    std::span<const AlmostComplexStructure> gens;
    if (info.ybar_is_generator_product) {
        gens = info.generators;
    }
    auto r = logical_op_check(info.basis, *info.xbar, *info.zbar, gens, tol);
    std::string label = "xbar = " + info.xbar->str() + ", zbar = " + info.zbar->str() + ", ybar = zbar xbar";
    if (!gens.empty()) {
        label += " = prod M_i = e^{pi/2 sum M_i}";
    }
    return {{{"check", "logicals"}, {"label", label}, {"exact", true}, {"pass", r.holds}, {"result", to_json(r)}},
            true, r.holds};
}

CheckOutcome check_kl(const CodeInfo &info, double tol, const std::optional<std::string> &csv_path,
                      CommandResult &result) {
    const auto errors = single_qubit_errors(info.basis.num_qubits());
    auto r = kl_check(info.basis, errors, tol);
    if (csv_path) {
        result.files.emplace_back(*csv_path, c_matrix_csv(r));
    }
    return {{{"check", "kl"},
             {"label", "<i_L|E^dag F|j_L> = c_EF delta_ij over Id and single-qubit X, Y, Z"},
             {"exact", true},
             {"pass", r.pass},
             {"result", to_json(r)}},
            true, r.pass};
}

CheckOutcome check_approx_kl(const CodeInfo &info, std::vector<double> gammas) {
    if (gammas.empty()) {
        gammas = {1e-2, 1e-3, 1e-4};
    }
    auto r = approximate_kl(info.basis, gammas);
    return {{{"check", "approx-kl"},
             {"label", "max |<i_L|E_a^dag E_b|j_L> - c_ab delta_ij| under amplitude damping"},
             {"exact", false},
             {"pass", nullptr},
             {"result", to_json(r)}},
            false, true};
}

CheckOutcome check_hamming(const CodeInfo &info) {
    if (!info.hamming_t) {
        throw InapplicableCheck("hamming: " + info.selector + " has no correctable-error claim");
    }
    auto r = hamming_bound(*info.hamming_t, info.hamming_blocks, info.basis.num_qubits());
    return {{{"check", "hamming"},
             {"label", "2^t (1 + B + 2N) <= 2^N"},
             {"exact", false},
             {"pass", nullptr},
             {"result", to_json(r)}},
            false, true};
}

CheckOutcome check_braid(const CodeInfo &info, double tol) {
    const AlmostComplexStructure m(info.braid_structure);
    const size_t n = m.width() + 1;
    if (n > MAX_EXHAUSTIVE_QUBITS) {
        throw InapplicableCheck("braid: generator too wide for an exhaustive check");
    }
    auto relation = check_braid_relation(m, n, tol);
    auto pairs = json::array();
    bool far_ok = true;
    for (size_t i = 0; i < info.generators.size(); i++) {
        for (size_t j = i + 1; j < info.generators.size(); j++) {
            const auto &a = info.generators[i].string();
            const auto &b = info.generators[j].string();
            bool commute = a * b == b * a;
            far_ok = far_ok && commute;
            pairs.push_back({{"M_i", a.str()}, {"M_j", b.str()}, {"commute", commute}});
        }
    }
    bool pass = relation.holds && far_ok;
    return {{{"check", "braid"},
             {"label", "B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}, B = e^{pi/4 M}; B_i B_j = B_j B_i for the code's M_i"},
             {"exact", true},
             {"pass", pass},
             {"result", {{"relation", to_json(relation)}, {"far_commutativity", pairs}, {"far_holds", far_ok}}}},
            true, pass};
}

CheckOutcome check_ybe_bundle(double tol, uint64_t seed, size_t samples) {
    const AlmostComplexStructure m(PauliString::from_dense("-YX"));
    auto ybe = check_ybe(m, QUARTER_TURN, tol);
    auto qybe = check_qybe(m, samples, seed, tol);
    return {{{"check", "ybe"},
             {"label", "(G x Id)(Id x G)(G x Id) = (Id x G)(G x Id)(Id x G), G = e^{pi/4 M}, M = -Y X"},
             {"exact", true},
             {"pass", ybe.holds},
             {"result", {{"ybe", to_json(ybe)}, {"qybe", to_json(qybe)}}}},
            true, ybe.holds};
}

std::vector<std::string> split_list(std::string_view text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

void append_line(std::string &text, const std::string &line) {
    text += line;
    text += '\n';
}

std::string status_word(const CheckOutcome &c) {
    if (!c.exact) {
        return "INFO";
    }
    return c.pass ? "PASS" : "FAIL";
}

bool given(const CLI::App *app, const std::string &name) {
    const CLI::Option *opt = app->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
}

uint64_t fresh_seed() {
    std::random_device rd;
    return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

}  // namespace

CodeInfo resolve_code(std::string_view selector) {
    const std::string s(selector);
    if (s == "shor") {
        return shor_info();
    }
    if (s == "leung41") {
        return leung_info();
    }
    if (s == "code62") {
        return code62_info();
    }
    if (s == "t0") {
        return t0_info();
    }
    if (s.starts_with("cat:")) {
        return cat_info(parse_size(s.substr(4), "cat size"));
    }
    if (s.starts_with("blocks:")) {
        return blocks_info(s.substr(7));
    }
    throw std::invalid_argument(
        "Unknown code '" + s + "' (expected shor, cat:N, blocks:SPEC, leung41, code62 or t0)");
}

json report_header(std::string_view command, const RunConfig &config) {
    return {
        {"schema", REPORT_SCHEMA},
        {"tool", "ghzqec"},
        {"version", TOOL_VERSION},
        {"command", command},
        {"tolerances",
         {{"exact", config.tol},
          {"syndrome", SYNDROME_TOL},
          {"branch_sum", BRANCH_SUM_TOL},
          {"normalization", NORMALIZATION_TOL}}},
        {"conventions", "Y = ZX (real); qubit 1 is the leftmost bit"},
    };
}

CommandResult cmd_build(const RunConfig &config) {
    CodeInfo info = resolve_code(config.code);
    CommandResult result;
    json report = report_header("build", config);
    const double dev = dual_deviation(info);
    const bool agree = dev <= config.tol;
    report["code"] = info.selector;
    report["basis"] = to_json(info.basis);
    report["cross_check"] = {
        {"construction", info.construction},
        {"max_deviation", dev},
        {"holds", agree},
    };
    if (info.t0) {
        report["t0"] = t0_json(*info.t0, config.tol);
    }
    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  build  code=" + info.selector);
    append_line(result.text, "  [n, k] = [" + std::to_string(info.basis.num_qubits()) + ", " +
                                 std::to_string(info.basis.logical_qubits()) + "]");
    for (size_t i = 0; i < info.basis.size(); i++) {
        append_line(result.text, "  |" + std::to_string(i) + "_L> = " + info.basis.codeword(i).str());
    }
    append_line(result.text, std::string(agree ? "PASS" : "FAIL") + "  " + info.construction +
                                 "  max_dev=" + fmt(dev));
    if (info.t0) {
        const auto &t = report["t0"];
        append_line(result.text, "  images of |psi_L>: " + std::to_string(t["minus_signs"].get<size_t>()) +
                                     " minus signs relative to e^{pi/4 M}|b>");
    }
    result.report = std::move(report);
    result.exit_code = agree ? EXIT_OK : EXIT_CHECK_FAILED;
    return result;
}

CommandResult cmd_verify(const RunConfig &config) {
    CodeInfo info = resolve_code(config.code);
    std::vector<std::string> checks = config.checks;
    const bool explicit_checks = !checks.empty();
    if (!explicit_checks) {
        checks = all_checks();
    }
    for (const auto &c : checks) {
        if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end()) {
            throw std::invalid_argument("Unknown check '" + c + "'");
        }
    }
    const uint64_t seed = config.seed.value_or(DEFAULT_VERIFY_SEED);
    CommandResult result;
    json report = report_header("verify", config);
    report["code"] = info.selector;
    report["seed"] = seed;
    auto entries = json::array();
    auto skipped = json::array();
    bool all_pass = true;
    size_t exact_count = 0;
    size_t exact_pass = 0;
    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  verify  code=" + info.selector +
                                 "  tol=" + fmt(config.tol));
    for (const auto &c : checks) {
        std::optional<CheckOutcome> outcome;
        try {
            if (c == "stabilizers") {
                outcome = check_stabilizers(info, config.tol);
            } else if (c == "logicals") {
                outcome = check_logicals(info, config.tol);
            } else if (c == "kl") {
                outcome = check_kl(info, config.tol, config.csv_path, result);
            } else if (c == "approx-kl") {
                outcome = check_approx_kl(info, config.gammas);
            } else if (c == "hamming") {
                outcome = check_hamming(info);
            } else if (c == "braid") {
                outcome = check_braid(info, config.tol);
            } else if (c == "ybe") {
                outcome = check_ybe_bundle(config.tol, seed, DEFAULT_QYBE_SAMPLES);
            }
        } catch (const InapplicableCheck &e) {
            if (explicit_checks) {
                throw;
            }
            skipped.push_back({{"check", c}, {"reason", e.what()}});
            append_line(result.text, "SKIP  " + c + "  " + e.what());
            continue;
        }
        std::string detail;
        const auto &res = outcome->entry["result"];
        if (c == "hamming") {
            detail = "lhs=" + res["lhs"].dump() + " rhs=" + res["rhs"].dump() +
                     (res["satisfied"].get<bool>() ? (res["saturated"].get<bool>() ? " saturated" : " satisfied")
                                                   : " violated");
        } else if (c == "approx-kl") {
            detail = "slope=" + (res["loglog_slope"].is_null() ? std::string("n/a")
                                                                : fmt(res["loglog_slope"].get<double>()));
        } else if (c == "kl") {
            detail = "offdiag=" + fmt(res["offdiag_max"].get<double>()) +
                     " diag_mismatch=" + fmt(res["diag_mismatch_max"].get<double>());
        } else if (c == "stabilizers" || c == "logicals") {
            double dev = c == "stabilizers" ? res["max_deviation"].get<double>()
                                            : std::max({res["xbar_deviation"].get<double>(),
                                                        res["zbar_deviation"].get<double>(),
                                                        res["ybar_deviation"].get<double>()});
            detail = "max_dev=" + fmt(dev);
        } else if (c == "braid") {
            detail = "max_dev=" + fmt(res["relation"]["max_deviation"].get<double>());
        } else if (c == "ybe") {
            detail = "max_dev=" + fmt(res["ybe"]["max_deviation"].get<double>());
        }
        append_line(result.text, status_word(*outcome) + "  " + c + "  " +
                                     outcome->entry["label"].get<std::string>() + "  " + detail);
        if (outcome->exact) {
            exact_count++;
            exact_pass += outcome->pass ? 1 : 0;
            all_pass = all_pass && outcome->pass;
        }
        entries.push_back(std::move(outcome->entry));
    }
    report["checks"] = std::move(entries);
    report["skipped"] = std::move(skipped);
    report["exact_pass"] = all_pass;
    append_line(result.text, std::string("result: ") + (all_pass ? "PASS" : "FAIL") + " (" +
                                 std::to_string(exact_pass) + "/" + std::to_string(exact_count) +
                                 " exact checks)");
    result.report = std::move(report);
    result.exit_code = all_pass ? EXIT_OK : EXIT_CHECK_FAILED;
    return result;
}

CommandResult cmd_simulate(const RunConfig &config) {
    CodeInfo info = resolve_code(config.code);
    if (!config.seed && !config.sweep) {
        throw std::logic_error("cmd_simulate: seed must be resolved by the caller");
    }
    const uint64_t seed = config.seed.value_or(0);
    const size_t n = info.basis.num_qubits();

    ErrorModel model;
    std::optional<SyndromeTable> table;
    if (config.model == "damping") {
        if (config.sweep) {
            throw InapplicableCheck("--sweep needs a Pauli error model");
        }
        double gamma = config.gammas.empty() ? 0.01 : config.gammas.front();
        model = DampingErrorModel{gamma};
    } else if (config.model == "pauli1" || config.model == "pauli") {
        PauliErrorModel pauli = single_qubit_pauli_model(n, config.correct);
        if (config.model == "pauli" || !config.errors.empty()) {
            pauli.name = "pauli";
            pauli.errors.clear();
            for (const auto &e : config.errors) {
                PauliString p = PauliString::parse(e.find("(n=") == std::string::npos
                                                       ? e + " (n=" + std::to_string(n) + ")"
                                                       : e);
                if (p.num_qubits() != n) {
                    throw std::invalid_argument("Error '" + e + "' does not act on " + std::to_string(n) + " qubits");
                }
                pauli.errors.push_back(p);
            }
            if (pauli.errors.empty()) {
                throw std::invalid_argument("--model pauli needs at least one --error");
            }
        }
        if (info.stabilizers) {
            table = build_syndrome_table(*info.stabilizers, pauli.errors, info.basis);
        } else if (pauli.correct) {
            throw InapplicableCheck(
                "simulate: " + info.selector + " has no stabilizer description; use --no-correct");
        }
        model = std::move(pauli);
    } else {
        throw std::invalid_argument("Unknown error model '" + config.model + "' (expected pauli1, pauli or damping)");
    }

    const SyndromeTable *table_ptr = table ? &*table : nullptr;
    TrialSummary summary = config.sweep
                               ? sweep_pauli_errors(info.basis, table_ptr, std::get<PauliErrorModel>(model))
                               : run_trials(info.basis, table_ptr, model, config.trials, seed);

    CommandResult result;
    json report = report_header("simulate", config);
    report["code"] = info.selector;
    report["model"] = model_name(model);
    if (const auto *d = std::get_if<DampingErrorModel>(&model)) {
        report["gamma"] = d->gamma;
        report["recovery"] = "none (uncorrected overlap)";
    } else {
        report["correct"] = std::get<PauliErrorModel>(model).correct;
    }
    report["mode"] = config.sweep ? "sweep" : "monte-carlo";
    if (table) {
        report["syndrome_table"] = to_json(*table);
    }
    report["summary"] = summary_json(summary);
    if (config.jsonl_path) {
        result.files.emplace_back(*config.jsonl_path, trials_jsonl(summary));
    }
    if (config.csv_path) {
        result.files.emplace_back(*config.csv_path, per_error_csv(summary));
    }

    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  simulate  code=" + info.selector +
                                 "  model=" + model_name(model) + "  seed=" + std::to_string(summary.seed) +
                                 "  trials=" + std::to_string(summary.trials));
    if (table) {
        append_line(result.text, "  syndrome table: " + std::to_string(table->entries().size()) + " entries, " +
                                     std::to_string(table->collisions()) + " degenerate, " +
                                     std::to_string(table->defects().size()) + " defects");
    }
    if (summary.trials == 0) {
        append_line(result.text, "  no trials");
    } else {
        append_line(result.text, "  mean fidelity " + fmt(summary.mean_fidelity) + ", min " +
                                     fmt(summary.min_fidelity));
        for (const auto &[label, stats] : summary.per_error) {
            append_line(result.text, "    " + label + "  count=" + std::to_string(stats.count) +
                                         " mean=" + fmt(stats.mean) + " min=" + fmt(stats.min));
        }
    }
    result.report = std::move(report);
    return result;
}

CommandResult cmd_ghz(const RunConfig &config) {
    const size_t n = config.ghz_qubits;
    const auto specs = ghz_basis_specs(n);
    const auto states = ghz_basis(n);
    const auto ortho = orthonormal_basis_check(states, config.tol);
    CommandResult result;
    json report = report_header("ghz", config);
    report["n"] = n;
    auto list = json::array();
    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  ghz  n=" + std::to_string(n));
    for (size_t i = 0; i < specs.size(); i++) {
        list.push_back({{"spec", specs[i].str()}, {"state", to_json(states[i])}});
        append_line(result.text, "  " + specs[i].str() + " = " + states[i].str());
    }
    report["states"] = std::move(list);
    report["orthonormal"] = to_json(ortho);
    append_line(result.text, std::string(ortho.holds ? "PASS" : "FAIL") + "  <GHZ_a|GHZ_b> = delta_ab  max_dev=" +
                                 fmt(ortho.max_deviation));
    result.report = std::move(report);
    result.exit_code = ortho.holds ? EXIT_OK : EXIT_CHECK_FAILED;
    return result;
}

CommandResult cmd_braid_check(const RunConfig &config) {
    const AlmostComplexStructure m(PauliString::from_dense(config.structure));
    const size_t n = config.braid_qubits == 0 ? m.width() + 1 : config.braid_qubits;
    auto r = check_braid_relation(m, n, config.tol);
    CommandResult result;
    json report = report_header("braid-check", config);
    report["structure"] = m.string().dense_str();
    report["n"] = n;
    report["relation"] = to_json(r);
    const auto mi = m.embedded(1, n).string();
    const auto mj = m.embedded(2, n).string();
    report["adjacent_anticommute"] = commutation_sign(mi, mj) == -1;
    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  braid-check  M=" + m.string().dense_str() +
                                 "  n=" + std::to_string(n));
    append_line(result.text, std::string(r.holds ? "PASS" : "FAIL") +
                                 "  B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}, B = e^{pi/4 M}  max_dev=" +
                                 fmt(r.max_deviation));
    append_line(result.text, std::string("  M_i, M_{i+1} ") +
                                 (report["adjacent_anticommute"].get<bool>() ? "anticommute" : "commute"));
    result.report = std::move(report);
    result.exit_code = r.holds ? EXIT_OK : EXIT_CHECK_FAILED;
    return result;
}

CommandResult cmd_ybe_check(const RunConfig &config) {
    const AlmostComplexStructure m(PauliString::from_dense(config.structure));
    if (!config.seed) {
        throw std::logic_error("cmd_ybe_check: seed must be resolved by the caller");
    }
    auto ybe = check_ybe(m, config.theta, config.tol);
    auto qybe = check_qybe(m, config.trials, *config.seed, config.tol);
    CommandResult result;
    json report = report_header("ybe-check", config);
    report["structure"] = m.string().dense_str();
    report["ybe"] = to_json(ybe);
    report["qybe"] = to_json(qybe);
    append_line(result.text, "ghzqec " + std::string(TOOL_VERSION) + "  ybe-check  M=" + m.string().dense_str() +
                                 "  theta=" + fmt(config.theta) + "  seed=" + std::to_string(*config.seed));
    append_line(result.text, std::string(ybe.holds ? "PASS" : "FAIL") +
                                 "  (G x Id)(Id x G)(G x Id) = (Id x G)(G x Id)(Id x G), G = e^{theta M}  max_dev=" +
                                 fmt(ybe.max_deviation));
    for (const auto &rule : qybe.rules) {
        append_line(result.text, "INFO  G(x) G(x o y) G(y), " + composition_name(rule.rule) + ": " +
                                     (rule.holds ? "holds" : "fails") + " on " + std::to_string(rule.samples) +
                                     " samples (" + std::to_string(rule.failures) + " failures, max_dev=" +
                                     fmt(rule.max_deviation) + ")");
    }
    result.report = std::move(report);
    result.exit_code = ybe.holds ? EXIT_OK : EXIT_CHECK_FAILED;
    return result;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Hamiltonian-form GHZ codes: construction and verification", "ghzqec"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(TOOL_VERSION));

    RunConfig config;
    std::string blocks;
    std::string checks;
    std::string gammas;
    uint64_t seed = 0;

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--tol", config.tol, "Tolerance for exact identities")->check(CLI::PositiveNumber);
        sub->add_option("--json", config.json_path, "Write the JSON report to this path ('-' for stdout)");
    };
    auto add_code = [&](CLI::App *sub) {
        sub->add_option("--code", config.code, "shor, cat:N, blocks:SPEC, leung41, code62 or t0");
        sub->add_option("--blocks", blocks, "Block layout 'q,n;q,n;...' (same as --code blocks:SPEC)");
    };

    auto *build = app.add_subcommand("build", "Construct a code and cross-check its two constructions");
    add_code(build);
    add_common(build);

    auto *verify = app.add_subcommand("verify", "Run algebraic checks on a code");
    add_code(verify);
    add_common(verify);
    verify->add_option("--checks", checks, "Comma list of stabilizers,logicals,kl,approx-kl,hamming,braid,ybe");
    verify->add_option("--gamma", gammas, "Comma list of damping strengths for approx-kl");
    verify->add_option("--seed", seed, "Seed for the qYBE samples");
    verify->add_option("--csv", config.csv_path, "Write the KL c-matrix as CSV");

    auto *simulate = app.add_subcommand("simulate", "Monte-Carlo recovery under Pauli or damping noise");
    add_code(simulate);
    add_common(simulate);
    simulate->add_option("--model", config.model, "pauli1 (uniform single-qubit), pauli (--error list) or damping");
    simulate->add_option("--error", config.errors, "Pauli error such as 'Z1 Z2'; repeatable");
    simulate->add_flag("!--no-correct", config.correct, "Skip syndrome correction");
    simulate->add_flag("--sweep", config.sweep, "Run every (error, input) pair once instead of sampling");
    simulate->add_option("--gamma", gammas, "Damping strength");
    simulate->add_option("--trials", config.trials, "Number of trials");
    simulate->add_option("--seed", seed, "Seed; generated and printed when omitted");
    simulate->add_option("--jsonl", config.jsonl_path, "Write one JSON line per trial");
    simulate->add_option("--csv", config.csv_path, "Write per-error fidelity as CSV");

    auto *ghz_cmd = app.add_subcommand("ghz", "List the GHZ basis and check orthonormality");
    ghz_cmd->add_option("--n", config.ghz_qubits, "Number of qubits")->check(CLI::Range(1, 12));
    add_common(ghz_cmd);

    auto *braid = app.add_subcommand("braid-check", "Braid relation for B = e^{pi/4 M}");
    braid->add_option("--m", config.structure, "Almost-complex structure, e.g. -YX");
    braid->add_option("--n", config.braid_qubits, "Register width (default: width of M plus one)");
    add_common(braid);

    auto *ybe_cmd = app.add_subcommand("ybe-check", "Yang-Baxter and spectral Yang-Baxter checks");
    ybe_cmd->add_option("--m", config.structure, "Two-qubit almost-complex structure");
    ybe_cmd->add_option("--theta", config.theta, "Rotation angle for the constant equation");
    ybe_cmd->add_option("--trials", config.trials, "Random (x, y) samples");
    ybe_cmd->add_option("--seed", seed, "Seed; generated and printed when omitted");
    add_common(ybe_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? EXIT_OK : EXIT_USAGE;
    }

    CLI::App *sub = app.get_subcommands().front();
    config.command = sub->get_name();
    try {
        if (!blocks.empty()) {
            if (given(sub, "--code")) {
                throw std::invalid_argument("Give either --code or --blocks, not both");
            }
            config.code = "blocks:" + blocks;
        }
        config.checks = split_list(checks);
        for (const auto &g : split_list(gammas)) {
            size_t used = 0;
            double v = std::stod(g, &used);
            if (used != g.size()) {
                throw std::invalid_argument("Invalid gamma '" + g + "'");
            }
            config.gammas.push_back(v);
        }
        if (given(sub, "--seed")) {
            config.seed = seed;
        } else if ((config.command == "simulate" && !config.sweep) || config.command == "ybe-check") {
            config.seed = fresh_seed();
            err << "no --seed given; using seed " << *config.seed << "\n";
        }
        if (config.command == "ybe-check" && !given(sub, "--trials")) {
            config.trials = DEFAULT_QYBE_SAMPLES;
        }

        CommandResult result;
        if (config.command == "build") {
            result = cmd_build(config);
        } else if (config.command == "verify") {
            result = cmd_verify(config);
        } else if (config.command == "simulate") {
            result = cmd_simulate(config);
        } else if (config.command == "ghz") {
            result = cmd_ghz(config);
        } else if (config.command == "braid-check") {
            result = cmd_braid_check(config);
        } else {
            result = cmd_ybe_check(config);
        }

        const std::string dumped = result.report.dump(2) + "\n";
        if (config.json_path && *config.json_path == "-") {
            out << dumped;
        } else {
            out << result.text;
            if (config.json_path) {
                result.files.insert(result.files.begin(), {*config.json_path, dumped});
            }
        }
        for (const auto &[path, contents] : result.files) {
            std::ofstream file(path, std::ios::binary);
            if (!file) {
                throw std::runtime_error("Cannot write " + path);
            }
            file << contents;
        }
        return result.exit_code;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
}

}  // namespace ghzqec
