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

#include "ghzqec/verify.h"

#include <bit>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ghzqec {

namespace {

PauliString z_pair(size_t n, size_t a, size_t b) {
    return PauliString::single(n, a, PauliLetter::Z).with_letter(b, PauliLetter::Z);
}

PauliString x_range(size_t n, size_t first, size_t last) {
    PauliString p(n);
    for (size_t q = first; q <= last; q++) {
        p = p.with_letter(q, PauliLetter::X);
    }
    return p;
}

/// images[e][i] = E_e |i_L>
using ImageTable = std::vector<std::vector<SparseState>>;

struct KLCore {
    std::vector<std::vector<Amplitude>> c_matrix;
    double offdiag_max = 0;
    double diag_mismatch_max = 0;
    MatrixLocation worst_offdiag;
    MatrixLocation worst_diag;
    double hermiticity_deviation = 0;
};

KLCore kl_core(const ImageTable &images) {
    const size_t count = images.size();
    const size_t logical = images.empty() ? 0 : images.front().size();
    KLCore core;
    core.c_matrix.assign(count, std::vector<Amplitude>(count));
    for (size_t a = 0; a < count; a++) {
        for (size_t b = 0; b < count; b++) {
            const Amplitude c00 = inner(images[a][0], images[b][0]);
            core.c_matrix[a][b] = c00;
            for (size_t i = 0; i < logical; i++) {
                for (size_t j = 0; j < logical; j++) {
                    const Amplitude v = (i == 0 && j == 0) ? c00 : inner(images[a][i], images[b][j]);
                    if (i != j) {
                        if (std::abs(v) > core.offdiag_max) {
                            core.offdiag_max = std::abs(v);
                            core.worst_offdiag = {a, b, i, j};
                        }
                    } else if (std::abs(v - c00) > core.diag_mismatch_max) {
                        core.diag_mismatch_max = std::abs(v - c00);
                        core.worst_diag = {a, b, i, j};
                    }
                }
            }
        }
    }
    for (size_t a = 0; a < count; a++) {
        for (size_t b = 0; b < count; b++) {
            core.hermiticity_deviation =
                std::max(core.hermiticity_deviation, std::abs(core.c_matrix[a][b] - std::conj(core.c_matrix[b][a])));
        }
    }
    return core;
}

nlohmann::ordered_json location_json(const MatrixLocation &m, const std::vector<std::string> &labels) {
    return {
        {"E", labels.empty() ? std::to_string(m.error_a) : labels.at(m.error_a)},
        {"F", labels.empty() ? std::to_string(m.error_b) : labels.at(m.error_b)},
        {"i", m.logical_i},
        {"j", m.logical_j},
    };
}

std::string big_str(const BigInt &v) {
    return v.str();
}

nlohmann::ordered_json big_json(const BigInt &v) {
    if (v <= BigInt(std::numeric_limits<uint64_t>::max())) {
        return v.convert_to<uint64_t>();
    }
    return big_str(v);
}

}  // namespace

StabilizerSet::StabilizerSet(std::vector<PauliString> generators) : generators_(std::move(generators)) {
    if (generators_.empty()) {
        throw std::invalid_argument("StabilizerSet needs at least one generator");
    }
    const size_t n = generators_.front().num_qubits();
    for (size_t a = 0; a < generators_.size(); a++) {
        const auto &g = generators_[a];
        if (g.num_qubits() != n) {
            throw std::invalid_argument("StabilizerSet generators differ in width");
        }
        if (g * g != PauliString::identity(n)) {
            throw std::invalid_argument("Stabilizer " + g.str() + " does not square to +Id");
        }
        for (size_t b = a + 1; b < generators_.size(); b++) {
            if (commutation_sign(g, generators_[b]) != +1) {
                throw std::invalid_argument(
                    "Stabilizers " + g.str() + " and " + generators_[b].str() + " anticommute");
            }
        }
    }
}

StabilizerSet shor_stabilizers() {
    return StabilizerSet({
        z_pair(9, 1, 2),
        z_pair(9, 2, 3),
        z_pair(9, 4, 5),
        z_pair(9, 5, 6),
        z_pair(9, 7, 8),
        z_pair(9, 8, 9),
        x_range(9, 1, 6),
        x_range(9, 4, 9),
    });
}

StabilizerSet block_stabilizers(const BlockSpec &spec) {
    const size_t n = spec.total_qubits();
    const auto sizes = spec.factor_sizes();
    std::vector<PauliString> gens;
    std::vector<size_t> offsets;
    size_t offset = 1;
    for (size_t q : sizes) {
        offsets.push_back(offset);
        for (size_t i = 0; i + 1 < q; i++) {
            gens.push_back(z_pair(n, offset + i, offset + i + 1));
        }
        offset += q;
    }
    for (size_t f = 0; f + 1 < sizes.size(); f++) {
        gens.push_back(x_range(n, offsets[f], offsets[f + 1] + sizes[f + 1] - 1));
    }
    return StabilizerSet(std::move(gens));
}

StabilizerSet cat_stabilizers(size_t n) {
    if (n < 2) {
        throw std::invalid_argument("cat_stabilizers: need n >= 2");
    }
    std::vector<PauliString> gens;
    for (size_t q = 1; q < n; q++) {
        gens.push_back(z_pair(n, q, q + 1));
    }
    return StabilizerSet(std::move(gens));
}

StabilizerSet leung_stabilizers() {
    return StabilizerSet({z_pair(4, 1, 2), z_pair(4, 3, 4), x_range(4, 1, 4)});
}

FixReport stabilizer_fix_check(const StabilizerSet &stabs, const LogicalBasis &basis, double tol) {
    if (stabs.num_qubits() != basis.num_qubits()) {
        throw std::invalid_argument("stabilizer_fix_check: width mismatch");
    }
    FixReport report;
    report.generators = stabs.size();
    report.codewords = basis.size();
    for (const auto &g : stabs.generators()) {
        for (size_t i = 0; i < basis.size(); i++) {
            const auto &w = basis.codeword(i);
            double dev = max_abs_diff(apply_string(g, w), w);
            report.max_deviation = std::max(report.max_deviation, dev);
            if (dev > tol) {
                report.violations.push_back({g.str(), i, dev});
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

LogicalOpReport logical_op_check(
    const LogicalBasis &basis,
    const PauliString &xbar,
    const PauliString &zbar,
    std::span<const AlmostComplexStructure> generators,
    double tol) {
    if (basis.logical_qubits() != 1) {
        throw std::invalid_argument("logical_op_check: needs a one-qubit code");
    }
    if (xbar.num_qubits() != basis.num_qubits() || zbar.num_qubits() != basis.num_qubits()) {
        throw std::invalid_argument("logical_op_check: width mismatch");
    }
    const auto &zero = basis.codeword(0);
    const auto &one = basis.codeword(1);
    LogicalOpReport r{.ybar = zbar * xbar};
    r.xbar_deviation = std::max(max_abs_diff(apply_string(xbar, zero), one), max_abs_diff(apply_string(xbar, one), zero));
    r.zbar_deviation =
        std::max(max_abs_diff(apply_string(zbar, zero), zero), max_abs_diff(apply_string(zbar, one), one.scaled(-1.0)));
    r.ybar_deviation = max_abs_diff(apply_string(r.ybar, one), zero);
    bool ok = r.xbar_deviation <= tol && r.zbar_deviation <= tol && r.ybar_deviation <= tol;

    if (!generators.empty()) {
        PauliString product = PauliString::identity(basis.num_qubits());
        for (const auto &m : generators) {
            product = product * m.string();
        }
        r.generator_product = product;
        r.ybar_matches_product = product == r.ybar;
        double dev = 0;
        for (const auto &w : basis.codewords()) {
            dev = std::max(dev, max_abs_diff(evolve(generators, 2 * QUARTER_TURN, w), apply_string(r.ybar, w)));
        }
        r.rotation_deviation = dev;
        ok = ok && *r.ybar_matches_product && dev <= tol;
    }
    r.holds = ok;
    return r;
}

std::vector<PauliString> single_qubit_errors(size_t n, bool include_identity) {
    std::vector<PauliString> out;
    if (include_identity) {
        out.push_back(PauliString::identity(n));
    }
    for (size_t q = 1; q <= n; q++) {
        for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
            out.push_back(PauliString::single(n, q, l));
        }
    }
    return out;
}

KLReport kl_check(const LogicalBasis &basis, std::span<const PauliString> errors, double tol) {
    const PauliString id = PauliString::identity(basis.num_qubits());
    bool has_identity = false;
    for (const auto &e : errors) {
        if (e.num_qubits() != basis.num_qubits()) {
            throw std::invalid_argument("kl_check: error width mismatch");
        }
        has_identity = has_identity || e == id;
    }
    if (!has_identity) {
        throw std::invalid_argument("kl_check: the error list must include the identity");
    }

    ImageTable images;
    KLReport report;
    report.tol = tol;
    for (const auto &e : errors) {
        report.error_labels.push_back(e.str());
        std::vector<SparseState> row;
        for (const auto &w : basis.codewords()) {
            row.push_back(apply_string(e, w));
        }
        images.push_back(std::move(row));
    }
    KLCore core = kl_core(images);
    report.c_matrix = std::move(core.c_matrix);
    report.offdiag_max = core.offdiag_max;
    report.diag_mismatch_max = core.diag_mismatch_max;
    report.worst_offdiag = core.worst_offdiag;
    report.worst_diag = core.worst_diag;
    report.hermiticity_deviation = core.hermiticity_deviation;
    report.pass = report.offdiag_max <= tol && report.diag_mismatch_max <= tol;
    return report;
}

ApproxKLPoint approximate_kl_point(const LogicalBasis &basis, std::span<const KrausProduct> products, double gamma) {
    ImageTable images;
    for (const auto &k : products) {
        std::vector<SparseState> row;
        for (const auto &w : basis.codewords()) {
            row.push_back(apply_product(k.factors, w));
        }
        images.push_back(std::move(row));
    }
    KLCore core = kl_core(images);
    ApproxKLPoint p;
    p.gamma = gamma;
    p.offdiag_max = core.offdiag_max;
    p.diag_mismatch_max = core.diag_mismatch_max;
    p.max_violation = std::max(p.offdiag_max, p.diag_mismatch_max);
    for (size_t i = 1; i < basis.size(); i++) {
        Amplitude v = inner(images[0][i], images[0][i]);
        p.weight0_diag_mismatch = std::max(p.weight0_diag_mismatch, std::abs(v - core.c_matrix[0][0]));
    }
    return p;
}

ApproxKLReport approximate_kl(const LogicalBasis &basis, std::span<const double> gammas) {
    ApproxKLReport report;
    std::vector<double> xs;
    std::vector<double> ys;
    for (double gamma : gammas) {
        if (!(gamma >= 0 && gamma < 1)) {
            throw std::invalid_argument("approximate_kl: gamma must lie in [0, 1)");
        }
        auto products = damping_kraus_products(basis.num_qubits(), gamma);
        auto p = approximate_kl_point(basis, products, gamma);
        if (gamma > 0 && p.max_violation > 0) {
            xs.push_back(std::log(gamma));
            ys.push_back(std::log(p.max_violation));
        }
        report.points.push_back(p);
    }
    if (xs.size() < 2) {
        report.slope = std::numeric_limits<double>::quiet_NaN();
        return report;
    }
    double mx = 0;
    double my = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0;
    double sxx = 0;
    for (size_t i = 0; i < xs.size(); i++) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.slope = sxy / sxx;
    return report;
}

HammingReport hamming_bound(size_t t, size_t blocks, size_t qubits) {
    HammingReport r;
    r.t = t;
    r.blocks = blocks;
    r.qubits = qubits;
    r.lhs = (BigInt(1) + BigInt(blocks) + BigInt(2) * BigInt(qubits)) << t;
    r.rhs = BigInt(1) << qubits;
    r.satisfied = r.lhs <= r.rhs;
    r.saturated = r.lhs == r.rhs;
    return r;
}

OrthonormalReport orthonormal_basis_check(std::span<const SparseState> states, double tol) {
    if (states.empty()) {
        throw std::invalid_argument("orthonormal_basis_check: empty state list");
    }
    const size_t n = states.front().num_qubits();
    if (n >= 63 || states.size() != (size_t{1} << n)) {
        throw std::invalid_argument(
            "orthonormal_basis_check: expected 2^" + std::to_string(n) + " states, got " +
            std::to_string(states.size()));
    }
    OrthonormalReport r;
    r.count = states.size();
    for (size_t i = 0; i < states.size(); i++) {
        if (states[i].num_qubits() != n) {
            throw std::invalid_argument("orthonormal_basis_check: width mismatch");
        }
        for (size_t j = i; j < states.size(); j++) {
            Amplitude expected = i == j ? 1.0 : 0.0;
            double dev = std::abs(inner(states[i], states[j]) - expected);
            if (dev > r.max_deviation || (i == 0 && j == 0)) {
                r.max_deviation = dev;
                r.worst_i = i;
                r.worst_j = j;
            }
        }
    }
    r.holds = r.max_deviation <= tol;
    return r;
}

nlohmann::ordered_json to_json(const FixReport &r) {
    auto violations = nlohmann::ordered_json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"generator", v.generator}, {"codeword", v.codeword}, {"deviation", v.deviation}});
    }
    return {
        {"holds", r.holds},
        {"max_deviation", r.max_deviation},
        {"generators", r.generators},
        {"codewords", r.codewords},
        {"violations", violations},
    };
}

nlohmann::ordered_json to_json(const LogicalOpReport &r) {
    nlohmann::ordered_json j = {
        {"holds", r.holds},
        {"xbar_deviation", r.xbar_deviation},
        {"zbar_deviation", r.zbar_deviation},
        {"ybar", r.ybar.str()},
        {"ybar_deviation", r.ybar_deviation},
    };
    if (r.generator_product) {
        j["generator_product"] = r.generator_product->str();
        j["ybar_matches_product"] = *r.ybar_matches_product;
        j["rotation_deviation"] = *r.rotation_deviation;
    }
    return j;
}

nlohmann::ordered_json to_json(const KLReport &r, bool include_matrix) {
    nlohmann::ordered_json j = {
        {"pass", r.pass},
        {"tol", r.tol},
        {"errors", r.error_labels.size()},
        {"offdiag_max", r.offdiag_max},
        {"worst_offdiag", location_json(r.worst_offdiag, r.error_labels)},
        {"diag_mismatch_max", r.diag_mismatch_max},
        {"worst_diag", location_json(r.worst_diag, r.error_labels)},
        {"hermiticity_deviation", r.hermiticity_deviation},
        {"convention", "Y = ZX (real); differs from Hermitian Y by a global phase"},
    };
    if (include_matrix) {
        auto rows = nlohmann::ordered_json::array();
        for (const auto &row : r.c_matrix) {
            auto cells = nlohmann::ordered_json::array();
            for (const auto &c : row) {
                cells.push_back({c.real(), c.imag()});
            }
            rows.push_back(std::move(cells));
        }
        j["error_labels"] = r.error_labels;
        j["c_matrix"] = std::move(rows);
    }
    return j;
}

nlohmann::ordered_json to_json(const ApproxKLReport &r) {
    auto points = nlohmann::ordered_json::array();
    for (const auto &p : r.points) {
        points.push_back({
            {"gamma", p.gamma},
            {"offdiag_max", p.offdiag_max},
            {"diag_mismatch_max", p.diag_mismatch_max},
            {"max_violation", p.max_violation},
            {"weight0_diag_mismatch", p.weight0_diag_mismatch},
        });
    }
    return {
        {"points", points},
        {"loglog_slope", std::isnan(r.slope) ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.slope)},
        {"kraus_set", "E0 = diag(1, sqrt(1-gamma)), E1 = sqrt(gamma)|0><1|; weight <= 1 products"},
    };
}

nlohmann::ordered_json to_json(const HammingReport &r) {
    return {
        {"t", r.t},
        {"B", r.blocks},
        {"N", r.qubits},
        {"lhs", big_json(r.lhs)},
        {"rhs", big_json(r.rhs)},
        {"satisfied", r.satisfied},
        {"saturated", r.saturated},
        {"bound", "2^t (1 + B + 2N) <= 2^N"},
        {"note", "counting heuristic: neither necessary nor sufficient for degenerate codes"},
    };
}

nlohmann::ordered_json to_json(const OrthonormalReport &r) {
    return {
        {"holds", r.holds},
        {"count", r.count},
        {"max_deviation", r.max_deviation},
        {"worst_pair", {r.worst_i, r.worst_j}},
    };
}

std::string c_matrix_csv(const KLReport &r) {
    std::ostringstream out;
    out.precision(17);
    out << "E\\F";
    for (const auto &label : r.error_labels) {
        out << ",\"" << label << '"';
    }
    out << '\n';
    for (size_t a = 0; a < r.c_matrix.size(); a++) {
        out << '"' << r.error_labels[a] << '"';
        for (const auto &c : r.c_matrix[a]) {
            out << ',' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << 'j';
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace ghzqec
