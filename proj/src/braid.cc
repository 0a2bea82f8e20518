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

#include "ghzqec/braid.h"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "ghzqec/random.h"

namespace ghzqec {

namespace {

using StateMap = std::function<SparseState(const SparseState &)>;

/// Max entrywise deviation of two operators, compared column by column.
double operator_deviation(size_t n, const StateMap &lhs, const StateMap &rhs) {
    double worst = 0;
    const BasisIndex dim = BasisIndex{1} << n;
    for (BasisIndex b = 0; b < dim; b++) {
        SparseState e = SparseState::basis(n, b);
        worst = std::max(worst, max_abs_diff(lhs(e), rhs(e)));
    }
    return worst;
}

double compose(double x, double y, Composition rule) {
    return rule == Composition::additive ? x + y : x * y;
}

}  // namespace

SparseState BellGenerator::apply(const SparseState &s) const {
    return rotate(m_, theta_, s);
}

SparseState rotate(const AlmostComplexStructure &m, double theta, const SparseState &s) {
    if (m.width() != s.num_qubits()) {
        throw std::invalid_argument(
            "rotate: structure width " + std::to_string(m.width()) + " does not match state width " +
            std::to_string(s.num_qubits()));
    }
    return s.scaled(std::cos(theta)) + apply_string(m.string(), s).scaled(std::sin(theta));
}

SparseState evolve(std::span<const AlmostComplexStructure> ms, double theta, const SparseState &s) {
    for (size_t a = 0; a < ms.size(); a++) {
        for (size_t b = a + 1; b < ms.size(); b++) {
            if (commutation_sign(ms[a].string(), ms[b].string()) != +1) {
                throw std::invalid_argument(
                    "evolve: generators " + ms[a].string().str() + " and " + ms[b].string().str() +
                    " do not commute, so the exponential does not factor");
            }
        }
    }
    SparseState out = s;
    for (const auto &m : ms) {
        out = rotate(m, theta, out);
    }
    return out;
}

BraidRep::BraidRep(AlmostComplexStructure m, size_t n) : m_(std::move(m)), n_(n) {
    if (n < m_.width()) {
        throw std::invalid_argument("BraidRep: register narrower than the generator");
    }
}

BellGenerator BraidRep::generator(size_t i) const {
    return BellGenerator(m_.embedded(i, n_), QUARTER_TURN);
}

SparseState BraidRep::apply(size_t i, const SparseState &s, bool inverse) const {
    auto g = generator(i);
    return inverse ? g.inverse().apply(s) : g.apply(s);
}

RelationReport check_braid_relation(const AlmostComplexStructure &m, size_t n, double tol) {
    const size_t k = m.width();
    if (n < k + 1) {
        throw std::invalid_argument("check_braid_relation: need n >= k + 1");
    }
    if (n > MAX_EXHAUSTIVE_QUBITS) {
        throw std::invalid_argument("check_braid_relation: n > 12 is too large for an exhaustive check");
    }
    BraidRep rep(m, n);
    RelationReport report;
    report.relation = "B_i B_{i+1} B_i = B_{i+1} B_i B_{i+1}";
    report.parameters = {{"m", m.string().dense_str()}, {"k", k}, {"n", n}, {"generators", rep.num_generators()}};
    report.basis_dimension = size_t{1} << n;
    report.note = "checked on every adjacent pair over all basis states";

    for (size_t i = 1; i + 1 <= rep.num_generators(); i++) {
        auto lhs = [&](const SparseState &s) { return rep.apply(i, rep.apply(i + 1, rep.apply(i, s))); };
        auto rhs = [&](const SparseState &s) { return rep.apply(i + 1, rep.apply(i, rep.apply(i + 1, s))); };
        report.max_deviation = std::max(report.max_deviation, operator_deviation(n, lhs, rhs));
    }
    report.holds = report.max_deviation <= tol;
    return report;
}

RelationReport check_far_commutativity(
    const AlmostComplexStructure &m, size_t n, size_t i, size_t j, bool require_disjoint) {
    const size_t k = m.width();
    BraidRep rep(m, n);
    if (i == 0 || j == 0 || i > rep.num_generators() || j > rep.num_generators()) {
        throw std::out_of_range("check_far_commutativity: generator index out of range");
    }
    size_t gap = i > j ? i - j : j - i;
    if (require_disjoint && gap != 0 && gap < k) {
        throw std::invalid_argument(
            "check_far_commutativity: B_" + std::to_string(i) + " and B_" + std::to_string(j) +
            " have overlapping supports");
    }
    const PauliString mi = embed(m.string(), i, n);
    const PauliString mj = embed(m.string(), j, n);

    RelationReport report;
    report.relation = "B_i B_j = B_j B_i";
    report.parameters = {{"m", m.string().dense_str()}, {"k", k}, {"n", n}, {"i", i}, {"j", j}};
    report.basis_dimension = 0;
    // Expanding (Id + M_i)(Id + M_j) leaves only the cross term M_i M_j order-dependent.
    bool commute = (mi * mj) == (mj * mi);
    report.holds = commute;
    report.max_deviation = commute ? 0.0 : 1.0;
    report.note = "exact: compared M_i M_j and M_j M_i as signed Pauli strings";
    return report;
}

RelationReport check_ybe(const AlmostComplexStructure &m, double theta, double tol) {
    if (m.width() != 2) {
        throw std::invalid_argument("check_ybe: only two-qubit generators give a well-posed equation");
    }
    const BellGenerator g1(m.embedded(1, 3), theta);
    const BellGenerator g2(m.embedded(2, 3), theta);
    auto lhs = [&](const SparseState &s) { return g1.apply(g2.apply(g1.apply(s))); };
    auto rhs = [&](const SparseState &s) { return g2.apply(g1.apply(g2.apply(s))); };

    RelationReport report;
    report.relation = "(G x Id)(Id x G)(G x Id) = (Id x G)(G x Id)(Id x G)";
    report.parameters = {{"m", m.string().dense_str()}, {"theta", theta}};
    report.basis_dimension = 8;
    report.max_deviation = operator_deviation(3, lhs, rhs);
    report.holds = report.max_deviation <= tol;
    report.note = "G = e^{theta m} = cos(theta) Id + sin(theta) m";
    return report;
}

std::string composition_name(Composition c) {
    return c == Composition::additive ? "additive" : "multiplicative";
}

double qybe_deviation(const AlmostComplexStructure &m, double x, double y, Composition rule) {
    if (m.width() != 2) {
        throw std::invalid_argument("qybe: only two-qubit generators are supported");
    }
    const double xy = compose(x, y, rule);
    const auto m1 = m.embedded(1, 3);
    const auto m2 = m.embedded(2, 3);
    // Operator products act right to left on the state.
    auto lhs = [&](const SparseState &s) { return rotate(m1, x, rotate(m2, xy, rotate(m1, y, s))); };
    auto rhs = [&](const SparseState &s) { return rotate(m2, y, rotate(m1, xy, rotate(m2, x, s))); };
    return operator_deviation(3, lhs, rhs);
}

QybeReport check_qybe(const AlmostComplexStructure &m, size_t samples, uint64_t seed, double tol) {
    QybeReport report;
    report.seed = seed;
    report.tol = tol;
    for (Composition rule : {Composition::additive, Composition::multiplicative}) {
        Rng rng(seed);
        QybeRuleReport r;
        r.rule = rule;
        r.samples = samples;
        for (size_t s = 0; s < samples; s++) {
            double x = rng.uniform(-std::numbers::pi, std::numbers::pi);
            double y = rng.uniform(-std::numbers::pi, std::numbers::pi);
            double dev = qybe_deviation(m, x, y, rule);
            if (dev > tol) {
                r.failures++;
            }
            if (dev > r.max_deviation || s == 0) {
                r.max_deviation = dev;
                r.worst_x = x;
                r.worst_y = y;
            }
        }
        r.holds = r.failures == 0;
        report.rules.push_back(r);
    }
    return report;
}

nlohmann::ordered_json to_json(const RelationReport &r) {
    return {
        {"relation", r.relation},
        {"parameters", r.parameters},
        {"holds", r.holds},
        {"max_deviation", r.max_deviation},
        {"basis_dimension", r.basis_dimension},
        {"note", r.note},
    };
}

nlohmann::ordered_json to_json(const QybeReport &r) {
    auto rules = nlohmann::ordered_json::array();
    for (const auto &rule : r.rules) {
        rules.push_back({
            {"composition", composition_name(rule.rule)},
            {"samples", rule.samples},
            {"failures", rule.failures},
            {"holds", rule.holds},
            {"max_deviation", rule.max_deviation},
            {"worst_x", rule.worst_x},
            {"worst_y", rule.worst_y},
        });
    }
    return {
        {"relation", "(G(x) x Id)(Id x G(x o y))(G(y) x Id) = (Id x G(y))(G(x o y) x Id)(Id x G(x))"},
        {"seed", r.seed},
        {"tol", r.tol},
        {"rules", rules},
    };
}

}  // namespace ghzqec
