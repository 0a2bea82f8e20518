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

#ifndef GHZQEC_BRAID_H
#define GHZQEC_BRAID_H

#include <cstdint>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ghzqec/pauli.h"
#include "ghzqec/state.h"
#include "json.hpp"

namespace ghzqec {

inline constexpr double QUARTER_TURN = std::numbers::pi / 4;
/// Widest register on which operator identities are checked over every basis state.
inline constexpr size_t MAX_EXHAUSTIVE_QUBITS = 12;

/// e^{theta M} = cos(theta) Id + sin(theta) M, exact because M^2 = -Id.
class BellGenerator {
   public:
    BellGenerator(AlmostComplexStructure m, double theta) : m_(std::move(m)), theta_(theta) {}

    const AlmostComplexStructure &structure() const { return m_; }
    double theta() const { return theta_; }
    BellGenerator inverse() const { return BellGenerator(m_, -theta_); }
    BellGenerator embedded(size_t position, size_t n) const {
        return BellGenerator(m_.embedded(position, n), theta_);
    }

    SparseState apply(const SparseState &s) const;

   private:
    AlmostComplexStructure m_;
    double theta_;
};

/// cos(theta) s + sin(theta) M s. The structure must already span s's width.
SparseState rotate(const AlmostComplexStructure &m, double theta, const SparseState &s);

/// e^{theta sum_i M_i} s as the ordered product of single rotations. Throws
/// std::invalid_argument if any pair of generators anticommutes.
SparseState evolve(std::span<const AlmostComplexStructure> ms, double theta, const SparseState &s);

/// Generators B_i = I^{(i-1)} (x) e^{pi/4 M} (x) I^{(n-k-i+1)}, 1 <= i <= n+1-k.
class BraidRep {
   public:
    BraidRep(AlmostComplexStructure m, size_t n);

    size_t num_qubits() const { return n_; }
    size_t width() const { return m_.width(); }
    size_t num_generators() const { return n_ + 1 - m_.width(); }
    const AlmostComplexStructure &structure() const { return m_; }

    BellGenerator generator(size_t i) const;
    SparseState apply(size_t i, const SparseState &s, bool inverse = false) const;

   private:
    AlmostComplexStructure m_;
    size_t n_;
};

struct RelationReport {
    std::string relation;
    nlohmann::ordered_json parameters;
    bool holds = false;
    double max_deviation = 0;
    size_t basis_dimension = 0;
    std::string note;
};

/// B_i B_{i+1} B_i == B_{i+1} B_i B_{i+1} for every adjacent pair, checked on all
/// 2^n basis states. Requires k + 1 <= n <= 12.
RelationReport check_braid_relation(const AlmostComplexStructure &m, size_t n, double tol = 1e-12);

/// B_i B_j == B_j B_i. The check is exact: (Id + M_i)(Id + M_j) equals
/// (Id + M_j)(Id + M_i) iff M_i M_j == M_j M_i as signed strings. When
/// `require_disjoint` is set, overlapping supports (0 < |i-j| < k) are rejected.
RelationReport check_far_commutativity(
    const AlmostComplexStructure &m, size_t n, size_t i, size_t j, bool require_disjoint = true);

/// (G x Id)(Id x G)(G x Id) == (Id x G)(G x Id)(Id x G) with G = e^{theta m} on
/// three qubits. Only two-qubit m is accepted.
RelationReport check_ybe(const AlmostComplexStructure &m, double theta = QUARTER_TURN, double tol = 1e-12);

enum class Composition { additive, multiplicative };

std::string composition_name(Composition c);

/// Max entrywise deviation between the two sides of
/// (G(x) x Id)(Id x G(x o y))(G(y) x Id) vs (Id x G(y))(G(x o y) x Id)(Id x G(x)).
double qybe_deviation(const AlmostComplexStructure &m, double x, double y, Composition rule);

struct QybeRuleReport {
    Composition rule;
    size_t samples = 0;
    size_t failures = 0;
    bool holds = false;
    double max_deviation = 0;
    double worst_x = 0;
    double worst_y = 0;
};

struct QybeReport {
    uint64_t seed = 0;
    double tol = 0;
    std::vector<QybeRuleReport> rules;
};

/// Samples (x, y) uniformly in [-pi, pi)^2 and evaluates both composition rules.
QybeReport check_qybe(const AlmostComplexStructure &m, size_t samples, uint64_t seed, double tol = 1e-12);

nlohmann::ordered_json to_json(const RelationReport &r);
nlohmann::ordered_json to_json(const QybeReport &r);

}  // namespace ghzqec

#endif
