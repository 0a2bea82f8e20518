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

#ifndef GHZQEC_STATE_H
#define GHZQEC_STATE_H

#include <array>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "ghzqec/pauli.h"
#include "json.hpp"

namespace ghzqec {

using Amplitude = std::complex<double>;
using BasisIndex = uint64_t;

inline constexpr double DEFAULT_DROP_TOL = 1e-14;
inline constexpr double NORMALIZATION_TOL = 1e-12;
inline constexpr std::string_view STATE_SCHEMA = "ghz-qecc-state/1";

/// Sparse state vector on n qubits.
///
/// Amplitudes are keyed by the n-bit basis index with qubit 1 as the most
/// significant bit, so index 0b000000111 on nine qubits is |000000111>.
/// Entries with magnitude <= tol are never stored.
class SparseState {
   public:
    explicit SparseState(size_t n, double tol = DEFAULT_DROP_TOL);

    static SparseState basis(size_t n, BasisIndex index);
    /// |b1 b2 ... bn> from a string of '0'/'1'.
    static SparseState from_bits(std::string_view bits);
    /// Basis index of a '0'/'1' string; throws std::invalid_argument if malformed.
    static BasisIndex index_of(std::string_view bits);

    size_t num_qubits() const { return n_; }
    double tol() const { return tol_; }
    size_t nnz() const { return amps_.size(); }
    const std::map<BasisIndex, Amplitude> &amplitudes() const { return amps_; }

    Amplitude amplitude(BasisIndex index) const;
    Amplitude amplitude(std::string_view bits) const;

    /// Adds `value` to the amplitude at `index`, dropping the entry if it becomes negligible.
    void add(BasisIndex index, Amplitude value);

    double norm_squared() const;
    bool is_normalized(double tolerance = NORMALIZATION_TOL) const;
    SparseState normalized() const;
    SparseState scaled(Amplitude factor) const;

    std::string bits(BasisIndex index) const;
    /// Human-readable ket expansion, e.g. "0.707107|000> + 0.707107|111>".
    std::string str() const;

    SparseState operator+(const SparseState &other) const;
    SparseState operator-(const SparseState &other) const;
    friend SparseState operator*(Amplitude factor, const SparseState &s) { return s.scaled(factor); }

   private:
    size_t n_;
    double tol_;
    std::map<BasisIndex, Amplitude> amps_;
};

/// Signed permutation of basis kets: X/Y letters flip bits, Z/Y letters add (-1) on 1-bits.
SparseState apply_string(const PauliString &p, const SparseState &s);

/// <a|b>, conjugate-linear in a.
Amplitude inner(const SparseState &a, const SparseState &b);

SparseState tensor(const SparseState &a, const SparseState &b);

/// <s|p|s> for a normalized state. Throws std::domain_error if the imaginary
/// part exceeds 1e-12 (possible for antisymmetric p on complex states).
double expectation(const PauliString &p, const SparseState &s);

/// Largest entrywise |a_i - b_i|.
double max_abs_diff(const SparseState &a, const SparseState &b);

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<Amplitude, 4>;

/// Applies a single-qubit matrix to 1-based `qubit`.
SparseState apply_local(const Matrix2 &m, size_t qubit, const SparseState &s);

/// Applies the tensor product of per-qubit matrices (qubit 1 first).
SparseState apply_product(std::span<const Matrix2> factors, const SparseState &s);

/// Versioned JSON form: {"schema", "n", "amplitudes": [{"bits", "re", "im"}]},
/// amplitudes sorted by bitstring.
nlohmann::ordered_json to_json(const SparseState &s);
SparseState state_from_json(const nlohmann::ordered_json &j);

}  // namespace ghzqec

#endif
