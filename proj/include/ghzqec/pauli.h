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

#ifndef GHZQEC_PAULI_H
#define GHZQEC_PAULI_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace ghzqec {

/// Largest register a PauliString (and a SparseState basis index) can address.
inline constexpr size_t MAX_QUBITS = 64;

/// Single-qubit Pauli letter in the real convention.
///
/// The encoding is two bits: bit 0 is the x-part, bit 1 is the z-part, and the
/// operator for (x, z) is Z^z X^x. With this ordering Y = ZX is the real,
/// antisymmetric matrix [[0, 1], [-1, 0]], so every product of letters is a
/// letter times +1 or -1. There is no imaginary unit anywhere in this layer.
enum class PauliLetter : uint8_t {
    I = 0b00,
    X = 0b01,
    Z = 0b10,
    Y = 0b11,
};

char letter_char(PauliLetter letter);
PauliLetter letter_from_char(char c);

struct SignedLetter {
    int sign;
    PauliLetter letter;

    bool operator==(const SignedLetter &) const = default;
};

/// 2x2 real matrix product a*b written as sign * letter.
SignedLetter letter_mul(PauliLetter a, PauliLetter b);

/// Signed tensor product of real Pauli letters on n qubits.
///
/// Qubit 1 is the leftmost tensor factor. Internally qubit q lives at bit
/// (n - q) of the x and z masks so that the masks line up with SparseState
/// basis indices (qubit 1 = most significant bit).
class PauliString {
   public:
    /// Identity on n qubits.
    explicit PauliString(size_t n);
    PauliString(size_t n, uint64_t x_mask, uint64_t z_mask, int sign = +1);

    static PauliString identity(size_t n);
    /// Weight-one string with `letter` at 1-based position `qubit`.
    static PauliString single(size_t n, size_t qubit, PauliLetter letter);
    static PauliString from_letters(std::span<const PauliLetter> letters, int sign = +1);
    /// Dense form: optional sign followed by one of "I_XYZ" per qubit, e.g. "-YXX".
    static PauliString from_dense(std::string_view text);
    /// Sparse form produced by str(), e.g. "-Y1 X2 X3 (n=9)". The "(n=..)" suffix
    /// may be omitted, in which case the largest index sets the width.
    static PauliString parse(std::string_view text);

    size_t num_qubits() const { return n_; }
    int sign() const { return negative_ ? -1 : +1; }
    uint64_t x_mask() const { return x_; }
    uint64_t z_mask() const { return z_; }
    PauliLetter letter(size_t qubit) const;
    size_t weight() const;
    size_t y_count() const;
    bool is_identity() const { return x_ == 0 && z_ == 0; }

    PauliString negated() const;
    PauliString with_sign(int sign) const;
    PauliString with_letter(size_t qubit, PauliLetter letter) const;

    /// "-Y1 X2 X3 (n=9)"; identity renders as "I (n=9)".
    std::string str() const;
    /// "-YXXIIIIII"
    std::string dense_str() const;

    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

   private:
    size_t n_;
    bool negative_ = false;
    uint64_t x_ = 0;
    uint64_t z_ = 0;
};

PauliString string_mul(const PauliString &p, const PauliString &q);

/// +1 if p*q == q*p, -1 if p*q == -q*p.
int commutation_sign(const PauliString &p, const PauliString &q);

/// Matrix transpose, transpose(P) = (-1)^{#Y} P.
PauliString transpose(const PauliString &p);

/// I^{(position-1)} (x) m (x) I^{(n-k-position+1)} for a width-k string m.
/// Requires 1 <= position <= n + 1 - k.
PauliString embed(const PauliString &m, size_t position, size_t n);

/// A signed Pauli string M with M^T = -M and M*M = -Id (odd number of Y letters).
class AlmostComplexStructure {
   public:
    /// Throws std::invalid_argument unless accepts(m).
    explicit AlmostComplexStructure(PauliString m);

    static bool accepts(const PauliString &m);

    const PauliString &string() const { return m_; }
    size_t width() const { return m_.num_qubits(); }
    AlmostComplexStructure embedded(size_t position, size_t n) const;

    bool operator==(const AlmostComplexStructure &) const = default;

   private:
    PauliString m_;
};

}  // namespace ghzqec

#endif
