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

#include "ghzqec/pauli.h"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace ghzqec {

namespace {

uint64_t width_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

uint64_t qubit_bit(size_t n, size_t qubit) {
    return uint64_t{1} << (n - qubit);
}

void check_width(size_t n) {
    if (n == 0 || n > MAX_QUBITS) {
        throw std::invalid_argument("Pauli string width must be in [1, 64], got " + std::to_string(n));
    }
}

void check_same_width(const PauliString &p, const PauliString &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument(
            "Pauli string width mismatch: " + std::to_string(p.num_qubits()) + " vs " +
            std::to_string(q.num_qubits()));
    }
}

bool parity(uint64_t v) {
    return (std::popcount(v) & 1) != 0;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

size_t parse_index(std::string_view digits, std::string_view context) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
        throw std::invalid_argument("Bad qubit index in Pauli string '" + std::string(context) + "'");
    }
    return value;
}

}  // namespace

char letter_char(PauliLetter letter) {
    return "IXZY"[static_cast<uint8_t>(letter)];
}

PauliLetter letter_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return PauliLetter::I;
        case 'X':
            return PauliLetter::X;
        case 'Y':
            return PauliLetter::Y;
        case 'Z':
            return PauliLetter::Z;
        default:
            throw std::invalid_argument(std::string("Not a Pauli letter: '") + c + "'");
    }
}

SignedLetter letter_mul(PauliLetter a, PauliLetter b) {
    // Z^z1 X^x1 Z^z2 X^x2 = (-1)^{x1 z2} Z^{z1+z2} X^{x1+x2}
    auto ab = static_cast<uint8_t>(a);
    auto bb = static_cast<uint8_t>(b);
    int sign = ((ab & 1) && (bb & 2)) ? -1 : +1;
    return {sign, static_cast<PauliLetter>(ab ^ bb)};
}

PauliString::PauliString(size_t n) : n_(n) {
    check_width(n);
}

PauliString::PauliString(size_t n, uint64_t x_mask, uint64_t z_mask, int sign)
    : n_(n), negative_(sign < 0), x_(x_mask), z_(z_mask) {
    check_width(n);
    if (sign != 1 && sign != -1) {
        throw std::invalid_argument("Pauli string sign must be +1 or -1");
    }
    if ((x_mask | z_mask) & ~width_mask(n)) {
        throw std::invalid_argument("Pauli string masks exceed the register width");
    }
}

PauliString PauliString::identity(size_t n) {
    return PauliString(n);
}

PauliString PauliString::single(size_t n, size_t qubit, PauliLetter letter) {
    return PauliString(n).with_letter(qubit, letter);
}

PauliString PauliString::from_letters(std::span<const PauliLetter> letters, int sign) {
    PauliString result(letters.size());
    for (size_t q = 1; q <= letters.size(); q++) {
        result = result.with_letter(q, letters[q - 1]);
    }
    return result.with_sign(sign);
}

PauliString PauliString::from_dense(std::string_view text) {
    std::string_view body = trim(text);
    int sign = +1;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? -1 : +1;
        body.remove_prefix(1);
    }
    std::vector<PauliLetter> letters;
    for (char c : body) {
        letters.push_back(letter_from_char(c));
    }
    if (letters.empty()) {
        throw std::invalid_argument("Empty Pauli string '" + std::string(text) + "'");
    }
    return from_letters(letters, sign);
}

PauliString PauliString::parse(std::string_view text) {
    std::string_view body = trim(text);
    int sign = +1;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        sign = body.front() == '-' ? -1 : +1;
        body.remove_prefix(1);
    }

    size_t declared = 0;
    if (auto open = body.find('('); open != std::string_view::npos) {
        auto close = body.find(')', open);
        std::string_view suffix = trim(body.substr(open + 1, close - open - 1));
        if (close == std::string_view::npos || !suffix.starts_with("n=") || !trim(body.substr(close + 1)).empty()) {
            throw std::invalid_argument("Bad width suffix in Pauli string '" + std::string(text) + "'");
        }
        declared = parse_index(trim(suffix.substr(2)), text);
        body = trim(body.substr(0, open));
    }

    struct Term {
        size_t qubit;
        PauliLetter letter;
    };
    std::vector<Term> terms;
    size_t largest = 0;
    size_t pos = 0;
    while (pos < body.size()) {
        while (pos < body.size() && std::isspace(static_cast<unsigned char>(body[pos]))) {
            pos++;
        }
        if (pos >= body.size()) {
            break;
        }
        size_t end = pos;
        while (end < body.size() && !std::isspace(static_cast<unsigned char>(body[end]))) {
            end++;
        }
        std::string_view token = body.substr(pos, end - pos);
        pos = end;
        PauliLetter letter = letter_from_char(token.front());
        if (token.size() == 1 && letter == PauliLetter::I) {
            continue;
        }
        size_t qubit = parse_index(token.substr(1), text);
        if (qubit == 0) {
            throw std::invalid_argument("Qubit indices are 1-based in '" + std::string(text) + "'");
        }
        terms.push_back({qubit, letter});
        largest = std::max(largest, qubit);
    }

    size_t n = declared != 0 ? declared : largest;
    if (n == 0) {
        throw std::invalid_argument("Cannot infer width of Pauli string '" + std::string(text) + "'");
    }
    if (largest > n) {
        throw std::invalid_argument("Qubit index beyond declared width in '" + std::string(text) + "'");
    }
    PauliString result(n);
    uint64_t seen = 0;
    for (const auto &term : terms) {
        uint64_t bit = qubit_bit(n, term.qubit);
        if (seen & bit) {
            throw std::invalid_argument("Repeated qubit index in '" + std::string(text) + "'");
        }
        seen |= bit;
        result = result.with_letter(term.qubit, term.letter);
    }
    return result.with_sign(sign);
}

PauliLetter PauliString::letter(size_t qubit) const {
    if (qubit == 0 || qubit > n_) {
        throw std::out_of_range("Qubit " + std::to_string(qubit) + " out of range for width " + std::to_string(n_));
    }
    uint64_t bit = qubit_bit(n_, qubit);
    uint8_t code = ((x_ & bit) ? 1 : 0) | ((z_ & bit) ? 2 : 0);
    return static_cast<PauliLetter>(code);
}

size_t PauliString::weight() const {
    return static_cast<size_t>(std::popcount(x_ | z_));
}

size_t PauliString::y_count() const {
    return static_cast<size_t>(std::popcount(x_ & z_));
}

PauliString PauliString::negated() const {
    return with_sign(-sign());
}

PauliString PauliString::with_sign(int s) const {
    return PauliString(n_, x_, z_, s);
}

PauliString PauliString::with_letter(size_t qubit, PauliLetter l) const {
    if (qubit == 0 || qubit > n_) {
        throw std::out_of_range("Qubit " + std::to_string(qubit) + " out of range for width " + std::to_string(n_));
    }
    uint64_t bit = qubit_bit(n_, qubit);
    auto code = static_cast<uint8_t>(l);
    uint64_t x = (x_ & ~bit) | ((code & 1) ? bit : 0);
    uint64_t z = (z_ & ~bit) | ((code & 2) ? bit : 0);
    return PauliString(n_, x, z, sign());
}

std::string PauliString::str() const {
    std::string out = negative_ ? "-" : "";
    bool first = true;
    for (size_t q = 1; q <= n_; q++) {
        PauliLetter l = letter(q);
        if (l == PauliLetter::I) {
            continue;
        }
        if (!first) {
            out += ' ';
        }
        first = false;
        out += letter_char(l);
        out += std::to_string(q);
    }
    if (first) {
        out += 'I';
    }
    out += " (n=" + std::to_string(n_) + ")";
    return out;
}

std::string PauliString::dense_str() const {
    std::string out = negative_ ? "-" : "+";
    for (size_t q = 1; q <= n_; q++) {
        out += letter_char(letter(q));
    }
    return out;
}

PauliString PauliString::operator*(const PauliString &other) const {
    return string_mul(*this, other);
}

PauliString string_mul(const PauliString &p, const PauliString &q) {
    check_same_width(p, q);
    int sign = p.sign() * q.sign() * (parity(p.x_mask() & q.z_mask()) ? -1 : +1);
    return PauliString(p.num_qubits(), p.x_mask() ^ q.x_mask(), p.z_mask() ^ q.z_mask(), sign);
}

int commutation_sign(const PauliString &p, const PauliString &q) {
    check_same_width(p, q);
    bool flip = parity(p.x_mask() & q.z_mask()) != parity(q.x_mask() & p.z_mask());
    return flip ? -1 : +1;
}

PauliString transpose(const PauliString &p) {
    return (p.y_count() & 1) ? p.negated() : p;
}

PauliString embed(const PauliString &m, size_t position, size_t n) {
    size_t k = m.num_qubits();
    if (position == 0 || k > n || position > n + 1 - k) {
        throw std::out_of_range(
            "Embedding position " + std::to_string(position) + " invalid for width " + std::to_string(k) +
            " in " + std::to_string(n) + " qubits");
    }
    check_width(n);
    size_t shift = n + 1 - k - position;
    return PauliString(n, m.x_mask() << shift, m.z_mask() << shift, m.sign());
}

AlmostComplexStructure::AlmostComplexStructure(PauliString m) : m_(std::move(m)) {
    if (!accepts(m_)) {
        throw std::invalid_argument("Not an almost-complex structure (needs odd #Y): " + m_.str());
    }
}

bool AlmostComplexStructure::accepts(const PauliString &m) {
    PauliString square = m * m;
    return square == PauliString::identity(m.num_qubits()).negated() && transpose(m) == m.negated();
}

AlmostComplexStructure AlmostComplexStructure::embedded(size_t position, size_t n) const {
    return AlmostComplexStructure(embed(m_, position, n));
}

}  // namespace ghzqec
