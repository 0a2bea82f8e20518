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

#include "ghzqec/state.h"

#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ghzqec {

namespace {

void check_same_width(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(
            std::string(what) + ": qubit count mismatch " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

uint64_t width_mask(size_t n) {
    return n >= 64 ? ~uint64_t{0} : ((uint64_t{1} << n) - 1);
}

}  // namespace

SparseState::SparseState(size_t n, double tol) : n_(n), tol_(tol) {
    if (n == 0 || n > MAX_QUBITS) {
        throw std::invalid_argument("State width must be in [1, 64], got " + std::to_string(n));
    }
}

SparseState SparseState::basis(size_t n, BasisIndex index) {
    SparseState s(n);
    if (index & ~width_mask(n)) {
        throw std::out_of_range("Basis index exceeds register width");
    }
    s.add(index, 1.0);
    return s;
}

BasisIndex SparseState::index_of(std::string_view bits) {
    if (bits.empty() || bits.size() > MAX_QUBITS) {
        throw std::invalid_argument("Bitstring length must be in [1, 64]");
    }
    BasisIndex index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("Malformed bitstring '" + std::string(bits) + "'");
        }
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    return index;
}

SparseState SparseState::from_bits(std::string_view bits) {
    return basis(bits.size(), index_of(bits));
}

Amplitude SparseState::amplitude(BasisIndex index) const {
    auto it = amps_.find(index);
    return it == amps_.end() ? Amplitude{} : it->second;
}

Amplitude SparseState::amplitude(std::string_view bits) const {
    if (bits.size() != n_) {
        throw std::invalid_argument("Bitstring width mismatch");
    }
    return amplitude(index_of(bits));
}

void SparseState::add(BasisIndex index, Amplitude value) {
    auto [it, inserted] = amps_.try_emplace(index, value);
    if (!inserted) {
        it->second += value;
    }
    if (std::abs(it->second) <= tol_) {
        amps_.erase(it);
    }
}

double SparseState::norm_squared() const {
    double total = 0;
    for (const auto &[index, amp] : amps_) {
        total += std::norm(amp);
    }
    return total;
}

bool SparseState::is_normalized(double tolerance) const {
    return std::abs(norm_squared() - 1.0) <= tolerance;
}

SparseState SparseState::normalized() const {
    double norm = std::sqrt(norm_squared());
    if (norm == 0) {
        throw std::domain_error("Cannot normalize the zero vector");
    }
    return scaled(1.0 / norm);
}

SparseState SparseState::scaled(Amplitude factor) const {
    SparseState out(n_, tol_);
    for (const auto &[index, amp] : amps_) {
        out.add(index, factor * amp);
    }
    return out;
}

std::string SparseState::bits(BasisIndex index) const {
    std::string out(n_, '0');
    for (size_t q = 0; q < n_; q++) {
        if (index & (uint64_t{1} << (n_ - 1 - q))) {
            out[q] = '1';
        }
    }
    return out;
}

std::string SparseState::str() const {
    if (amps_.empty()) {
        return "0";
    }
    std::ostringstream out;
    out.precision(6);
    bool first = true;
    for (const auto &[index, amp] : amps_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (std::abs(amp.imag()) <= tol_) {
            out << amp.real();
        } else {
            out << '(' << amp.real() << (amp.imag() < 0 ? "-" : "+") << std::abs(amp.imag()) << "i)";
        }
        out << '|' << bits(index) << '>';
    }
    return out.str();
}

SparseState SparseState::operator+(const SparseState &other) const {
    check_same_width(n_, other.n_, "state addition");
    SparseState out = *this;
    for (const auto &[index, amp] : other.amps_) {
        out.add(index, amp);
    }
    return out;
}

SparseState SparseState::operator-(const SparseState &other) const {
    return *this + other.scaled(-1.0);
}

SparseState apply_string(const PauliString &p, const SparseState &s) {
    check_same_width(p.num_qubits(), s.num_qubits(), "apply_string");
    SparseState out(s.num_qubits(), s.tol());
    const uint64_t x = p.x_mask();
    const uint64_t z = p.z_mask();
    const double global = p.sign();
    for (const auto &[index, amp] : s.amplitudes()) {
        // Z^z X^x |b> = (-1)^{popcount(z & (b ^ x))} |b ^ x>
        BasisIndex flipped = index ^ x;
        double sign = (std::popcount(z & flipped) & 1) ? -global : global;
        out.add(flipped, sign * amp);
    }
    return out;
}

Amplitude inner(const SparseState &a, const SparseState &b) {
    check_same_width(a.num_qubits(), b.num_qubits(), "inner");
    const auto &small = a.nnz() <= b.nnz() ? a : b;
    const auto &large = a.nnz() <= b.nnz() ? b : a;
    Amplitude total{};
    for (const auto &[index, amp] : small.amplitudes()) {
        auto it = large.amplitudes().find(index);
        if (it == large.amplitudes().end()) {
            continue;
        }
        const Amplitude &av = (&small == &a) ? amp : it->second;
        const Amplitude &bv = (&small == &a) ? it->second : amp;
        total += std::conj(av) * bv;
    }
    return total;
}

SparseState tensor(const SparseState &a, const SparseState &b) {
    size_t n = a.num_qubits() + b.num_qubits();
    if (n > MAX_QUBITS) {
        throw std::invalid_argument("Tensor product exceeds 64 qubits");
    }
    SparseState out(n, std::min(a.tol(), b.tol()));
    for (const auto &[ia, va] : a.amplitudes()) {
        for (const auto &[ib, vb] : b.amplitudes()) {
            out.add((ia << b.num_qubits()) | ib, va * vb);
        }
    }
    return out;
}

double expectation(const PauliString &p, const SparseState &s) {
    if (!s.is_normalized()) {
        throw std::invalid_argument("expectation requires a normalized state");
    }
    Amplitude value = inner(s, apply_string(p, s));
    if (std::abs(value.imag()) > 1e-12) {
        throw std::domain_error("Expectation of " + p.str() + " has an imaginary part");
    }
    return value.real();
}

double max_abs_diff(const SparseState &a, const SparseState &b) {
    check_same_width(a.num_qubits(), b.num_qubits(), "max_abs_diff");
    double worst = 0;
    for (const auto &[index, amp] : a.amplitudes()) {
        worst = std::max(worst, std::abs(amp - b.amplitude(index)));
    }
    for (const auto &[index, amp] : b.amplitudes()) {
        if (!a.amplitudes().contains(index)) {
            worst = std::max(worst, std::abs(amp));
        }
    }
    return worst;
}

SparseState apply_local(const Matrix2 &m, size_t qubit, const SparseState &s) {
    size_t n = s.num_qubits();
    if (qubit == 0 || qubit > n) {
        throw std::out_of_range("apply_local: qubit out of range");
    }
    const uint64_t bit = uint64_t{1} << (n - qubit);
    SparseState out(n, s.tol());
    for (const auto &[index, amp] : s.amplitudes()) {
        int col = (index & bit) ? 1 : 0;
        BasisIndex base = index & ~bit;
        Amplitude to0 = m[0 * 2 + col];
        Amplitude to1 = m[1 * 2 + col];
        if (to0 != Amplitude{}) {
            out.add(base, to0 * amp);
        }
        if (to1 != Amplitude{}) {
            out.add(base | bit, to1 * amp);
        }
    }
    return out;
}

SparseState apply_product(std::span<const Matrix2> factors, const SparseState &s) {
    check_same_width(factors.size(), s.num_qubits(), "apply_product");
    SparseState out = s;
    for (size_t q = 1; q <= factors.size(); q++) {
        const Matrix2 &m = factors[q - 1];
        if (m == Matrix2{1.0, 0.0, 0.0, 1.0}) {
            continue;
        }
        out = apply_local(m, q, out);
    }
    return out;
}

nlohmann::ordered_json to_json(const SparseState &s) {
    nlohmann::ordered_json j;
    j["schema"] = STATE_SCHEMA;
    j["n"] = s.num_qubits();
    auto amps = nlohmann::ordered_json::array();
    // Lexicographic bitstring order equals numeric index order for fixed width.
    for (const auto &[index, amp] : s.amplitudes()) {
        amps.push_back({{"bits", s.bits(index)}, {"re", amp.real()}, {"im", amp.imag()}});
    }
    j["amplitudes"] = std::move(amps);
    return j;
}

SparseState state_from_json(const nlohmann::ordered_json &j) {
    if (j.value("schema", std::string{}) != STATE_SCHEMA) {
        throw std::invalid_argument("Unsupported state schema");
    }
    size_t n = j.at("n").get<size_t>();
    SparseState s(n);
    for (const auto &entry : j.at("amplitudes")) {
        auto bits = entry.at("bits").get<std::string>();
        if (bits.size() != n) {
            throw std::invalid_argument("State record bitstring has wrong width");
        }
        s.add(SparseState::index_of(bits), {entry.at("re").get<double>(), entry.at("im").get<double>()});
    }
    return s;
}

}  // namespace ghzqec
