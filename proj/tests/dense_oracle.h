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


#ifndef GHZQEC_TESTS_DENSE_ORACLE_H
#define GHZQEC_TESTS_DENSE_ORACLE_H

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>

#include "ghzqec/state.h"

// Dense-matrix reference model. Nothing here calls into the library except to
// convert states at the boundary.
namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

inline Mat id2() { return Mat::Identity(2, 2); }

inline Mat x2() {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    return m;
}

inline Mat z2() {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = -1;
    return m;
}

/// Real Y = Z X.
inline Mat y2() { return z2() * x2(); }

inline Mat kron(const Mat &a, const Mat &b) { return Eigen::kroneckerProduct(a, b).eval(); }

/// Dense operator for "+XYZ"-style text; qubit 1 is the left factor.
inline Mat pauli(const std::string &dense) {
    size_t start = 0;
    double sign = 1;
    if (!dense.empty() && (dense[0] == '+' || dense[0] == '-')) {
        sign = dense[0] == '-' ? -1 : 1;
        start = 1;
    }
    Mat out = Mat::Identity(1, 1);
    for (size_t i = start; i < dense.size(); i++) {
        Mat f;
        switch (dense[i]) {
            case 'I':
            case '_':
                f = id2();
                break;
            case 'X':
                f = x2();
                break;
            case 'Y':
                f = y2();
                break;
            case 'Z':
                f = z2();
                break;
            default:
                throw std::invalid_argument("oracle::pauli: bad letter");
        }
        out = kron(out, f);
    }
    return sign * out;
}

inline Mat identity(size_t n) { return Mat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n); }

/// I^{(pos-1)} (x) m (x) I^{(n-k-pos+1)} where m acts on k qubits.
inline Mat embed(const Mat &m, size_t k, size_t pos, size_t n) {
    return kron(kron(identity(pos - 1), m), identity(n - k - pos + 1));
}

/// exp(theta * m) through Eigen's Pade-based matrix exponential.
inline Mat expm(const Mat &m, double theta) { return (std::complex<double>(theta) * m).exp(); }

inline Vec basis(size_t n, uint64_t index) {
    Vec v = Vec::Zero(Eigen::Index{1} << n);
    v(static_cast<Eigen::Index>(index)) = 1;
    return v;
}

inline Vec bits(const std::string &b) {
    uint64_t index = 0;
    for (char c : b) {
        index = (index << 1) | (c == '1' ? 1 : 0);
    }
    return basis(b.size(), index);
}

/// (|s> + sign |s-bar>)/sqrt(2).
inline Vec ghz(const std::string &s, int sign) {
    std::string bar = s;
    for (char &c : bar) {
        c = c == '0' ? '1' : '0';
    }
    return (bits(s) + double(sign) * bits(bar)) / std::sqrt(2.0);
}

inline Vec kron(const Vec &a, const Vec &b) { return Eigen::kroneckerProduct(a, b).eval(); }

inline Vec dense(const ghzqec::SparseState &s) {
    Vec v = Vec::Zero(Eigen::Index{1} << s.num_qubits());
    for (const auto &[index, amp] : s.amplitudes()) {
        v(static_cast<Eigen::Index>(index)) = amp;
    }
    return v;
}

template <typename Derived>
inline double max_abs(const Eigen::MatrixBase<Derived> &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

inline double distance(const ghzqec::SparseState &s, const Vec &v) { return max_abs(dense(s) - v); }

/// Amplitude-damping factors as dense 2x2 matrices.
inline Mat damping_e0(double gamma) {
    Mat m = Mat::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = std::sqrt(1 - gamma);
    return m;
}

inline Mat damping_e1(double gamma) {
    Mat m = Mat::Zero(2, 2);
    m(0, 1) = std::sqrt(gamma);
    return m;
}

/// Weight <= 1 damping products: E0^n, then E1 on qubit q.
inline std::vector<Mat> damping_products(size_t n, double gamma) {
    std::vector<Mat> out;
    for (size_t jump = 0; jump <= n; jump++) {
        Mat m = Mat::Identity(1, 1);
        for (size_t q = 1; q <= n; q++) {
            m = kron(m, q == jump ? damping_e1(gamma) : damping_e0(gamma));
        }
        out.push_back(m);
    }
    return out;
}

/// max over (a, b, i != j) of |<i|A^dag B|j>| and over (a, b, i) of
/// |<i|A^dag B|i> - <0|A^dag B|0>|.
struct KLViolation {
    double offdiag = 0;
    double diag = 0;
    double weight0_diag = 0;
};

inline KLViolation kl_violation(const std::vector<Vec> &code, const std::vector<Mat> &ops) {
    KLViolation out;
    for (size_t a = 0; a < ops.size(); a++) {
        for (size_t b = 0; b < ops.size(); b++) {
            Mat g = ops[a].adjoint() * ops[b];
            std::complex<double> c = code[0].dot(g * code[0]);
            for (size_t i = 0; i < code.size(); i++) {
                for (size_t j = 0; j < code.size(); j++) {
                    std::complex<double> v = code[i].dot(g * code[j]);
                    if (i != j) {
                        out.offdiag = std::max(out.offdiag, std::abs(v));
                    } else {
                        out.diag = std::max(out.diag, std::abs(v - c));
                        if (a == 0 && b == 0) {
                            out.weight0_diag = std::max(out.weight0_diag, std::abs(v - c));
                        }
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace oracle

#endif
