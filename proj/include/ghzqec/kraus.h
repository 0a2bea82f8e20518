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

#ifndef GHZQEC_KRAUS_H
#define GHZQEC_KRAUS_H

#include <string>
#include <vector>

#include "ghzqec/state.h"

namespace ghzqec {

/// Single-qubit amplitude damping:
///   E0 = diag(1, sqrt(1 - gamma)),  E1 = sqrt(gamma) |0><1|.
class KrausChannel {
   public:
    /// gamma in [0, 1].
    explicit KrausChannel(double gamma);

    double gamma() const { return gamma_; }
    const Matrix2 &no_jump() const { return e0_; }
    const Matrix2 &jump() const { return e1_; }

    /// max |E0^dag E0 + E1^dag E1 - Id|.
    double completeness_deviation() const;

   private:
    double gamma_;
    Matrix2 e0_;
    Matrix2 e1_;
};

/// Tensor product of single-qubit Kraus factors with a readable label.
struct KrausProduct {
    std::string label;
    std::vector<Matrix2> factors;
    size_t damped_weight = 0;
};

/// Damping products of weight <= 1 on n qubits: E0 on every qubit, then for
/// each qubit q, E1 on q with E0 elsewhere.
std::vector<KrausProduct> damping_kraus_products(size_t n, double gamma);

}  // namespace ghzqec

#endif
