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

#include "ghzqec/kraus.h"

#include <cmath>
#include <stdexcept>

namespace ghzqec {

KrausChannel::KrausChannel(double gamma) : gamma_(gamma) {
    if (!(gamma >= 0 && gamma <= 1)) {
        throw std::invalid_argument("KrausChannel: gamma must lie in [0, 1]");
    }
    e0_ = Matrix2{1.0, 0.0, 0.0, std::sqrt(1 - gamma)};
    e1_ = Matrix2{0.0, std::sqrt(gamma), 0.0, 0.0};
}

double KrausChannel::completeness_deviation() const {
    double dev = 0;
    for (size_t r = 0; r < 2; r++) {
        for (size_t c = 0; c < 2; c++) {
            Amplitude sum = 0;
            for (size_t k = 0; k < 2; k++) {
                sum += std::conj(e0_[k * 2 + r]) * e0_[k * 2 + c];
                sum += std::conj(e1_[k * 2 + r]) * e1_[k * 2 + c];
            }
            dev = std::max(dev, std::abs(sum - (r == c ? 1.0 : 0.0)));
        }
    }
    return dev;
}

std::vector<KrausProduct> damping_kraus_products(size_t n, double gamma) {
    KrausChannel channel(gamma);
    std::vector<KrausProduct> out;
    out.push_back({"E0^" + std::to_string(n), std::vector<Matrix2>(n, channel.no_jump()), 0});
    for (size_t q = 1; q <= n; q++) {
        std::vector<Matrix2> factors(n, channel.no_jump());
        factors[q - 1] = channel.jump();
        out.push_back({"E1_" + std::to_string(q), std::move(factors), 1});
    }
    return out;
}

}  // namespace ghzqec
