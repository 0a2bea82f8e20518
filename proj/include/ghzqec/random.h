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

#ifndef GHZQEC_RANDOM_H
#define GHZQEC_RANDOM_H

#include <cstddef>
#include <cstdint>
#include <random>

namespace ghzqec {

/// SplitMix64 finalizer; maps (seed, stream index) to an independent seed.
inline uint64_t derive_seed(uint64_t seed, uint64_t index) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// std::mt19937_64 with distribution code written out here, so that streams are
/// identical across standard library implementations.
class Rng {
   public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform in [0, bound) by rejection.
    size_t below(size_t bound) {
        const uint64_t b = bound;
        const uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % b);
        uint64_t v;
        do {
            v = engine_();
        } while (v >= limit);
        return static_cast<size_t>(v % b);
    }

   private:
    std::mt19937_64 engine_;
};

}  // namespace ghzqec

#endif
