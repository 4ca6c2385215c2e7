/*
   Copyright 2026 The plbc authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>

#include "plbc/bitvec.hpp"

namespace plbc {

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Deterministic random stream addressed by (seed, stream index). Distinct
/// stream indices give statistically independent sequences, so per-trial
/// streams can be consumed in any order (or in parallel) with identical
/// results.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream)
        : state_(splitmix64_mix((seed + 0x9E3779B97F4A7C15ull) ^
                                splitmix64_mix(stream + 0xD1B54A32D192ED03ull))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return splitmix64_mix(state_);
    }

    bool next_bit() { return next_u64() >> 63; }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Uniform integer in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
    }

    /// n i.i.d. uniform bits, packed.
    BitVector bits(std::size_t n) {
        BitVector v(n);
        auto words = v.words();
        for (auto& w : words) w = next_u64();
        if (n % 64) words[words.size() - 1] &= (std::uint64_t(1) << (n % 64)) - 1;
        return v;
    }

  private:
    std::uint64_t state_;
};

}  // namespace plbc
