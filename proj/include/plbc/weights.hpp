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
#include <stdexcept>
#include <string>
#include <vector>

#include "plbc/code.hpp"
#include "plbc/polynomial.hpp"

namespace plbc {

using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient.
inline BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt acc = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        acc *= static_cast<unsigned long long>(n - k + i);
        acc /= static_cast<unsigned long long>(i);
    }
    return acc;
}

inline BigInt pow2(std::size_t e) {
    BigInt x = 1;
    x <<= e;
    return x;
}

enum class WdProvenance { exhaustive, macwilliams, approx };

inline const char* to_string(WdProvenance p) {
    switch (p) {
        case WdProvenance::exhaustive: return "exhaustive";
        case WdProvenance::macwilliams: return "macwilliams";
        case WdProvenance::approx: return "approx";
    }
    return "?";
}

/// Codeword counts by Hamming weight: counts[w] is the number of weight-w
/// codewords of a dimension-dim length-n code. Exact provenances satisfy
/// sum(counts) = 2^dim exactly.
struct WeightDistribution {
    std::size_t n = 0;
    std::size_t dim = 0;
    std::vector<BigInt> counts;  // size n + 1
    WdProvenance provenance = WdProvenance::exhaustive;

    bool is_exact() const { return provenance != WdProvenance::approx; }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }
};

/// Exact weight distribution by enumerating all 2^dim codewords of the span
/// of a full-rank generator (Gray-code walk). Bounded to dim <= 22.
inline WeightDistribution weight_distribution_exhaustive(const BitMatrix& generator) {
    const std::size_t dim = generator.rows();
    const std::size_t n = generator.cols();
    if (dim > kExhaustiveDimLimit)
        throw unsupported_computation("weight_distribution_exhaustive: dimension " + std::to_string(dim) +
                                      " exceeds the exhaustive threshold " + std::to_string(kExhaustiveDimLimit));
    if (rank(generator) != dim)
        throw std::invalid_argument("weight_distribution_exhaustive: generator rows are dependent");

    std::vector<std::uint64_t> raw(n + 1, 0);
    raw[0] = 1;
    if (dim > 0) {
        BitVector acc(n);
        const std::uint64_t total = std::uint64_t(1) << dim;
        for (std::uint64_t g = 1; g < total; ++g) {
            acc ^= generator.row(static_cast<std::size_t>(std::countr_zero(g)));
            ++raw[acc.weight()];
        }
    }

    WeightDistribution wd;
    wd.n = n;
    wd.dim = dim;
    wd.provenance = WdProvenance::exhaustive;
    wd.counts.assign(raw.begin(), raw.end());
    return wd;
}

/// Weight distribution of the dual code via the binary MacWilliams identity
/// (Krawtchouk sums), evaluated in exact integers. The transform is an
/// involution on exact distributions.
inline WeightDistribution macwilliams_transform(const WeightDistribution& wd) {
    if (!wd.is_exact())
        throw std::invalid_argument("macwilliams_transform: requires an exact distribution");
    const std::size_t n = wd.n;
    if (wd.counts.size() != n + 1)
        throw std::invalid_argument("macwilliams_transform: counts length != n + 1");

    // Krawtchouk table K_j(w) = sum_s (-1)^s C(w,s) C(n-w, j-s).
    std::vector<std::vector<BigInt>> choose(n + 1, std::vector<BigInt>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        choose[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j)
            choose[i][j] = choose[i - 1][j - 1] + (j <= i - 1 ? choose[i - 1][j] : BigInt(0));
    }

    const BigInt size = pow2(wd.dim);
    WeightDistribution dual;
    dual.n = n;
    dual.dim = n - wd.dim;
    dual.provenance = WdProvenance::macwilliams;
    dual.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t w = 0; w <= n; ++w) {
            if (wd.counts[w] == 0) continue;
            BigInt kraw = 0;
            for (std::size_t s = 0; s <= j && s <= w; ++s) {
                const BigInt term = choose[w][s] * (j - s <= n - w ? choose[n - w][j - s] : BigInt(0));
                if (s % 2 == 0)
                    kraw += term;
                else
                    kraw -= term;
            }
            acc += wd.counts[w] * kraw;
        }
        if (acc < 0 || acc % size != 0)
            throw std::logic_error("macwilliams_transform: non-integer dual count (input is not a valid "
                                   "weight distribution)");
        dual.counts[j] = acc / size;
    }
    return dual;
}

/// Random-coset approximation: counts[w] = round(C(n,w) * 2^(dim-n)) for
/// w >= d0, zero in the designed-distance band below, rounding half up.
inline WeightDistribution weight_distribution_approx(std::size_t n, std::size_t dim, std::size_t d0) {
    if (dim > n) throw std::invalid_argument("weight_distribution_approx: dim > n");
    WeightDistribution wd;
    wd.n = n;
    wd.dim = dim;
    wd.provenance = WdProvenance::approx;
    wd.counts.assign(n + 1, 0);
    wd.counts[0] = 1;
    const BigInt den = pow2(n - dim);
    for (std::size_t w = std::max<std::size_t>(d0, 1); w <= n; ++w) {
        // round(num/den) half up = floor((2 num + den) / (2 den))
        const BigInt num = binomial(n, w);
        wd.counts[w] = (2 * num + den) / (2 * den);
    }
    return wd;
}

}  // namespace plbc
