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

// Test-side reference implementations, deliberately naive and independent of
// the library code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "plbc/bitvec.hpp"
#include "plbc/polynomial.hpp"

namespace testutil {

// GF(2) polynomials as coefficient arrays (index = power), no bit packing.
using Poly = std::vector<int>;

inline Poly poly_from_mask(unsigned long long mask) {
    Poly p;
    for (int i = 0; i < 64; ++i) p.push_back((mask >> i) & 1ull);
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Poly poly_from_lib(const plbc::BinaryPolynomial& q) {
    Poly p;
    for (long i = 0; i <= q.degree(); ++i) p.push_back(q.coeff(static_cast<std::size_t>(i)) ? 1 : 0);
    return p;
}

inline bool poly_equal(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!x.empty() && x.back() == 0) x.pop_back();
    while (!y.empty() && y.back() == 0) y.pop_back();
    return x == y;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= a[i] & b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    if (b.size() > r.size()) r.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) r[i] ^= b[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

/// Schoolbook long division; returns {quotient, remainder}.
inline std::pair<Poly, Poly> poly_divide(const Poly& f, const Poly& g) {
    Poly rem = f, quot;
    while (!rem.empty() && rem.back() == 0) rem.pop_back();
    Poly gg = g;
    while (!gg.empty() && gg.back() == 0) gg.pop_back();
    if (rem.size() >= gg.size()) quot.assign(rem.size() - gg.size() + 1, 0);
    while (rem.size() >= gg.size() && !rem.empty()) {
        const std::size_t shift = rem.size() - gg.size();
        quot[shift] = 1;
        for (std::size_t i = 0; i < gg.size(); ++i) rem[shift + i] ^= gg[i];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    return {quot, rem};
}

inline plbc::BitVector random_bits(std::mt19937_64& rng, std::size_t n, double density = 0.5) {
    plbc::BitVector v(n);
    std::bernoulli_distribution coin(density);
    for (std::size_t i = 0; i < n; ++i)
        if (coin(rng)) v.set(i, true);
    return v;
}

inline plbc::BitMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    plbc::BitMatrix m(0, cols);
    for (std::size_t i = 0; i < rows; ++i) m.append_row(random_bits(rng, cols));
    return m;
}

}  // namespace testutil
