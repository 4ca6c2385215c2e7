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
#include <set>
#include <stdexcept>
#include <vector>

#include "plbc/polynomial.hpp"

namespace plbc {

/// Raised when a computation exceeds a documented feasibility threshold.
struct unsupported_computation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// GF(2^m) realized through log/antilog tables over a primitive polynomial.
/// Elements are m-bit masks in the polynomial basis; antilog(i) = alpha^i.
///
/// Construction verifies irreducibility (trial division by every polynomial
/// of degree <= m/2) and primitivity (the powers of x visit all 2^m - 1
/// nonzero elements).
class FieldGF2m {
  public:
    FieldGF2m(unsigned m, BinaryPolynomial primitive) : m_(m), primitive_(std::move(primitive)) {
        if (m < 2 || m > 20) throw std::invalid_argument("FieldGF2m: m out of supported range [2,20]");
        if (primitive_.degree() != static_cast<long>(m))
            throw std::invalid_argument("FieldGF2m: primitive polynomial degree != m");
        verify_irreducible();
        build_tables();
    }

    /// Default primitive polynomials for m in [2,16].
    static BinaryPolynomial default_primitive(unsigned m) {
        static const unsigned long long table[] = {
            0,       0,      0x7,    0xb,    0x13,   0x25,    0x43,   0x89,  0x11d,
            0x211,   0x409,  0x805,  0x1053, 0x201b, 0x4443,  0x8003, 0x1100b,
        };
        if (m < 2 || m > 16) throw std::invalid_argument("FieldGF2m: no default primitive for this m");
        return BinaryPolynomial(table[m]);
    }

    static FieldGF2m with_default_primitive(unsigned m) { return FieldGF2m(m, default_primitive(m)); }

    unsigned m() const { return m_; }
    std::uint32_t order() const { return size_ - 1; }  // multiplicative order 2^m - 1
    const BinaryPolynomial& primitive_polynomial() const { return primitive_; }

    std::uint32_t antilog(std::uint32_t e) const { return antilog_[e % order()]; }
    std::uint32_t log(std::uint32_t elem) const {
        if (elem == 0 || elem >= size_) throw std::invalid_argument("FieldGF2m: log of zero or out-of-range element");
        return log_[elem];
    }

    static std::uint32_t add(std::uint32_t a, std::uint32_t b) { return a ^ b; }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return antilog_[(log_[a] + log_[b]) % order()];
    }

    /// alpha^e for any integer exponent (reduced mod 2^m - 1).
    std::uint32_t alpha_pow(long long e) const {
        long long r = e % order();
        if (r < 0) r += order();
        return antilog_[static_cast<std::uint32_t>(r)];
    }

    /// Evaluates a GF(2) polynomial at the field element alpha^e.
    std::uint32_t eval_at_alpha_pow(const BinaryPolynomial& p, std::uint32_t e) const {
        const std::uint32_t x = alpha_pow(e);
        std::uint32_t acc = 0;
        for (long i = p.degree(); i >= 0; --i) {
            acc = mul(acc, x);
            if (p.coeff(static_cast<std::size_t>(i))) acc ^= 1u;
        }
        return acc;
    }

    /// Cyclotomic coset of e modulo 2^m - 1, in orbit order starting at e.
    std::vector<std::uint32_t> cyclotomic_coset(std::uint32_t e) const {
        e %= order();
        std::vector<std::uint32_t> coset;
        std::uint32_t j = e;
        do {
            coset.push_back(j);
            j = static_cast<std::uint32_t>((2ull * j) % order());
        } while (j != e);
        return coset;
    }

  private:
    void verify_irreducible() const {
        for (long d = 1; 2 * d <= static_cast<long>(m_); ++d) {
            const unsigned long long lo = 1ull << d, hi = 1ull << (d + 1);
            for (unsigned long long mask = lo; mask < hi; ++mask) {
                if ((BinaryPolynomial(primitive_.mask()) % BinaryPolynomial(mask)).is_zero())
                    throw std::invalid_argument("FieldGF2m: polynomial is reducible (divisible by " +
                                                BinaryPolynomial(mask).to_hex() + ")");
            }
        }
    }

    void build_tables() {
        size_ = 1u << m_;
        antilog_.assign(size_ - 1, 0);
        log_.assign(size_, 0);
        const std::uint32_t prim_mask = static_cast<std::uint32_t>(primitive_.mask());
        const std::uint32_t high = 1u << m_;
        std::uint32_t e = 1;
        for (std::uint32_t i = 0; i < size_ - 1; ++i) {
            if (e == 1 && i != 0)
                throw std::invalid_argument("FieldGF2m: polynomial is irreducible but not primitive");
            antilog_[i] = e;
            log_[e] = i;
            e <<= 1;
            if (e & high) e ^= prim_mask;
        }
        if (e != 1) throw std::logic_error("FieldGF2m: table construction failed to close the cycle");
    }

    unsigned m_;
    BinaryPolynomial primitive_;
    std::uint32_t size_ = 0;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
};

/// Minimal polynomial over GF(2) of alpha^exponent: the product of
/// (x - alpha^j) over the cyclotomic coset of the exponent.
inline BinaryPolynomial minimal_polynomial(const FieldGF2m& field, std::uint32_t exponent) {
    const auto coset = field.cyclotomic_coset(exponent);

    // Expand the product with coefficients in GF(2^m), then check they all
    // collapsed into GF(2).
    std::vector<std::uint32_t> coeffs{1};
    for (std::uint32_t j : coset) {
        const std::uint32_t root = field.alpha_pow(j);
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= field.mul(coeffs[i], root);
        }
        coeffs = std::move(next);
    }

    BigInt mask = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] > 1)
            throw std::logic_error("minimal_polynomial: coefficient outside GF(2)");
        if (coeffs[i]) boost::multiprecision::bit_set(mask, static_cast<unsigned>(i));
    }
    return BinaryPolynomial(std::move(mask));
}

/// Narrow-sense BCH generator polynomial for block length n = 2^m - 1 and the
/// given designed distance: the lcm of the minimal polynomials of
/// alpha^1 .. alpha^(designed_distance - 1).
inline BinaryPolynomial bch_generator(const FieldGF2m& field, std::size_t n, unsigned designed_distance) {
    if (n != (std::size_t(1) << field.m()) - 1)
        throw std::invalid_argument("bch_generator: n must be 2^m - 1 for the supplied field");
    if (designed_distance < 2) throw std::invalid_argument("bch_generator: designed distance must be >= 2");

    std::set<std::uint32_t> seen_reps;
    BinaryPolynomial g = BinaryPolynomial::one();
    for (std::uint32_t e = 1; e <= designed_distance - 1; ++e) {
        const auto coset = field.cyclotomic_coset(e);
        std::uint32_t rep = coset[0];
        for (std::uint32_t j : coset) rep = std::min(rep, j);
        if (!seen_reps.insert(rep).second) continue;
        g = g * minimal_polynomial(field, rep);
    }

    if (!g.divides(BinaryPolynomial::xn_plus_one(n)))
        throw std::logic_error("bch_generator: generator does not divide x^n + 1");
    return g;
}

}  // namespace plbc
