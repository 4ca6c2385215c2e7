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

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "plbc/bitvec.hpp"

namespace plbc {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial over GF(2), stored as a coefficient bitmask: bit i of mask() is
/// the coefficient of x^i. The zero polynomial has degree -1.
class BinaryPolynomial {
  public:
    BinaryPolynomial() = default;
    explicit BinaryPolynomial(BigInt mask) : mask_(std::move(mask)) {
        if (mask_ < 0) throw std::invalid_argument("BinaryPolynomial: negative mask");
    }
    explicit BinaryPolynomial(unsigned long long mask) : mask_(mask) {}

    static BinaryPolynomial zero() { return BinaryPolynomial(); }
    static BinaryPolynomial one() { return BinaryPolynomial(1ull); }

    /// x^i
    static BinaryPolynomial monomial(std::size_t i) {
        BigInt m = 1;
        m <<= i;
        return BinaryPolynomial(std::move(m));
    }

    /// x^n + 1
    static BinaryPolynomial xn_plus_one(std::size_t n) {
        BigInt m = 1;
        m <<= n;
        m |= 1;
        return BinaryPolynomial(std::move(m));
    }

    /// Parses lowercase/uppercase hex with "0x" prefix, e.g. "0xb" = x^3+x+1.
    static BinaryPolynomial from_hex(const std::string& s) {
        if (s.size() < 3 || s[0] != '0' || (s[1] != 'x' && s[1] != 'X'))
            throw std::invalid_argument("BinaryPolynomial: expected 0x-prefixed hex, got '" + s + "'");
        return BinaryPolynomial(BigInt(s));
    }

    std::string to_hex() const {
        std::ostringstream os;
        os << std::hex << mask_;
        return "0x" + os.str();
    }

    const BigInt& mask() const { return mask_; }
    bool is_zero() const { return mask_ == 0; }

    /// Degree of the polynomial; -1 for the zero polynomial.
    long degree() const { return mask_ == 0 ? -1 : static_cast<long>(boost::multiprecision::msb(mask_)); }

    bool coeff(std::size_t i) const { return boost::multiprecision::bit_test(mask_, static_cast<unsigned>(i)); }

    friend bool operator==(const BinaryPolynomial& a, const BinaryPolynomial& b) { return a.mask_ == b.mask_; }

    friend BinaryPolynomial operator+(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        return BinaryPolynomial(a.mask_ ^ b.mask_);
    }

    friend BinaryPolynomial operator*(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        // Carry-less shift-and-add over the set bits of the sparser operand.
        const BinaryPolynomial& scan = (a.degree() <= b.degree()) ? a : b;
        const BinaryPolynomial& other = (a.degree() <= b.degree()) ? b : a;
        BigInt acc = 0;
        for (long i = 0; i <= scan.degree(); ++i)
            if (scan.coeff(static_cast<std::size_t>(i))) acc ^= other.mask_ << static_cast<unsigned>(i);
        return BinaryPolynomial(std::move(acc));
    }

    /// Long division: f = q*g + rem with deg(rem) < deg(g).
    static std::pair<BinaryPolynomial, BinaryPolynomial> divmod(const BinaryPolynomial& f,
                                                                const BinaryPolynomial& g) {
        if (g.is_zero()) throw std::domain_error("BinaryPolynomial: division by zero polynomial");
        BigInt rem = f.mask_;
        BigInt quot = 0;
        const long dg = g.degree();
        while (rem != 0) {
            const long dr = static_cast<long>(boost::multiprecision::msb(rem));
            if (dr < dg) break;
            const unsigned shift = static_cast<unsigned>(dr - dg);
            rem ^= g.mask_ << shift;
            boost::multiprecision::bit_set(quot, shift);
        }
        return {BinaryPolynomial(std::move(quot)), BinaryPolynomial(std::move(rem))};
    }

    friend BinaryPolynomial operator%(const BinaryPolynomial& f, const BinaryPolynomial& g) {
        return divmod(f, g).second;
    }
    friend BinaryPolynomial operator/(const BinaryPolynomial& f, const BinaryPolynomial& g) {
        return divmod(f, g).first;
    }

    bool divides(const BinaryPolynomial& f) const { return (f % *this).is_zero(); }

    static BinaryPolynomial gcd(BinaryPolynomial a, BinaryPolynomial b) {
        while (!b.is_zero()) {
            BinaryPolynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static BinaryPolynomial lcm(const BinaryPolynomial& a, const BinaryPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        return (a / gcd(a, b)) * b;
    }

    /// x^deg * p(1/x); requires a nonzero constant term to preserve degree.
    BinaryPolynomial reciprocal() const {
        if (is_zero()) return zero();
        const long d = degree();
        BigInt out = 0;
        for (long i = 0; i <= d; ++i)
            if (coeff(static_cast<std::size_t>(i))) boost::multiprecision::bit_set(out, static_cast<unsigned>(d - i));
        return BinaryPolynomial(std::move(out));
    }

    /// Coefficient vector of length n (coefficients of x^0..x^{n-1}).
    BitVector to_bitvector(std::size_t n) const {
        if (degree() >= static_cast<long>(n))
            throw std::invalid_argument("BinaryPolynomial: degree exceeds requested vector length");
        BitVector v(n);
        for (long i = 0; i <= degree(); ++i)
            if (coeff(static_cast<std::size_t>(i))) v.set(static_cast<std::size_t>(i), true);
        return v;
    }

    static BinaryPolynomial from_bitvector(const BitVector& v) {
        BigInt m = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v.get(i)) boost::multiprecision::bit_set(m, static_cast<unsigned>(i));
        return BinaryPolynomial(std::move(m));
    }

  private:
    BigInt mask_;
};

}  // namespace plbc
