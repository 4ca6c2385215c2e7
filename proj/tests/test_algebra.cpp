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

#include <catch2/catch_amalgamated.hpp>

#include "plbc/bitvec.hpp"
#include "plbc/gf2m.hpp"
#include "plbc/polynomial.hpp"
#include "test_util.hpp"

using namespace plbc;
using testutil::poly_equal;
using testutil::poly_from_lib;
using testutil::poly_from_mask;

TEST_CASE("hamming weight") {
    CHECK(BitVector(8).weight() == 0);
    CHECK(BitVector::from_string("1011100").weight() == 4);
    BitVector ones(129);
    for (std::size_t i = 0; i < 129; ++i) ones.set(i, true);
    CHECK(ones.weight() == 129);
}

TEST_CASE("bitvector string round trip and ordering") {
    const std::string s = "0100110001";
    CHECK(BitVector::from_string(s).to_string() == s);
    CHECK_THROWS_AS(BitVector::from_string("01x"), std::invalid_argument);

    // integer encoding: bit i is worth 2^i
    CHECK(BitVector::integer_less(BitVector::from_string("110"), BitVector::from_string("001")));
    CHECK_FALSE(BitVector::integer_less(BitVector::from_string("001"), BitVector::from_string("110")));
}

TEST_CASE("rank basics") {
    CHECK(rank(BitMatrix::identity(3)) == 3);

    BitMatrix m(0, 4);
    m.append_row(BitVector::from_string("1100"));
    m.append_row(BitVector::from_string("0110"));
    m.append_row(BitVector::from_string("1010"));
    CHECK(rank(m) == 2);

    CHECK(rank(BitMatrix(0, 5)) == 0);
    CHECK(rank(BitMatrix(3, 7)) == 0);
}

TEST_CASE("rank equals rank of transpose") {
    std::mt19937_64 rng(12345);
    for (int rep = 0; rep < 40; ++rep) {
        const std::size_t r = 1 + rng() % 64, c = 1 + rng() % 64;
        const BitMatrix m = testutil::random_matrix(rng, r, c);
        CHECK(rank(m) == rank(m.transposed()));
    }
}

TEST_CASE("solve_consistent examples") {
    const auto x = solve_consistent(BitMatrix::identity(2), BitVector::from_string("10"));
    REQUIRE(x.has_value());
    CHECK(x->to_string() == "10");

    BitMatrix same(0, 2);
    same.append_row(BitVector::from_string("11"));
    same.append_row(BitVector::from_string("11"));
    CHECK_FALSE(solve_consistent(same, BitVector::from_string("10")).has_value());

    BitMatrix single(0, 2);
    single.append_row(BitVector::from_string("11"));
    const auto y = solve_consistent(single, BitVector::from_string("1"));
    REQUIRE(y.has_value());
    CHECK(y->to_string() == "10");  // free variable pinned to zero

    CHECK_THROWS_AS(solve_consistent(single, BitVector::from_string("11")), std::invalid_argument);
}

TEST_CASE("solve_consistent randomized round trip and inconsistency certificate") {
    std::mt19937_64 rng(777);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 12;
        const BitMatrix a = testutil::random_matrix(rng, rows, cols);
        const BitVector b = testutil::random_bits(rng, rows);
        const auto x = solve_consistent(a, b);

        BitMatrix augmented(0, cols + 1);
        for (std::size_t i = 0; i < rows; ++i) {
            BitVector row(cols + 1);
            for (std::size_t j = 0; j < cols; ++j) row.set(j, a.get(i, j));
            row.set(cols, b.get(i));
            augmented.append_row(std::move(row));
        }
        if (x) {
            for (std::size_t i = 0; i < rows; ++i) CHECK(a.row(i).dot(*x) == b.get(i));
            CHECK(rank(augmented) == rank(a));
        } else {
            CHECK(rank(augmented) == rank(a) + 1);
        }
    }
}

TEST_CASE("null space basis spans the kernel") {
    std::mt19937_64 rng(4242);
    for (int rep = 0; rep < 60; ++rep) {
        const std::size_t rows = 1 + rng() % 10, cols = 1 + rng() % 14;
        const BitMatrix m = testutil::random_matrix(rng, rows, cols);
        const BitMatrix basis = null_space_basis(m);
        CHECK(basis.rows() == cols - rank(m));
        if (basis.rows() > 0) CHECK(rank(basis) == basis.rows());
        for (std::size_t i = 0; i < basis.rows(); ++i)
            for (std::size_t j = 0; j < rows; ++j) CHECK_FALSE(m.row(j).dot(basis.row(i)));
    }
}

TEST_CASE("polynomial division") {
    const auto f = BinaryPolynomial::xn_plus_one(7);
    const auto g = BinaryPolynomial(0xbull);  // x^3 + x + 1
    const auto [q, rem] = BinaryPolynomial::divmod(f, g);
    CHECK(q.mask() == 0x17);  // x^4 + x^2 + x + 1
    CHECK(rem.is_zero());
    // verify by re-multiplying with the schoolbook oracle
    CHECK(poly_equal(testutil::poly_mul(poly_from_lib(q), poly_from_mask(0xb)), poly_from_mask(0x81)));

    const auto [q2, r2] = BinaryPolynomial::divmod(g, g);
    CHECK(q2.mask() == 1);
    CHECK(r2.is_zero());

    const auto [q3, r3] = BinaryPolynomial::divmod(f, BinaryPolynomial::one());
    CHECK(q3 == f);
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(BinaryPolynomial::divmod(f, BinaryPolynomial::zero()), std::domain_error);
}

TEST_CASE("polynomial divmod round trip against the schoolbook oracle") {
    std::mt19937_64 rng(99);
    for (int rep = 0; rep < 300; ++rep) {
        const unsigned long long fm = rng() & ((1ull << (1 + rng() % 40)) - 1);
        unsigned long long gm = rng() & ((1ull << (1 + rng() % 20)) - 1);
        if (gm == 0) gm = 1;
        const BinaryPolynomial f(fm), g(gm);
        const auto [q, rem] = BinaryPolynomial::divmod(f, g);
        CHECK(rem.degree() < g.degree());
        const auto recombined = testutil::poly_add(testutil::poly_mul(poly_from_lib(q), poly_from_lib(g)),
                                                   poly_from_lib(rem));
        CHECK(poly_equal(recombined, poly_from_lib(f)));
    }
}

TEST_CASE("polynomial hex, reciprocal, gcd") {
    CHECK(BinaryPolynomial::from_hex("0xb").mask() == 0xb);
    CHECK(BinaryPolynomial(0xbull).to_hex() == "0xb");
    CHECK_THROWS_AS(BinaryPolynomial::from_hex("12"), std::invalid_argument);
    CHECK(BinaryPolynomial::zero().degree() == -1);

    CHECK(BinaryPolynomial(0xdull).reciprocal().mask() == 0xb);  // x^3+x^2+1 <-> x^3+x+1
    CHECK(BinaryPolynomial::lcm(BinaryPolynomial(0xbull), BinaryPolynomial(0xbull)).mask() == 0xb);
    CHECK(BinaryPolynomial::gcd(BinaryPolynomial(0xbull), BinaryPolynomial(0xdull)).mask() == 0x1);
}

TEST_CASE("field tables") {
    const FieldGF2m f(3, BinaryPolynomial(0xbull));
    CHECK(f.order() == 7);
    CHECK(f.antilog(0) == 1);
    for (std::uint32_t e = 1; e < 8; ++e) CHECK(f.antilog(f.log(e)) == e);
    // alpha^3 = alpha + 1 under x^3 + x + 1
    CHECK(f.alpha_pow(3) == 0b011);
    CHECK(f.mul(f.alpha_pow(3), f.alpha_pow(4)) == 1);  // alpha^7 = 1

    CHECK_THROWS_AS(FieldGF2m(3, BinaryPolynomial(0x9ull)), std::invalid_argument);   // x^3+1 reducible
    CHECK_THROWS_AS(FieldGF2m(4, BinaryPolynomial(0x1full)), std::invalid_argument);  // irreducible, order 5
}

TEST_CASE("minimal polynomials in GF(8)") {
    const FieldGF2m f(3, BinaryPolynomial(0xbull));
    CHECK(minimal_polynomial(f, 1).mask() == 0xb);
    CHECK(minimal_polynomial(f, 0).mask() == 0x3);  // x + 1
    CHECK(minimal_polynomial(f, 3).mask() == 0xd);  // coset {3,6,5} -> x^3+x^2+1

    // oracle: expand (x - a^3)(x - a^6)(x - a^5) over the field by hand
    std::vector<std::uint32_t> coeffs{1};
    for (std::uint32_t e : {3u, 6u, 5u}) {
        std::vector<std::uint32_t> next(coeffs.size() + 1, 0);
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i + 1] ^= coeffs[i];
            next[i] ^= f.mul(coeffs[i], f.alpha_pow(e));
        }
        coeffs = next;
    }
    CHECK(coeffs == std::vector<std::uint32_t>{1, 0, 1, 1});

    // invariant across the coset
    CHECK(minimal_polynomial(f, 3) == minimal_polynomial(f, 5));
    CHECK(minimal_polynomial(f, 3) == minimal_polynomial(f, 6));
}

TEST_CASE("bch generators") {
    const FieldGF2m f3(3, BinaryPolynomial(0xbull));
    CHECK(bch_generator(f3, 7, 3).mask() == 0xb);

    const auto g7 = bch_generator(f3, 7, 7);
    CHECK(g7.mask() == 0x7f);
    // oracle: (x^7 + 1) / (x + 1) by schoolbook division
    const auto [oq, orem] = testutil::poly_divide(poly_from_mask(0x81), poly_from_mask(0x3));
    CHECK(orem.empty());
    CHECK(poly_equal(poly_from_lib(g7), oq));

    const FieldGF2m f5(5, BinaryPolynomial(0x25ull));
    CHECK(bch_generator(f5, 31, 3).mask() == 0x25);

    CHECK_THROWS_AS(bch_generator(f3, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(bch_generator(f3, 15, 3), std::invalid_argument);
}

TEST_CASE("bch generator divides x^n + 1 for every designed distance") {
    const FieldGF2m f3(3, BinaryPolynomial(0xbull));
    for (unsigned delta = 2; delta <= 7; ++delta)
        CHECK(bch_generator(f3, 7, delta).divides(BinaryPolynomial::xn_plus_one(7)));
    const FieldGF2m f4(4, BinaryPolynomial(0x13ull));
    for (unsigned delta = 2; delta <= 15; ++delta)
        CHECK(bch_generator(f4, 15, delta).divides(BinaryPolynomial::xn_plus_one(15)));
}

TEST_CASE("combination iteration is colex / integer-ascending") {
    std::vector<std::size_t> c{0, 1};
    std::vector<unsigned> encodings;
    do {
        unsigned enc = 0;
        for (std::size_t i : c) enc |= 1u << i;
        encodings.push_back(enc);
    } while (next_combination(c, 4));
    CHECK(encodings == std::vector<unsigned>{3, 5, 6, 9, 10, 12});
}
