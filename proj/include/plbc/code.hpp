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

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "plbc/bitvec.hpp"
#include "plbc/gf2m.hpp"
#include "plbc/polynomial.hpp"

namespace plbc {

struct invalid_code_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct invalid_spec_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest code dimension enumerated exhaustively (2^22 ~ 4M codewords) when
/// computing minimum distances and weight distributions.
inline constexpr std::size_t kExhaustiveDimLimit = 22;

enum class D0Provenance { exhaustive, designed_distance, user_supplied };

inline const char* to_string(D0Provenance p) {
    switch (p) {
        case D0Provenance::exhaustive: return "exhaustive";
        case D0Provenance::designed_distance: return "designed-distance";
        case D0Provenance::user_supplied: return "user-supplied";
    }
    return "?";
}

namespace detail {

/// Minimum weight over the nonzero span of a full-rank basis (Gray-code walk
/// over all 2^rows combinations).
inline std::size_t min_nonzero_weight(const BitMatrix& basis) {
    const std::size_t dim = basis.rows();
    if (dim == 0 || dim > kExhaustiveDimLimit)
        throw unsupported_computation("min_nonzero_weight: dimension " + std::to_string(dim) +
                                      " outside exhaustive range [1," + std::to_string(kExhaustiveDimLimit) + "]");
    BitVector acc(basis.cols());
    std::size_t best = basis.cols() + 1;
    const std::uint64_t total = std::uint64_t(1) << dim;
    for (std::uint64_t g = 1; g < total; ++g) {
        acc ^= basis.row(static_cast<std::size_t>(std::countr_zero(g)));
        const std::size_t w = acc.weight();
        if (w < best) best = w;
    }
    return best;
}

// Shared lazily-built syndrome decoding table (codec.hpp fills it in).
struct CosetTableCache {
    std::mutex mu;
    std::shared_ptr<const std::vector<BitVector>> table;
};

}  // namespace detail

/// BCH-bound designed distance of the cyclic code generated by g (length n):
/// one plus the longest cyclic run of consecutive exponents e with
/// g(alpha^e) = 0.
inline std::size_t bch_designed_distance(const FieldGF2m& field, std::size_t n, const BinaryPolynomial& g) {
    if (n != (std::size_t(1) << field.m()) - 1)
        throw std::invalid_argument("bch_designed_distance: n must be 2^m - 1");
    std::vector<bool> is_root(n, false);
    std::size_t roots = 0;
    for (std::size_t e = 0; e < n; ++e) {
        if (field.eval_at_alpha_pow(g, static_cast<std::uint32_t>(e)) == 0) {
            is_root[e] = true;
            ++roots;
        }
    }
    if (roots == n) return n + 1;  // g vanishes everywhere: the repetition-dual degenerate case
    std::size_t best = 0, run = 0;
    for (std::size_t i = 0; i < 2 * n; ++i) {  // doubled scan handles cyclic wrap
        if (is_root[i % n]) {
            ++run;
            if (run > best) best = run;
            if (best >= n) break;
        } else {
            run = 0;
        }
    }
    return best + 1;
}

/// An [n, k, l] partitioned linear block code: the direct sum of a message
/// subspace (spanned by g1) and a masking subspace (spanned by g0), with
/// parity-check matrix h and message inverse g1_inv.
///
/// d0 is the minimum distance of the code whose parity-check matrix is g0
/// (the dual of the masking subspace); masking u < d0 defects always
/// succeeds. d1 is the distance proxy of the code checked by h (0 when
/// r = 0), governing random-error correction.
struct PlbcCode {
    std::size_t n = 0, k = 0, l = 0, r = 0;
    BitMatrix g1;       // k x n message generator
    BitMatrix g0;       // l x n masking generator
    BitMatrix h;        // r x n parity check of the direct sum
    BitMatrix g1_inv;   // k x n message inverse: g1 * g1_inv^T = I, g0 * g1_inv^T = 0
    BitMatrix g0_cols;  // n x l transpose of g0 (fast column/submatrix access)
    std::size_t d1 = 0;
    std::size_t d0 = 0;
    std::size_t t0 = 0;  // floor((d0 - 1) / 2)
    D0Provenance d0_provenance = D0Provenance::exhaustive;

    std::shared_ptr<detail::CosetTableCache> coset_cache = std::make_shared<detail::CosetTableCache>();
};

/// Minimum-distance pair of a code under assembly: d0 from the null space of
/// g0 (dimension n - l), d1 from the null space of h (dimension n - r; equal
/// to the direct-sum code itself and a documented lower-bound proxy). r = 0
/// yields d1 = 0 by convention.
inline std::pair<std::size_t, std::size_t> min_distances(const BitMatrix& g1, const BitMatrix& g0,
                                                         const BitMatrix& h) {
    const std::size_t n = g0.cols();
    const std::size_t dual_dim = n - g0.rows();
    if (dual_dim > kExhaustiveDimLimit)
        throw unsupported_computation(
            "min_distances: null-space dimension " + std::to_string(dual_dim) + " exceeds the exhaustive threshold " +
            std::to_string(kExhaustiveDimLimit) + "; supply a designed or user-provided d0");
    const std::size_t d0 = detail::min_nonzero_weight(null_space_basis(g0));

    std::size_t d1 = 0;
    if (h.rows() > 0) {
        const std::size_t code_dim = g1.rows() + g0.rows();
        if (code_dim > kExhaustiveDimLimit)
            throw unsupported_computation("min_distances: code dimension " + std::to_string(code_dim) +
                                          " exceeds the exhaustive threshold " +
                                          std::to_string(kExhaustiveDimLimit));
        BitMatrix stacked(0, n);
        for (std::size_t i = 0; i < g1.rows(); ++i) stacked.append_row(g1.row(i));
        for (std::size_t i = 0; i < g0.rows(); ++i) stacked.append_row(g0.row(i));
        d1 = detail::min_nonzero_weight(stacked);
    }
    return {d1, d0};
}

namespace detail {

inline PlbcCode assemble_plbc(const BitMatrix& g1, const BitMatrix& g0,
                              std::optional<std::pair<std::size_t, D0Provenance>> d0_override,
                              std::optional<std::size_t> d1_override) {
    if (g1.cols() != g0.cols()) throw std::invalid_argument("plbc: generator column counts differ");
    const std::size_t n = g1.cols();
    const std::size_t k = g1.rows(), l = g0.rows();
    if (k < 1 || l < 1) throw std::invalid_argument("plbc: need k >= 1 and l >= 1");
    if (k + l > n) throw invalid_code_error("plbc: k + l exceeds n");

    BitMatrix stacked(0, n);
    for (std::size_t i = 0; i < k; ++i) stacked.append_row(g1.row(i));
    for (std::size_t i = 0; i < l; ++i) stacked.append_row(g0.row(i));

    Gf2Solver solver(stacked);
    if (solver.rank() != k + l)
        throw invalid_code_error("plbc: rank of stacked generators is " + std::to_string(solver.rank()) +
                                 " < k + l = " + std::to_string(k + l) + " (subspaces intersect)");

    PlbcCode code;
    code.n = n;
    code.k = k;
    code.l = l;
    code.r = n - k - l;
    code.g1 = g1;
    code.g0 = g0;
    code.h = null_space_basis(stacked);
    code.g0_cols = g0.transposed();

    // One unit target per message coordinate; free variables zero keeps the
    // inverse canonical.
    code.g1_inv = BitMatrix(0, n);
    for (std::size_t i = 0; i < k; ++i) {
        BitVector target(k + l);
        target.set(i, true);
        auto x = solver.solve(target);
        if (!x) throw std::logic_error("plbc: inverse solve failed on a full-rank system");
        code.g1_inv.append_row(std::move(*x));
    }

    if (d0_override) {
        code.d0 = d0_override->first;
        code.d0_provenance = d0_override->second;
        if (code.r == 0) {
            code.d1 = 0;
        } else if (d1_override) {
            code.d1 = *d1_override;
        } else {
            code.d1 = min_distances(g1, g0, code.h).first;
        }
    } else {
        auto [d1, d0] = min_distances(g1, g0, code.h);
        code.d0 = d0;
        code.d1 = d1;
        code.d0_provenance = D0Provenance::exhaustive;
    }
    if (code.d0 < 1) throw invalid_code_error("plbc: d0 must be positive");
    code.t0 = (code.d0 - 1) / 2;

    // Structural identities promised to every consumer.
    if (code.r > 0) {
        if (!BitMatrix::mul_transposed(code.g1, code.h).is_zero() ||
            !BitMatrix::mul_transposed(code.g0, code.h).is_zero())
            throw std::logic_error("plbc: parity-check construction violated orthogonality");
    }
    if (!(BitMatrix::mul_transposed(code.g1, code.g1_inv) == BitMatrix::identity(k)))
        throw std::logic_error("plbc: message inverse does not invert g1");
    if (!BitMatrix::mul_transposed(code.g0, code.g1_inv).is_zero())
        throw std::logic_error("plbc: message inverse is not orthogonal to g0");

    return code;
}

}  // namespace detail

/// Builds an [n, k, l] PLBC from its two generator matrices. The minimum
/// distance d0 is computed exhaustively when the null-space dimension of g0
/// is within range; otherwise a caller-supplied value (flagged as
/// user-supplied, unverified) is required.
inline PlbcCode plbc_from_generators(const BitMatrix& g1, const BitMatrix& g0,
                                     std::optional<std::size_t> user_d0 = std::nullopt) {
    if (user_d0) {
        if (*user_d0 < 1) throw std::invalid_argument("plbc_from_generators: d0 must be positive");
        return detail::assemble_plbc(g1, g0, std::make_pair(*user_d0, D0Provenance::user_supplied), std::nullopt);
    }
    return detail::assemble_plbc(g1, g0, std::nullopt, std::nullopt);
}

/// Partitioned BCH/cyclic code parameters: nested generator polynomials
/// g1 | g0 | x^n + 1 over a GF(2^m) field with n = 2^m - 1.
struct PbchSpec {
    std::size_t n;
    FieldGF2m field;
    BinaryPolynomial g1;
    BinaryPolynomial g0;

    std::size_t r() const { return static_cast<std::size_t>(g1.degree()); }
    std::size_t k() const { return static_cast<std::size_t>(g0.degree() - g1.degree()); }
    std::size_t l() const { return n - static_cast<std::size_t>(g0.degree()); }

    void validate() const {
        if (n != (std::size_t(1) << field.m()) - 1)
            throw invalid_spec_error("pbch: n must equal 2^m - 1");
        if (g1.is_zero() || g0.is_zero()) throw invalid_spec_error("pbch: zero generator polynomial");
        if (!g1.divides(g0))
            throw invalid_spec_error("pbch: g1 = " + g1.to_hex() + " does not divide g0 = " + g0.to_hex());
        if (!g0.divides(BinaryPolynomial::xn_plus_one(n)))
            throw invalid_spec_error("pbch: g0 = " + g0.to_hex() + " does not divide x^n + 1");
        if (k() < 1) throw invalid_spec_error("pbch: message dimension k is zero");
        if (l() < 1) throw invalid_spec_error("pbch: masking dimension l is zero");
    }
};

/// Generator polynomial of the dual of the cyclic code generated by g:
/// the reciprocal of (x^n + 1) / g.
inline BinaryPolynomial cyclic_dual_generator(std::size_t n, const BinaryPolynomial& g) {
    auto [quot, rem] = BinaryPolynomial::divmod(BinaryPolynomial::xn_plus_one(n), g);
    if (!rem.is_zero()) throw std::invalid_argument("cyclic_dual_generator: g does not divide x^n + 1");
    return quot.reciprocal();
}

/// Builds the PLBC realization of a partitioned cyclic/BCH code: rows of g1
/// are x^i * g1(x), rows of g0 are x^i * g0(x). When exhaustive enumeration
/// is out of range, d0 falls back to the BCH designed distance of the dual
/// cyclic code and d1 (for r > 0) to the designed distance of the g1 code.
inline PlbcCode pbch_build(const PbchSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n, k = spec.k(), l = spec.l();

    BitMatrix g1(0, n), g0(0, n);
    for (std::size_t i = 0; i < k; ++i) g1.append_row((BinaryPolynomial::monomial(i) * spec.g1).to_bitvector(n));
    for (std::size_t i = 0; i < l; ++i) g0.append_row((BinaryPolynomial::monomial(i) * spec.g0).to_bitvector(n));

    if (n - l <= kExhaustiveDimLimit && (spec.r() == 0 || k + l <= kExhaustiveDimLimit))
        return detail::assemble_plbc(g1, g0, std::nullopt, std::nullopt);

    std::optional<std::pair<std::size_t, D0Provenance>> d0_override;
    if (n - l <= kExhaustiveDimLimit) {
        d0_override = std::make_pair(detail::min_nonzero_weight(null_space_basis(g0)), D0Provenance::exhaustive);
    } else {
        const std::size_t designed = bch_designed_distance(spec.field, n, cyclic_dual_generator(n, spec.g0));
        d0_override = std::make_pair(designed, D0Provenance::designed_distance);
    }

    std::optional<std::size_t> d1_override;
    if (spec.r() > 0 && k + l > kExhaustiveDimLimit)
        d1_override = bch_designed_distance(spec.field, n, spec.g1);

    return detail::assemble_plbc(g1, g0, d0_override, d1_override);
}

/// The r = 0 family member whose masking distance is (at least) the designed
/// distance of a narrow-sense BCH code of length 2^m - 1: g1 = 1 and g0 the
/// reciprocal check polynomial of that BCH code.
inline PbchSpec pbch_with_designed_d0(unsigned m, unsigned designed_d0,
                                      std::optional<BinaryPolynomial> primitive = std::nullopt) {
    FieldGF2m field = primitive ? FieldGF2m(m, *primitive) : FieldGF2m::with_default_primitive(m);
    const std::size_t n = (std::size_t(1) << m) - 1;
    const BinaryPolynomial q = bch_generator(field, n, designed_d0);
    const BinaryPolynomial g0 = (BinaryPolynomial::xn_plus_one(n) / q).reciprocal();
    return PbchSpec{n, std::move(field), BinaryPolynomial::one(), g0};
}

/// Theorem-style capability predicate: can the code mask u defects and
/// correct t random errors? The t = 0 escape makes r = 0 codes u-defect
/// capable for every u < d0.
inline bool capability(const PlbcCode& code, std::size_t u, std::size_t t) {
    if (u < code.d0 && (t == 0 || 2 * t < code.d1)) return true;
    if (u >= code.d0 && 2 * (u + t + 1 - code.d0) < code.d1) return true;
    return false;
}

}  // namespace plbc
