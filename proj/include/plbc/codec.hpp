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

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "plbc/code.hpp"
#include "plbc/rng.hpp"

namespace plbc {

struct decode_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Per-cell defect state: stuck-at-0, stuck-at-1, or healthy. Realized as two
/// aligned masks with stuck_value a subset of is_defect.
struct DefectVector {
    BitVector is_defect;
    BitVector stuck_value;

    DefectVector() = default;
    explicit DefectVector(std::size_t n) : is_defect(n), stuck_value(n) {}
    DefectVector(BitVector defects, BitVector values)
        : is_defect(std::move(defects)), stuck_value(std::move(values)) {
        if (is_defect.size() != stuck_value.size())
            throw std::invalid_argument("DefectVector: mask length mismatch");
        if ((stuck_value & is_defect) != stuck_value)
            throw std::invalid_argument("DefectVector: stuck value set outside a defect position");
    }

    std::size_t size() const { return is_defect.size(); }
    std::size_t count() const { return is_defect.weight(); }

    void mark(std::size_t i, bool value) {
        is_defect.set(i, true);
        stuck_value.set(i, value);
    }

    /// Defect locations, ascending.
    std::vector<std::size_t> locations() const {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = 0; i < size(); ++i)
            if (is_defect.get(i)) out.push_back(i);
        return out;
    }

    /// Parses "index:value" pairs separated by whitespace, e.g. "2:1 5:0".
    /// An empty string means no defects.
    static DefectVector parse(const std::string& text, std::size_t n) {
        DefectVector s(n);
        std::istringstream is(text);
        std::string tok;
        while (is >> tok) {
            const auto colon = tok.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 2 != tok.size())
                throw std::invalid_argument("DefectVector: malformed token '" + tok + "' (want index:value)");
            std::size_t idx = 0;
            try {
                idx = std::stoull(tok.substr(0, colon));
            } catch (const std::exception&) {
                throw std::invalid_argument("DefectVector: bad index in '" + tok + "'");
            }
            const char v = tok[colon + 1];
            if (v != '0' && v != '1') throw std::invalid_argument("DefectVector: stuck value must be 0 or 1");
            if (idx >= n) throw std::invalid_argument("DefectVector: index " + std::to_string(idx) + " out of range");
            if (s.is_defect.get(idx)) throw std::invalid_argument("DefectVector: duplicate index " + std::to_string(idx));
            s.mark(idx, v == '1');
        }
        return s;
    }

    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!is_defect.get(i)) continue;
            if (!out.empty()) out += ' ';
            out += std::to_string(i) + ':' + (stuck_value.get(i) ? '1' : '0');
        }
        return out;
    }
};

/// Channel action: stuck positions take their stuck value, then the additive
/// error vector is applied.
inline BitVector apply_defects(const BitVector& x, const DefectVector& s, const BitVector& z) {
    if (x.size() != s.size() || x.size() != z.size())
        throw std::invalid_argument("apply_defects: length mismatch");
    BitVector y = x;
    y ^= (x ^ s.stuck_value) & s.is_defect;
    y ^= z;
    return y;
}

/// Number of defect positions the codeword fails to match.
inline std::size_t unmasked_count(const BitVector& c, const DefectVector& s) {
    if (c.size() != s.size()) throw std::invalid_argument("unmasked_count: length mismatch");
    return ((c ^ s.stuck_value) & s.is_defect).weight();
}

enum class EncodeStep { trivial, step1, step2, exhaustive };

inline const char* to_string(EncodeStep s) {
    switch (s) {
        case EncodeStep::trivial: return "trivial";
        case EncodeStep::step1: return "step1";
        case EncodeStep::step2: return "step2";
        case EncodeStep::exhaustive: return "exhaustive";
    }
    return "?";
}

struct EncodeResult {
    BitVector codeword;   // length n
    BitVector d;          // length l, the masking selector actually used
    std::size_t unmasked; // recomputed against the defect vector
    EncodeStep step;
};

enum class LocationPolicy { highest_first, uniform_random };

/// How the partial-masking encoders pick which defects to mask. The default
/// (highest index first) keeps unmasked defects at low degrees, where they do
/// not multiply through the cyclic decoding remainder.
struct LocationSelector {
    LocationPolicy policy = LocationPolicy::highest_first;
    RngStream* rng = nullptr;  // required for uniform_random
};

/// The m largest defect indices, in descending order.
inline std::vector<std::size_t> select_locations(const std::vector<std::size_t>& psi, std::size_t m) {
    if (m > psi.size()) throw std::invalid_argument("select_locations: m exceeds defect count");
    std::vector<std::size_t> sorted = psi;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    sorted.resize(m);
    return sorted;
}

namespace detail {

inline std::vector<std::size_t> pick_locations(const std::vector<std::size_t>& psi, std::size_t m,
                                               const LocationSelector& sel) {
    if (sel.policy == LocationPolicy::highest_first) return select_locations(psi, m);
    if (!sel.rng) throw std::invalid_argument("LocationSelector: uniform_random requires an RngStream");
    if (m > psi.size()) throw std::invalid_argument("pick_locations: m exceeds defect count");
    std::vector<std::size_t> pool = psi;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(sel.rng->below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(m);
    return pool;
}

/// Masking system restricted to the given locations: rows are the
/// corresponding columns of g0, right-hand side is c1 ^ stuck there.
inline std::pair<BitMatrix, BitVector> masking_system(const PlbcCode& code, const BitVector& c1,
                                                      const DefectVector& s,
                                                      const std::vector<std::size_t>& locations) {
    BitMatrix a(0, code.l);
    BitVector b(locations.size());
    for (std::size_t j = 0; j < locations.size(); ++j) {
        const std::size_t loc = locations[j];
        a.append_row(code.g0_cols.row(loc));
        b.set(j, c1.get(loc) ^ s.stuck_value.get(loc));
    }
    return {std::move(a), std::move(b)};
}

inline EncodeResult finish(const PlbcCode& code, const BitVector& c1, BitVector d, const DefectVector& s,
                           EncodeStep step) {
    BitVector codeword = c1 ^ code.g0.combine_rows(d);
    const std::size_t unmasked = unmasked_count(codeword, s);
    return EncodeResult{std::move(codeword), std::move(d), unmasked, step};
}

}  // namespace detail

/// Exhaustive reference encoder: tries every masking selector d and keeps the
/// one with the fewest unmasked defects (ties to the smallest integer
/// encoding of d). Bounded to l <= 20.
inline EncodeResult encode_optimal(const PlbcCode& code, const BitVector& w, const DefectVector& s) {
    if (w.size() != code.k) throw std::invalid_argument("encode_optimal: message length != k");
    if (s.size() != code.n) throw std::invalid_argument("encode_optimal: defect vector length != n");
    if (code.l > 20)
        throw unsupported_computation("encode_optimal: l = " + std::to_string(code.l) +
                                      " exceeds the exhaustive bound 20");
    const BitVector c1 = code.g1.combine_rows(w);
    BitVector best_d(code.l);
    BitVector best_c = c1;
    std::size_t best = unmasked_count(c1, s);
    for (std::uint64_t di = 1; di < (std::uint64_t(1) << code.l); ++di) {
        BitVector d(code.l);
        for (std::size_t i = 0; i < code.l; ++i)
            if ((di >> i) & 1u) d.set(i, true);
        const BitVector c = c1 ^ code.g0.combine_rows(d);
        const std::size_t um = unmasked_count(c, s);
        if (um < best) {
            best = um;
            best_d = std::move(d);
            best_c = c;
        }
    }
    return EncodeResult{std::move(best_c), std::move(best_d), best, EncodeStep::exhaustive};
}

/// One-step encoder: masks the m = min(d0 - 1, u) selected defects exactly;
/// anything beyond that many defects is left to luck.
inline EncodeResult encode_one_step(const PlbcCode& code, const BitVector& w, const DefectVector& s,
                                    const LocationSelector& sel = {}) {
    if (w.size() != code.k) throw std::invalid_argument("encode_one_step: message length != k");
    if (s.size() != code.n) throw std::invalid_argument("encode_one_step: defect vector length != n");
    const BitVector c1 = code.g1.combine_rows(w);
    const auto psi = s.locations();
    const std::size_t u = psi.size();
    const std::size_t m = std::min<std::size_t>(code.d0 - 1, u);
    const auto chosen = detail::pick_locations(psi, m, sel);
    auto [a, b] = detail::masking_system(code, c1, s, chosen);
    auto d = solve_consistent(a, b);
    if (!d)
        throw std::logic_error("encode_one_step: system with fewer than d0 columns was inconsistent; "
                               "the code's d0 metadata is wrong");
    return detail::finish(code, c1, std::move(*d), s, u < code.d0 ? EncodeStep::trivial : EncodeStep::step2);
}

/// Two-step encoder: first try to mask every defect by solving the full
/// system; only on inconsistency fall back to the one-step computation with
/// d0 - 1 locations.
inline EncodeResult encode_two_step(const PlbcCode& code, const BitVector& w, const DefectVector& s,
                                    const LocationSelector& sel = {}) {
    if (w.size() != code.k) throw std::invalid_argument("encode_two_step: message length != k");
    if (s.size() != code.n) throw std::invalid_argument("encode_two_step: defect vector length != n");
    const BitVector c1 = code.g1.combine_rows(w);
    const auto psi = s.locations();
    const std::size_t u = psi.size();
    auto [a, b] = detail::masking_system(code, c1, s, psi);
    if (auto d = solve_consistent(a, b))
        return detail::finish(code, c1, std::move(*d), s, u < code.d0 ? EncodeStep::trivial : EncodeStep::step1);
    return encode_one_step(code, w, s, sel);
}

/// Minimum-weight coset leaders indexed by syndrome, built once per code and
/// shared. Ties inside a weight class go to the smallest integer encoding.
inline std::shared_ptr<const std::vector<BitVector>> coset_leader_table(const PlbcCode& code) {
    if (code.r == 0 || code.r > 16)
        throw unsupported_computation("coset_leader_table: requires 1 <= r <= 16, have r = " +
                                      std::to_string(code.r));
    std::lock_guard<std::mutex> lock(code.coset_cache->mu);
    if (code.coset_cache->table) return code.coset_cache->table;

    const std::size_t n = code.n, r = code.r;
    std::vector<std::uint32_t> col_syndrome(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < r; ++j)
            if (code.h.get(j, i)) col_syndrome[i] |= 1u << j;

    const std::size_t total = std::size_t(1) << r;
    std::vector<BitVector> table(total);
    std::vector<bool> filled(total, false);
    table[0] = BitVector(n);
    filled[0] = true;
    std::size_t remaining = total - 1;

    std::uint64_t examined = 0;
    for (std::size_t w = 1; w <= n && remaining > 0; ++w) {
        std::vector<std::size_t> comb(w);
        for (std::size_t i = 0; i < w; ++i) comb[i] = i;
        do {
            if (++examined > (1ull << 26))
                throw unsupported_computation("coset_leader_table: leader search exceeded its budget");
            std::uint32_t syn = 0;
            for (std::size_t idx : comb) syn ^= col_syndrome[idx];
            if (!filled[syn]) {
                BitVector leader(n);
                for (std::size_t idx : comb) leader.set(idx, true);
                table[syn] = std::move(leader);
                filled[syn] = true;
                if (--remaining == 0) break;
            }
        } while (next_combination(comb, n));
    }
    if (remaining > 0) throw std::logic_error("coset_leader_table: parity-check matrix is rank deficient");

    code.coset_cache->table = std::make_shared<const std::vector<BitVector>>(std::move(table));
    return code.coset_cache->table;
}

namespace detail {

inline BitVector estimate_error(const PlbcCode& code, const BitVector& y) {
    if (code.r == 0) return BitVector(code.n);
    const auto table = coset_leader_table(code);
    std::uint32_t syn = 0;
    for (std::size_t j = 0; j < code.r; ++j)
        if (code.h.row(j).dot(y)) syn |= 1u << j;
    return (*table)[syn];
}

}  // namespace detail

/// Syndrome decoder: subtract the minimum-weight coset leader of the received
/// word's syndrome, then project the corrected word back to a message.
/// Returns (message estimate, error estimate).
inline std::pair<BitVector, BitVector> decode_plbc(const PlbcCode& code, const BitVector& y) {
    if (y.size() != code.n) throw std::invalid_argument("decode_plbc: received length != n");
    BitVector z_hat = detail::estimate_error(code, y);
    const BitVector c_hat = y ^ z_hat;
    BitVector w_hat(code.k);
    for (std::size_t i = 0; i < code.k; ++i)
        if (code.g1_inv.row(i).dot(c_hat)) w_hat.set(i, true);
    return {std::move(w_hat), std::move(z_hat)};
}

/// Cyclic-code decoder: corrects with the same coset-leader machinery, then
/// recovers the message as ((y - z) mod g0) / g1. An inexact division means
/// the corrected word was not a codeword.
inline BitVector decode_pcc(const PbchSpec& spec, const PlbcCode& code, const BitVector& y) {
    if (y.size() != code.n) throw std::invalid_argument("decode_pcc: received length != n");
    const BitVector z_hat = detail::estimate_error(code, y);
    const BinaryPolynomial c_hat = BinaryPolynomial::from_bitvector(y ^ z_hat);
    const BinaryPolynomial reduced = c_hat % spec.g0;
    auto [w_poly, rem] = BinaryPolynomial::divmod(reduced, spec.g1);
    if (!rem.is_zero())
        throw decode_failure("decode_pcc: corrected word is not a codeword (inexact division by g1)");
    return w_poly.to_bitvector(code.k);
}

}  // namespace plbc
