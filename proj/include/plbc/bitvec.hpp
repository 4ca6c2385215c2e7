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

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace plbc {

/// Dense GF(2) vector, bit-packed into 64-bit words. Bit i of word i/64 is
/// coordinate i; bits beyond size() are kept zero.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(std::size_t n) : len_(n), words_((n + 63) / 64, 0) {}

    static BitVector from_string(std::string_view s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1')
                v.set(i, true);
            else if (s[i] != '0')
                throw std::invalid_argument("BitVector: expected '0'/'1', got '" + std::string(1, s[i]) + "'");
        }
        return v;
    }

    std::size_t size() const { return len_; }
    bool empty() const { return len_ == 0; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

    std::size_t weight() const {
        std::size_t w = 0;
        for (std::uint64_t x : words_) w += std::popcount(x);
        return w;
    }

    bool any() const {
        for (std::uint64_t x : words_)
            if (x) return true;
        return false;
    }

    BitVector& operator^=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    BitVector& operator&=(const BitVector& o) {
        check_same_size(o);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }

    /// GF(2) inner product: parity of the AND.
    bool dot(const BitVector& o) const {
        check_same_size(o);
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & o.words_[i];
        return std::popcount(acc) & 1u;
    }

    friend bool operator==(const BitVector& a, const BitVector& b) {
        return a.len_ == b.len_ && a.words_ == b.words_;
    }

    /// Orders vectors by their integer encoding (bit i worth 2^i); used by
    /// tie-break rules.
    static bool integer_less(const BitVector& a, const BitVector& b) {
        a.check_same_size(b);
        for (std::size_t i = a.words_.size(); i-- > 0;)
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        return false;
    }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

  private:
    void check_same_size(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector: length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major GF(2) matrix; every row has length cols().
class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
    explicit BitMatrix(std::vector<BitVector> rows) : rows_(std::move(rows)) {
        cols_ = rows_.empty() ? 0 : rows_[0].size();
        for (const auto& r : rows_)
            if (r.size() != cols_) throw std::invalid_argument("BitMatrix: ragged rows");
    }

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.rows_[i].set(i, true);
        return m;
    }

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }

    const BitVector& row(std::size_t i) const { return rows_[i]; }
    BitVector& row(std::size_t i) { return rows_[i]; }

    bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
    void set(std::size_t r, std::size_t c, bool v) { rows_[r].set(c, v); }

    void append_row(BitVector v) {
        if (rows_.empty() && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("BitMatrix: row length mismatch");
        rows_.push_back(std::move(v));
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (get(r, c)) t.set(c, r, true);
        return t;
    }

    /// Row combination sel * M (sel has one bit per row).
    BitVector combine_rows(const BitVector& sel) const {
        if (sel.size() != rows()) throw std::invalid_argument("BitMatrix: selector length mismatch");
        BitVector acc(cols_);
        for (std::size_t r = 0; r < rows(); ++r)
            if (sel.get(r)) acc ^= rows_[r];
        return acc;
    }

    /// A * B^T as a rows(A) x rows(B) matrix of inner products.
    static BitMatrix mul_transposed(const BitMatrix& a, const BitMatrix& b) {
        if (a.cols() != b.cols()) throw std::invalid_argument("BitMatrix: inner dimension mismatch");
        BitMatrix out(a.rows(), b.rows());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < b.rows(); ++j)
                if (a.row(i).dot(b.row(j))) out.set(i, j, true);
        return out;
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (r.any()) return false;
        return true;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.cols_ == b.cols_ && a.rows_ == b.rows_;
    }

  private:
    std::size_t cols_ = 0;
    std::vector<BitVector> rows_;
};

namespace detail {

/// Forward elimination in place; returns the rank. Rows end up in echelon
/// order with leftmost pivots first.
inline std::size_t eliminate(std::vector<BitVector>& rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace detail

/// GF(2) row rank.
inline std::size_t rank(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    return detail::eliminate(rows, m.cols());
}

/// Reduced row echelon form of A, with the transform rows recorded so the
/// same elimination can be replayed on any right-hand side. Supports solving
/// A x = b repeatedly without re-eliminating.
class Gf2Solver {
  public:
    explicit Gf2Solver(const BitMatrix& a) : rows_(a.rows()), cols_(a.cols()) {
        // Work on [A | I] and reduce the A part.
        std::vector<BitVector> work;
        work.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            BitVector row(cols_ + rows_);
            for (std::size_t c = 0; c < cols_; ++c)
                if (a.get(r, c)) row.set(c, true);
            row.set(cols_ + r, true);
            work.push_back(std::move(row));
        }
        rank_ = 0;
        pivot_col_.clear();
        for (std::size_t col = 0; col < cols_ && rank_ < rows_; ++col) {
            std::size_t pivot = rank_;
            while (pivot < rows_ && !work[pivot].get(col)) ++pivot;
            if (pivot == rows_) continue;
            std::swap(work[rank_], work[pivot]);
            for (std::size_t r = 0; r < rows_; ++r)
                if (r != rank_ && work[r].get(col)) work[r] ^= work[rank_];
            pivot_col_.push_back(col);
            ++rank_;
        }
        transform_.reserve(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            BitVector t(rows_);
            for (std::size_t c = 0; c < rows_; ++c)
                if (work[r].get(cols_ + c)) t.set(c, true);
            transform_.push_back(std::move(t));
        }
    }

    std::size_t rank() const { return rank_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    /// Canonical solution of A x = b with free variables zero, or absent when
    /// the system is inconsistent.
    std::optional<BitVector> solve(const BitVector& b) const {
        if (b.size() != rows_) throw std::invalid_argument("Gf2Solver: rhs length mismatch");
        BitVector x(cols_);
        for (std::size_t r = 0; r < rank_; ++r)
            if (transform_[r].dot(b)) x.set(pivot_col_[r], true);
        for (std::size_t r = rank_; r < rows_; ++r)
            if (transform_[r].dot(b)) return std::nullopt;
        return x;
    }

  private:
    std::size_t rows_;
    std::size_t cols_;
    std::size_t rank_ = 0;
    std::vector<std::size_t> pivot_col_;
    std::vector<BitVector> transform_;  // transform * A = rref(A)
};

/// Solves A x = b over GF(2). Returns the canonical solution (reduced row
/// echelon form, free variables zero) when consistent, absent otherwise.
inline std::optional<BitVector> solve_consistent(const BitMatrix& a, const BitVector& b) {
    if (a.rows() != b.size()) throw std::invalid_argument("solve_consistent: dimension mismatch");
    return Gf2Solver(a).solve(b);
}

/// Basis of the null space {x : M x^T = 0}, one vector per row. Dimension is
/// cols - rank; rows are canonical (one per free column of the rref).
inline BitMatrix null_space_basis(const BitMatrix& m) {
    std::vector<BitVector> rows;
    rows.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    const std::size_t cols = m.cols();

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot].get(col)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(col)) rows[r] ^= rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;

    BitMatrix basis(0, cols);
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        BitVector v(cols);
        v.set(free, true);
        for (std::size_t r = 0; r < rank; ++r)
            if (rows[r].get(free)) v.set(pivot_col[r], true);
        basis.append_row(std::move(v));
    }
    return basis;
}

/// Colex-order successor of a w-subset of {0..n-1}; subsets are visited in
/// increasing integer encoding. Returns false when exhausted.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t w = c.size();
    for (std::size_t t = 0; t < w; ++t) {
        const std::size_t limit = (t + 1 < w) ? c[t + 1] : n;
        if (c[t] + 1 < limit) {
            ++c[t];
            for (std::size_t i = 0; i < t; ++i) c[i] = i;
            return true;
        }
    }
    return false;
}

}  // namespace plbc
