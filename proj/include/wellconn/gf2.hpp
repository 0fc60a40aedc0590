#pragma once

// Dense bit-packed exact linear algebra over GF(2): vectors, row-major
// matrices, rank, kernel basis, and incremental column-dependency detection.
// Everything is deterministic; elimination always picks the first usable
// pivot row.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wellconn/errors.hpp"

namespace wellconn {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t bits)
        : size_(bits), words_((bits + 63) / 64, 0) {}

    std::size_t size() const { return size_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(std::size_t i, bool value = true) {
        check_index(i);
        if (value)
            words_[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void flip(std::size_t i) {
        check_index(i);
        words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.size_ != size_)
            throw std::invalid_argument("bit vector length mismatch: " +
                                        std::to_string(size_) + " vs " +
                                        std::to_string(o.size_));
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
        return *this;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }
    bool any() const { return !none(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::optional<std::size_t> first_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }

    std::vector<std::size_t> set_bits() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t v = words_[w];
            while (v) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(v)));
                v &= v - 1;
            }
        }
        return out;
    }

    std::span<const std::uint64_t> words() const { return words_; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

private:
    void check_index(std::size_t i) const {
        if (i >= size_)
            throw std::out_of_range("bit index " + std::to_string(i) + " out of range (size " +
                                    std::to_string(size_) + ")");
    }

    // Bits past size_ stay zero, so word-wise equality and popcount are exact.
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_count_(rows), cols_count_(cols), rows_(rows, BitVector(cols)) {}

    std::size_t rows() const { return rows_count_; }
    std::size_t cols() const { return cols_count_; }

    bool get(std::size_t r, std::size_t c) const { return row(r).get(c); }
    void set(std::size_t r, std::size_t c, bool value = true) { row_mut(r).set(c, value); }

    const BitVector& row(std::size_t r) const {
        check_row(r);
        return rows_[r];
    }
    BitVector& row_mut(std::size_t r) {
        check_row(r);
        return rows_[r];
    }

    bool is_zero() const {
        for (const auto& r : rows_)
            if (r.any()) return false;
        return true;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols_count_, rows_count_);
        for (std::size_t r = 0; r < rows_count_; ++r)
            for (std::size_t c : rows_[r].set_bits()) t.rows_[c].set(r);
        return t;
    }

    // m * v over GF(2); v is indexed by columns.
    BitVector mul(const BitVector& v) const {
        if (v.size() != cols_count_)
            throw std::invalid_argument("matrix-vector size mismatch");
        BitVector out(rows_count_);
        for (std::size_t r = 0; r < rows_count_; ++r) {
            std::uint64_t acc = 0;
            auto rw = rows_[r].words();
            auto vw = v.words();
            for (std::size_t w = 0; w < rw.size(); ++w) acc ^= rw[w] & vw[w];
            if (std::popcount(acc) & 1) out.set(r);
        }
        return out;
    }

    BitMatrix operator*(const BitMatrix& o) const {
        if (cols_count_ != o.rows_count_)
            throw std::invalid_argument("matrix product size mismatch");
        BitMatrix out(rows_count_, o.cols_count_);
        for (std::size_t r = 0; r < rows_count_; ++r)
            for (std::size_t j : rows_[r].set_bits()) out.rows_[r] ^= o.rows_[j];
        return out;
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
    void check_row(std::size_t r) const {
        if (r >= rows_count_)
            throw std::out_of_range("row " + std::to_string(r) + " out of range");
    }

    std::size_t rows_count_ = 0;
    std::size_t cols_count_ = 0;
    std::vector<BitVector> rows_;
};

namespace detail {

// Reduce to reduced row echelon form in place; returns the pivot columns in
// ascending order. Pivot choice: first row with a 1 in the current column.
inline std::vector<std::size_t> rref_in_place(BitMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        if (p != r) std::swap(m.row_mut(p), m.row_mut(r));
        for (std::size_t q = 0; q < m.rows(); ++q)
            if (q != r && m.get(q, c)) m.row_mut(q) ^= m.row(r);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline std::size_t rank(BitMatrix m) {  // by value: reduction works on a copy
    return detail::rref_in_place(m).size();
}

// Basis of the right null space {v : m v = 0}, one vector per free column,
// free columns ascending. Size is cols - rank.
inline std::vector<BitVector> kernel_basis(BitMatrix m) {
    std::vector<std::size_t> pivots = detail::rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<BitVector> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        BitVector v(m.cols());
        v.set(f);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (m.get(r, f)) v.set(pivots[r]);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Incremental column elimination. Inserts the columns in order; at the first
// column that is linearly dependent on its predecessors, returns the support
// of the (then unique over the inserted prefix) vanishing combination:
// ascending column indices whose XOR is exactly zero. Returns nullopt when
// all columns are independent.
//
// Each stored column keeps a companion history vector recording it as a
// combination of original columns; the history of the vanishing reduction is
// the reported support.
inline std::optional<std::vector<std::size_t>> find_dependency(
    std::span<const BitVector> columns) {
    if (columns.empty()) return std::nullopt;
    const std::size_t len = columns[0].size();
    for (const auto& c : columns)
        if (c.size() != len)
            throw std::invalid_argument("columns differ in length: " + std::to_string(len) +
                                        " vs " + std::to_string(c.size()));

    struct Reduced {
        BitVector col;
        BitVector hist;
        std::size_t pivot;
    };
    std::vector<Reduced> stored;

    for (std::size_t t = 0; t < columns.size(); ++t) {
        BitVector col = columns[t];
        BitVector hist(columns.size());
        hist.set(t);
        // Stored entries are each reduced against all earlier pivots, so one
        // pass in insertion order clears every stored pivot from col.
        for (const Reduced& s : stored) {
            if (col.get(s.pivot)) {
                col ^= s.col;
                hist ^= s.hist;
            }
        }
        if (auto p = col.first_set()) {
            stored.push_back(Reduced{std::move(col), std::move(hist), *p});
        } else {
            return hist.set_bits();
        }
    }
    return std::nullopt;
}

}  // namespace wellconn
