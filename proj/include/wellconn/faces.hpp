#pragma once

// Partial strings ("faces"): k chosen axes with one value per chosen axis.
// A face at level k corresponds to a (k-1)-dimensional simplex; level 0 is
// the empty face. Faces at one level carry a dense canonical indexing:
// axis subsets in colexicographic order, values in mixed-radix order with
// the last listed axis varying fastest.

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wellconn/strings.hpp"

namespace wellconn {

struct Face {
    std::vector<std::size_t> axes;      // strictly increasing
    std::vector<std::uint32_t> values;  // one per listed axis

    std::size_t level() const { return axes.size(); }

    friend bool operator==(const Face&, const Face&) = default;
};

// dim V_k = |S_k|: the elementary symmetric polynomial e_k(d_1,...,d_n).
inline std::uint64_t s_k_size(const Arities& a, std::size_t k) {
    const std::size_t n = a.size();
    if (k > n)
        throw std::out_of_range("level " + std::to_string(k) + " out of range (n = " +
                                std::to_string(n) + ")");
    std::vector<std::uint64_t> e(k + 1, 0);
    e[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = std::min(k, i + 1); j >= 1; --j)
            e[j] += e[j - 1] * a.dim(i);
    return e[k];
}

namespace detail {

inline std::uint64_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Position of a strictly increasing subset in the colexicographic order of
// all k-subsets of {0..n-1}: sum of C(a_j, j+1).
inline std::uint64_t colex_rank(const std::vector<std::size_t>& axes) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < axes.size(); ++j) r += binom(axes[j], j + 1);
    return r;
}

inline std::vector<std::vector<std::size_t>> subsets_colex(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > n) return out;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        out.push_back(cur);
        std::size_t j = 0;
        while (j < k) {
            std::size_t limit = (j + 1 < k) ? cur[j + 1] : n;
            if (cur[j] + 1 < limit) break;
            ++j;
        }
        if (j == k) break;
        ++cur[j];
        for (std::size_t i = 0; i < j; ++i) cur[i] = i;
    }
    return out;
}

// Per-level table: the colex-ordered axis subsets plus the dense-index
// offset of each subset's value block.
struct LevelBlocks {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::uint64_t> offsets;  // size subsets.size()+1; back() == s_k_size
};

inline LevelBlocks build_level_blocks(const Arities& a, std::size_t k) {
    LevelBlocks b;
    b.subsets = subsets_colex(a.size(), k);
    b.offsets.resize(b.subsets.size() + 1);
    std::uint64_t off = 0;
    for (std::size_t i = 0; i < b.subsets.size(); ++i) {
        b.offsets[i] = off;
        std::uint64_t block = 1;
        for (auto axis : b.subsets[i]) block *= a.dim(axis);
        off += block;
    }
    b.offsets.back() = off;
    return b;
}

inline void validate_face(const Arities& a, const Face& f) {
    if (f.axes.size() != f.values.size())
        throw std::invalid_argument("face: axes/values length mismatch");
    if (f.level() > a.size())
        throw std::out_of_range("face level " + std::to_string(f.level()) + " out of range");
    for (std::size_t j = 0; j < f.axes.size(); ++j) {
        if (f.axes[j] >= a.size())
            throw std::out_of_range("face axis " + std::to_string(f.axes[j]) + " out of range");
        if (j > 0 && f.axes[j - 1] >= f.axes[j])
            throw std::invalid_argument("face axes must be strictly increasing");
        if (f.values[j] >= a.dim(f.axes[j]))
            throw std::invalid_argument("face value " + std::to_string(f.values[j]) +
                                        " out of range on axis " + std::to_string(f.axes[j]));
    }
}

inline std::uint64_t face_index_in(const LevelBlocks& b, const Arities& a, const Face& f) {
    std::uint64_t block = colex_rank(f.axes);
    std::uint64_t idx = 0;
    for (std::size_t j = 0; j < f.axes.size(); ++j) idx = idx * a.dim(f.axes[j]) + f.values[j];
    return b.offsets[block] + idx;
}

inline Face face_unindex_in(const LevelBlocks& b, const Arities& a, std::size_t k,
                            std::uint64_t idx) {
    std::size_t block = static_cast<std::size_t>(
        std::upper_bound(b.offsets.begin(), b.offsets.end(), idx) - b.offsets.begin() - 1);
    Face f;
    f.axes = b.subsets[block];
    f.values.resize(k);
    std::uint64_t rem = idx - b.offsets[block];
    for (std::size_t j = k; j-- > 0;) {
        f.values[j] = static_cast<std::uint32_t>(rem % a.dim(f.axes[j]));
        rem /= a.dim(f.axes[j]);
    }
    return f;
}

}  // namespace detail

// Dense index of a face among all faces of its level, per the canonical
// order above. Inverse of face_unindex.
inline std::uint64_t face_index(const Arities& a, const Face& f) {
    detail::validate_face(a, f);
    return detail::face_index_in(detail::build_level_blocks(a, f.level()), a, f);
}

inline Face face_unindex(const Arities& a, std::size_t k, std::uint64_t idx) {
    if (k > a.size())
        throw std::out_of_range("level " + std::to_string(k) + " out of range");
    detail::LevelBlocks b = detail::build_level_blocks(a, k);
    if (idx >= b.offsets.back())
        throw std::out_of_range("face index " + std::to_string(idx) + " out of range");
    return detail::face_unindex_in(b, a, k, idx);
}

// All faces at one level, position == face_index.
inline std::vector<Face> enumerate_faces(const Arities& a, std::size_t k) {
    if (k > a.size())
        throw std::out_of_range("level " + std::to_string(k) + " out of range");
    detail::LevelBlocks b = detail::build_level_blocks(a, k);
    std::vector<Face> out;
    out.reserve(static_cast<std::size_t>(b.offsets.back()));
    for (const auto& axes : b.subsets) {
        Face f;
        f.axes = axes;
        f.values.assign(k, 0);
        while (true) {
            out.push_back(f);
            // odometer, last axis fastest
            bool wrapped = true;
            for (std::size_t j = k; j-- > 0;) {
                if (++f.values[j] < a.dim(f.axes[j])) {
                    wrapped = false;
                    break;
                }
                f.values[j] = 0;
            }
            if (wrapped) break;
        }
    }
    return out;
}

// The level-n face of a full string.
inline Face face_of_string(const Arities& a, const StringT& x) {
    detail::validate_string(a, x);
    Face f;
    f.axes.resize(a.size());
    std::iota(f.axes.begin(), f.axes.end(), std::size_t{0});
    f.values = x;
    return f;
}

}  // namespace wellconn
