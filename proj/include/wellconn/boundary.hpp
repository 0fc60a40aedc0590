#pragma once

// Boundary operators of the simplicial complex of partial strings, as GF(2)
// bit matrices: construction, application to chains, and computational
// verification of the structural facts (dd = 0, exactness by dimension
// count, the kernel-dimension formula, and the rank of the top boundary).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "wellconn/faces.hpp"
#include "wellconn/gf2.hpp"
#include "wellconn/strings.hpp"

namespace wellconn {

// A GF(2) formal sum of faces at one level, indexed by face_index.
struct Chain {
    std::size_t level = 0;
    BitVector coeffs;
};

struct BoundaryMatrix {
    std::size_t level = 0;  // 1..n; rows are level-1 faces, columns level faces
    BitMatrix matrix;
};

namespace detail {

inline Face delete_entry(const Face& f, std::size_t j) {
    Face out;
    out.axes.reserve(f.level() - 1);
    out.values.reserve(f.level() - 1);
    for (std::size_t i = 0; i < f.level(); ++i) {
        if (i == j) continue;
        out.axes.push_back(f.axes[i]);
        out.values.push_back(f.values[i]);
    }
    return out;
}

}  // namespace detail

// The k facets of a level-k face, obtained by deleting one (axis, value)
// entry each, in ascending order of the deleted entry.
inline std::vector<Face> boundary_of_face(const Arities& a, const Face& f) {
    detail::validate_face(a, f);
    if (f.level() == 0)
        throw std::out_of_range("the empty face has no boundary");
    std::vector<Face> out;
    out.reserve(f.level());
    for (std::size_t j = 0; j < f.level(); ++j) out.push_back(detail::delete_entry(f, j));
    return out;
}

// The matrix of the boundary map at level k: entry (face_index(B),
// face_index(A)) is 1 iff B is a facet of A. Every column has exactly k ones.
inline BoundaryMatrix boundary_matrix(const Arities& a, std::size_t k) {
    if (k < 1 || k > a.size())
        throw std::out_of_range("boundary level " + std::to_string(k) + " out of range");
    detail::LevelBlocks below = detail::build_level_blocks(a, k - 1);
    std::vector<Face> faces = enumerate_faces(a, k);
    BitMatrix m(static_cast<std::size_t>(below.offsets.back()), faces.size());
    for (std::size_t col = 0; col < faces.size(); ++col)
        for (std::size_t j = 0; j < k; ++j) {
            Face facet = detail::delete_entry(faces[col], j);
            m.set(static_cast<std::size_t>(detail::face_index_in(below, a, facet)), col);
        }
    return BoundaryMatrix{k, std::move(m)};
}

// Columns of the top boundary map restricted to the given strings, in
// canonical member order. Avoids materializing the full matrix when only a
// few columns are needed.
inline std::vector<BitVector> top_boundary_columns(const StringSet& t) {
    const Arities& a = t.arities();
    const std::size_t n = a.size();
    detail::LevelBlocks below = detail::build_level_blocks(a, n - 1);
    const std::size_t len = static_cast<std::size_t>(below.offsets.back());
    std::vector<BitVector> cols;
    cols.reserve(t.size());
    for (const StringT& x : t.members()) {
        Face full = face_of_string(a, x);
        BitVector col(len);
        for (std::size_t j = 0; j < n; ++j)
            col.flip(static_cast<std::size_t>(
                detail::face_index_in(below, a, detail::delete_entry(full, j))));
        cols.push_back(std::move(col));
    }
    return cols;
}

// Level-n indicator chain of a string set.
inline Chain indicator_chain(const StringSet& t) {
    Chain c;
    c.level = t.arities().size();
    c.coeffs = BitVector(static_cast<std::size_t>(t.arities().string_count()));
    for (const StringT& x : t.members())
        c.coeffs.set(static_cast<std::size_t>(string_index(t.arities(), x)));
    return c;
}

// Apply the boundary map to a chain, face by face (no matrix is built).
inline Chain apply_boundary(const Arities& a, const Chain& chain) {
    if (chain.level < 1 || chain.level > a.size())
        throw std::out_of_range("chain level " + std::to_string(chain.level) +
                                " has no boundary");
    detail::LevelBlocks here = detail::build_level_blocks(a, chain.level);
    detail::LevelBlocks below = detail::build_level_blocks(a, chain.level - 1);
    if (chain.coeffs.size() != here.offsets.back())
        throw std::invalid_argument("chain has " + std::to_string(chain.coeffs.size()) +
                                    " coefficients, level needs " +
                                    std::to_string(here.offsets.back()));
    Chain out;
    out.level = chain.level - 1;
    out.coeffs = BitVector(static_cast<std::size_t>(below.offsets.back()));
    for (std::size_t idx : chain.coeffs.set_bits()) {
        Face f = detail::face_unindex_in(here, a, chain.level, idx);
        for (std::size_t j = 0; j < chain.level; ++j)
            out.coeffs.flip(static_cast<std::size_t>(
                detail::face_index_in(below, a, detail::delete_entry(f, j))));
    }
    return out;
}

// dim ker of the level-k boundary by the alternating-sum formula,
// evaluated as the recursion ker_0 = 1, ker_k = |S_k| - ker_{k-1}.
inline std::uint64_t ker_dim_formula(const Arities& a, std::size_t k) {
    if (k > a.size())
        throw std::out_of_range("level " + std::to_string(k) + " out of range");
    std::uint64_t ker = 1;  // the zero map on V_0 has full kernel
    for (std::size_t i = 1; i <= k; ++i) {
        std::uint64_t faces = s_k_size(a, i);
        if (faces < ker)
            throw invariant_error("alternating kernel-dimension sum went negative");
        ker = faces - ker;
    }
    return ker;
}

// Composite of consecutive boundary maps is the zero matrix.
inline bool verify_dd_zero(const Arities& a, std::size_t k) {
    if (k < 2 || k > a.size())
        throw std::out_of_range("dd-zero check needs 2 <= k <= n");
    return (boundary_matrix(a, k - 1).matrix * boundary_matrix(a, k).matrix).is_zero();
}

// rank of the level-k boundary equals the nullity of the one below, both by
// elimination (level 0 is the zero map, nullity 1). Together with dd = 0
// this certifies image = kernel by dimension.
inline bool verify_exactness(const Arities& a, std::size_t k) {
    if (k < 1 || k > a.size())
        throw std::out_of_range("exactness check needs 1 <= k <= n");
    std::size_t rank_k = rank(boundary_matrix(a, k).matrix);
    std::uint64_t nullity_below = 1;
    if (k >= 2) {
        BitMatrix below = boundary_matrix(a, k - 1).matrix;
        nullity_below = below.cols() - rank(below);
    }
    return rank_k == nullity_below;
}

// rank of the top boundary map by elimination; always equals tight_bound.
inline std::uint64_t rank_top_boundary(const Arities& a) {
    std::uint64_t r = rank(boundary_matrix(a, a.size()).matrix);
    if (r != tight_bound(a))
        throw invariant_error("top boundary rank " + std::to_string(r) +
                              " does not match the tight bound " +
                              std::to_string(tight_bound(a)));
    return r;
}

}  // namespace wellconn
