#pragma once

// The extremal family attaining the tight bound: all strings with at least
// one coordinate pinned to a chosen anchor value. Its top-boundary columns
// are independent and form a basis of the boundary image; adding any
// unanchored string closes a combinatorial cube whose boundary sum vanishes.

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "wellconn/boundary.hpp"
#include "wellconn/strings.hpp"

namespace wellconn {

struct ExtremalConfig {
    explicit ExtremalConfig(Arities arities_in)
        : arities(std::move(arities_in)), anchors(arities.size(), 0) {}

    ExtremalConfig(Arities arities_in, StringT anchors_in)
        : arities(std::move(arities_in)), anchors(std::move(anchors_in)) {
        detail::validate_string(arities, anchors);
    }

    Arities arities;
    StringT anchors;  // one anchor value per axis
};

// All strings with at least one anchored coordinate. Size is exactly the
// tight bound, and the set has no nonempty well-connected subset.
inline StringSet extremal_family(const ExtremalConfig& cfg) {
    const Arities& a = cfg.arities;
    std::vector<StringT> members;
    const std::uint64_t total = a.string_count();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        StringT x = string_unindex(a, idx);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (x[i] == cfg.anchors[i]) {
                members.push_back(std::move(x));
                break;
            }
    }
    StringSet out(a, std::move(members));
    if (out.size() != tight_bound(a))
        throw invariant_error("extremal family size does not match the tight bound");
    return out;
}

// For a fully unanchored string c, the 2^n strings taking either the anchor
// value or c's value on each axis. Contains c; the rest lie in the extremal
// family.
inline StringSet cube_family(const ExtremalConfig& cfg, const StringT& c) {
    const Arities& a = cfg.arities;
    detail::validate_string(a, c);
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        if (c[i] == cfg.anchors[i])
            throw std::invalid_argument(
                "cube family needs a string with no anchored coordinate, but coordinate " +
                std::to_string(i) + " equals its anchor");

    std::vector<StringT> members;
    members.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        StringT x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = (mask >> i) & 1 ? c[i] : cfg.anchors[i];
        members.push_back(std::move(x));
    }
    StringSet out(a, std::move(members));
    if (out.size() != (std::uint64_t{1} << n))
        throw invariant_error("cube family is not a full cube");
    return out;
}

// The boundary sum over a cube family vanishes: every facet below it is
// covered an even number of times.
inline bool verify_cube_relation(const ExtremalConfig& cfg, const StringT& c) {
    return apply_boundary(cfg.arities, indicator_chain(cube_family(cfg, c))).coeffs.none();
}

// The extremal family's boundary columns are independent and span the full
// boundary image: rank equals both the family size and the top rank.
inline bool verify_extremal_basis(const ExtremalConfig& cfg) {
    StringSet t0 = extremal_family(cfg);
    std::vector<BitVector> cols = top_boundary_columns(t0);
    BitMatrix stacked(cols.size(), cols.empty() ? 0 : cols[0].size());
    for (std::size_t i = 0; i < cols.size(); ++i) stacked.row_mut(i) = cols[i];
    return rank(stacked) == t0.size() && t0.size() == rank_top_boundary(cfg.arities);
}

}  // namespace wellconn
