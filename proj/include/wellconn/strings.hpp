#pragma once

// Product string universes S = X_1 x ... x X_n and the combinatorial
// connectivity notions on subsets of S (i-neighbors, well-connectedness,
// pruning to the maximal well-connected core).
//
// Axis i carries values 0..d_i-1 with d_i >= 2. A "string" is one value per
// axis. Canonical order on strings is ascending string_index, which for the
// chosen mixed-radix indexing (last axis fastest) coincides with
// lexicographic order on the coordinate tuples.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "wellconn/errors.hpp"

namespace wellconn {

using StringT = std::vector<std::uint32_t>;

class Arities {
public:
    explicit Arities(std::vector<std::uint32_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty())
            throw std::invalid_argument("arities: need at least one axis");
        for (std::size_t i = 0; i < dims_.size(); ++i)
            if (dims_[i] < 2)
                throw std::invalid_argument("arities[" + std::to_string(i) +
                                            "] = " + std::to_string(dims_[i]) +
                                            ": every axis size must be at least 2");
    }

    std::size_t size() const { return dims_.size(); }
    std::uint32_t dim(std::size_t axis) const { return dims_.at(axis); }
    const std::vector<std::uint32_t>& dims() const { return dims_; }

    // |S| = d_1 * ... * d_n
    std::uint64_t string_count() const {
        std::uint64_t p = 1;
        for (auto d : dims_) p *= d;
        return p;
    }

    friend bool operator==(const Arities&, const Arities&) = default;

private:
    std::vector<std::uint32_t> dims_;
};

// Number of strings avoiding one fixed value on every axis: (d_1-1)*...*(d_n-1).
inline std::uint64_t unanchored_count(const Arities& a) {
    std::uint64_t p = 1;
    for (auto d : a.dims()) p *= d - 1;
    return p;
}

// The threshold of the main theorem: any strictly larger set of strings has a
// nonempty well-connected subset, and the bound is attained.
inline std::uint64_t tight_bound(const Arities& a) {
    return a.string_count() - unanchored_count(a);
}

namespace detail {

inline void validate_string(const Arities& a, const StringT& x) {
    if (x.size() != a.size())
        throw std::invalid_argument("string has " + std::to_string(x.size()) +
                                    " coordinates, expected " + std::to_string(a.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] >= a.dim(i))
            throw std::invalid_argument("coordinate " + std::to_string(i) + " = " +
                                        std::to_string(x[i]) + " out of range (axis size " +
                                        std::to_string(a.dim(i)) + ")");
}

}  // namespace detail

// Mixed-radix rank of a full string, last axis fastest.
inline std::uint64_t string_index(const Arities& a, const StringT& x) {
    detail::validate_string(a, x);
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < x.size(); ++i) idx = idx * a.dim(i) + x[i];
    return idx;
}

inline StringT string_unindex(const Arities& a, std::uint64_t idx) {
    if (idx >= a.string_count())
        throw std::out_of_range("string index " + std::to_string(idx) + " out of range");
    StringT x(a.size());
    for (std::size_t i = a.size(); i-- > 0;) {
        x[i] = static_cast<std::uint32_t>(idx % a.dim(i));
        idx /= a.dim(i);
    }
    return x;
}

// A deduplicated set of strings over one universe, kept in canonical order
// (ascending string_index). Immutable after construction.
class StringSet {
public:
    explicit StringSet(Arities arities, std::vector<StringT> members = {})
        : arities_(std::move(arities)), members_(std::move(members)) {
        for (const auto& x : members_) detail::validate_string(arities_, x);
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    const Arities& arities() const { return arities_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    // Canonical order: lexicographic on coordinates == ascending string_index.
    const std::vector<StringT>& members() const { return members_; }

    bool contains(const StringT& x) const {
        return std::binary_search(members_.begin(), members_.end(), x);
    }

    friend bool operator==(const StringSet&, const StringSet&) = default;

private:
    Arities arities_;
    std::vector<StringT> members_;
};

// All members of `set` that differ from x exactly in the given axis,
// ascending by coordinate value. x itself need not belong to the set.
inline std::vector<StringT> i_neighbors(const StringSet& set, const StringT& x,
                                        std::size_t axis) {
    const Arities& a = set.arities();
    detail::validate_string(a, x);
    if (axis >= a.size())
        throw std::out_of_range("axis " + std::to_string(axis) + " out of range");
    std::vector<StringT> out;
    StringT probe = x;
    for (std::uint32_t v = 0; v < a.dim(axis); ++v) {
        if (v == x[axis]) continue;
        probe[axis] = v;
        if (set.contains(probe)) out.push_back(probe);
    }
    return out;
}

namespace detail {

inline bool has_neighbor(const StringSet& set, const StringT& x, std::size_t axis) {
    StringT probe = x;
    for (std::uint32_t v = 0; v < set.arities().dim(axis); ++v) {
        if (v == x[axis]) continue;
        probe[axis] = v;
        if (set.contains(probe)) return true;
    }
    return false;
}

}  // namespace detail

// True iff the set is nonempty and every member has at least one i-neighbor
// inside the set for every axis i. The empty set is not well-connected.
inline bool is_well_connected(const StringSet& set) {
    if (set.empty()) return false;
    for (const auto& x : set.members())
        for (std::size_t axis = 0; axis < set.arities().size(); ++axis)
            if (!detail::has_neighbor(set, x, axis)) return false;
    return true;
}

// The unique maximal well-connected subset (possibly empty), i.e. the union
// of all well-connected subsets. Computed as the fixpoint of deleting any
// member that lacks an i-neighbor for some axis; deletion order does not
// matter, so a worklist suffices: when a member dies, only its surviving
// neighbors need rechecking.
inline StringSet prune_to_core(const StringSet& set) {
    const Arities& a = set.arities();
    const std::vector<StringT>& mem = set.members();
    const std::size_t m = mem.size();
    const std::size_t n = a.size();

    auto position = [&](const StringT& x) -> std::size_t {
        auto it = std::lower_bound(mem.begin(), mem.end(), x);
        if (it == mem.end() || *it != x) return m;  // not a member
        return static_cast<std::size_t>(it - mem.begin());
    };

    std::vector<char> alive(m, 1);
    std::vector<char> queued(m, 1);
    std::deque<std::size_t> work;
    for (std::size_t i = 0; i < m; ++i) work.push_back(i);

    auto deficient = [&](const StringT& x) {
        StringT probe = x;
        for (std::size_t axis = 0; axis < n; ++axis) {
            bool found = false;
            for (std::uint32_t v = 0; v < a.dim(axis) && !found; ++v) {
                if (v == x[axis]) continue;
                probe[axis] = v;
                std::size_t j = position(probe);
                if (j < m && alive[j]) found = true;
            }
            probe[axis] = x[axis];
            if (!found) return true;
        }
        return false;
    };

    while (!work.empty()) {
        std::size_t i = work.front();
        work.pop_front();
        queued[i] = 0;
        if (!alive[i] || !deficient(mem[i])) continue;
        alive[i] = 0;
        StringT probe = mem[i];
        for (std::size_t axis = 0; axis < n; ++axis) {
            for (std::uint32_t v = 0; v < a.dim(axis); ++v) {
                if (v == mem[i][axis]) continue;
                probe[axis] = v;
                std::size_t j = position(probe);
                if (j < m && alive[j] && !queued[j]) {
                    queued[j] = 1;
                    work.push_back(j);
                }
            }
            probe[axis] = mem[i][axis];
        }
    }

    std::vector<StringT> keep;
    for (std::size_t i = 0; i < m; ++i)
        if (alive[i]) keep.push_back(mem[i]);
    return StringSet(a, std::move(keep));
}

}  // namespace wellconn
