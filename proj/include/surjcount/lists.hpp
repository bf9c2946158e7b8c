#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surjcount/errors.hpp"
#include "surjcount/graph.hpp"

namespace surjcount {

/// Per-vertex-of-G allowed-target subsets of V(H), stored as bitmasks.
/// Targets are limited to 64 vertices, which covers every exact path here.
struct ListAssignment {
    std::vector<std::uint64_t> masks;  // one per G-vertex
    int target_count = 0;

    static std::uint64_t full_mask(int hN) {
        if (hN < 0 || hN > 64) throw PreconditionError("list targets limited to 64 vertices");
        return hN == 64 ? ~std::uint64_t(0) : ((std::uint64_t(1) << hN) - 1);
    }

    static ListAssignment full(int gN, int hN) {
        ListAssignment l;
        l.target_count = hN;
        l.masks.assign(gN, full_mask(hN));
        return l;
    }

    bool is_full() const {
        std::uint64_t fm = full_mask(target_count);
        for (auto m : masks)
            if (m != fm) return false;
        return true;
    }

    void validate(int gN, int hN) const {
        if (static_cast<int>(masks.size()) != gN)
            throw PreconditionError("list assignment does not cover every G-vertex");
        if (target_count != hN) throw PreconditionError("list assignment targets a different graph");
        std::uint64_t fm = full_mask(hN);
        for (auto m : masks)
            if ((m & ~fm) != 0) throw PreconditionError("list references out-of-range target");
    }

    /// Lists restricted to the targets in `targets` (sorted ascending),
    /// relabelled to 0..|targets|-1.
    ListAssignment restrict_targets(const std::vector<int>& targets) const {
        ListAssignment out;
        out.target_count = static_cast<int>(targets.size());
        out.masks.reserve(masks.size());
        for (auto m : masks) {
            std::uint64_t r = 0;
            for (size_t i = 0; i < targets.size(); ++i)
                if (m & (std::uint64_t(1) << targets[i])) r |= std::uint64_t(1) << i;
            out.masks.push_back(r);
        }
        return out;
    }

    /// Lists for the G-vertices in `vertices`, in that order.
    ListAssignment select_vertices(const std::vector<int>& vertices) const {
        ListAssignment out;
        out.target_count = target_count;
        for (int v : vertices) out.masks.push_back(masks.at(v));
        return out;
    }

    ListAssignment pin(int v, int target) const {
        ListAssignment out = *this;
        out.masks.at(v) &= std::uint64_t(1) << target;
        return out;
    }
};

/// Parses `{"lists": {"<g-vertex>": [targets...]}}`; absent vertices get the
/// full list.
ListAssignment parse_lists_json(const std::string& text, int gN, int hN);

}  // namespace surjcount
