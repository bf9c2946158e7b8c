#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "surjcount/graph.hpp"

namespace surjcount {

inline constexpr int kDefaultCanonBound = 10;

/// Opaque isomorphism-class identifier. Keys of two graphs are equal iff the
/// graphs are isomorphic, for every n up to the canonicalization bound.
struct CanonicalKey {
    std::uint32_t n = 0;
    std::uint64_t bits = 0;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const {
        std::uint64_t x = (std::uint64_t(k.n) << 56) ^ k.bits;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

/// Exhaustive canonical form by adjacency minimization over colour-refined
/// vertex classes. Throws PreconditionError when n exceeds `bound`.
CanonicalKey canonical_form(const Graph& g, int bound = kDefaultCanonBound);

/// A relabelling pi (vertex -> position) achieving the canonical key.
std::vector<int> canonical_labeling(const Graph& g, int bound = kDefaultCanonBound);

/// The graph relabelled into canonical positions.
Graph canonical_representative(const Graph& g, int bound = kDefaultCanonBound);

/// Canonical form of a rooted graph; equal keys iff there is an isomorphism
/// mapping root to root.
CanonicalKey rooted_canonical_form(const Graph& g, int root, int bound = kDefaultCanonBound);

bool isomorphic(const Graph& a, const Graph& b, int bound = kDefaultCanonBound);

/// Orbits of the automorphism group acting on V(g), found by enumerating all
/// edge- and loop-preserving vertex permutations. Blocks sorted by smallest
/// member.
VertexPartition automorphism_orbits(const Graph& g, int bound = kDefaultCanonBound);

/// All automorphisms as permutation vectors.
std::vector<std::vector<int>> automorphisms(const Graph& g, int bound = kDefaultCanonBound);

}  // namespace surjcount
