#pragma once

#include <functional>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/lists.hpp"

namespace surjcount {

/// A list-homomorphism counting oracle: (G, H, lists) -> count.
using HomSolver = std::function<Bigint(const Graph&, const Graph&, const ListAssignment&)>;

/// A plain counting oracle with graphs only.
using PairSolver = std::function<Bigint(const Graph&, const Graph&)>;

/// Exact list-homomorphism count when every component of H is a reflexive
/// clique or an irreflexive biclique, in time polynomial in |G|.
Bigint count_hom_tractable(const Graph& g, const Graph& h, const ListAssignment& lists);

bool is_hom_tractable_target(const Graph& h);

/// Number of surjections from [t] onto [q].
Bigint surjections_count(std::int64_t t, std::int64_t q);

/// Number of maps from t disjoint edges into a target graph that cover k
/// fixed non-loop edges, where a single edge has `single_edge_maps`
/// homomorphic images (2 per non-loop edge plus 1 per loop). Inclusion-
/// exclusion: forbidding one required edge removes two ordered images.
Bigint edge_cover_maps(std::int64_t t, std::int64_t k, const Bigint& single_edge_maps);

/// Surjective count via inclusion-exclusion over used vertex sets:
/// sum over W of (-1)^{|V(H)|-|W|} hom(G -> H[W], lists restricted to W).
Bigint sur_via_inclusion_exclusion(const Graph& g, const Graph& h, const ListAssignment& lists,
                                   const HomSolver& hom_solver);

/// Surjective count by summing pinned/prefix-restricted list-homomorphism
/// instances over all configurations (first-use positions + assignment of
/// distinct targets). At most q! * C(n,q) oracle calls.
Bigint sur_via_configurations(const Graph& g, const Graph& h, const ListAssignment& lists,
                              const HomSolver& lhom_solver);

/// prod_i sum_j b_j^{a_i}: homomorphisms from disjoint irreflexive cliques of
/// sizes a to disjoint reflexive cliques of sizes b.
Bigint uniform_hom_to_cliques(const std::vector<int>& g_sizes, const std::vector<int>& h_sizes);

struct SubsetSumInstance {
    std::vector<int> a;  // positive integers
    int b = 0;           // positive target
};

/// S(A,b) recovered through a surjective-homomorphism count on materialized
/// clique graphs; the division by b!(N-b)! must be exact.
Bigint subset_sum_via_sur(const SubsetSumInstance& inst, const PairSolver& sur_solver);

/// Direct subset enumeration, the independent reference for the reduction.
Bigint subset_sum_direct(const SubsetSumInstance& inst);

}  // namespace surjcount
