#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/canonical.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/lists.hpp"
#include "surjcount/polyalgo.hpp"

namespace surjcount {

inline constexpr int kDefaultDecompBound = 8;

/// A concrete labelled subgraph of a host graph.
struct SubgraphRef {
    std::vector<int> vertices;  // host vertex ids, ascending
    Graph graph;                // relabelled to 0..|vertices|-1
};

/// All non-empty, connected subgraphs of H that are loop-hereditary with
/// respect to H, as labelled subgraphs. H must be connected and non-empty.
std::vector<SubgraphRef> enumerate_sub(const Graph& h, int bound = kDefaultDecompBound);

struct DecompositionEntry {
    Graph representative;
    CanonicalKey key;
    Bigint mu;      // isomorphism-class size inside Sub(H)
    Bigint lambda;  // inductively defined signed weight
};

/// Isomorphism-class representatives of Sub(H) together with their
/// multiplicities and weights. Entries ordered by (vertices desc, non-loop
/// edges desc, key); the entry isomorphic to H comes first with mu=lambda=1.
struct DecompositionTable {
    Graph target;
    std::vector<DecompositionEntry> entries;

    const DecompositionEntry* find(const CanonicalKey& key) const;
};

DecompositionTable build_table(const Graph& h, int bound = kDefaultDecompBound);

/// Weighted sum of hom counts over the table: the compaction count from a
/// non-empty, irreflexive, connected G.
Bigint comp_via_decomposition(const Graph& g, const DecompositionTable& table,
                              const PairSolver& hom_solver);

/// List-compaction count by the recursion
///   comp(G,S -> H) = hom(G,S -> H) - sum over proper non-empty
///   loop-hereditary subgraphs H' of comp(G,S|H' -> H'),
/// memoized across the subgraph lattice. Handles disconnected H and the
/// empty-graph corner cases.
Bigint comp_via_moebius(const Graph& g, const Graph& h, const ListAssignment& lists,
                        const HomSolver& hom_solver, int bound = kDefaultDecompBound);

/// Non-empty, pairwise non-isomorphic, connected graphs with integer weights.
struct WeightedGraphSet {
    std::vector<Graph> members;
    std::vector<Bigint> weights;

    void validate(int bound = kDefaultCanonBound) const;
};

/// 0 on the empty graph, otherwise sum of weight(J) * hom(G -> J).
Bigint z_value(const WeightedGraphSet& ws, const Graph& g, const PairSolver& hom_solver);

struct EdgeWeightReport {
    std::pair<int, int> edge;
    Bigint lambda;
};

/// For every non-loop edge whose deletion keeps H connected, the table weight
/// of the edge-deleted graph. Errors when no edge qualifies.
std::vector<EdgeWeightReport> edge_deleted_weight_check(const Graph& h,
                                                        int bound = kDefaultDecompBound);

}  // namespace surjcount
