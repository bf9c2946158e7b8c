#pragma once

#include <cstdint>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/lists.hpp"

namespace surjcount {

/// Enumeration guard. Counts candidate partial assignments; an operation that
/// would explore more nodes than the budget fails with BudgetError instead of
/// running unbounded.
struct BruteOptions {
    std::uint64_t node_budget = 10'000'000'000ULL;
};

/// Number of list homomorphisms G -> H. Multiplies per-component counts;
/// within a component, backtracking in BFS order with edge pruning.
Bigint count_hom(const Graph& g, const Graph& h, const ListAssignment& lists,
                 const BruteOptions& opts = {});

/// List homomorphisms whose image is all of V(H).
Bigint count_sur(const Graph& g, const Graph& h, const ListAssignment& lists,
                 const BruteOptions& opts = {});

/// List homomorphisms using every vertex of H and every non-loop edge of H.
Bigint count_comp(const Graph& g, const Graph& h, const ListAssignment& lists,
                  const BruteOptions& opts = {});

struct RetractionInstance {
    Graph g;                   // irreflexive
    std::vector<int> anchors;  // distinct G-vertices inducing a copy of h
    Graph h;
};

/// Homomorphisms g -> h fixing each anchor u_i to vertex i of h.
Bigint count_ret(const RetractionInstance& inst, const BruteOptions& opts = {});

/// Homomorphisms sending v to w.
Bigint count_anchored_hom(const Graph& g, int v, const Graph& h, int w,
                          const BruteOptions& opts = {});

/// Injective homomorphisms sending v to w.
Bigint count_anchored_inj(const Graph& g, int v, const Graph& h, int w,
                          const BruteOptions& opts = {});

}  // namespace surjcount
