#pragma once

#include <functional>
#include <vector>

#include "surjcount/canonical.hpp"
#include "surjcount/graph.hpp"

namespace surjcount {

enum class GraphClassConstraint { Any, BipartiteWithEdge };

struct RootedGraph {
    Graph graph;
    int root = 0;
};

/// Streams one representative per isomorphism class of rooted connected
/// irreflexive graphs with at most max_n vertices, in nondecreasing vertex
/// count, then canonical-key order, then root orbit. Under BipartiteWithEdge
/// only bipartite graphs with at least one edge are produced. The visitor
/// returns false to stop early.
void enumerate_connected_graphs(int max_n, GraphClassConstraint constraint,
                                const std::function<bool(const RootedGraph&)>& visit,
                                int bound = kDefaultCanonBound);

std::vector<RootedGraph> enumerate_connected_graphs(int max_n, GraphClassConstraint constraint,
                                                    int bound = kDefaultCanonBound);

/// Unrooted helper: representatives of all graphs on exactly n vertices, up
/// to isomorphism. Loops allowed when allow_loops is set; optionally only
/// connected ones. Sorted by canonical key.
std::vector<Graph> all_graphs_on(int n, bool allow_loops, bool require_connected);

/// Representatives for every vertex count in 1..max_n (plus the empty graph
/// when include_empty is set), nondecreasing n.
std::vector<Graph> all_graphs_up_to(int max_n, bool allow_loops, bool require_connected,
                                    bool include_empty = false);

}  // namespace surjcount
