#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace surjcount {

/// Undirected graph with optional loops and no multi-edges. Vertices are
/// 0..n-1; edges are stored as (min,max) pairs, sorted and unique. The
/// empty graph (n == 0) is a valid value.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    bool has_edge(int u, int v) const;
    bool has_loop(int v) const { return has_edge(v, v); }
    int loop_count() const;
    int non_loop_edge_count() const;
    bool is_reflexive() const;    // vacuously true for the empty graph
    bool is_irreflexive() const { return loop_count() == 0; }
    bool empty() const { return n == 0; }

    // Non-loop neighbour lists; a loop does not put v into its own list.
    std::vector<std::vector<int>> adjacency() const;
};

bool operator==(const Graph& a, const Graph& b);

/// Normalizes, validates and sorts an edge list. Throws PreconditionError on
/// out-of-range endpoints or duplicate edges.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// Common construction helpers.
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph clique_graph(int k, bool reflexive);
Graph biclique_graph(int a, int b);
Graph star_graph(int leaves);
Graph single_vertex(bool loop);

/// Parses the edge-list text format (`# comment`, `n <count>`, `e <u> <v>`)
/// or, when the first non-space character is '{', the JSON format.
Graph parse_graph(const std::string& text);
std::string to_edge_list_text(const Graph& g);

Graph strip_loops(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_isolated_vertices(const Graph& g, int t);
Graph add_disjoint_edges(const Graph& g, int t);

/// Loop-preserving induced subgraph on `vertices` (sorted ascending assumed
/// not required; the output relabels in the given order).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

struct ComponentSplit {
    Graph graph;
    std::vector<int> original_vertex;  // component vertex i came from original_vertex[i]
};

/// Components ordered by smallest original vertex.
std::vector<ComponentSplit> connected_components(const Graph& g);

bool is_connected(const Graph& g);  // false for the empty graph

/// 2-colouring of the loop-stripped graph. Returns false if some component is
/// an odd cycle. side[v] is 0/1 with the smallest vertex of each component on
/// side 0.
bool bipartition(const Graph& g, std::vector<int>* side);

using VertexPartition = std::vector<std::vector<int>>;

/// Quotient graph: one vertex per block, an edge {Bi,Bj} (i == j giving a
/// loop) whenever some representative pair is adjacent in g.
Graph quotient_graph(const Graph& g, const VertexPartition& partition);

/// All partitions of {0..n-1}; intended for small n only.
std::vector<VertexPartition> all_partitions(int n);

/// True iff the anchor tuple induces a copy of h in g: for all a < b,
/// {u_a,u_b} in E(g) iff {v_a,v_b} in E(h). Loops of h are ignored.
bool induced_copy_check(const Graph& g, const std::vector<int>& anchors, const Graph& h);

}  // namespace surjcount
