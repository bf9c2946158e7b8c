#pragma once

#include <functional>
#include <string>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/decomposition.hpp"
#include "surjcount/graph.hpp"

namespace surjcount {

/// A counting oracle for a fixed-target problem: maps an input graph to a
/// count. Reductions call these and never look inside.
using CountOracle = std::function<Bigint(const Graph&)>;

/// Audit record of a reduction run: every oracle call plus the solved system.
struct OracleTrace {
    struct Call {
        std::string digest;
        int n = 0;
        int edges = 0;
        Bigint value;
    };
    std::vector<Call> calls;
    std::vector<std::vector<Bigint>> matrix;
    std::vector<Bigint> rhs;
    std::vector<Bigint> solution;
};

/// Exact integer solve of A x = b by rational elimination. Throws SolveError
/// on a singular matrix or a non-integral solution.
std::vector<Bigint> solve_exact_integer(const std::vector<std::vector<Bigint>>& a,
                                        const std::vector<Bigint>& b);

/// Recovers comp(G -> H') where H' is H minus its q size-1 components, using
/// q+1 oracle calls on G plus t isolated vertices and a triangular solve with
/// diagonal t!. Pass-through when q == 0.
Bigint strip_size1_interpolation(const Graph& g, const Graph& h, const CountOracle& comp_h,
                                 OracleTrace* trace = nullptr);

/// Recovers hom(G -> H) from a compaction oracle: pads G with t disjoint
/// edges (t = 0..r, r the non-loop edge count of the stripped target) and
/// solves the triangular system with diagonal 2^t t!, composing with the
/// size-1 stripping stage when H has size-1 components.
Bigint recover_hom_via_comp(const Graph& g, const Graph& h, const CountOracle& comp_h,
                            OracleTrace* trace = nullptr);

/// Recovers hom(G -> H) from a surjective-count oracle: pads G with t
/// isolated vertices (t = 0..q) and solves the triangular system with
/// diagonal t!.
Bigint recover_hom_via_sur(const Graph& g, const Graph& h, const CountOracle& sur_h,
                           OracleTrace* trace = nullptr);

struct ComponentReplacementResult {
    Graph j;
    Bigint comp;
};

/// Replaces a largest non-star component J of H by G, queries the compaction
/// oracle once on (H minus J + G) stripped of loops, and divides out the
/// class size and the constant factor comp((H\J)^0 -> H\J).
ComponentReplacementResult component_replacement_count(const Graph& g, const Graph& h,
                                                       const CountOracle& comp_h,
                                                       OracleTrace* trace = nullptr);

struct RootedTarget {
    Graph graph;
    int root = 0;
};

enum class DistinguisherMode { Reflexive, Bipartite };

/// A rooted connected irreflexive graph whose anchored hom counts to the given
/// rooted targets are pairwise distinct.
struct Distinguisher {
    Graph graph;
    int root = 0;
    std::vector<Bigint> scores;
};

/// First (in enumeration order) rooted graph with at most max_n vertices that
/// separates all targets. Reflexive mode searches all connected irreflexive
/// graphs; Bipartite mode only bipartite ones with at least one edge.
/// Exhaustion is a bound failure (BudgetError), never a nonexistence claim.
Distinguisher distinguisher_search(const std::vector<RootedTarget>& targets, DistinguisherMode mode,
                                   int max_n);

/// Glues t copies of (attach, at) onto vertex v of g, identifying `at` with v.
Graph glue_rooted_copies(const Graph& g, int v, const Graph& attach, int at, int t);

/// Vandermonde-structured recovery of hom(G -> target) from a weighted-sum
/// oracle, per-orbit: pads by gluing distinguisher copies, solves for the
/// anchored counts N_w(G), and recombines over the target's orbits.
Bigint recover_hom_via_z(const Graph& g, int v, const WeightedGraphSet& ws, const Graph& target,
                         const CountOracle& z_oracle, const Distinguisher& d,
                         OracleTrace* trace = nullptr);

/// Convenience composition: searches for a distinguisher (max_n cap) and runs
/// the recovery with it.
Bigint recover_hom_via_z_auto(const Graph& g, int v, const WeightedGraphSet& ws,
                              const Graph& target, const CountOracle& z_oracle, int max_n = 6,
                              OracleTrace* trace = nullptr);

std::string graph_digest(const Graph& g);

}  // namespace surjcount
