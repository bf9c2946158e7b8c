#include "surjcount/interpolation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "surjcount/brute.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/structure.hpp"

namespace surjcount {

std::string graph_digest(const Graph& g) {
    // FNV-1a over the serialized edge list; identification only, not crypto
    std::string text = to_edge_list_text(g);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        hash ^= c;
        hash *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

std::vector<Bigint> solve_exact_integer(const std::vector<std::vector<Bigint>>& a,
                                        const std::vector<Bigint>& b) {
    size_t n = a.size();
    if (b.size() != n) throw SolveError("solve: shape mismatch");
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw SolveError("solve: shape mismatch");
        for (size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
        m[i][n] = Rational(b[i]);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SolveError("solve: singular matrix");
        std::swap(m[pivot], m[col]);
        for (size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (size_t j = col; j <= n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    std::vector<Bigint> x(n);
    for (size_t i = 0; i < n; ++i) {
        Rational value = m[i][n] / m[i][i];
        if (boost::multiprecision::denominator(value) != 1)
            throw SolveError("solve: non-integral solution (inconsistent oracle)");
        x[i] = boost::multiprecision::numerator(value);
    }
    return x;
}

namespace {

Bigint oracle_call(const CountOracle& oracle, const Graph& g, OracleTrace* trace) {
    Bigint value = oracle(g);
    if (trace)
        trace->calls.push_back(
            {graph_digest(g), g.n, static_cast<int>(g.edges.size()), value});
    return value;
}

void record_system(OracleTrace* trace, const std::vector<std::vector<Bigint>>& a,
                   const std::vector<Bigint>& b, const std::vector<Bigint>& x) {
    if (!trace) return;
    trace->matrix = a;
    trace->rhs = b;
    trace->solution = x;
}

// Homomorphisms from t isolated vertices into a q-vertex target whose image
// contains i fixed vertices: sum_j (-1)^j C(i,j) (q-j)^t.
Bigint maps_covering_fixed_vertices(int t, int i, int q) {
    Bigint total = 0;
    for (int j = 0; j <= i; ++j) {
        Bigint term = binomial(i, j) * bigint_pow(q - j, t);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

struct Size1Split {
    Graph stripped;        // H without its size-1 components
    int q = 0;             // number of removed components
    int looped_removed = 0;
};

Size1Split split_size1(const Graph& h) {
    Size1Split s;
    std::vector<int> keep;
    for (const auto& comp : connected_components(h)) {
        if (comp.graph.n == 1) {
            ++s.q;
            if (comp.graph.has_loop(0)) ++s.looped_removed;
        } else {
            keep.insert(keep.end(), comp.original_vertex.begin(), comp.original_vertex.end());
        }
    }
    std::sort(keep.begin(), keep.end());
    s.stripped = induced_subgraph(h, keep);
    return s;
}

// The x-vector of the size-1 stripping system; x[i] counts homomorphisms
// from G to H that use every non-loop edge of the stripped target and hit
// exactly q-i of the removed vertices.
std::vector<Bigint> strip_size1_solve(const Graph& g, const Graph& h, int q,
                                      const CountOracle& comp_h, OracleTrace* trace) {
    std::vector<Bigint> b(q + 1);
    for (int t = 0; t <= q; ++t)
        b[t] = oracle_call(comp_h, add_isolated_vertices(g, t), trace);
    std::vector<std::vector<Bigint>> a(q + 1, std::vector<Bigint>(q + 1));
    for (int t = 0; t <= q; ++t)
        for (int i = 0; i <= q; ++i)
            a[t][i] = t < i ? Bigint(0) : maps_covering_fixed_vertices(t, i, h.n);
    for (int t = 0; t <= q; ++t) {
        if (a[t][t] != factorial(t)) throw SolveError("size-1 system: diagonal is not t!");
    }
    std::vector<Bigint> x = solve_exact_integer(a, b);
    record_system(trace, a, b, x);
    return x;
}

}  // namespace

Bigint strip_size1_interpolation(const Graph& g, const Graph& h, const CountOracle& comp_h,
                                 OracleTrace* trace) {
    if (!g.is_irreflexive()) throw PreconditionError("strip_size1_interpolation: G must be irreflexive");
    Size1Split split = split_size1(h);
    if (split.q == 0) return oracle_call(comp_h, g, trace);
    return strip_size1_solve(g, h, split.q, comp_h, trace).back();
}

Bigint recover_hom_via_comp(const Graph& g, const Graph& h, const CountOracle& comp_h,
                            OracleTrace* trace) {
    if (!g.is_irreflexive()) throw PreconditionError("recover_hom_via_comp: G must be irreflexive");
    Size1Split split = split_size1(h);
    const Graph& stripped = split.stripped;

    if (split.q > 0 && stripped.empty()) {
        // every component of H is a single vertex: the stripping system
        // already partitions hom(G -> H) by how many of them are hit
        std::vector<Bigint> x = strip_size1_solve(g, h, split.q, comp_h, trace);
        Bigint total = 0;
        for (const Bigint& xi : x) total += xi;
        return total;
    }

    const int r = stripped.non_loop_edge_count();
    auto comp_stripped = [&](const Graph& padded) {
        if (split.q == 0) return oracle_call(comp_h, padded, trace);
        return strip_size1_solve(padded, h, split.q, comp_h, trace).back();
    };

    auto hom_to_stripped = [&](const Graph& input) {
        std::vector<Bigint> b(r + 1);
        for (int t = 0; t <= r; ++t) b[t] = comp_stripped(add_disjoint_edges(input, t));
        // a[t][k]: maps from t disjoint edges into H' covering k fixed
        // non-loop edges; a single padding edge can realize a non-loop edge
        // (two ways) or a loop
        std::vector<std::vector<Bigint>> a(r + 1, std::vector<Bigint>(r + 1));
        Bigint edge_maps = 0;  // homomorphisms from one edge into H'
        for (const auto& [u, v] : stripped.edges) edge_maps += (u == v) ? 1 : 2;
        for (int t = 0; t <= r; ++t)
            for (int k = 0; k <= r; ++k) a[t][k] = edge_cover_maps(t, k, edge_maps);
        for (int t = 0; t <= r; ++t)
            if (a[t][t] != bigint_pow(2, t) * factorial(t))
                throw SolveError("edge-padding system: diagonal is not 2^t t!");
        std::vector<Bigint> x = solve_exact_integer(a, b);
        record_system(trace, a, b, x);
        Bigint total = 0;
        for (const Bigint& xi : x) total += xi;
        return total;
    };

    if (split.q == 0) return hom_to_stripped(g);

    // disconnected target with both kept components and size-1 components:
    // recover per G-component against the stripped target, then account for
    // the size-1 components directly (a connected piece maps onto a single
    // vertex exactly when it is loose enough to collapse)
    Bigint total = 1;
    for (const auto& comp : connected_components(g)) {
        Bigint homGi = hom_to_stripped(comp.graph);
        int collapse_targets = split.looped_removed;
        if (comp.graph.edges.empty()) collapse_targets = split.q;
        total *= homGi + collapse_targets;
        if (total == 0) break;
    }
    return total;
}

Bigint recover_hom_via_sur(const Graph& g, const Graph& h, const CountOracle& sur_h,
                           OracleTrace* trace) {
    if (!g.is_irreflexive()) throw PreconditionError("recover_hom_via_sur: G must be irreflexive");
    const int q = h.n;
    std::vector<Bigint> b(q + 1);
    for (int t = 0; t <= q; ++t) b[t] = oracle_call(sur_h, add_isolated_vertices(g, t), trace);
    std::vector<std::vector<Bigint>> a(q + 1, std::vector<Bigint>(q + 1));
    for (int t = 0; t <= q; ++t)
        for (int i = 0; i <= q; ++i)
            a[t][i] = t < i ? Bigint(0) : maps_covering_fixed_vertices(t, i, q);
    for (int t = 0; t <= q; ++t)
        if (a[t][t] != factorial(t)) throw SolveError("isolated-padding system: diagonal is not t!");
    std::vector<Bigint> x = solve_exact_integer(a, b);
    record_system(trace, a, b, x);
    Bigint total = 0;
    for (const Bigint& xi : x) total += xi;
    return total;
}

ComponentReplacementResult component_replacement_count(const Graph& g, const Graph& h,
                                                       const CountOracle& comp_h,
                                                       OracleTrace* trace) {
    if (!is_connected(g)) throw PreconditionError("component_replacement_count: G must be connected");
    auto comps = connected_components(h);
    struct CompInfo {
        StructureReport report;
        int index;
    };
    std::vector<CompInfo> infos;
    for (size_t i = 0; i < comps.size(); ++i) {
        StructureReport r = classify_structure(comps[i].graph);
        if (!r.is_reflexive_clique && !r.is_irreflexive_biclique)
            throw PreconditionError(
                "component_replacement_count: every component of H must be a reflexive clique or "
                "an irreflexive biclique");
        infos.push_back({r, static_cast<int>(i)});
    }
    int j_size = 0;
    for (const auto& info : infos)
        if (!info.report.is_irreflexive_star) j_size = std::max(j_size, comps[info.index].graph.n);
    if (j_size == 0)
        throw PreconditionError("component_replacement_count: no non-star component available");

    // reflexive components of size j first, else max-edge bicliques of size j
    std::vector<int> klass;
    for (const auto& info : infos)
        if (info.report.is_reflexive_clique && comps[info.index].graph.n == j_size)
            klass.push_back(info.index);
    if (klass.empty()) {
        int best_edges = -1;
        for (const auto& info : infos) {
            const Graph& c = comps[info.index].graph;
            if (info.report.is_irreflexive_star || c.n != j_size) continue;
            best_edges = std::max(best_edges, c.non_loop_edge_count());
        }
        for (const auto& info : infos) {
            const Graph& c = comps[info.index].graph;
            if (info.report.is_irreflexive_star || c.n != j_size) continue;
            if (c.non_loop_edge_count() == best_edges) klass.push_back(info.index);
        }
    }
    int k = static_cast<int>(klass.size());
    int j_index = klass.front();
    Graph j_graph = comps[j_index].graph;
    // the replacement identity needs the selected class to dominate: with a
    // disconnected target, reflexive components of size < 3 do not
    if (comps.size() > 1 && j_graph.is_reflexive() && j_size < 3)
        throw PreconditionError(
            "component_replacement_count: reflexive components of size < 3 in a disconnected "
            "target are outside the replacement identity");

    std::vector<int> rest;
    for (size_t i = 0; i < comps.size(); ++i)
        if (static_cast<int>(i) != j_index)
            rest.insert(rest.end(), comps[i].original_vertex.begin(),
                        comps[i].original_vertex.end());
    std::sort(rest.begin(), rest.end());
    Graph h_minus_j = induced_subgraph(h, rest);

    Graph g_prime = strip_loops(disjoint_union(h_minus_j, g));
    Bigint numerator = oracle_call(comp_h, g_prime, trace);
    Bigint constant = count_comp(strip_loops(h_minus_j), h_minus_j,
                                 ListAssignment::full(h_minus_j.n, h_minus_j.n));
    Bigint denom = Bigint(k) * constant;
    return {j_graph, exact_div(numerator, denom, "component_replacement_count")};
}

Graph glue_rooted_copies(const Graph& g, int v, const Graph& attach, int at, int t) {
    if (v < 0 || v >= g.n) throw PreconditionError("glue_rooted_copies: vertex out of range");
    if (at < 0 || at >= attach.n) throw PreconditionError("glue_rooted_copies: root out of range");
    Graph out = g;
    for (int copy = 0; copy < t; ++copy) {
        std::vector<int> map(attach.n);
        int next = out.n;
        for (int x = 0; x < attach.n; ++x) map[x] = (x == at) ? v : next++;
        out.n = next;
        for (const auto& [a, b] : attach.edges) {
            int u2 = map[a], v2 = map[b];
            if (u2 > v2) std::swap(u2, v2);
            out.edges.emplace_back(u2, v2);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
    return out;
}

Distinguisher distinguisher_search(const std::vector<RootedTarget>& targets,
                                   DistinguisherMode mode, int max_n) {
    if (targets.empty()) throw PreconditionError("distinguisher_search: no targets");
    for (const auto& t : targets) {
        if (t.graph.empty() || !is_connected(t.graph))
            throw PreconditionError("distinguisher_search: targets must be connected and non-empty");
        if (mode == DistinguisherMode::Reflexive && !t.graph.is_reflexive())
            throw PreconditionError("distinguisher_search: reflexive mode requires reflexive targets");
        if (mode == DistinguisherMode::Bipartite) {
            if (!t.graph.is_irreflexive() || !bipartition(t.graph, nullptr) ||
                t.graph.edges.empty())
                throw PreconditionError(
                    "distinguisher_search: bipartite mode requires irreflexive bipartite targets "
                    "with at least one edge");
        }
    }
    {
        std::vector<CanonicalKey> keys;
        for (const auto& t : targets) keys.push_back(rooted_canonical_form(t.graph, t.root));
        std::sort(keys.begin(), keys.end());
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw PreconditionError("distinguisher_search: targets must be pairwise non-isomorphic "
                                    "as rooted graphs");
    }

    GraphClassConstraint constraint = mode == DistinguisherMode::Bipartite
                                          ? GraphClassConstraint::BipartiteWithEdge
                                          : GraphClassConstraint::Any;
    Distinguisher result;
    bool found = false;
    enumerate_connected_graphs(max_n, constraint, [&](const RootedGraph& rg) {
        std::vector<Bigint> scores;
        scores.reserve(targets.size());
        for (const auto& t : targets)
            scores.push_back(count_anchored_hom(rg.graph, rg.root, t.graph, t.root));
        std::vector<Bigint> sorted = scores;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return true;
        result = {rg.graph, rg.root, std::move(scores)};
        found = true;
        return false;
    });
    if (!found)
        throw BudgetError("distinguisher_search: exhausted all candidates with max_n=" +
                          std::to_string(max_n) + " (bound failure, not nonexistence)");
    // re-verify against fresh anchored counts before handing it out
    for (size_t i = 0; i < targets.size(); ++i)
        if (count_anchored_hom(result.graph, result.root, targets[i].graph, targets[i].root) !=
            result.scores[i])
            throw SolveError("distinguisher_search: verification mismatch");
    return result;
}

Bigint recover_hom_via_z(const Graph& g, int v, const WeightedGraphSet& ws, const Graph& target,
                         const CountOracle& z_oracle, const Distinguisher& d, OracleTrace* trace) {
    ws.validate();
    if (g.empty() || !is_connected(g) || !g.is_irreflexive())
        throw PreconditionError("recover_hom_via_z: G must be connected, non-empty, irreflexive");
    if (v < 0 || v >= g.n) throw PreconditionError("recover_hom_via_z: vertex out of range");

    CanonicalKey target_key = canonical_form(target);
    int target_member = -1;
    std::vector<int> live;  // members with non-zero weight
    for (size_t i = 0; i < ws.members.size(); ++i) {
        if (ws.weights[i] == 0) continue;
        live.push_back(static_cast<int>(i));
        if (canonical_form(ws.members[i]) == target_key) target_member = static_cast<int>(i);
    }
    if (target_member == -1)
        throw PreconditionError("recover_hom_via_z: target must be a member with non-zero weight");

    // target = K1: a connected irreflexive G maps to it only when edgeless
    if (target.n == 1 && target.edges.empty()) return g.edges.empty() ? 1 : 0;

    bool all_reflexive = true, all_bipartite = true;
    for (int i : live) {
        if (!ws.members[i].is_reflexive()) all_reflexive = false;
        if (!ws.members[i].is_irreflexive() || !bipartition(ws.members[i], nullptr))
            all_bipartite = false;
    }
    if (!all_reflexive && !all_bipartite)
        throw PreconditionError(
            "recover_hom_via_z: members must be all reflexive or all irreflexive bipartite");

    // In the bipartite case a weighted K1 member contributes a directly
    // computable amount, so it is peeled off before interpolating.
    Bigint k1_weight = 0;
    std::vector<int> cols_members;
    for (int i : live) {
        if (!all_reflexive && ws.members[i].n == 1 && ws.members[i].edges.empty()) {
            k1_weight = ws.weights[i];
            continue;
        }
        cols_members.push_back(i);
    }
    auto adjusted_oracle = [&](const Graph& padded) {
        Bigint z = oracle_call(z_oracle, padded, trace);
        if (k1_weight != 0 && padded.edges.empty()) z -= k1_weight;  // hom(padded -> K1) = 1
        return z;
    };

    struct Column {
        int member;
        int w;
        Bigint orbit_size;
        Bigint lambda_w;
        Bigint score;  // N_w(J)
    };
    std::vector<Column> cols;
    for (int i : cols_members) {
        for (const auto& orbit : automorphism_orbits(ws.members[i])) {
            Column c;
            c.member = i;
            c.w = orbit.front();
            c.orbit_size = static_cast<int>(orbit.size());
            c.lambda_w = c.orbit_size * ws.weights[i];
            c.score = count_anchored_hom(d.graph, d.root, ws.members[i], c.w);
            cols.push_back(std::move(c));
        }
    }
    {
        std::vector<Bigint> scores;
        for (const auto& c : cols) scores.push_back(c.score);
        std::sort(scores.begin(), scores.end());
        if (std::adjacent_find(scores.begin(), scores.end()) != scores.end())
            throw SolveError("recover_hom_via_z: distinguisher does not separate the orbit "
                             "representatives");
    }

    const int r = static_cast<int>(cols.size()) - 1;
    std::vector<Bigint> b(r + 1);
    for (int t = 0; t <= r; ++t)
        b[t] = adjusted_oracle(glue_rooted_copies(g, v, d.graph, d.root, t));
    std::vector<std::vector<Bigint>> a(r + 1, std::vector<Bigint>(r + 1));
    for (int t = 0; t <= r; ++t)
        for (int c = 0; c <= r; ++c) a[t][c] = cols[c].lambda_w * bigint_pow(cols[c].score, t);
    std::vector<Bigint> x = solve_exact_integer(a, b);
    record_system(trace, a, b, x);

    Bigint total = 0;
    for (size_t c = 0; c < cols.size(); ++c)
        if (cols[c].member == target_member) total += cols[c].orbit_size * x[c];
    return total;
}

Bigint recover_hom_via_z_auto(const Graph& g, int v, const WeightedGraphSet& ws,
                              const Graph& target, const CountOracle& z_oracle, int max_n,
                              OracleTrace* trace) {
    ws.validate();
    bool all_reflexive = true;
    for (size_t i = 0; i < ws.members.size(); ++i)
        if (ws.weights[i] != 0 && !ws.members[i].is_reflexive()) all_reflexive = false;
    std::vector<RootedTarget> rooted;
    for (size_t i = 0; i < ws.members.size(); ++i) {
        if (ws.weights[i] == 0) continue;
        const Graph& m = ws.members[i];
        if (!all_reflexive && m.n == 1 && m.edges.empty()) continue;  // peeled K1
        for (const auto& orbit : automorphism_orbits(m))
            rooted.push_back({m, orbit.front()});
    }
    Distinguisher d = distinguisher_search(
        rooted, all_reflexive ? DistinguisherMode::Reflexive : DistinguisherMode::Bipartite, max_n);
    return recover_hom_via_z(g, v, ws, target, z_oracle, d, trace);
}

}  // namespace surjcount
