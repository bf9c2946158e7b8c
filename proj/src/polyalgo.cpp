#include "surjcount/polyalgo.hpp"

#include <algorithm>
#include <bit>

#include "surjcount/errors.hpp"
#include "surjcount/structure.hpp"

namespace surjcount {

bool is_hom_tractable_target(const Graph& h) {
    for (const auto& split : connected_components(h)) {
        StructureReport r = classify_structure(split.graph);
        if (!r.is_reflexive_clique && !r.is_irreflexive_biclique) return false;
    }
    return true;
}

Bigint count_hom_tractable(const Graph& g, const Graph& h, const ListAssignment& lists) {
    if (!g.is_irreflexive()) throw PreconditionError("input graph G must be irreflexive");
    lists.validate(g.n, h.n);

    struct TargetComponent {
        bool reflexive_clique = false;
        std::uint64_t all = 0;   // vertex mask in H
        std::uint64_t left = 0;  // biclique sides
        std::uint64_t right = 0;
    };
    std::vector<TargetComponent> targets;
    for (const auto& split : connected_components(h)) {
        StructureReport r = classify_structure(split.graph);
        TargetComponent tc;
        for (int v : split.original_vertex) tc.all |= std::uint64_t(1) << v;
        if (r.is_reflexive_clique) {
            tc.reflexive_clique = true;
        } else if (r.is_irreflexive_biclique) {
            const auto& [u, v] = *r.bipartition_sides;
            for (int x : u) tc.left |= std::uint64_t(1) << split.original_vertex[x];
            for (int x : v) tc.right |= std::uint64_t(1) << split.original_vertex[x];
        } else {
            throw PreconditionError(
                "target outside the tractable class (component is neither a reflexive clique "
                "nor an irreflexive biclique)");
        }
        targets.push_back(tc);
    }

    Bigint total = 1;
    for (const auto& split : connected_components(g)) {
        std::vector<int> side;
        bool bip = bipartition(split.graph, &side);
        Bigint comp_count = 0;
        for (const auto& tc : targets) {
            if (tc.reflexive_clique) {
                Bigint term = 1;
                for (int v : split.original_vertex)
                    term *= std::popcount(lists.masks[v] & tc.all);
                comp_count += term;
            } else {
                if (!bip) continue;  // odd cycle cannot map into a biclique
                Bigint a = 1, b = 1;
                for (int i = 0; i < split.graph.n; ++i) {
                    int v = split.original_vertex[i];
                    if (side[i] == 0) {
                        a *= std::popcount(lists.masks[v] & tc.left);
                        b *= std::popcount(lists.masks[v] & tc.right);
                    } else {
                        a *= std::popcount(lists.masks[v] & tc.right);
                        b *= std::popcount(lists.masks[v] & tc.left);
                    }
                }
                comp_count += a + b;
            }
        }
        total *= comp_count;
        if (total == 0) break;
    }
    return total;
}

Bigint surjections_count(std::int64_t t, std::int64_t q) {
    if (t < 0 || q < 0) throw PreconditionError("surjections_count: negative argument");
    Bigint s = 0;
    for (std::int64_t j = 0; j <= q; ++j) {
        Bigint term = binomial(q, j) * bigint_pow(j, t);  // 0^0 == 1
        if ((q - j) % 2 == 0)
            s += term;
        else
            s -= term;
    }
    return s;
}

Bigint edge_cover_maps(std::int64_t t, std::int64_t k, const Bigint& single_edge_maps) {
    if (t < 0 || k < 0) throw PreconditionError("edge_cover_maps: negative argument");
    if (t < k) return 0;
    Bigint total = 0;
    for (std::int64_t j = 0; j <= k; ++j) {
        Bigint term = binomial(k, j) * bigint_pow(single_edge_maps - 2 * j, t);
        if (j % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Bigint sur_via_inclusion_exclusion(const Graph& g, const Graph& h, const ListAssignment& lists,
                                   const HomSolver& hom_solver) {
    lists.validate(g.n, h.n);
    if (h.n > 30) throw PreconditionError("sur_via_inclusion_exclusion: target too large");
    Bigint total = 0;
    for (std::uint32_t w = 0; w < (1u << h.n); ++w) {
        std::vector<int> verts;
        for (int v = 0; v < h.n; ++v)
            if (w & (1u << v)) verts.push_back(v);
        Graph hw = induced_subgraph(h, verts);
        Bigint term = hom_solver(g, hw, lists.restrict_targets(verts));
        if ((h.n - static_cast<int>(verts.size())) % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}

Bigint sur_via_configurations(const Graph& g, const Graph& h, const ListAssignment& lists,
                              const HomSolver& lhom_solver) {
    lists.validate(g.n, h.n);
    int n = g.n, q = h.n;
    if (q == 0) return g.empty() ? 1 : 0;
    if (n < q) return 0;

    // increasing first-use positions; position 0 always sees the first new target
    std::vector<int> positions(q);
    Bigint total = 0;

    auto run_sigma = [&]() {
        // all q! assignments of distinct H-vertices to the first-use positions
        std::vector<int> targets(q);
        for (int i = 0; i < q; ++i) targets[i] = i;
        do {
            ListAssignment pinned = lists;
            std::uint64_t prefix = 0;
            int next_use = 0;
            for (int v = 0; v < n; ++v) {
                if (next_use < q && positions[next_use] == v) {
                    prefix |= std::uint64_t(1) << targets[next_use];
                    pinned.masks[v] = lists.masks[v] & (std::uint64_t(1) << targets[next_use]);
                    ++next_use;
                } else {
                    pinned.masks[v] = lists.masks[v] & prefix;
                }
            }
            total += lhom_solver(g, h, pinned);
        } while (std::next_permutation(targets.begin(), targets.end()));
    };

    // choose positions 0 = i1 < i2 < ... < iq
    auto rec = [&](auto&& self, int idx, int from) -> void {
        if (idx == q) {
            run_sigma();
            return;
        }
        for (int v = from; v <= n - (q - idx); ++v) {
            positions[idx] = v;
            self(self, idx + 1, v + 1);
        }
    };
    positions[0] = 0;
    rec(rec, 1, 1);
    return total;
}

Bigint uniform_hom_to_cliques(const std::vector<int>& g_sizes, const std::vector<int>& h_sizes) {
    for (int a : g_sizes)
        if (a <= 0) throw PreconditionError("uniform_hom_to_cliques: component sizes must be positive");
    for (int b : h_sizes)
        if (b <= 0) throw PreconditionError("uniform_hom_to_cliques: component sizes must be positive");
    Bigint total = 1;
    for (int a : g_sizes) {
        Bigint inner = 0;
        for (int b : h_sizes) inner += bigint_pow(b, a);
        total *= inner;
        if (total == 0) break;
    }
    return total;
}

Bigint subset_sum_via_sur(const SubsetSumInstance& inst, const PairSolver& sur_solver) {
    if (inst.b < 1) throw PreconditionError("subset sum target must be positive");
    long long n_total = 0;
    for (int a : inst.a) {
        if (a < 1) throw PreconditionError("subset sum elements must be positive");
        n_total += a;
    }
    if (n_total < inst.b) return 0;
    Graph g;
    for (int a : inst.a) g = disjoint_union(g, clique_graph(a, /*reflexive=*/false));
    Graph h = clique_graph(inst.b, /*reflexive=*/true);
    if (n_total - inst.b > 0)
        h = disjoint_union(h, clique_graph(static_cast<int>(n_total - inst.b), /*reflexive=*/true));
    Bigint sur = sur_solver(g, h);
    Bigint denom = factorial(inst.b) * factorial(static_cast<std::uint64_t>(n_total - inst.b));
    return exact_div(sur, denom, "subset_sum_via_sur");
}

Bigint subset_sum_direct(const SubsetSumInstance& inst) {
    if (inst.a.size() > 30) throw PreconditionError("subset_sum_direct: too many elements");
    Bigint count = 0;
    for (std::uint32_t mask = 0; mask < (1u << inst.a.size()); ++mask) {
        long long sum = 0;
        for (size_t i = 0; i < inst.a.size(); ++i)
            if (mask & (1u << i)) sum += inst.a[i];
        if (sum == inst.b) ++count;
    }
    return count;
}

}  // namespace surjcount
