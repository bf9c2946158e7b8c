#include "doctest.h"

#include <algorithm>
#include <set>

#include "surjcount/brute.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/rng.hpp"

using namespace surjcount;

namespace {

// Definition-level reference counter: iterates every map V(G) -> V(H) with a
// plain odometer and applies the predicate. Independent of the library's
// backtracking path on purpose.
template <typename Pred>
long reference_count(const Graph& g, const Graph& h, Pred&& pred) {
    if (h.n == 0) return g.n == 0 ? pred(std::vector<int>{}) : 0;
    std::vector<int> f(g.n, 0);
    long count = 0;
    while (true) {
        bool is_hom = true;
        for (const auto& [u, v] : g.edges)
            if (!h.has_edge(f[u], f[v])) is_hom = false;
        if (is_hom && pred(f)) ++count;
        int pos = g.n - 1;
        while (pos >= 0 && f[pos] == h.n - 1) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
    }
    return count;
}

long reference_hom(const Graph& g, const Graph& h) {
    return reference_count(g, h, [](const std::vector<int>&) { return true; });
}

long reference_sur(const Graph& g, const Graph& h) {
    return reference_count(g, h, [&](const std::vector<int>& f) {
        std::set<int> image(f.begin(), f.end());
        return static_cast<int>(image.size()) == h.n;
    });
}

long reference_comp(const Graph& g, const Graph& h) {
    std::set<std::pair<int, int>> required;
    for (const auto& [u, v] : h.edges)
        if (u != v) required.insert({u, v});
    return reference_count(g, h, [&](const std::vector<int>& f) {
        std::set<int> image(f.begin(), f.end());
        if (static_cast<int>(image.size()) != h.n) return false;
        std::set<std::pair<int, int>> used;
        for (const auto& [u, v] : g.edges) {
            int a = f[u], b = f[v];
            if (a != b) used.insert({std::min(a, b), std::max(a, b)});
        }
        return std::includes(used.begin(), used.end(), required.begin(), required.end());
    });
}

ListAssignment full(const Graph& g, const Graph& h) { return ListAssignment::full(g.n, h.n); }

}  // namespace

TEST_CASE("count_hom spot values") {
    CHECK(count_hom(single_vertex(false), biclique_graph(2, 3), full(single_vertex(false), biclique_graph(2, 3))) == 5);
    CHECK(count_hom(path_graph(3), clique_graph(2, false), ListAssignment::full(3, 2)) == 2);
    CHECK(count_hom(Graph{}, biclique_graph(2, 3), ListAssignment::full(0, 5)) == 1);
    CHECK(count_hom(cycle_graph(6), biclique_graph(2, 3), ListAssignment::full(6, 5)) == 432);

    // disjoint irreflexive cliques into reflexive cliques: prod_i sum_j b_j^{a_i}
    Graph g = disjoint_union(clique_graph(2, false), clique_graph(3, false));
    Graph h = disjoint_union(clique_graph(1, true), clique_graph(2, true));
    CHECK(count_hom(g, h, full(g, h)) == 45);
}

TEST_CASE("count_sur and count_comp spot values") {
    Graph k3 = clique_graph(3, false);
    CHECK(count_sur(k3, k3, full(k3, k3)) == 6);
    CHECK(count_sur(single_vertex(false), clique_graph(2, false), ListAssignment::full(1, 2)) == 0);
    CHECK(count_sur(Graph{}, Graph{}, ListAssignment::full(0, 0)) == 1);
    CHECK(count_sur(Graph{}, single_vertex(false), ListAssignment::full(0, 1)) == 0);

    CHECK(count_comp(cycle_graph(6), biclique_graph(2, 3), ListAssignment::full(6, 5)) == 0);
    CHECK(count_comp(cycle_graph(4), clique_graph(2, false), ListAssignment::full(4, 2)) == 2);
    CHECK(count_comp(Graph{}, Graph{}, ListAssignment::full(0, 0)) == 1);
    CHECK(count_comp(Graph{}, single_vertex(false), ListAssignment::full(0, 1)) == 0);
    CHECK(count_comp(single_vertex(false), Graph{}, ListAssignment::full(1, 0)) == 0);
    CHECK(count_comp(path_graph(4), clique_graph(3, true), ListAssignment::full(4, 3)) == 6);

    // single-vertex target: compaction count equals hom count
    Graph h10 = single_vertex(false);
    for (const Graph& g : {path_graph(3), make_graph(3, {})})
        CHECK(count_comp(g, h10, full(g, h10)) == count_hom(g, h10, full(g, h10)));

    // single-edge target: comp = hom - 2 * (count to one vertex)
    Graph h9 = clique_graph(2, false);
    for (const Graph& g : {path_graph(3), cycle_graph(4), star_graph(3)}) {
        Bigint hom2 = count_hom(g, h9, full(g, h9));
        Bigint hom1 = count_hom(g, h10, full(g, h10));
        CHECK(count_comp(g, h9, full(g, h9)) == hom2 - 2 * hom1);
    }
}

TEST_CASE("oracles match the definitional reference on a sweep") {
    auto gs = all_graphs_up_to(4, false, false, true);
    auto hs = all_graphs_up_to(3, true, false, true);
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            auto lists = full(g, h);
            CHECK(count_hom(g, h, lists) == reference_hom(g, h));
            CHECK(count_sur(g, h, lists) == reference_sur(g, h));
            CHECK(count_comp(g, h, lists) == reference_comp(g, h));
        }
    }
}

TEST_CASE("monotonicity and multiplicativity") {
    SampleRng rng(2024, 0, 0);
    auto gs = all_graphs_up_to(4, false, false);
    auto hs = all_graphs_up_to(3, true, false);
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            auto lists = full(g, h);
            Bigint hom = count_hom(g, h, lists);
            Bigint sur = count_sur(g, h, lists);
            Bigint comp = count_comp(g, h, lists);
            CHECK(comp <= sur);
            CHECK(sur <= hom);

            // per-component products
            Bigint product = 1;
            for (const auto& split : connected_components(g))
                product *= count_hom(split.graph, h,
                                     lists.select_vertices(split.original_vertex));
            CHECK(product == hom);

            // enlarging a list never decreases any count
            if (g.n > 0 && h.n > 0) {
                ListAssignment smaller = lists;
                smaller.masks[rng.next_below(static_cast<std::uint32_t>(g.n))] &= rng.next();
                CHECK(count_hom(g, h, smaller) <= hom);
                CHECK(count_sur(g, h, smaller) <= sur);
                CHECK(count_comp(g, h, smaller) <= comp);
            }
        }
    }
}

TEST_CASE("hom decomposes over loop-hereditary subgraphs") {
    // every homomorphism compacts onto exactly one loop-hereditary subgraph
    auto gs = all_graphs_up_to(4, false, false);
    auto hs = all_graphs_up_to(3, true, false);
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            std::vector<int> loops;
            std::vector<std::pair<int, int>> non_loop;
            for (const auto& [u, v] : h.edges)
                (u == v ? (void)loops.push_back(u) : (void)non_loop.push_back({u, v}));
            Bigint rhs = 0;
            for (std::uint32_t vmask = 0; vmask < (1u << h.n); ++vmask) {
                std::vector<int> verts;
                for (int v = 0; v < h.n; ++v)
                    if (vmask & (1u << v)) verts.push_back(v);
                std::vector<int> index(h.n, -1);
                for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
                std::vector<std::pair<int, int>> in_range;
                for (const auto& [u, v] : non_loop)
                    if (index[u] >= 0 && index[v] >= 0) in_range.emplace_back(index[u], index[v]);
                for (std::uint32_t emask = 0; emask < (1u << in_range.size()); ++emask) {
                    Graph sub;
                    sub.n = static_cast<int>(verts.size());
                    for (int v : loops)
                        if (index[v] >= 0) sub.edges.emplace_back(index[v], index[v]);
                    for (std::size_t e = 0; e < in_range.size(); ++e)
                        if (emask & (1u << e)) sub.edges.push_back(in_range[e]);
                    std::sort(sub.edges.begin(), sub.edges.end());
                    ListAssignment sub_lists = ListAssignment::full(g.n, h.n).restrict_targets(verts);
                    rhs += count_comp(g, sub, sub_lists);
                }
            }
            CHECK(count_hom(g, h, full(g, h)) == rhs);
        }
    }
}

TEST_CASE("count_ret") {
    Graph h = clique_graph(2, true);
    // padding an input with a loop-stripped copy of the target turns hom into ret
    for (const Graph& g : {path_graph(3), cycle_graph(4)}) {
        RetractionInstance inst{disjoint_union(g, strip_loops(h)), {g.n, g.n + 1}, h};
        CHECK(count_ret(inst) == count_hom(g, h, full(g, h)));
    }
    // the copy itself retracts one way only
    RetractionInstance identity{strip_loops(h), {0, 1}, h};
    CHECK(count_ret(identity) == 1);
    // a free extra vertex multiplies by the target size
    Graph q3 = clique_graph(3, true);
    RetractionInstance free_vertex{add_isolated_vertices(strip_loops(q3), 1), {0, 1, 2}, q3};
    CHECK(count_ret(free_vertex) == 3);
    RetractionInstance bad{make_graph(2, {}), {0, 1}, h};
    CHECK_THROWS_AS(count_ret(bad), PreconditionError);
}

TEST_CASE("anchored counts") {
    Graph k1 = single_vertex(false);
    Graph rk2 = clique_graph(2, true);
    CHECK(count_anchored_hom(k1, 0, rk2, 0) == 1);
    CHECK(count_anchored_hom(k1, 0, rk2, 1) == 1);
    CHECK(count_anchored_hom(clique_graph(2, false), 0, rk2, 0) == 2);
    CHECK(count_anchored_inj(clique_graph(2, false), 0, rk2, 0) == 1);
    CHECK(count_anchored_inj(path_graph(3), 0, rk2, 0) == 0);  // pigeonhole
    CHECK(count_anchored_inj(single_vertex(false), 0, biclique_graph(2, 3), 4) == 1);

    // sum over targets of the anchored count gives the full count
    for (const Graph& h : all_graphs_up_to(3, true, false)) {
        for (const Graph& g : {path_graph(3), cycle_graph(4), star_graph(3)}) {
            Bigint total = 0;
            for (int w = 0; w < h.n; ++w) total += count_anchored_hom(g, 0, h, w);
            CHECK(total == count_hom(g, h, full(g, h)));
        }
    }
}

namespace {

// injective anchored homomorphisms, source loops allowed (quotients have
// them); definitional odometer over injections
long reference_anchored_inj(const Graph& g, int v, const Graph& h, int w) {
    if (g.n > h.n) return 0;
    std::vector<int> f(g.n, 0);
    long count = 0;
    while (true) {
        bool ok = f[v] == w;
        for (int a = 0; ok && a < g.n; ++a)
            for (int b = a + 1; b < g.n; ++b)
                if (f[a] == f[b]) ok = false;
        if (ok)
            for (const auto& [x, y] : g.edges)
                if (!h.has_edge(f[x], f[y])) ok = false;
        if (ok) ++count;
        int pos = g.n - 1;
        while (pos >= 0 && f[pos] == h.n - 1) f[pos--] = 0;
        if (pos < 0) break;
        ++f[pos];
    }
    return count;
}

}  // namespace

TEST_CASE("anchored hom expands over quotient injections") {
    // hom((G,v),(H,w)) equals the sum of inj((G|theta,v_theta),(H,w)) over
    // all partitions theta of V(G)
    auto gs = all_graphs_up_to(4, false, true);
    auto hs = all_graphs_up_to(3, true, true);
    for (const auto& g : gs) {
        auto partitions = all_partitions(g.n);
        for (const auto& h : hs) {
            for (int w = 0; w < h.n; ++w) {
                Bigint lhs = count_anchored_hom(g, 0, h, w);
                Bigint rhs = 0;
                for (const auto& theta : partitions) {
                    Graph q = quotient_graph(g, theta);
                    int v_theta = 0;
                    for (std::size_t b = 0; b < theta.size(); ++b)
                        if (std::find(theta[b].begin(), theta[b].end(), 0) != theta[b].end())
                            v_theta = static_cast<int>(b);
                    rhs += reference_anchored_inj(q, v_theta, h, w);
                }
                CHECK(lhs == rhs);
            }
        }
    }
    // the library's injective counter agrees with the reference on
    // irreflexive sources
    for (const auto& g : gs)
        for (const auto& h : hs)
            for (int w = 0; w < h.n; ++w)
                CHECK(count_anchored_inj(g, 0, h, w) == reference_anchored_inj(g, 0, h, w));
}

TEST_CASE("budget guard") {
    Graph g = clique_graph(5, false);
    Graph h = clique_graph(5, true);
    BruteOptions tiny{100};
    CHECK_THROWS_AS(count_hom(g, h, full(g, h), tiny), BudgetError);
    CHECK_THROWS_AS(count_hom(g, h, full(g, h), BruteOptions{0}), BudgetError);
}
