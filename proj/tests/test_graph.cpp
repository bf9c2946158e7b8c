#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "surjcount/canonical.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/lists.hpp"
#include "surjcount/rng.hpp"
#include "surjcount/structure.hpp"

using namespace surjcount;

namespace {

Graph permuted(const Graph& g, const std::vector<int>& pi) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges) edges.emplace_back(pi[u], pi[v]);
    return make_graph(g.n, std::move(edges));
}

Graph random_graph(int n, SampleRng& rng, bool loops) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = loops ? i : i + 1; j < n; ++j)
            if (rng.next() & 1) edges.emplace_back(i, j);
    return make_graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("parse edge-list format") {
    Graph g = parse_graph("# a comment\nn 2\ne 0 1\ne 1 1\n");
    CHECK(g.n == 2);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});

    Graph single = parse_graph("n 1\n");
    CHECK(single.n == 1);
    CHECK(single.edges.empty());

    CHECK_THROWS_AS(parse_graph("n 2\ne 0 5\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\ne 0 1\ne 1 0\n"), ParseError);  // duplicate, reported
    CHECK_THROWS_AS(parse_graph("e 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("n 2\nx 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("parse JSON format and round-trip") {
    Graph g = parse_graph(R"({"n": 3, "edges": [[0,1],[2,2]]})");
    CHECK(g.n == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_loop(2));
    CHECK_THROWS_AS(parse_graph(R"({"edges": []})"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "edges": [[0,1],[1,0]]})"), ParseError);

    SampleRng rng(41, 0, 0);
    for (int round = 0; round < 20; ++round) {
        Graph r = random_graph(5, rng, true);
        CHECK(parse_graph(to_edge_list_text(r)) == r);
    }
}

TEST_CASE("strip_loops") {
    CHECK(strip_loops(clique_graph(2, true)) == clique_graph(2, false));
    CHECK(strip_loops(biclique_graph(2, 3)) == biclique_graph(2, 3));
    CHECK(strip_loops(clique_graph(3, true)) == clique_graph(3, false));
    // idempotent, non-loop edges preserved
    SampleRng rng(42, 0, 0);
    for (int round = 0; round < 20; ++round) {
        Graph r = random_graph(5, rng, true);
        Graph s = strip_loops(r);
        CHECK(strip_loops(s) == s);
        CHECK(s.non_loop_edge_count() == r.non_loop_edge_count());
    }
}

TEST_CASE("disjoint_union") {
    Graph g = cycle_graph(4);
    CHECK(disjoint_union(g, Graph{}) == g);
    Graph two = disjoint_union(single_vertex(false), single_vertex(false));
    CHECK(two.n == 2);
    CHECK(two.edges.empty());
    Graph padded = add_disjoint_edges(g, 3);
    CHECK(padded.n == 4 + 6);
    CHECK(padded.edges.size() == 4 + 3);
}

TEST_CASE("connected_components ordering and relabeling") {
    Graph g = disjoint_union(single_vertex(false), clique_graph(2, false));
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].graph.n == 1);
    CHECK(comps[1].graph.n == 2);
    CHECK(comps[1].original_vertex == std::vector<int>{1, 2});

    CHECK(connected_components(cycle_graph(5)).size() == 1);
    CHECK(is_connected(cycle_graph(5)));
    CHECK_FALSE(is_connected(Graph{}));
}

TEST_CASE("quotient_graph") {
    // triangle 0,1,2 with pendants 3 and 4 hanging off vertex 2; merging
    // {0,2} and {3,4} leaves a 3-path with a loop on the merged middle
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}});
    Graph q = quotient_graph(g, {{1}, {0, 2}, {3, 4}});
    CHECK(q.n == 3);
    CHECK(q.has_loop(1));
    CHECK(q.has_edge(0, 1));
    CHECK(q.has_edge(1, 2));
    CHECK_FALSE(q.has_edge(0, 2));
    CHECK(q.edges.size() == 3);

    VertexPartition singletons;
    for (int v = 0; v < g.n; ++v) singletons.push_back({v});
    CHECK(quotient_graph(g, singletons) == g);

    Graph one = quotient_graph(g, {{0, 1, 2, 3, 4}});
    CHECK(one.n == 1);
    CHECK(one.has_loop(0));
    CHECK(quotient_graph(make_graph(2, {}), {{0, 1}}) == make_graph(1, {}));

    CHECK_THROWS_AS(quotient_graph(g, {{0, 1}}), PreconditionError);
    CHECK_THROWS_AS(quotient_graph(g, {{0, 1}, {1, 2, 3, 4}}), PreconditionError);
}

TEST_CASE("classify_structure") {
    StructureReport k23 = classify_structure(biclique_graph(2, 3));
    CHECK(k23.is_irreflexive_biclique);
    CHECK_FALSE(k23.is_irreflexive_star);
    CHECK(k23.sides_sizes == std::pair<int, int>{2, 3});
    CHECK(k23.connected);

    CHECK(classify_structure(clique_graph(2, true)).is_reflexive_clique);
    CHECK(classify_structure(star_graph(3)).is_irreflexive_star);
    CHECK(classify_structure(single_vertex(false)).is_irreflexive_star);
    CHECK_FALSE(classify_structure(cycle_graph(5)).is_irreflexive_biclique);
    CHECK_FALSE(classify_structure(clique_graph(3, false)).is_irreflexive_biclique);

    // 5 vertices, 5 edges: connected and irreflexive, but no longer a
    // biclique once an edge is missing
    Graph h2 = make_graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 4}});
    StructureReport r = classify_structure(h2);
    CHECK(r.connected);
    CHECK(r.irreflexive);
    CHECK_FALSE(r.is_irreflexive_biclique);

    StructureReport mixed = classify_structure(
        disjoint_union(single_vertex(true), disjoint_union(single_vertex(false), cycle_graph(4))));
    CHECK(mixed.size1_components == 2);
}

TEST_CASE("canonical_form invariance and separation") {
    CHECK(canonical_form(path_graph(3)) != canonical_form(clique_graph(3, false)));
    CHECK(canonical_form(path_graph(3)) == canonical_form(make_graph(3, {{0, 1}, {0, 2}})));

    // exhaustive permutation invariance on small graphs
    SampleRng rng(7, 0, 0);
    for (int n = 2; n <= 5; ++n) {
        for (int round = 0; round < 10; ++round) {
            Graph g = random_graph(n, rng, true);
            CanonicalKey key = canonical_form(g);
            std::vector<int> pi(n);
            std::iota(pi.begin(), pi.end(), 0);
            do {
                CHECK(canonical_form(permuted(g, pi)) == key);
            } while (std::next_permutation(pi.begin(), pi.end()));
        }
    }
    // sampled permutations at n = 7
    for (int round = 0; round < 10; ++round) {
        Graph g = random_graph(7, rng, false);
        CanonicalKey key = canonical_form(g);
        std::vector<int> pi(7);
        std::iota(pi.begin(), pi.end(), 0);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            for (int i = 6; i > 0; --i)
                std::swap(pi[i], pi[rng.next_below(static_cast<std::uint32_t>(i + 1))]);
            CHECK(canonical_form(permuted(g, pi)) == key);
        }
    }
    CHECK_THROWS_AS(canonical_form(biclique_graph(6, 6)), PreconditionError);

    // canonical keys separate the 4-vertex cycle from the 4-path
    CHECK(canonical_form(cycle_graph(4)) != canonical_form(path_graph(4)));
}

TEST_CASE("automorphism_orbits") {
    auto orbits = automorphism_orbits(biclique_graph(2, 3));
    REQUIRE(orbits.size() == 2);
    std::multiset<std::size_t> sizes{orbits[0].size(), orbits[1].size()};
    CHECK(sizes == std::multiset<std::size_t>{2, 3});

    CHECK(automorphism_orbits(clique_graph(3, true)).size() == 1);

    // star with an extra pendant: the high-degree centre sits alone
    Graph h5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {3, 4}});
    auto h5_orbits = automorphism_orbits(h5);
    bool centre_alone = false;
    for (const auto& orbit : h5_orbits)
        if (orbit == std::vector<int>{0}) centre_alone = true;
    CHECK(centre_alone);

    // orbit membership is witnessed by an enumerated automorphism
    for (const auto& g : {biclique_graph(2, 3), cycle_graph(5), path_graph(4)}) {
        auto autos = automorphisms(g);
        for (const auto& orbit : automorphism_orbits(g))
            for (int u : orbit) {
                bool witnessed = false;
                for (const auto& pi : autos)
                    if (pi[orbit.front()] == u) witnessed = true;
                CHECK(witnessed);
            }
    }
}

TEST_CASE("induced_copy_check") {
    Graph h = clique_graph(2, true);
    Graph g = disjoint_union(cycle_graph(4), strip_loops(h));
    CHECK(induced_copy_check(g, {4, 5}, h));  // loops of h ignored
    CHECK(induced_copy_check(clique_graph(2, false), {0, 1}, h));
    CHECK_FALSE(induced_copy_check(make_graph(2, {}), {0, 1}, h));
    CHECK_THROWS_AS(induced_copy_check(g, {4, 4}, h), PreconditionError);
    CHECK_THROWS_AS(induced_copy_check(g, {4}, h), PreconditionError);
}

TEST_CASE("list assignment JSON") {
    ListAssignment lists = parse_lists_json(R"({"lists": {"0": [1, 2], "2": []}})", 3, 4);
    CHECK(lists.masks[0] == 0b0110);
    CHECK(lists.masks[1] == 0b1111);  // absent vertices default to the full list
    CHECK(lists.masks[2] == 0);
    CHECK_FALSE(lists.is_full());
    CHECK(ListAssignment::full(3, 4).is_full());

    CHECK_THROWS_AS(parse_lists_json(R"({"lists": {"9": [0]}})", 3, 4), ParseError);
    CHECK_THROWS_AS(parse_lists_json(R"({"lists": {"0": [4]}})", 3, 4), ParseError);
    CHECK_THROWS_AS(parse_lists_json(R"({"lists": {"x": [0]}})", 3, 4), ParseError);
    CHECK_THROWS_AS(parse_lists_json(R"({"nope": 1})", 3, 4), ParseError);

    ListAssignment restricted = lists.restrict_targets({1, 3});
    CHECK(restricted.masks[0] == 0b01);
    CHECK(restricted.masks[1] == 0b11);
    CHECK(restricted.target_count == 2);
}

TEST_CASE("enumerate_connected_graphs") {
    auto any1 = enumerate_connected_graphs(1, GraphClassConstraint::Any);
    REQUIRE(any1.size() == 1);
    CHECK(any1[0].graph == single_vertex(false));

    auto bip2 = enumerate_connected_graphs(2, GraphClassConstraint::BipartiteWithEdge);
    REQUIRE(bip2.size() == 1);  // the single edge, roots identified by symmetry
    CHECK(bip2[0].graph.edges.size() == 1);

    auto any3 = enumerate_connected_graphs(3, GraphClassConstraint::Any);
    // K1; K2; P3 rooted two ways; K3
    CHECK(any3.size() == 5);
    int n3 = 0;
    for (const auto& rg : any3) n3 += rg.graph.n == 3;
    CHECK(n3 == 3);

    // nondecreasing vertex count
    for (std::size_t i = 1; i < any3.size(); ++i)
        CHECK(any3[i - 1].graph.n <= any3[i].graph.n);

    for (const auto& rg : enumerate_connected_graphs(4, GraphClassConstraint::BipartiteWithEdge)) {
        CHECK(bipartition(rg.graph, nullptr));
        CHECK(!rg.graph.edges.empty());
        CHECK(is_connected(rg.graph));
    }
}
