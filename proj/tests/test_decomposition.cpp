#include "doctest.h"

#include "surjcount/brute.hpp"
#include "surjcount/canonical.hpp"
#include "surjcount/decomposition.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/rng.hpp"
#include "surjcount/verify.hpp"

using namespace surjcount;

namespace {

const PairSolver kBruteHomPair = [](const Graph& g, const Graph& h) {
    return count_hom(g, h, ListAssignment::full(g.n, h.n));
};

const HomSolver kBruteHom = [](const Graph& g, const Graph& h, const ListAssignment& l) {
    return count_hom(g, h, l);
};

}  // namespace

TEST_CASE("enumerate_sub small cases") {
    CHECK(enumerate_sub(single_vertex(false)).size() == 1);
    CHECK(enumerate_sub(clique_graph(2, false)).size() == 3);  // two vertices, one edge

    // class sizes of the (2,3)-biclique family
    auto subs = enumerate_sub(biclique_graph(2, 3));
    CHECK(subs.size() == 56);
    const auto& family = biclique23_family();
    std::vector<long> counts(family.size(), 0);
    for (const auto& sub : subs) {
        CanonicalKey key = canonical_form(sub.graph);
        for (std::size_t i = 0; i < family.size(); ++i)
            if (key == canonical_form(family[i])) counts[i]++;
    }
    CHECK(counts == std::vector<long>{1, 6, 6, 3, 6, 2, 12, 9, 6, 5});

    CHECK_THROWS_AS(enumerate_sub(Graph{}), PreconditionError);
    CHECK_THROWS_AS(enumerate_sub(make_graph(2, {})), PreconditionError);

    // loop-heredity: every subgraph of a reflexive host is reflexive
    for (const auto& sub : enumerate_sub(clique_graph(3, true))) {
        CHECK(sub.graph.is_reflexive());
        CHECK(is_connected(sub.graph));
    }
}

TEST_CASE("build_table reproduces the reference tables") {
    const auto& family = biclique23_family();
    std::vector<CanonicalKey> keys;
    for (const auto& g : family) keys.push_back(canonical_form(g));
    for (const auto& ref : biclique23_reference_tables()) {
        DecompositionTable table = build_table(ref.host);
        for (std::size_t i = 0; i < family.size(); ++i) {
            auto [mu, lambda] = ref.rows[i];
            const DecompositionEntry* e = table.find(keys[i]);
            if (mu == 0) {
                CHECK(e == nullptr);
            } else {
                REQUIRE(e != nullptr);
                CHECK(e->mu == mu);
                CHECK(e->lambda == lambda);
            }
        }
        // the host heads its own table with unit weight
        CHECK(table.entries.front().mu == 1);
        CHECK(table.entries.front().lambda == 1);
        CHECK(isomorphic(table.entries.front().representative, ref.host));
    }
}

TEST_CASE("table sanity") {
    for (const Graph& h : all_graphs_up_to(4, true, true)) {
        DecompositionTable table = build_table(h);
        Bigint mu_sum = 0;
        for (const auto& e : table.entries) mu_sum += e.mu;
        CHECK(mu_sum == Bigint(enumerate_sub(h).size()));
        if (h.is_reflexive())
            for (const auto& e : table.entries) CHECK(e.representative.is_reflexive());
        if (h.is_irreflexive() && bipartition(h, nullptr))
            for (const auto& e : table.entries) {
                CHECK(e.representative.is_irreflexive());
                CHECK(bipartition(e.representative, nullptr));
            }
    }
}

TEST_CASE("comp_via_decomposition matches the oracle") {
    DecompositionTable k23 = build_table(biclique_graph(2, 3));
    for (const Graph& g : {cycle_graph(4), cycle_graph(6), path_graph(5), star_graph(3)}) {
        Bigint expected = count_comp(g, biclique_graph(2, 3), ListAssignment::full(g.n, 5));
        CHECK(comp_via_decomposition(g, k23, kBruteHomPair) == expected);
    }
    // base case: the single-vertex table makes comp and hom coincide
    DecompositionTable k1 = build_table(single_vertex(false));
    for (const Graph& g : {single_vertex(false), path_graph(3), clique_graph(3, false)})
        CHECK(comp_via_decomposition(g, k1, kBruteHomPair) ==
              count_hom(g, single_vertex(false), ListAssignment::full(g.n, 1)));
    CHECK(comp_via_decomposition(single_vertex(false), k1, kBruteHomPair) == 1);

    CHECK_THROWS_AS(comp_via_decomposition(Graph{}, k1, kBruteHomPair), PreconditionError);
    CHECK_THROWS_AS(comp_via_decomposition(make_graph(2, {}), k1, kBruteHomPair),
                    PreconditionError);
}

TEST_CASE("comp_via_moebius matches the oracle, with lists") {
    auto gs = all_graphs_up_to(3, false, false, true);
    auto hs = all_graphs_up_to(3, true, false, true);
    int pair = 0;
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            ++pair;
            ListAssignment full = ListAssignment::full(g.n, h.n);
            CHECK(comp_via_moebius(g, h, full, kBruteHom) == count_comp(g, h, full));
            for (int draw = 0; draw < 3; ++draw) {
                SampleRng rng(5150, pair, draw);
                ListAssignment lists = full;
                for (auto& m : lists.masks) m &= rng.next();
                CHECK(comp_via_moebius(g, h, lists, kBruteHom) == count_comp(g, h, lists));
            }
        }
    }
    // empty-graph corners
    CHECK(comp_via_moebius(Graph{}, Graph{}, ListAssignment::full(0, 0), kBruteHom) == 1);
    CHECK(comp_via_moebius(Graph{}, single_vertex(false), ListAssignment::full(0, 1), kBruteHom) == 0);
}

TEST_CASE("z_value") {
    WeightedGraphSet table_set;
    DecompositionTable table = build_table(clique_graph(3, true));
    for (const auto& e : table.entries) {
        table_set.members.push_back(e.representative);
        table_set.weights.push_back(e.lambda);
    }
    for (const Graph& g : {path_graph(3), cycle_graph(4), clique_graph(3, false)}) {
        CHECK(z_value(table_set, g, kBruteHomPair) ==
              count_comp(g, clique_graph(3, true), ListAssignment::full(g.n, 3)));
    }

    // a weighted looped vertex contributes its weight for every non-empty input
    WeightedGraphSet single{{single_vertex(true)}, {Bigint(5)}};
    CHECK(z_value(single, path_graph(4), kBruteHomPair) == 5);
    CHECK(z_value(single, Graph{}, kBruteHomPair) == 0);
    WeightedGraphSet loopless{{single_vertex(false)}, {Bigint(5)}};
    CHECK(z_value(loopless, path_graph(4), kBruteHomPair) == 0);

    WeightedGraphSet bad{{single_vertex(false), single_vertex(false)}, {Bigint(1), Bigint(1)}};
    CHECK_THROWS_AS(z_value(bad, path_graph(3), kBruteHomPair), PreconditionError);
}

TEST_CASE("edge_deleted_weight_check") {
    auto k23 = edge_deleted_weight_check(biclique_graph(2, 3));
    CHECK(k23.size() == 6);
    for (const auto& rep : k23) CHECK(rep.lambda == -6);

    for (const auto& rep : edge_deleted_weight_check(clique_graph(3, true))) {
        CHECK(rep.lambda != 0);
        CHECK(rep.lambda <= -1);
    }
    for (const auto& rep : edge_deleted_weight_check(clique_graph(3, false)))
        CHECK(rep.lambda != 0);

    // deleting the only edge of a 2-vertex target disconnects it
    CHECK_THROWS_AS(edge_deleted_weight_check(clique_graph(2, false)), PreconditionError);
    CHECK_THROWS_AS(edge_deleted_weight_check(single_vertex(true)), PreconditionError);
}
