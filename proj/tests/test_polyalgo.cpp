#include "doctest.h"

#include "surjcount/brute.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/polyalgo.hpp"
#include "surjcount/rng.hpp"

using namespace surjcount;

namespace {

const HomSolver kBruteHom = [](const Graph& g, const Graph& h, const ListAssignment& l) {
    return count_hom(g, h, l);
};

const PairSolver kBruteSur = [](const Graph& g, const Graph& h) {
    return count_sur(g, h, ListAssignment::full(g.n, h.n));
};

}  // namespace

TEST_CASE("count_hom_tractable basics") {
    Graph isolated = make_graph(4, {});
    Graph rk3 = clique_graph(3, true);
    CHECK(count_hom_tractable(isolated, rk3, ListAssignment::full(4, 3)) == 81);  // q^n

    // connected bipartite component into a biclique: both orientations
    Graph c6 = cycle_graph(6);
    Graph k23 = biclique_graph(2, 3);
    CHECK(count_hom_tractable(c6, k23, ListAssignment::full(6, 5)) == 432);

    CHECK_THROWS_AS(count_hom_tractable(c6, cycle_graph(5), ListAssignment::full(6, 5)),
                    PreconditionError);

    // odd cycle finds only reflexive-clique components
    Graph mixed = disjoint_union(clique_graph(2, true), biclique_graph(1, 2));
    Graph c5 = cycle_graph(5);
    CHECK(count_hom_tractable(c5, mixed, ListAssignment::full(5, 5)) ==
          count_hom(c5, mixed, ListAssignment::full(5, 5)));
}

TEST_CASE("count_hom_tractable equals brute on a swept class") {
    auto gs = all_graphs_up_to(4, false, false, true);
    auto hs = all_graphs_up_to(4, true, false);
    SampleRng rng(99, 0, 0);
    int pair = 0;
    for (const auto& h : hs) {
        if (!is_hom_tractable_target(h)) continue;
        for (const auto& g : gs) {
            ++pair;
            ListAssignment full = ListAssignment::full(g.n, h.n);
            CHECK(count_hom_tractable(g, h, full) == count_hom(g, h, full));
            for (int draw = 0; draw < 3; ++draw) {
                ListAssignment lists = full;
                SampleRng draw_rng(404, pair, draw);
                for (auto& m : lists.masks) m &= draw_rng.next();
                CHECK(count_hom_tractable(g, h, lists) == count_hom(g, h, lists));
            }
        }
    }
}

TEST_CASE("surjections_count") {
    CHECK(surjections_count(3, 2) == 6);
    CHECK(surjections_count(0, 0) == 1);
    CHECK(surjections_count(2, 3) == 0);
    for (int q = 0; q <= 6; ++q) CHECK(surjections_count(q, q) == factorial(q));
    for (int t = 0; t <= 10; ++t)
        for (int q = 1; q <= 10; ++q) {
            Bigint lower = bigint_pow(q, t) - bigint_pow(2, q) * bigint_pow(q - 1, t);
            CHECK(surjections_count(t, q) >= lower);
        }
}

TEST_CASE("surjectivity routes agree with the oracle") {
    auto gs = all_graphs_up_to(3, false, false, true);
    auto hs = all_graphs_up_to(3, true, false, true);
    for (const auto& g : gs) {
        for (const auto& h : hs) {
            ListAssignment full = ListAssignment::full(g.n, h.n);
            Bigint direct = count_sur(g, h, full);
            CHECK(sur_via_inclusion_exclusion(g, h, full, kBruteHom) == direct);
            CHECK(sur_via_configurations(g, h, full, kBruteHom) == direct);
        }
    }
}

TEST_CASE("configuration call budget stays under n^q") {
    Graph g = path_graph(5);
    Graph h = path_graph(3);
    long calls = 0;
    HomSolver counting = [&](const Graph& gg, const Graph& hh, const ListAssignment& ll) {
        ++calls;
        return count_hom(gg, hh, ll);
    };
    sur_via_configurations(g, h, ListAssignment::full(5, 3), counting);
    CHECK(calls <= 5 * 5 * 5);
    CHECK(calls == 6 * 6);  // C(4,2) subsequences times 3! assignments
}

TEST_CASE("single-vertex target degenerates to one pinned configuration") {
    Graph g = make_graph(3, {});
    Graph h = single_vertex(true);
    long calls = 0;
    HomSolver counting = [&](const Graph& gg, const Graph& hh, const ListAssignment& ll) {
        ++calls;
        return count_hom(gg, hh, ll);
    };
    Bigint result = sur_via_configurations(g, h, ListAssignment::full(3, 1), counting);
    CHECK(calls == 1);
    CHECK(result == 1);
}

TEST_CASE("uniform clique formula") {
    CHECK(uniform_hom_to_cliques({1}, {4}) == 4);
    CHECK(uniform_hom_to_cliques({2, 3}, {1, 2}) == 45);
    CHECK(uniform_hom_to_cliques({2}, {}) == 0);
    CHECK(uniform_hom_to_cliques({}, {}) == 1);

    // matches the materialized graphs
    for (const auto& g_sizes : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 2}, {1, 1, 3}}) {
        for (const auto& h_sizes : std::vector<std::vector<int>>{{1}, {2}, {3}, {1, 2}, {2, 2}}) {
            Graph g, h;
            for (int a : g_sizes) g = disjoint_union(g, clique_graph(a, false));
            for (int b : h_sizes) h = disjoint_union(h, clique_graph(b, true));
            CHECK(uniform_hom_to_cliques(g_sizes, h_sizes) ==
                  count_hom(g, h, ListAssignment::full(g.n, h.n)));
        }
    }
}

TEST_CASE("subset-sum bridge") {
    SubsetSumInstance inst{{1, 2, 3}, 3};
    CHECK(subset_sum_direct(inst) == 2);
    CHECK(subset_sum_via_sur(inst, kBruteSur) == 2);
    CHECK(subset_sum_via_sur({{1}, 2}, kBruteSur) == 0);

    // the intermediate count carries the b!(N-b)! factor
    Graph g = disjoint_union(single_vertex(false),
                             disjoint_union(clique_graph(2, false), clique_graph(3, false)));
    Graph h = disjoint_union(clique_graph(3, true), clique_graph(3, true));
    CHECK(count_sur(g, h, ListAssignment::full(6, 6)) == 72);

    for (int b = 1; b <= 7; ++b) {
        SubsetSumInstance probe{{1, 2, 4}, b};
        CHECK(subset_sum_via_sur(probe, kBruteSur) == subset_sum_direct(probe));
    }
    CHECK_THROWS_AS(subset_sum_via_sur({{0, 2}, 1}, kBruteSur), PreconditionError);

    // a broken solver shows up as an inexact division
    PairSolver broken = [](const Graph&, const Graph&) { return Bigint(7); };
    CHECK_THROWS_AS(subset_sum_via_sur({{2, 3}, 2}, broken), SolveError);
}
