#include "doctest.h"

#include "surjcount/brute.hpp"
#include "surjcount/classifier.hpp"
#include "surjcount/enumerate.hpp"
#include "surjcount/structure.hpp"

using namespace surjcount;

namespace {

ExactLabel label_of(const ClassificationReport& report, Problem p) {
    for (const auto& [problem, label] : report.exact)
        if (problem == p) return label;
    FAIL("missing label");
    return ExactLabel::FP;
}

}  // namespace

TEST_CASE("classify_exact examples") {
    ClassificationReport k23 = classify_exact(biclique_graph(2, 3));
    CHECK(label_of(k23, Problem::Hom) == ExactLabel::FP);
    CHECK(label_of(k23, Problem::SHom) == ExactLabel::FP);
    CHECK(label_of(k23, Problem::Ret) == ExactLabel::FP);
    CHECK(label_of(k23, Problem::Comp) == ExactLabel::SharpPComplete);
    CHECK(label_of(k23, Problem::LComp) == ExactLabel::SharpPComplete);

    ClassificationReport easy = classify_exact(disjoint_union(clique_graph(2, true), star_graph(4)));
    for (Problem p : kAllProblems) CHECK(label_of(easy, p) == ExactLabel::FP);

    ClassificationReport triangle = classify_exact(clique_graph(3, false));
    for (Problem p : kAllProblems) CHECK(label_of(triangle, p) == ExactLabel::SharpPComplete);

    ClassificationReport empty = classify_exact(Graph{});
    for (Problem p : kAllProblems) CHECK(label_of(empty, p) == ExactLabel::FP);
}

TEST_CASE("classify_approx examples") {
    CHECK(classify_approx(clique_graph(5, true)) == ApproxLabel::Fpras);
    CHECK(classify_approx(biclique_graph(2, 3)) == ApproxLabel::Fpras);
    CHECK(classify_approx(cycle_graph(5)) == ApproxLabel::BisHard);
    CHECK(classify_approx(disjoint_union(single_vertex(false), single_vertex(false))) ==
          ApproxLabel::OpenDisconnected);
}

TEST_CASE("labels agree with an independent structural check") {
    // re-derive both tractability predicates from first principles
    for (const Graph& h : all_graphs_up_to(4, true, false, true)) {
        bool hom_fp = true, comp_fp = true;
        for (const auto& split : connected_components(h)) {
            const Graph& c = split.graph;
            bool reflexive = c.is_reflexive();
            bool clique = true;
            for (int u = 0; u < c.n; ++u)
                for (int v = u + 1; v < c.n; ++v)
                    if (!c.has_edge(u, v)) clique = false;
            std::vector<int> side;
            bool complete_bip = c.is_irreflexive() && bipartition(c, &side);
            if (complete_bip)
                for (int u = 0; u < c.n; ++u)
                    for (int v = u + 1; v < c.n; ++v)
                        if (side[u] != side[v] && !c.has_edge(u, v)) complete_bip = false;
            int zero = 0;
            for (int s : side) zero += s == 0;
            // components are connected, so an edgeless one is a single vertex
            bool star = complete_bip && (c.n == 1 || std::min(zero, c.n - zero) == 1);
            if (!(reflexive && clique) && !complete_bip) hom_fp = false;
            if (!star && !(reflexive && clique && c.n <= 2)) comp_fp = false;
        }
        ClassificationReport report = classify_exact(h);
        CHECK(report.hom_tractable == hom_fp);
        CHECK(report.comp_tractable == comp_fp);
        // lattice: tractable compactions imply tractable homs
        if (label_of(report, Problem::Comp) == ExactLabel::FP)
            CHECK(label_of(report, Problem::Hom) == ExactLabel::FP);
        // list and plain variants share labels
        CHECK(label_of(report, Problem::Hom) == label_of(report, Problem::LHom));
        CHECK(label_of(report, Problem::SHom) == label_of(report, Problem::LSHom));
        CHECK(label_of(report, Problem::Comp) == label_of(report, Problem::LComp));
        CHECK(label_of(report, Problem::Hom) == label_of(report, Problem::Ret));
    }
}

TEST_CASE("select_method routes") {
    Graph k23 = biclique_graph(2, 3);
    CHECK(select_method(Problem::Comp, cycle_graph(4), k23, false) == "decomposition");
    CHECK(select_method(Problem::Hom, cycle_graph(4),
                        disjoint_union(clique_graph(2, true), biclique_graph(1, 3)), false) ==
          "tractable-formula");
    Graph disconnected_g = disjoint_union(single_vertex(false), single_vertex(false));
    CHECK(select_method(Problem::Comp, disconnected_g, k23, false) == "moebius");
    CHECK(select_method(Problem::Comp, cycle_graph(4), star_graph(3), false) == "moebius");
    CHECK(select_method(Problem::Hom, cycle_graph(4), cycle_graph(5), false) == "brute");
}

TEST_CASE("run_count routes agree with the brute oracle") {
    std::vector<Graph> targets{biclique_graph(2, 3), clique_graph(3, true), star_graph(3),
                               disjoint_union(clique_graph(2, true), star_graph(2)),
                               cycle_graph(5)};
    std::vector<Graph> inputs{cycle_graph(4), path_graph(4), clique_graph(3, false),
                              disjoint_union(path_graph(2), path_graph(3))};
    for (const Graph& h : targets) {
        for (const Graph& g : inputs) {
            for (Problem p : {Problem::Hom, Problem::SHom, Problem::Comp}) {
                CountRequest request;
                request.problem = p;
                request.g = g;
                request.h = h;
                request.lists = ListAssignment::full(g.n, h.n);
                CountOutcome automatic = run_count(request);
                request.method = "brute";
                CountOutcome brute = run_count(request);
                CHECK(automatic.value == brute.value);
            }
        }
    }
    // retraction through the pinned-list route
    Graph h = clique_graph(2, true);
    CountRequest ret;
    ret.problem = Problem::Ret;
    ret.g = disjoint_union(cycle_graph(4), strip_loops(h));
    ret.h = h;
    ret.lists = ListAssignment::full(ret.g.n, h.n);
    ret.anchors = {4, 5};
    CountOutcome via_route = run_count(ret);
    CHECK(via_route.method_used == "tractable-formula");
    CHECK(via_route.value == count_hom(cycle_graph(4), h, ListAssignment::full(4, 2)));
}
