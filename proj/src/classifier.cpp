#include "surjcount/classifier.hpp"

#include <algorithm>

#include "surjcount/brute.hpp"
#include "surjcount/decomposition.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/polyalgo.hpp"
#include "surjcount/structure.hpp"

namespace surjcount {

std::string problem_name(Problem p) {
    switch (p) {
        case Problem::Hom: return "hom";
        case Problem::LHom: return "lhom";
        case Problem::SHom: return "shom";
        case Problem::LSHom: return "lshom";
        case Problem::Comp: return "comp";
        case Problem::LComp: return "lcomp";
        case Problem::Ret: return "ret";
    }
    return "?";
}

std::optional<Problem> parse_problem(const std::string& name) {
    for (Problem p : kAllProblems)
        if (problem_name(p) == name) return p;
    // common aliases
    if (name == "sur") return Problem::SHom;
    if (name == "lsur") return Problem::LSHom;
    return std::nullopt;
}

std::string label_name(ExactLabel l) { return l == ExactLabel::FP ? "FP" : "#P-complete"; }

std::string label_name(ApproxLabel l) {
    switch (l) {
        case ApproxLabel::Fpras: return "FPRAS";
        case ApproxLabel::BisHard: return "#BIS-hard";
        case ApproxLabel::OpenDisconnected: return "open-disconnected";
    }
    return "?";
}

namespace {

struct TargetStructure {
    std::vector<ComponentFacts> inventory;
    bool hom_tractable = true;
    bool comp_tractable = true;
};

TargetStructure analyse_target(const Graph& h) {
    TargetStructure t;
    for (const auto& split : connected_components(h)) {
        StructureReport r = classify_structure(split.graph);
        ComponentFacts f;
        f.size = split.graph.n;
        f.reflexive_clique = r.is_reflexive_clique;
        f.irreflexive_biclique = r.is_irreflexive_biclique;
        f.irreflexive_star = r.is_irreflexive_star;
        if (!f.reflexive_clique && !f.irreflexive_biclique) t.hom_tractable = false;
        if (!(f.irreflexive_star || (f.reflexive_clique && f.size <= 2))) t.comp_tractable = false;
        t.inventory.push_back(f);
    }
    return t;
}

}  // namespace

ClassificationReport classify_exact(const Graph& h) {
    TargetStructure t = analyse_target(h);
    ClassificationReport report;
    report.inventory = t.inventory;
    report.hom_tractable = t.hom_tractable;
    report.comp_tractable = t.comp_tractable;
    ExactLabel hom_label = t.hom_tractable ? ExactLabel::FP : ExactLabel::SharpPComplete;
    ExactLabel comp_label = t.comp_tractable ? ExactLabel::FP : ExactLabel::SharpPComplete;
    for (Problem p : kAllProblems) {
        bool is_comp = p == Problem::Comp || p == Problem::LComp;
        report.exact.emplace_back(p, is_comp ? comp_label : hom_label);
    }
    report.approx = classify_approx(h);
    report.exact_rule_hom = "components-all-reflexive-cliques-or-irreflexive-bicliques";
    report.exact_rule_comp = "components-all-irreflexive-stars-or-reflexive-cliques-size-le-2";
    report.approx_rule = "connected-reflexive-clique-or-irreflexive-biclique";
    return report;
}

ApproxLabel classify_approx(const Graph& h) {
    if (h.empty()) return ApproxLabel::Fpras;  // trivially exactly countable
    if (!is_connected(h)) return ApproxLabel::OpenDisconnected;
    StructureReport r = classify_structure(h);
    return (r.is_reflexive_clique || r.is_irreflexive_biclique) ? ApproxLabel::Fpras
                                                                : ApproxLabel::BisHard;
}

std::string select_method(Problem problem, const Graph& g, const Graph& h, bool has_lists) {
    TargetStructure t = analyse_target(h);
    switch (problem) {
        case Problem::Hom:
        case Problem::LHom:
        case Problem::Ret:
            return t.hom_tractable ? "tractable-formula" : "brute";
        case Problem::SHom:
        case Problem::LSHom:
            return t.hom_tractable ? "inclusion-exclusion" : "brute";
        case Problem::Comp:
        case Problem::LComp:
            if (t.comp_tractable) return "moebius";
            if (h.n <= kDefaultDecompBound) {
                if (!has_lists && !h.empty() && is_connected(h) && !g.empty() && is_connected(g))
                    return "decomposition";
                return "moebius";
            }
            return "brute";
    }
    return "brute";
}

CountOutcome run_count(const CountRequest& request) {
    const Graph& g = request.g;
    const Graph& h = request.h;
    BruteOptions brute_opts{request.node_budget};
    std::string method = request.method;
    if (method == "auto") method = select_method(request.problem, g, h, !request.lists.is_full());

    ListAssignment lists = request.lists;
    if (request.problem == Problem::Ret) {
        // retraction = list homomorphism with anchors pinned
        if (!induced_copy_check(g, request.anchors, h))
            throw PreconditionError("retraction: anchors do not induce a copy of the target");
        lists = ListAssignment::full(g.n, h.n);
        for (std::size_t i = 0; i < request.anchors.size(); ++i)
            lists.masks[request.anchors[i]] = std::uint64_t(1) << i;
    }

    // closed formulas where the (sub)target admits them, backtracking else
    HomSolver inner_hom = [&](const Graph& gg, const Graph& hh, const ListAssignment& ll) {
        if (is_hom_tractable_target(hh)) return count_hom_tractable(gg, hh, ll);
        return count_hom(gg, hh, ll, brute_opts);
    };

    CountOutcome out;
    out.method_used = method;
    switch (request.problem) {
        case Problem::Hom:
        case Problem::LHom:
        case Problem::Ret:
            if (method == "tractable-formula")
                out.value = count_hom_tractable(g, h, lists);
            else if (method == "brute")
                out.value = count_hom(g, h, lists, brute_opts);
            else
                throw PreconditionError("unknown method '" + method + "' for this problem");
            return out;
        case Problem::SHom:
        case Problem::LSHom:
            if (method == "inclusion-exclusion")
                out.value = sur_via_inclusion_exclusion(g, h, lists, inner_hom);
            else if (method == "configurations")
                out.value = sur_via_configurations(g, h, lists, inner_hom);
            else if (method == "brute")
                out.value = count_sur(g, h, lists, brute_opts);
            else
                throw PreconditionError("unknown method '" + method + "' for this problem");
            return out;
        case Problem::Comp:
        case Problem::LComp:
            if (method == "decomposition") {
                if (!lists.is_full())
                    throw PreconditionError("the decomposition route does not take lists");
                DecompositionTable table = build_table(h, request.decomp_bound);
                out.value = comp_via_decomposition(g, table, [&](const Graph& gg, const Graph& hh) {
                    return inner_hom(gg, hh, ListAssignment::full(gg.n, hh.n));
                });
            } else if (method == "moebius") {
                out.value = comp_via_moebius(g, h, lists, inner_hom, request.decomp_bound);
            } else if (method == "brute") {
                out.value = count_comp(g, h, lists, brute_opts);
            } else {
                throw PreconditionError("unknown method '" + method + "' for this problem");
            }
            return out;
    }
    throw PreconditionError("unhandled problem");
}

}  // namespace surjcount
