#pragma once

#include <optional>
#include <string>
#include <vector>

#include "surjcount/bigint.hpp"
#include "surjcount/graph.hpp"
#include "surjcount/lists.hpp"

namespace surjcount {

enum class Problem { Hom, LHom, SHom, LSHom, Comp, LComp, Ret };

inline constexpr Problem kAllProblems[] = {Problem::Hom,  Problem::LHom,  Problem::SHom,
                                           Problem::LSHom, Problem::Comp, Problem::LComp,
                                           Problem::Ret};

std::string problem_name(Problem p);
std::optional<Problem> parse_problem(const std::string& name);

enum class ExactLabel { FP, SharpPComplete };
enum class ApproxLabel { Fpras, BisHard, OpenDisconnected };

std::string label_name(ExactLabel l);
std::string label_name(ApproxLabel l);

struct ComponentFacts {
    int size = 0;
    bool reflexive_clique = false;
    bool irreflexive_biclique = false;
    bool irreflexive_star = false;
};

struct ClassificationReport {
    std::vector<std::pair<Problem, ExactLabel>> exact;
    ApproxLabel approx = ApproxLabel::OpenDisconnected;
    std::vector<ComponentFacts> inventory;
    bool hom_tractable = false;   // every component reflexive clique / irreflexive biclique
    bool comp_tractable = false;  // every component irreflexive star / reflexive clique <= 2
    std::string exact_rule_hom;   // rule identifiers emitted with the labels
    std::string exact_rule_comp;
    std::string approx_rule;
};

/// Exact-counting complexity labels for every problem, from the structure of
/// H alone.
ClassificationReport classify_exact(const Graph& h);

/// FPRAS / hardness label for approximate counting; only connected targets
/// are within the dichotomy, disconnected ones are reported open.
ApproxLabel classify_approx(const Graph& h);

/// Picks the algorithm route for one problem instance. The identifier is one
/// of: tractable-formula, inclusion-exclusion, decomposition, moebius, brute.
std::string select_method(Problem problem, const Graph& g, const Graph& h, bool has_lists);

/// Runs the named method (or "auto" via select_method) on an instance.
/// Retraction instances carry anchors.
struct CountRequest {
    Problem problem = Problem::Hom;
    Graph g;
    Graph h;
    ListAssignment lists;           // always sized for (g,h)
    std::vector<int> anchors;      // retraction only
    std::string method = "auto";
    std::uint64_t node_budget = 10'000'000'000ULL;
    int decomp_bound = 8;
};

struct CountOutcome {
    Bigint value;
    std::string method_used;
};

CountOutcome run_count(const CountRequest& request);

}  // namespace surjcount
