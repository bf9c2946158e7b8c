#include <chrono>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "surjcount/approx.hpp"
#include "surjcount/brute.hpp"
#include "surjcount/classifier.hpp"
#include "surjcount/decomposition.hpp"
#include "surjcount/errors.hpp"
#include "surjcount/interpolation.hpp"
#include "surjcount/json_io.hpp"
#include "surjcount/polyalgo.hpp"
#include "surjcount/verify.hpp"

namespace {

using namespace surjcount;
using nlohmann::json;

constexpr const char* kSchema = "surjcount/1";

// exit codes: 0 ok, 1 internal, 2 parse/usage, 3 precondition, 4 budget,
// 5 verification failure
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitBudget = 4;
constexpr int kExitVerify = 5;

struct GlobalOptions {
    std::string format = "text";
    std::uint64_t budget = 10'000'000'000ULL;
    int bound = 8;
};

void emit(const GlobalOptions& opts, const json& payload, const std::string& text) {
    if (opts.format == "json")
        std::cout << payload.dump(2) << "\n";
    else
        std::cout << text;
}

Bigint parse_decimal_digits(std::string digits, bool negative) {
    // leading zeros would switch the bigint parser into octal mode
    auto first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("bad number '" + digits + "'");
    Bigint value(digits);
    return negative ? -value : value;
}

Rational parse_rational(std::string text) {
    // accepts "p/q" and decimal strings
    bool negative = !text.empty() && text.front() == '-';
    if (negative) text.erase(0, 1);
    if (auto slash = text.find('/'); slash != std::string::npos) {
        Bigint num = parse_decimal_digits(text.substr(0, slash), negative);
        Bigint den = parse_decimal_digits(text.substr(slash + 1), false);
        if (den == 0) throw ParseError("zero denominator in '" + text + "'");
        return Rational(num, den);
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_decimal_digits(text, negative));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    Bigint den = bigint_pow(10, text.size() - dot - 1);
    return Rational(parse_decimal_digits(digits, negative), den);
}

std::string rational_string(const Rational& r) {
    Bigint num = boost::multiprecision::numerator(r);
    Bigint den = boost::multiprecision::denominator(r);
    if (den == 1) return to_decimal(num);
    return to_decimal(num) + "/" + to_decimal(den);
}

std::vector<int> parse_anchor_list(const std::string& text) {
    std::vector<int> anchors;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            anchors.push_back(std::stoi(item));
        } catch (...) {
            throw ParseError("bad anchor '" + item + "'");
        }
    }
    return anchors;
}

int cmd_count(const GlobalOptions& g_opts, const std::string& problem_name_arg,
              const std::string& target_path, const std::string& input_path,
              const std::string& lists_path, const std::string& anchors_arg,
              const std::string& method) {
    auto problem = parse_problem(problem_name_arg);
    if (!problem) throw ParseError("unknown problem '" + problem_name_arg + "'");
    CountRequest request;
    request.problem = *problem;
    request.h = load_graph_file(target_path);
    request.g = load_graph_file(input_path);
    request.lists = lists_path.empty()
                        ? ListAssignment::full(request.g.n, request.h.n)
                        : parse_lists_json(read_text_file(lists_path), request.g.n, request.h.n);
    if (!anchors_arg.empty()) request.anchors = parse_anchor_list(anchors_arg);
    request.method = method;
    request.node_budget = g_opts.budget;
    request.decomp_bound = g_opts.bound;

    ClassificationReport classification = classify_exact(request.h);
    std::string rule;
    std::string label;
    for (const auto& [p, l] : classification.exact)
        if (p == *problem) {
            label = label_name(l);
            rule = (p == Problem::Comp || p == Problem::LComp) ? classification.exact_rule_comp
                                                               : classification.exact_rule_hom;
        }

    auto started = std::chrono::steady_clock::now();
    CountOutcome outcome;
    std::string cross_note;
    if (method == "cross-check") {
        // run the auto route and the brute oracle, insist they agree
        CountRequest first = request;
        first.method = "auto";
        CountRequest second = request;
        second.method = "brute";
        CountOutcome a = run_count(first);
        CountOutcome b = run_count(second);
        if (a.value != b.value)
            throw SolveError("cross-check mismatch: " + to_decimal(a.value) + " vs " +
                             to_decimal(b.value));
        outcome = a;
        cross_note = "cross-checked against brute (" + to_decimal(b.value) + ")";
    } else {
        outcome = run_count(request);
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    json payload{{"schema", kSchema},
                 {"command", "count"},
                 {"problem", problem_name(*problem)},
                 {"method", outcome.method_used},
                 {"count", to_decimal(outcome.value)},
                 {"timeMs", elapsed},
                 {"complexity", {{"label", label}, {"rule", rule}}}};
    if (!cross_note.empty()) payload["crossCheck"] = cross_note;
    std::ostringstream text;
    text << problem_name(*problem) << " = " << to_decimal(outcome.value) << " (method "
         << outcome.method_used << ", " << elapsed << " ms)";
    if (!cross_note.empty()) text << " [" << cross_note << "]";
    text << "\n";
    emit(g_opts, payload, text.str());
    return 0;
}

int cmd_classify(const GlobalOptions& g_opts, const std::string& target_path) {
    Graph h = load_graph_file(target_path);
    ClassificationReport report = classify_exact(h);
    json payload = classification_to_json(report);
    payload["schema"] = kSchema;
    payload["command"] = "classify";
    std::ostringstream text;
    for (const auto& [problem, label] : report.exact)
        text << problem_name(problem) << ": " << label_name(label) << "\n";
    text << "approx: " << label_name(report.approx) << "\n";
    emit(g_opts, payload, text.str());
    return 0;
}

int cmd_decompose(const GlobalOptions& g_opts, const std::string& target_path) {
    Graph h = load_graph_file(target_path);
    DecompositionTable table = build_table(h, g_opts.bound);
    json payload = table_to_json(table);
    payload["schema"] = kSchema;
    payload["command"] = "decompose";
    emit(g_opts, payload, table_to_text(table));
    return 0;
}

int cmd_approx(const GlobalOptions& g_opts, const std::string& target_path,
               const std::string& input_path, const std::string& epsilon_arg,
               const std::string& delta_arg, std::optional<std::uint64_t> seed_arg, int runs,
               int threads) {
    Graph h = load_graph_file(target_path);
    Graph g = load_graph_file(input_path);
    ApproxLabel label = classify_approx(h);
    if (label != ApproxLabel::Fpras)
        throw PreconditionError("no estimator for this target: approximate counting label is " +
                                label_name(label));
    Rational epsilon = parse_rational(epsilon_arg);
    Rational delta = parse_rational(delta_arg);
    std::uint64_t seed;
    bool generated = false;
    if (seed_arg) {
        seed = *seed_arg;
    } else {
        seed = std::random_device{}();
        generated = true;
        std::cerr << "note: no --seed given, using generated seed " << seed << "\n";
    }
    ApproxOptions opts;
    opts.threads = threads;

    // ground truth for the within-epsilon report
    CountRequest truth_request;
    truth_request.problem = Problem::Comp;
    truth_request.g = g;
    truth_request.h = h;
    truth_request.lists = ListAssignment::full(g.n, h.n);
    truth_request.node_budget = g_opts.budget;
    truth_request.decomp_bound = g_opts.bound;
    std::optional<Bigint> truth;
    try {
        truth = run_count(truth_request).value;
    } catch (const BudgetError&) {
        // instance too large to verify exactly; report estimates only
    }

    json run_list = json::array();
    int within = 0;
    Rational last_value;
    Bigint m_used, c_used;
    for (int run = 0; run < runs; ++run) {
        std::uint64_t run_seed = runs == 1 ? seed : mix64(seed + static_cast<std::uint64_t>(run));
        EstimateResult est = mc_estimate_comp(g, h, epsilon, delta, run_seed, opts);
        last_value = est.value;
        m_used = est.sample_count;
        c_used = est.bound_constant;
        bool ok = false;
        if (truth) {
            Rational err = est.value - Rational(*truth);
            if (err < 0) err = -err;
            ok = err <= epsilon * Rational(*truth);
            within += ok;
        }
        json entry{{"seed", run_seed}, {"estimate", rational_string(est.value)}};
        if (truth) entry["withinEpsilon"] = ok;
        run_list.push_back(entry);
    }
    json payload{{"schema", kSchema},
                 {"command", "approx"},
                 {"epsilon", rational_string(epsilon)},
                 {"delta", rational_string(delta)},
                 {"seed", seed},
                 {"seedGenerated", generated},
                 {"sampleCount", to_decimal(m_used)},
                 {"boundConstant", to_decimal(c_used)},
                 {"runs", run_list}};
    if (truth) {
        payload["exact"] = to_decimal(*truth);
        payload["withinEpsilonRate"] = double(within) / runs;
    }
    std::ostringstream text;
    text << "estimate = " << rational_string(last_value) << " (m=" << to_decimal(m_used)
         << ", c=" << to_decimal(c_used) << ")\n";
    if (truth)
        text << "exact = " << to_decimal(*truth) << ", within-eps rate " << within << "/" << runs
             << "\n";
    emit(g_opts, payload, text.str());
    return 0;
}

json trace_to_json(const OracleTrace& trace) {
    json calls = json::array();
    for (const auto& c : trace.calls)
        calls.push_back(
            {{"digest", c.digest}, {"n", c.n}, {"edges", c.edges}, {"count", to_decimal(c.value)}});
    json matrix = json::array();
    for (const auto& row : trace.matrix) {
        json r = json::array();
        for (const auto& v : row) r.push_back(to_decimal(v));
        matrix.push_back(r);
    }
    json rhs = json::array(), solution = json::array();
    for (const auto& v : trace.rhs) rhs.push_back(to_decimal(v));
    for (const auto& v : trace.solution) solution.push_back(to_decimal(v));
    return {{"calls", calls}, {"matrix", matrix}, {"rhs", rhs}, {"solution", solution}};
}

int cmd_reduce(const GlobalOptions& g_opts, const std::string& name,
               const std::string& target_path, const std::string& input_path,
               const std::string& instance_path, int vertex, int max_n) {
    BruteOptions brute_opts{g_opts.budget};
    OracleTrace trace;
    Bigint value;
    std::string result_name;

    if (name == "subset-sum") {
        // instance JSON: {"a": [..], "b": k}; solved through the
        // surjective-count bridge with an audit of the one oracle call
        if (instance_path.empty()) throw ParseError("subset-sum requires --instance");
        json spec_json;
        try {
            spec_json = json::parse(read_text_file(instance_path));
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid instance JSON: ") + e.what());
        }
        if (!spec_json.contains("a") || !spec_json["a"].is_array() ||
            !spec_json.contains("b") || !spec_json["b"].is_number_integer())
            throw ParseError("instance JSON requires fields \"a\" (array) and \"b\" (integer)");
        SubsetSumInstance inst;
        for (const auto& x : spec_json["a"]) {
            if (!x.is_number_integer()) throw ParseError("instance elements must be integers");
            inst.a.push_back(x.get<int>());
        }
        inst.b = spec_json["b"].get<int>();
        PairSolver sur = [&](const Graph& gg, const Graph& hh) {
            Bigint s = sur_via_inclusion_exclusion(
                gg, hh, ListAssignment::full(gg.n, hh.n),
                [&](const Graph& a, const Graph& b, const ListAssignment& l) {
                    if (is_hom_tractable_target(b)) return count_hom_tractable(a, b, l);
                    return count_hom(a, b, l, brute_opts);
                });
            trace.calls.push_back({graph_digest(gg), gg.n, static_cast<int>(gg.edges.size()), s});
            return s;
        };
        value = subset_sum_via_sur(inst, sur);
        json payload = trace_to_json(trace);
        payload["schema"] = kSchema;
        payload["command"] = "reduce";
        payload["name"] = name;
        payload["value"] = to_decimal(value);
        emit(g_opts, payload, "subset count = " + to_decimal(value) + "\n");
        return 0;
    }

    if (target_path.empty() || input_path.empty())
        throw ParseError("this reduction requires --target and --input");
    Graph h = load_graph_file(target_path);
    Graph g = load_graph_file(input_path);

    CountOracle comp_oracle = [&](const Graph& padded) {
        return count_comp(padded, h, ListAssignment::full(padded.n, h.n), brute_opts);
    };
    CountOracle sur_oracle = [&](const Graph& padded) {
        return count_sur(padded, h, ListAssignment::full(padded.n, h.n), brute_opts);
    };

    if (name == "strip-size1") {
        value = strip_size1_interpolation(g, h, comp_oracle, &trace);
        result_name = "comp to the stripped target";
    } else if (name == "hom-via-comp") {
        value = recover_hom_via_comp(g, h, comp_oracle, &trace);
        result_name = "hom";
    } else if (name == "hom-via-sur") {
        value = recover_hom_via_sur(g, h, sur_oracle, &trace);
        result_name = "hom";
    } else if (name == "component-replacement") {
        auto result = component_replacement_count(g, h, comp_oracle, &trace);
        value = result.comp;
        result_name = "comp onto the selected component";
    } else if (name == "hom-via-z") {
        // weighted set = the target's own decomposition; oracle = compaction counts
        DecompositionTable table = build_table(h, g_opts.bound);
        WeightedGraphSet ws;
        for (const auto& e : table.entries) {
            ws.members.push_back(e.representative);
            ws.weights.push_back(e.lambda);
        }
        auto reports = edge_deleted_weight_check(h, g_opts.bound);
        Graph target_minus;
        target_minus.n = h.n;
        for (const auto& e : h.edges)
            if (e != reports.front().edge) target_minus.edges.push_back(e);
        CountOracle z_oracle = [&](const Graph& padded) {
            if (padded.empty()) return Bigint(0);
            return count_comp(padded, h, ListAssignment::full(padded.n, h.n), brute_opts);
        };
        value = recover_hom_via_z_auto(g, vertex, ws, target_minus, z_oracle, max_n, &trace);
        result_name = "hom to the edge-deleted target";
    } else {
        throw ParseError("unknown reduction '" + name + "'");
    }

    json payload = trace_to_json(trace);
    payload["schema"] = kSchema;
    payload["command"] = "reduce";
    payload["name"] = name;
    payload["value"] = to_decimal(value);
    std::ostringstream text;
    text << result_name << " = " << to_decimal(value) << " (" << trace.calls.size()
         << " oracle calls)\n";
    emit(g_opts, payload, text.str());
    return 0;
}

int cmd_verify(const GlobalOptions& g_opts, const std::string& suite, int max_n,
               std::uint64_t seed) {
    auto results = verify_suite(suite, max_n, seed);
    json items = json::array();
    bool all_pass = true;
    std::ostringstream text;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        items.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        text << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) text << " - " << r.detail;
        text << "\n";
    }
    json payload{{"schema", kSchema},
                 {"command", "verify"},
                 {"suite", suite},
                 {"pass", all_pass},
                 {"properties", items}};
    emit(g_opts, payload, text.str());
    return all_pass ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and approximate counting of graph homomorphisms with surjectivity "
                 "constraints"};
    app.require_subcommand(1);
    GlobalOptions g_opts;
    if (const char* env = std::getenv("SURJCOUNT_BUDGET")) g_opts.budget = std::strtoull(env, nullptr, 10);
    app.add_option("--format", g_opts.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--budget", g_opts.budget, "enumeration budget in partial assignments");
    app.add_option("--bound", g_opts.bound, "canonicalization/decomposition size bound");

    auto* count = app.add_subcommand("count", "exact counting");
    std::string problem, target_path, input_path, lists_path, anchors_arg, method = "auto";
    count->add_option("--problem", problem, "hom|lhom|shom|lshom|comp|lcomp|ret")->required();
    count->add_option("--target", target_path, "target graph H file")->required();
    count->add_option("--input", input_path, "input graph G file")->required();
    count->add_option("--lists", lists_path, "list assignment JSON file");
    count->add_option("--anchors", anchors_arg, "comma-separated retraction anchors");
    count->add_option("--method", method,
                      "auto|brute|tractable-formula|inclusion-exclusion|configurations|moebius|"
                      "decomposition|cross-check");

    auto* classify = app.add_subcommand("classify", "complexity labels for a target graph");
    std::string classify_target;
    classify->add_option("--target", classify_target, "target graph H file")->required();

    auto* decompose = app.add_subcommand("decompose", "subgraph decomposition table");
    std::string decompose_target;
    decompose->add_option("--target", decompose_target, "target graph H file")->required();

    auto* approx = app.add_subcommand("approx", "Monte Carlo compaction estimate");
    std::string approx_target, approx_input, eps_arg = "0.2", delta_arg = "0.25";
    std::optional<std::uint64_t> seed_arg;
    int runs = 1, threads = 0;
    approx->add_option("--target", approx_target, "target graph H file")->required();
    approx->add_option("--input", approx_input, "input graph G file")->required();
    approx->add_option("--epsilon", eps_arg, "relative accuracy in (0,1)");
    approx->add_option("--delta", delta_arg, "failure probability in (0,1)");
    approx->add_option("--seed", seed_arg, "64-bit seed (generated and logged when absent)");
    approx->add_option("--runs", runs, "repeat-and-report run count");
    approx->add_option("--threads", threads, "sampling threads (0 = auto)");

    auto* reduce = app.add_subcommand("reduce", "run a counting reduction with a trace");
    std::string reduce_name, reduce_target, reduce_input;
    int reduce_vertex = 0, reduce_maxn = 6;
    std::string reduce_instance;
    reduce->add_option("--name", reduce_name,
                       "strip-size1|hom-via-comp|hom-via-sur|component-replacement|hom-via-z|"
                       "subset-sum")
        ->required();
    reduce->add_option("--target", reduce_target, "target graph H file");
    reduce->add_option("--input", reduce_input, "input graph G file");
    reduce->add_option("--instance", reduce_instance, "subset-sum instance JSON file");
    reduce->add_option("--vertex", reduce_vertex, "distinguished input vertex (hom-via-z)");
    reduce->add_option("--maxN", reduce_maxn, "distinguisher search size cap (hom-via-z)");

    auto* verify = app.add_subcommand("verify", "run a property battery");
    std::string suite;
    int verify_maxn = 4;
    std::uint64_t verify_seed = 20240817;
    verify->add_option("--suite", suite, "decomposition|interpolation|formulas|approx|appendix")
        ->required();
    verify->add_option("--maxN", verify_maxn, "sweep size");
    verify->add_option("--seed", verify_seed, "seed for randomized properties");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
        app.exit(e);
        return kExitParse;
    }

    try {
        if (*count)
            return cmd_count(g_opts, problem, target_path, input_path, lists_path, anchors_arg,
                             method);
        if (*classify) return cmd_classify(g_opts, classify_target);
        if (*decompose) return cmd_decompose(g_opts, decompose_target);
        if (*approx)
            return cmd_approx(g_opts, approx_target, approx_input, eps_arg, delta_arg, seed_arg,
                              runs, threads);
        if (*reduce)
            return cmd_reduce(g_opts, reduce_name, reduce_target, reduce_input, reduce_instance,
                              reduce_vertex, reduce_maxn);
        if (*verify) return cmd_verify(g_opts, suite, verify_maxn, verify_seed);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
