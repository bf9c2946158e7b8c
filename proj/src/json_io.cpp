#include "surjcount/json_io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "surjcount/errors.hpp"

namespace surjcount {

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) { return parse_graph(j.dump()); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Graph load_graph_file(const std::string& path) { return parse_graph(read_text_file(path)); }

nlohmann::json table_to_json(const DecompositionTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : table.entries) {
        entries.push_back({{"graph", graph_to_json(e.representative)},
                           {"mu", to_decimal(e.mu)},
                           {"lambda", to_decimal(e.lambda)}});
    }
    return {{"target", graph_to_json(table.target)}, {"entries", entries}};
}

std::string table_to_text(const DecompositionTable& table) {
    std::ostringstream out;
    out << "decomposition of target (n=" << table.target.n
        << ", edges=" << table.target.edges.size() << ")\n";
    out << std::left << std::setw(6) << "#" << std::setw(4) << "n" << std::setw(28) << "edges"
        << std::setw(8) << "mu" << "lambda\n";
    int idx = 1;
    for (const auto& e : table.entries) {
        std::ostringstream edges;
        for (const auto& [u, v] : e.representative.edges) edges << u << "-" << v << " ";
        out << std::left << std::setw(6) << idx++ << std::setw(4) << e.representative.n
            << std::setw(28) << edges.str() << std::setw(8) << to_decimal(e.mu)
            << to_decimal(e.lambda) << "\n";
    }
    return out.str();
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
    nlohmann::json exact = nlohmann::json::object();
    for (const auto& [problem, label] : report.exact) {
        std::string rule = (problem == Problem::Comp || problem == Problem::LComp)
                               ? report.exact_rule_comp
                               : report.exact_rule_hom;
        exact[problem_name(problem)] = {{"label", label_name(label)}, {"rule", rule}};
    }
    nlohmann::json inventory = nlohmann::json::array();
    for (const auto& f : report.inventory) {
        inventory.push_back({{"size", f.size},
                             {"reflexiveClique", f.reflexive_clique},
                             {"irreflexiveBiclique", f.irreflexive_biclique},
                             {"irreflexiveStar", f.irreflexive_star}});
    }
    return {{"exact", exact},
            {"approx", {{"label", label_name(report.approx)}, {"rule", report.approx_rule}}},
            {"components", inventory}};
}

}  // namespace surjcount
