#pragma once

#include <string>

#include "json.hpp"

#include "surjcount/bigint.hpp"
#include "surjcount/classifier.hpp"
#include "surjcount/decomposition.hpp"
#include "surjcount/graph.hpp"

namespace surjcount {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Reads a graph file in either accepted format.
Graph load_graph_file(const std::string& path);
std::string read_text_file(const std::string& path);

nlohmann::json table_to_json(const DecompositionTable& table);
std::string table_to_text(const DecompositionTable& table);

nlohmann::json classification_to_json(const ClassificationReport& report);

}  // namespace surjcount
