#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "surjcount/graph.hpp"

namespace surjcount {

/// Structural facts about a target graph. The biclique/star flags follow the
/// literal definitions: a biclique admits a partition (U,V) with every cross
/// pair an edge (V may be empty), a star additionally has a side of size one.
/// A one-vertex irreflexive graph is a star.
struct StructureReport {
    bool connected = false;
    bool reflexive = false;
    bool irreflexive = false;
    bool is_reflexive_clique = false;
    bool is_irreflexive_biclique = false;
    bool is_irreflexive_star = false;
    std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition_sides;
    std::optional<std::pair<int, int>> sides_sizes;  // (l, r) with l <= r
    int size1_components = 0;
};

StructureReport classify_structure(const Graph& h);

}  // namespace surjcount
