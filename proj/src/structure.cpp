#include "surjcount/structure.hpp"

#include <algorithm>

namespace surjcount {

StructureReport classify_structure(const Graph& h) {
    StructureReport r;
    r.connected = is_connected(h);
    r.reflexive = h.is_reflexive();
    r.irreflexive = h.is_irreflexive();

    if (r.reflexive) {
        bool clique = true;
        for (int u = 0; u < h.n && clique; ++u)
            for (int v = u + 1; v < h.n && clique; ++v)
                if (!h.has_edge(u, v)) clique = false;
        r.is_reflexive_clique = clique;
    }

    Graph stripped = strip_loops(h);
    std::vector<int> side;
    bool bip = bipartition(stripped, &side);
    if (bip) {
        std::vector<int> u, v;
        for (int x = 0; x < h.n; ++x) (side[x] == 0 ? u : v).push_back(x);
        int l = static_cast<int>(std::min(u.size(), v.size()));
        int rr = static_cast<int>(std::max(u.size(), v.size()));
        r.sides_sizes = {l, rr};
        r.bipartition_sides = {u, v};
    }

    if (r.irreflexive && bip) {
        if (h.non_loop_edge_count() == 0) {
            // partition (V(H), {}) is vacuously complete
            r.is_irreflexive_biclique = true;
            r.is_irreflexive_star = h.n == 1;
            if (h.n >= 1) {
                r.bipartition_sides = {std::vector<int>{}, std::vector<int>{}};
                auto& [u, v] = *r.bipartition_sides;
                for (int x = 0; x < h.n; ++x) u.push_back(x);
                r.sides_sizes = {0, h.n};
            }
        } else if (r.connected) {
            const auto& [u, v] = *r.bipartition_sides;
            bool complete = h.non_loop_edge_count() ==
                            static_cast<int>(u.size()) * static_cast<int>(v.size());
            if (complete) {
                for (int a : u)
                    for (int b : v)
                        if (!h.has_edge(a, b)) complete = false;
            }
            r.is_irreflexive_biclique = complete;
            r.is_irreflexive_star =
                complete && std::min(u.size(), v.size()) == 1;
        }
    }

    for (const auto& comp : connected_components(h))
        if (comp.graph.n == 1) ++r.size1_components;
    return r;
}

}  // namespace surjcount
