#include "surjcount/enumerate.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "surjcount/errors.hpp"

namespace surjcount {

namespace {

// All non-loop vertex pairs of an n-vertex graph, fixed order.
std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.emplace_back(i, j);
    return out;
}

}  // namespace

std::vector<Graph> all_graphs_on(int n, bool allow_loops, bool require_connected) {
    if (n < 0) throw PreconditionError("all_graphs_on: negative n");
    if (n == 0) return require_connected ? std::vector<Graph>{} : std::vector<Graph>{Graph{}};
    auto pairs = vertex_pairs(n);
    int pairBits = static_cast<int>(pairs.size());
    int loopBits = allow_loops ? n : 0;
    if (pairBits + loopBits > 26)
        throw PreconditionError("all_graphs_on: enumeration space too large");
    std::map<CanonicalKey, Graph> classes;
    for (std::uint32_t mask = 0; mask < (1u << (pairBits + loopBits)); ++mask) {
        Graph g;
        g.n = n;
        for (int b = 0; b < pairBits; ++b)
            if (mask & (1u << b)) g.edges.push_back(pairs[b]);
        for (int b = 0; b < loopBits; ++b)
            if (mask & (1u << (pairBits + b))) g.edges.emplace_back(b, b);
        std::sort(g.edges.begin(), g.edges.end());
        if (require_connected && !is_connected(g)) continue;
        CanonicalKey key = canonical_form(g);
        classes.emplace(key, std::move(g));
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> all_graphs_up_to(int max_n, bool allow_loops, bool require_connected,
                                    bool include_empty) {
    std::vector<Graph> out;
    if (include_empty) out.push_back(Graph{});
    for (int n = 1; n <= max_n; ++n) {
        auto batch = all_graphs_on(n, allow_loops, require_connected);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

void enumerate_connected_graphs(int max_n, GraphClassConstraint constraint,
                                const std::function<bool(const RootedGraph&)>& visit, int bound) {
    if (max_n > bound)
        throw PreconditionError("enumerate_connected_graphs: max_n exceeds canonicalization bound");
    for (int n = 1; n <= max_n; ++n) {
        for (const Graph& rep : all_graphs_on(n, /*allow_loops=*/false, /*require_connected=*/true)) {
            if (constraint == GraphClassConstraint::BipartiteWithEdge) {
                if (rep.edges.empty()) continue;
                if (!bipartition(rep, nullptr)) continue;
            }
            // one rooted representative per automorphism orbit, on the
            // canonical relabelling so the stream is deterministic
            Graph canon = canonical_representative(rep, bound);
            for (const auto& orbit : automorphism_orbits(canon, bound)) {
                RootedGraph rg{canon, orbit.front()};
                if (!visit(rg)) return;
            }
        }
    }
}

std::vector<RootedGraph> enumerate_connected_graphs(int max_n, GraphClassConstraint constraint,
                                                    int bound) {
    std::vector<RootedGraph> out;
    enumerate_connected_graphs(
        max_n, constraint,
        [&](const RootedGraph& rg) {
            out.push_back(rg);
            return true;
        },
        bound);
    return out;
}

}  // namespace surjcount
