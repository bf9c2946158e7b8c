#include "surjcount/brute.hpp"

#include <algorithm>
#include <unordered_map>

#include "surjcount/errors.hpp"

namespace surjcount {

namespace {

struct TargetData {
    int q = 0;
    std::vector<std::uint64_t> adj;  // adj[w] bit x iff {w,x} in E(H); x==w for loops
    std::vector<int> edge_index;     // q*q flat, -1 for non-edges/loops
    int non_loop_edges = 0;

    explicit TargetData(const Graph& h) : q(h.n), adj(h.n, 0), edge_index(size_t(h.n) * h.n, -1) {
        for (const auto& [u, v] : h.edges) {
            adj[u] |= std::uint64_t(1) << v;
            adj[v] |= std::uint64_t(1) << u;
            if (u != v) {
                edge_index[size_t(u) * q + v] = edge_index[size_t(v) * q + u] = non_loop_edges;
                ++non_loop_edges;
            }
        }
    }
};

struct NodeCounter {
    std::uint64_t visited = 0;
    std::uint64_t budget;
    void tick() {
        if (++visited > budget)
            throw BudgetError("enumeration budget exceeded (" + std::to_string(budget) +
                              " partial assignments)");
    }
};

// BFS order of one component plus, per position, the earlier positions that
// are G-neighbours. Connectivity makes every non-root position constrained.
struct ComponentPlan {
    std::vector<int> order;                    // component-local vertex ids
    std::vector<std::vector<int>> earlier;     // indices into `order`
    std::vector<std::uint64_t> lists;          // per position
};

ComponentPlan plan_component(const Graph& comp, const ListAssignment& lists) {
    ComponentPlan plan;
    auto adj = comp.adjacency();
    std::vector<int> posOf(comp.n, -1);
    std::vector<int> queue{0};
    posOf[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        for (int w : adj[u])
            if (posOf[w] == -1) {
                posOf[w] = static_cast<int>(queue.size());
                queue.push_back(w);
            }
    }
    plan.order = queue;
    plan.earlier.resize(comp.n);
    plan.lists.resize(comp.n);
    for (int i = 0; i < comp.n; ++i) {
        int v = plan.order[i];
        plan.lists[i] = lists.masks[v];
        for (int w : adj[v])
            if (posOf[w] < i) plan.earlier[i].push_back(posOf[w]);
    }
    return plan;
}

struct MaskPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ p.second;
        x ^= x >> 29;
        x *= 0xbf58476d1ce4e5b9ULL;
        x ^= x >> 32;
        return static_cast<std::size_t>(x);
    }
};

using Profile = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, Bigint, MaskPairHash>;

// Exhaustively enumerates the list homomorphisms of one component, bucketing
// leaf counts by (used-vertex mask, used-non-loop-edge mask).
void component_profile(const Graph& comp, const ListAssignment& lists, const TargetData& h,
                       bool track_edges, NodeCounter& counter, Profile& out) {
    ComponentPlan plan = plan_component(comp, lists);
    int n = comp.n;
    std::vector<int> assign(n, -1);
    std::vector<int> use_cnt(h.q, 0);
    std::vector<int> edge_cnt(h.non_loop_edges, 0);
    std::uint64_t vmask = 0, emask = 0;

    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            out[{vmask, emask}] += 1;
            return;
        }
        std::uint64_t cand = plan.lists[pos];
        for (int e : plan.earlier[pos]) cand &= h.adj[assign[e]];
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            counter.tick();
            assign[pos] = w;
            if (use_cnt[w]++ == 0) vmask |= std::uint64_t(1) << w;
            int touched = 0;
            if (track_edges) {
                for (int e : plan.earlier[pos]) {
                    int a = assign[e];
                    if (a == w) continue;  // loop image; never needs covering
                    int idx = h.edge_index[size_t(a) * h.q + w];
                    if (edge_cnt[idx]++ == 0) emask |= std::uint64_t(1) << idx;
                    ++touched;
                }
            }
            self(self, pos + 1);
            if (track_edges && touched) {
                for (int e : plan.earlier[pos]) {
                    int a = assign[e];
                    if (a == w) continue;
                    int idx = h.edge_index[size_t(a) * h.q + w];
                    if (--edge_cnt[idx] == 0) emask &= ~(std::uint64_t(1) << idx);
                }
            }
            if (--use_cnt[w] == 0) vmask &= ~(std::uint64_t(1) << w);
            assign[pos] = -1;
        }
    };
    rec(rec, 0);
}

void validate_inputs(const Graph& g, const Graph& h, const ListAssignment& lists) {
    if (!g.is_irreflexive()) throw PreconditionError("input graph G must be irreflexive");
    if (h.n > 64) throw PreconditionError("target graph limited to 64 vertices");
    lists.validate(g.n, h.n);
}

// Coverage-profile counting for the whole graph: per-component exhaustive
// profiles combined by mask-union convolution.
Profile graph_profile(const Graph& g, const Graph& h, const ListAssignment& lists,
                      bool track_edges, const BruteOptions& opts) {
    TargetData target(h);
    if (track_edges && target.non_loop_edges > 64)
        throw PreconditionError("target graph limited to 64 non-loop edges");
    NodeCounter counter{0, opts.node_budget};
    Profile acc;
    acc[{0, 0}] = 1;
    for (const auto& split : connected_components(g)) {
        Profile part;
        component_profile(split.graph, lists.select_vertices(split.original_vertex), target,
                          track_edges, counter, part);
        Profile next;
        for (const auto& [ka, va] : acc)
            for (const auto& [kb, vb] : part)
                next[{ka.first | kb.first, ka.second | kb.second}] += va * vb;
        acc = std::move(next);
        if (acc.empty()) break;  // no homomorphism extends through this component
    }
    return acc;
}

}  // namespace

Bigint count_hom(const Graph& g, const Graph& h, const ListAssignment& lists,
                 const BruteOptions& opts) {
    validate_inputs(g, h, lists);
    TargetData target(h);
    NodeCounter counter{0, opts.node_budget};
    Bigint total = 1;
    for (const auto& split : connected_components(g)) {
        Profile part;
        component_profile(split.graph, lists.select_vertices(split.original_vertex), target,
                          /*track_edges=*/false, counter, part);
        Bigint sum = 0;
        for (const auto& [key, cnt] : part) sum += cnt;
        total *= sum;
        if (total == 0) break;
    }
    return total;
}

Bigint count_sur(const Graph& g, const Graph& h, const ListAssignment& lists,
                 const BruteOptions& opts) {
    validate_inputs(g, h, lists);
    Profile acc = graph_profile(g, h, lists, /*track_edges=*/false, opts);
    auto it = acc.find({ListAssignment::full_mask(h.n), 0});
    return it == acc.end() ? Bigint(0) : it->second;
}

Bigint count_comp(const Graph& g, const Graph& h, const ListAssignment& lists,
                  const BruteOptions& opts) {
    validate_inputs(g, h, lists);
    TargetData target(h);
    std::uint64_t fullE = target.non_loop_edges == 64
                              ? ~std::uint64_t(0)
                              : ((std::uint64_t(1) << target.non_loop_edges) - 1);
    Profile acc = graph_profile(g, h, lists, /*track_edges=*/true, opts);
    auto it = acc.find({ListAssignment::full_mask(h.n), fullE});
    return it == acc.end() ? Bigint(0) : it->second;
}

Bigint count_ret(const RetractionInstance& inst, const BruteOptions& opts) {
    if (!induced_copy_check(inst.g, inst.anchors, inst.h))
        throw PreconditionError("retraction instance: anchors do not induce a copy of the target");
    ListAssignment lists = ListAssignment::full(inst.g.n, inst.h.n);
    for (size_t i = 0; i < inst.anchors.size(); ++i)
        lists.masks[inst.anchors[i]] = std::uint64_t(1) << i;
    return count_hom(inst.g, inst.h, lists, opts);
}

Bigint count_anchored_hom(const Graph& g, int v, const Graph& h, int w, const BruteOptions& opts) {
    if (v < 0 || v >= g.n || w < 0 || w >= h.n)
        throw PreconditionError("count_anchored_hom: vertex out of range");
    return count_hom(g, h, ListAssignment::full(g.n, h.n).pin(v, w), opts);
}

Bigint count_anchored_inj(const Graph& g, int v, const Graph& h, int w, const BruteOptions& opts) {
    if (v < 0 || v >= g.n || w < 0 || w >= h.n)
        throw PreconditionError("count_anchored_inj: vertex out of range");
    if (!g.is_irreflexive()) throw PreconditionError("input graph G must be irreflexive");
    if (h.n > 64) throw PreconditionError("target graph limited to 64 vertices");
    if (g.n > h.n) return 0;
    TargetData target(h);
    ListAssignment lists = ListAssignment::full(g.n, h.n).pin(v, w);
    // injectivity couples components, so backtrack over the whole graph
    std::vector<int> order;
    std::vector<std::vector<int>> earlier(g.n);
    std::vector<std::uint64_t> posLists(g.n);
    {
        std::vector<int> posOf(g.n, -1);
        auto adj = g.adjacency();
        for (const auto& split : connected_components(g)) {
            int start = static_cast<int>(order.size());
            order.push_back(split.original_vertex[0]);
            posOf[order.back()] = start;
            for (size_t head = start; head < order.size(); ++head)
                for (int nb : adj[order[head]])
                    if (posOf[nb] == -1) {
                        posOf[nb] = static_cast<int>(order.size());
                        order.push_back(nb);
                    }
        }
        for (int i = 0; i < g.n; ++i) {
            posLists[i] = lists.masks[order[i]];
            for (int nb : adj[order[i]])
                if (posOf[nb] < i) earlier[i].push_back(posOf[nb]);
        }
    }
    NodeCounter counter{0, opts.node_budget};
    std::vector<int> assign(g.n, -1);
    std::uint64_t used = 0;
    Bigint total = 0;
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == g.n) {
            total += 1;
            return;
        }
        std::uint64_t cand = posLists[pos] & ~used;
        for (int e : earlier[pos]) cand &= target.adj[assign[e]];
        while (cand) {
            int x = std::countr_zero(cand);
            cand &= cand - 1;
            counter.tick();
            assign[pos] = x;
            used |= std::uint64_t(1) << x;
            self(self, pos + 1);
            used &= ~(std::uint64_t(1) << x);
            assign[pos] = -1;
        }
    };
    rec(rec, 0);
    return total;
}

}  // namespace surjcount
