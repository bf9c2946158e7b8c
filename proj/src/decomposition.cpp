#include "surjcount/decomposition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>

#include "surjcount/errors.hpp"

namespace surjcount {

namespace {

void check_decomp_input(const Graph& h, int bound) {
    if (h.empty()) throw PreconditionError("decomposition target must be non-empty");
    if (!is_connected(h)) throw PreconditionError("decomposition target must be connected");
    if (h.n > bound)
        throw PreconditionError("decomposition target too large (n=" + std::to_string(h.n) +
                                ", bound=" + std::to_string(bound) + ")");
}

bool connected_with_edges(int nverts, const std::vector<std::pair<int, int>>& edges) {
    if (nverts == 0) return false;
    std::vector<int> parent(nverts);
    for (int i = 0; i < nverts; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = nverts;
    for (const auto& [u, v] : edges) {
        int a = find(u), b = find(v);
        if (a != b) {
            parent[a] = b;
            --comps;
        }
    }
    return comps == 1;
}

}  // namespace

std::vector<SubgraphRef> enumerate_sub(const Graph& h, int bound) {
    check_decomp_input(h, bound);
    std::vector<int> loops;
    std::vector<std::pair<int, int>> non_loop;
    for (const auto& [u, v] : h.edges)
        (u == v ? (void)loops.push_back(u) : (void)non_loop.push_back({u, v}));

    std::vector<SubgraphRef> out;
    for (std::uint32_t vmask = 1; vmask < (1u << h.n); ++vmask) {
        std::vector<int> verts;
        std::vector<int> index(h.n, -1);
        for (int v = 0; v < h.n; ++v)
            if (vmask & (1u << v)) {
                index[v] = static_cast<int>(verts.size());
                verts.push_back(v);
            }
        // loops of H inside the vertex set are forced by loop-heredity
        std::vector<std::pair<int, int>> forced;
        for (int v : loops)
            if (index[v] >= 0) forced.emplace_back(index[v], index[v]);
        std::vector<std::pair<int, int>> optional;
        for (const auto& [u, v] : non_loop)
            if (index[u] >= 0 && index[v] >= 0) optional.emplace_back(index[u], index[v]);
        if (optional.size() > 26) throw BudgetError("enumerate_sub: too many candidate edges");
        int r = static_cast<int>(verts.size());
        for (std::uint32_t emask = 0; emask < (1u << optional.size()); ++emask) {
            std::vector<std::pair<int, int>> edges = forced;
            for (size_t b = 0; b < optional.size(); ++b)
                if (emask & (1u << b)) edges.push_back(optional[b]);
            if (!connected_with_edges(r, edges)) continue;
            std::sort(edges.begin(), edges.end());
            SubgraphRef ref;
            ref.vertices = verts;
            ref.graph.n = r;
            ref.graph.edges = std::move(edges);
            out.push_back(std::move(ref));
        }
    }
    return out;
}

namespace {

// lambda tables are shared across hosts: the weight recursion revisits the
// same subgraph classes over and over.
struct LambdaInfo {
    Graph representative;
    // per class key in S_H: multiplicity and weight
    std::map<CanonicalKey, std::pair<Bigint, Bigint>> table;
    std::map<CanonicalKey, Graph> reps;
};

std::map<CanonicalKey, std::shared_ptr<const LambdaInfo>>& lambda_cache() {
    static std::map<CanonicalKey, std::shared_ptr<const LambdaInfo>> cache;
    return cache;
}

std::mutex& lambda_mutex() {
    static std::mutex m;
    return m;
}

// assumes the cache lock is held
std::shared_ptr<const LambdaInfo> lambda_info_locked(const Graph& h, int bound) {
    CanonicalKey key = canonical_form(h);
    auto& cache = lambda_cache();
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    std::map<CanonicalKey, std::pair<Bigint, Graph>> classes;  // key -> (mu, rep)
    for (auto& sub : enumerate_sub(h, bound)) {
        CanonicalKey k = canonical_form(sub.graph);
        auto it = classes.find(k);
        if (it == classes.end())
            classes.emplace(k, std::make_pair(Bigint(1), std::move(sub.graph)));
        else
            it->second.first += 1;
    }

    std::vector<std::pair<CanonicalKey, std::shared_ptr<const LambdaInfo>>> children;
    for (const auto& [k, entry] : classes)
        if (k != key) children.emplace_back(k, lambda_info_locked(entry.second, bound));

    auto info = std::make_shared<LambdaInfo>();
    info->representative = h;
    for (const auto& [k, entry] : classes) info->reps.emplace(k, entry.second);
    info->table[key] = {Bigint(1), Bigint(1)};  // mu_H(H) = lambda_H(H) = 1
    for (const auto& [k, entry] : classes) {
        if (k == key) continue;
        Bigint lambda = 0;
        for (const auto& [ck, child] : children) {
            const Bigint& mu_child = classes.at(ck).first;
            auto it = child->table.find(k);
            if (it != child->table.end()) lambda -= mu_child * it->second.second;
        }
        info->table[k] = {entry.first, lambda};
    }
    cache.emplace(key, info);
    return info;
}

std::shared_ptr<const LambdaInfo> lambda_info(const Graph& h, int bound) {
    std::lock_guard<std::mutex> lock(lambda_mutex());
    return lambda_info_locked(h, bound);
}

}  // namespace

const DecompositionEntry* DecompositionTable::find(const CanonicalKey& key) const {
    for (const auto& e : entries)
        if (e.key == key) return &e;
    return nullptr;
}

DecompositionTable build_table(const Graph& h, int bound) {
    check_decomp_input(h, bound);
    auto info = lambda_info(h, bound);
    DecompositionTable table;
    table.target = h;
    for (const auto& [key, muLambda] : info->table) {
        DecompositionEntry e;
        e.key = key;
        e.representative = info->reps.count(key) ? info->reps.at(key) : h;
        e.mu = muLambda.first;
        e.lambda = muLambda.second;
        table.entries.push_back(std::move(e));
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const DecompositionEntry& a, const DecompositionEntry& b) {
                  if (a.representative.n != b.representative.n)
                      return a.representative.n > b.representative.n;
                  int ae = a.representative.non_loop_edge_count();
                  int be = b.representative.non_loop_edge_count();
                  if (ae != be) return ae > be;
                  return a.key < b.key;
              });
    return table;
}

Bigint comp_via_decomposition(const Graph& g, const DecompositionTable& table,
                              const PairSolver& hom_solver) {
    if (g.empty()) throw PreconditionError("comp_via_decomposition: G must be non-empty");
    if (!g.is_irreflexive()) throw PreconditionError("comp_via_decomposition: G must be irreflexive");
    if (!is_connected(g)) throw PreconditionError("comp_via_decomposition: G must be connected");
    Bigint total = 0;
    for (const auto& e : table.entries) {
        if (e.lambda == 0) continue;
        total += e.lambda * hom_solver(g, e.representative);
    }
    return total;
}

namespace {

struct SubState {
    std::uint32_t vmask;
    std::uint64_t emask;  // over non-loop edge indices of the host
    friend bool operator==(const SubState&, const SubState&) = default;
};

struct SubStateHash {
    std::size_t operator()(const SubState& s) const {
        std::uint64_t x = (std::uint64_t(s.vmask) << 40) ^ s.emask;
        x *= 0x9e3779b97f4a7c15ULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

}  // namespace

Bigint comp_via_moebius(const Graph& g, const Graph& h, const ListAssignment& lists,
                        const HomSolver& hom_solver, int bound) {
    if (!g.is_irreflexive()) throw PreconditionError("comp_via_moebius: G must be irreflexive");
    lists.validate(g.n, h.n);
    if (h.n > bound)
        throw PreconditionError("comp_via_moebius: target too large (bound=" +
                                std::to_string(bound) + ")");
    if (h.empty()) return g.empty() ? 1 : 0;
    if (g.empty()) return 0;  // non-empty H cannot be covered by the empty graph

    std::vector<int> loop_of(h.n, 0);
    std::vector<std::pair<int, int>> non_loop;
    for (const auto& [u, v] : h.edges)
        (u == v ? (void)(loop_of[u] = 1) : (void)non_loop.push_back({u, v}));
    if (non_loop.size() > 60) throw PreconditionError("comp_via_moebius: too many target edges");

    const bool full_lists = lists.is_full();
    std::unordered_map<SubState, Bigint, SubStateHash> memo;
    std::unordered_map<CanonicalKey, Bigint, CanonicalKeyHash> canon_memo;

    auto materialize = [&](const SubState& s, std::vector<int>& verts) {
        verts.clear();
        for (int v = 0; v < h.n; ++v)
            if (s.vmask & (1u << v)) verts.push_back(v);
        std::vector<int> index(h.n, -1);
        for (size_t i = 0; i < verts.size(); ++i) index[verts[i]] = static_cast<int>(i);
        Graph sub;
        sub.n = static_cast<int>(verts.size());
        for (int v : verts)
            if (loop_of[v]) sub.edges.emplace_back(index[v], index[v]);
        for (size_t e = 0; e < non_loop.size(); ++e)
            if (s.emask & (std::uint64_t(1) << e))
                sub.edges.emplace_back(index[non_loop[e].first], index[non_loop[e].second]);
        std::sort(sub.edges.begin(), sub.edges.end());
        return sub;
    };

    auto comp_rec = [&](auto&& self, const SubState& s) -> Bigint {
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        std::vector<int> verts;
        Graph sub = materialize(s, verts);
        std::optional<CanonicalKey> ckey;
        if (full_lists && sub.n <= kDefaultCanonBound) {
            ckey = canonical_form(sub);
            if (auto it = canon_memo.find(*ckey); it != canon_memo.end()) {
                memo.emplace(s, it->second);
                return it->second;
            }
        }
        Bigint result = hom_solver(g, sub, lists.restrict_targets(verts));
        // subtract the compaction counts of all proper non-empty
        // loop-hereditary subgraphs (not necessarily connected)
        for (std::uint32_t v2 = s.vmask;; v2 = (v2 - 1) & s.vmask) {
            if (v2 != 0) {
                std::uint64_t opt = 0;
                for (size_t e = 0; e < non_loop.size(); ++e)
                    if ((s.emask >> e) & 1) {
                        auto [a, b] = non_loop[e];
                        if ((v2 >> a) & 1 && (v2 >> b) & 1) opt |= std::uint64_t(1) << e;
                    }
                for (std::uint64_t e2 = opt;; e2 = (e2 - 1) & opt) {
                    if (!(v2 == s.vmask && e2 == s.emask)) result -= self(self, SubState{v2, e2});
                    if (e2 == 0) break;
                }
            }
            if (v2 == 0) break;
        }
        memo.emplace(s, result);
        if (ckey) canon_memo.emplace(*ckey, result);
        return result;
    };

    SubState top{static_cast<std::uint32_t>((1u << h.n) - 1),
                 non_loop.empty() ? 0 : ((std::uint64_t(1) << non_loop.size()) - 1)};
    return comp_rec(comp_rec, top);
}

void WeightedGraphSet::validate(int bound) const {
    if (members.size() != weights.size())
        throw PreconditionError("weighted graph set: member/weight size mismatch");
    std::vector<CanonicalKey> keys;
    for (const auto& m : members) {
        if (m.empty()) throw PreconditionError("weighted graph set members must be non-empty");
        if (!is_connected(m)) throw PreconditionError("weighted graph set members must be connected");
        keys.push_back(canonical_form(m, bound));
    }
    std::sort(keys.begin(), keys.end());
    if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
        throw PreconditionError("weighted graph set members must be pairwise non-isomorphic");
}

Bigint z_value(const WeightedGraphSet& ws, const Graph& g, const PairSolver& hom_solver) {
    ws.validate();
    if (!g.is_irreflexive()) throw PreconditionError("z_value: G must be irreflexive");
    if (g.empty()) return 0;
    Bigint total = 0;
    for (size_t i = 0; i < ws.members.size(); ++i) {
        if (ws.weights[i] == 0) continue;
        total += ws.weights[i] * hom_solver(g, ws.members[i]);
    }
    return total;
}

std::vector<EdgeWeightReport> edge_deleted_weight_check(const Graph& h, int bound) {
    check_decomp_input(h, bound);
    if (h.non_loop_edge_count() == 0)
        throw PreconditionError("edge_deleted_weight_check: target has no non-loop edge");
    DecompositionTable table = build_table(h, bound);
    std::vector<EdgeWeightReport> out;
    for (const auto& edge : h.edges) {
        if (edge.first == edge.second) continue;
        Graph minus;
        minus.n = h.n;
        for (const auto& e : h.edges)
            if (e != edge) minus.edges.push_back(e);
        if (!is_connected(minus)) continue;
        const DecompositionEntry* entry = table.find(canonical_form(minus));
        out.push_back({edge, entry ? entry->lambda : Bigint(0)});
    }
    if (out.empty())
        throw PreconditionError("edge_deleted_weight_check: no deletion keeps the target connected");
    return out;
}

}  // namespace surjcount
