#include "surjcount/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>

#include "surjcount/errors.hpp"

namespace surjcount {

namespace {

struct AdjMatrix {
    int n;
    std::array<std::array<bool, kDefaultCanonBound>, kDefaultCanonBound> a{};

    explicit AdjMatrix(const Graph& g) : n(g.n) {
        for (const auto& [u, v] : g.edges) a[u][v] = a[v][u] = true;
    }
};

// Iterated colour refinement. The initial colour encodes (root flag, loop,
// degree); each round appends the sorted multiset of neighbour colours.
// Colour ranks are assigned by sorting signatures, so they are invariant
// under isomorphism.
std::vector<int> refine_colours(const AdjMatrix& m, const Graph& g, int root) {
    int n = m.n;
    std::vector<int> colour(n, 0);
    auto adj = g.adjacency();
    {
        // the root sorts first, so it always occupies canonical position 0
        std::vector<std::array<int, 3>> sig(n);
        for (int v = 0; v < n; ++v)
            sig[v] = {v == root ? 0 : 1, g.has_loop(v) ? 1 : 0, static_cast<int>(adj[v].size())};
        std::vector<std::array<int, 3>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                         sorted.begin());
    }
    for (int round = 0; round < n; ++round) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(colour[v]);
            std::vector<int> nb;
            for (int w : adj[v]) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            sig[v].insert(sig[v].end(), nb.begin(), nb.end());
        }
        std::vector<std::vector<int>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                                       sorted.begin());
        if (next == colour) break;
        colour = std::move(next);
    }
    return colour;
}

// Vertices grouped by colour rank; class order follows the rank order and is
// therefore isomorphism-invariant.
std::vector<std::vector<int>> colour_classes(const std::vector<int>& colour) {
    int k = colour.empty() ? 0 : *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<int>> classes(k);
    for (int v = 0; v < static_cast<int>(colour.size()); ++v) classes[colour[v]].push_back(v);
    return classes;
}

std::uint64_t pack(const AdjMatrix& m, const std::vector<int>& position) {
    // upper triangular including the diagonal, indexed by canonical positions
    int n = m.n;
    std::vector<int> at(n);
    for (int v = 0; v < n; ++v) at[position[v]] = v;
    std::uint64_t bits = 0;
    int idx = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j, ++idx)
            if (m.a[at[i]][at[j]]) bits |= std::uint64_t(1) << idx;
    return bits;
}

// Enumerates every class-respecting placement; calls visit(position) for
// each. Placements cover all automorphisms and at least one canonical
// labelling, because isomorphisms preserve the refined colours.
void for_each_placement(const std::vector<std::vector<int>>& classes,
                        const std::function<void(const std::vector<int>&)>& visit, int n) {
    std::vector<int> offset(classes.size());
    int acc = 0;
    for (size_t c = 0; c < classes.size(); ++c) {
        offset[c] = acc;
        acc += static_cast<int>(classes[c].size());
    }
    std::vector<std::vector<int>> perm(classes.size());
    for (size_t c = 0; c < classes.size(); ++c) {
        perm[c].resize(classes[c].size());
        std::iota(perm[c].begin(), perm[c].end(), 0);
    }
    std::vector<int> position(n);
    auto emit = [&]() {
        for (size_t c = 0; c < classes.size(); ++c)
            for (size_t i = 0; i < classes[c].size(); ++i)
                position[classes[c][i]] = offset[c] + perm[c][i];
        visit(position);
    };
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == classes.size()) {
            emit();
            return;
        }
        do {
            self(self, c + 1);
        } while (std::next_permutation(perm[c].begin(), perm[c].end()));
    };
    rec(rec, 0);
}

void check_bound(const Graph& g, int bound) {
    if (bound > kDefaultCanonBound) bound = kDefaultCanonBound;
    if (g.n > bound)
        throw PreconditionError("graph too large for exact canonicalization (n=" +
                                std::to_string(g.n) + ", bound=" + std::to_string(bound) + ")");
}

std::pair<CanonicalKey, std::vector<int>> canonicalize(const Graph& g, int root, int bound) {
    check_bound(g, bound);
    if (g.n == 0) return {CanonicalKey{0, 0}, {}};
    AdjMatrix m(g);
    auto classes = colour_classes(refine_colours(m, g, root));
    std::uint64_t best = ~std::uint64_t(0);
    std::vector<int> bestPos;
    for_each_placement(
        classes,
        [&](const std::vector<int>& pos) {
            std::uint64_t bits = pack(m, pos);
            if (bits < best) {
                best = bits;
                bestPos = pos;
            }
        },
        g.n);
    return {CanonicalKey{static_cast<std::uint32_t>(g.n), best}, bestPos};
}

}  // namespace

CanonicalKey canonical_form(const Graph& g, int bound) { return canonicalize(g, -1, bound).first; }

std::vector<int> canonical_labeling(const Graph& g, int bound) {
    return canonicalize(g, -1, bound).second;
}

Graph canonical_representative(const Graph& g, int bound) {
    auto pos = canonical_labeling(g, bound);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges) edges.emplace_back(pos[u], pos[v]);
    return make_graph(g.n, std::move(edges));
}

CanonicalKey rooted_canonical_form(const Graph& g, int root, int bound) {
    if (root < 0 || root >= g.n) throw PreconditionError("rooted_canonical_form: root out of range");
    return canonicalize(g, root, bound).first;
}

bool isomorphic(const Graph& a, const Graph& b, int bound) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
    return canonical_form(a, bound) == canonical_form(b, bound);
}

std::vector<std::vector<int>> automorphisms(const Graph& g, int bound) {
    check_bound(g, bound);
    if (g.n == 0) return {{}};
    AdjMatrix m(g);
    auto classes = colour_classes(refine_colours(m, g, -1));
    // an automorphism can only map a vertex within its colour class
    std::vector<std::vector<int>> found;
    std::vector<int> image(g.n, -1);
    std::vector<char> used(g.n, 0);
    auto consistent = [&](int v, int w) {
        if (g.has_loop(v) != g.has_loop(w)) return false;
        for (int u = 0; u < g.n; ++u)
            if (image[u] != -1 && u != v && m.a[v][u] != m.a[w][image[u]]) return false;
        return true;
    };
    std::vector<int> order;
    for (const auto& cls : classes) order.insert(order.end(), cls.begin(), cls.end());
    std::vector<int> classOf(g.n);
    for (size_t c = 0; c < classes.size(); ++c)
        for (int v : classes[c]) classOf[v] = static_cast<int>(c);
    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            found.push_back(image);
            return;
        }
        int v = order[idx];
        for (int w : classes[classOf[v]]) {
            if (used[w] || !consistent(v, w)) continue;
            image[v] = w;
            used[w] = 1;
            self(self, idx + 1);
            image[v] = -1;
            used[w] = 0;
        }
    };
    rec(rec, 0);
    return found;
}

VertexPartition automorphism_orbits(const Graph& g, int bound) {
    auto autos = automorphisms(g, bound);
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& pi : autos)
        for (int v = 0; v < g.n; ++v) {
            int a = find(v), b = find(pi[v]);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<int, std::vector<int>> blocks;
    for (int v = 0; v < g.n; ++v) blocks[find(v)].push_back(v);
    VertexPartition out;
    for (auto& [root, members] : blocks) out.push_back(std::move(members));
    return out;
}

}  // namespace surjcount
