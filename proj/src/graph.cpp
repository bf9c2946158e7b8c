#include "surjcount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "surjcount/errors.hpp"

namespace surjcount {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

int Graph::loop_count() const {
    int c = 0;
    for (const auto& [u, v] : edges)
        if (u == v) ++c;
    return c;
}

int Graph::non_loop_edge_count() const { return static_cast<int>(edges.size()) - loop_count(); }

bool Graph::is_reflexive() const { return loop_count() == n; }

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (const auto& [u, v] : edges) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool operator==(const Graph& a, const Graph& b) { return a.n == b.n && a.edges == b.edges; }

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw PreconditionError("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range: {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} with n=" + std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw PreconditionError("duplicate edge {" + std::to_string(dup->first) + "," +
                                std::to_string(dup->second) + "}");
    Graph g;
    g.n = n;
    g.edges = std::move(edges);
    return g;
}

Graph path_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return make_graph(k, std::move(e));
}

Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return make_graph(k, std::move(e));
}

Graph clique_graph(int k, bool reflexive) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) {
        if (reflexive) e.emplace_back(i, i);
        for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    }
    return make_graph(k, std::move(e));
}

Graph biclique_graph(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
    return make_graph(a + b, std::move(e));
}

Graph star_graph(int leaves) { return biclique_graph(1, leaves); }

Graph single_vertex(bool loop) {
    return loop ? make_graph(1, {{0, 0}}) : make_graph(1, {});
}

namespace {

Graph parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid graph JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("graph JSON requires an integer field \"n\"");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array");
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                throw ParseError("each edge must be a 2-element integer array");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
    }
    try {
        return make_graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "n") {
            if (n >= 0) throw ParseError("repeated 'n' line at line " + std::to_string(lineno));
            if (!(ls >> n) || n < 0) throw ParseError("bad vertex count at line " + std::to_string(lineno));
        } else if (tag == "e") {
            int u, v;
            if (!(ls >> u >> v)) throw ParseError("bad edge at line " + std::to_string(lineno));
            if (n < 0) throw ParseError("edge before 'n' line at line " + std::to_string(lineno));
            edges.emplace_back(u, v);
        } else {
            throw ParseError("unknown directive '" + tag + "' at line " + std::to_string(lineno));
        }
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens at line " + std::to_string(lineno));
    }
    if (n < 0) throw ParseError("missing 'n' line");
    try {
        return make_graph(n, std::move(edges));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_graph_text(text);
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (const auto& [u, v] : g.edges) out << "e " << u << " " << v << "\n";
    return out.str();
}

Graph strip_loops(const Graph& g) {
    Graph out;
    out.n = g.n;
    for (const auto& e : g.edges)
        if (e.first != e.second) out.edges.push_back(e);
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph out;
    out.n = a.n + b.n;
    out.edges = a.edges;
    for (const auto& [u, v] : b.edges) out.edges.emplace_back(u + a.n, v + a.n);
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Graph add_isolated_vertices(const Graph& g, int t) {
    Graph out = g;
    out.n += t;
    return out;
}

Graph add_disjoint_edges(const Graph& g, int t) {
    Graph out = g;
    for (int i = 0; i < t; ++i) {
        out.edges.emplace_back(out.n, out.n + 1);
        out.n += 2;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    std::vector<int> index(g.n, -1);
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n) throw PreconditionError("induced_subgraph: vertex out of range");
        if (index[v] != -1) throw PreconditionError("induced_subgraph: repeated vertex");
        index[v] = static_cast<int>(i);
    }
    Graph out;
    out.n = static_cast<int>(vertices.size());
    for (const auto& [u, v] : g.edges) {
        if (index[u] >= 0 && index[v] >= 0) {
            int a = index[u], b = index[v];
            if (a > b) std::swap(a, b);
            out.edges.emplace_back(a, b);
        }
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<ComponentSplit> connected_components(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> comp(g.n, -1);
    std::vector<ComponentSplit> out;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> verts{s};
        comp[s] = static_cast<int>(out.size());
        for (size_t head = 0; head < verts.size(); ++head) {
            for (int w : adj[verts[head]]) {
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    verts.push_back(w);
                }
            }
        }
        std::sort(verts.begin(), verts.end());
        ComponentSplit split;
        split.graph = induced_subgraph(g, verts);
        split.original_vertex = std::move(verts);
        out.push_back(std::move(split));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    return connected_components(g).size() == 1;
}

bool bipartition(const Graph& g, std::vector<int>* side) {
    std::vector<int> colour(g.n, -1);
    auto adj = g.adjacency();
    for (int s = 0; s < g.n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<int> queue{s};
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : adj[u]) {
                if (colour[w] == -1) {
                    colour[w] = 1 - colour[u];
                    queue.push_back(w);
                } else if (colour[w] == colour[u]) {
                    return false;
                }
            }
        }
    }
    if (side) *side = std::move(colour);
    return true;
}

Graph quotient_graph(const Graph& g, const VertexPartition& partition) {
    std::vector<int> block(g.n, -1);
    for (size_t b = 0; b < partition.size(); ++b) {
        if (partition[b].empty()) throw PreconditionError("quotient_graph: empty block");
        for (int v : partition[b]) {
            if (v < 0 || v >= g.n) throw PreconditionError("quotient_graph: vertex out of range");
            if (block[v] != -1) throw PreconditionError("quotient_graph: blocks overlap");
            block[v] = static_cast<int>(b);
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (block[v] == -1) throw PreconditionError("quotient_graph: blocks do not cover all vertices");
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : g.edges) {
        int a = block[u], b = block[v];
        if (a > b) std::swap(a, b);
        edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    Graph out;
    out.n = static_cast<int>(partition.size());
    out.edges = std::move(edges);
    return out;
}

std::vector<VertexPartition> all_partitions(int n) {
    std::vector<VertexPartition> out;
    VertexPartition current;
    // restricted growth: vertex v joins an existing block or opens a new one
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(current);
            return;
        }
        std::size_t blocks = current.size();  // deeper levels grow the vector
        for (std::size_t b = 0; b < blocks; ++b) {
            current[b].push_back(v);
            self(self, v + 1);
            current[b].pop_back();
        }
        current.push_back({v});
        self(self, v + 1);
        current.pop_back();
    };
    rec(rec, 0);
    return out;
}

bool induced_copy_check(const Graph& g, const std::vector<int>& anchors, const Graph& h) {
    if (static_cast<int>(anchors.size()) != h.n)
        throw PreconditionError("induced_copy_check: anchor tuple arity differs from |V(H)|");
    std::vector<char> seen(g.n, 0);
    for (int u : anchors) {
        if (u < 0 || u >= g.n) throw PreconditionError("induced_copy_check: anchor out of range");
        if (seen[u]) throw PreconditionError("induced_copy_check: repeated anchor");
        seen[u] = 1;
    }
    if (!g.is_irreflexive()) throw PreconditionError("induced_copy_check: G must be irreflexive");
    for (int a = 0; a < h.n; ++a)
        for (int b = a + 1; b < h.n; ++b)
            if (g.has_edge(anchors[a], anchors[b]) != h.has_edge(a, b)) return false;
    return true;
}

}  // namespace surjcount
