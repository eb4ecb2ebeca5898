#include "p3pack/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace p3pack {

namespace {

const std::string kEmptyLabel;

}  // namespace

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex " + std::to_string(v) + " out of range [0," +
                                    std::to_string(n_) + ")");
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.edges_ = edges;
    for (const Edge& e : g.edges_) {
        if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw std::invalid_argument("edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" +
                                        std::to_string(n));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    g.adj_.assign(n, {});
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& row : g.adj_) std::sort(row.begin(), row.end());
    return g;
}

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
        edges.emplace_back(a, b);
    }
    return from_edges(n, edges);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = static_cast<int>(adj_[v].size());
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    const auto& row = adj_[u];
    return std::binary_search(row.begin(), row.end(), v);
}

bool Graph::is_cubic() const {
    if (n_ == 0) return false;
    for (const auto& row : adj_)
        if (row.size() != 3) return false;
    return true;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : adj_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool Graph::connected() const {
    if (n_ <= 1) return true;
    return components().size() == 1;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    if (labels_.empty()) return kEmptyLabel;
    return labels_[v];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    if (labels_.empty()) labels_.assign(n_, "");
    labels_[v] = std::move(s);
}

DeleteResult delete_vertices(const Graph& g, const std::vector<int>& rm) {
    std::vector<char> dead(g.n(), 0);
    for (int v : rm) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("delete_vertices: vertex " + std::to_string(v) +
                                        " out of range");
        dead[v] = 1;
    }
    std::vector<int> old_to_new(g.n(), -1);
    int next = 0;
    for (int v = 0; v < g.n(); ++v)
        if (!dead[v]) old_to_new[v] = next++;
    std::vector<Edge> edges;
    for (const Edge& e : g.edges())
        if (!dead[e.u] && !dead[e.v]) edges.emplace_back(old_to_new[e.u], old_to_new[e.v]);
    DeleteResult res{Graph::from_edges(next, edges), std::move(old_to_new)};
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v)
            if (res.old_to_new[v] >= 0) res.graph.set_label(res.old_to_new[v], g.label(v));
    return res;
}

SubdivideResult subdivide_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e.u, e.v))
        throw std::invalid_argument("subdivide_edge: edge (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") not in graph");
    int w = g.n();
    std::vector<Edge> edges;
    edges.reserve(g.m() + 1);
    for (const Edge& f : g.edges())
        if (f != e) edges.push_back(f);
    edges.emplace_back(e.u, w);
    edges.emplace_back(e.v, w);
    SubdivideResult res{Graph::from_edges(g.n() + 1, edges), w};
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) res.graph.set_label(v, g.label(v));
    return res;
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : extra) {
        if (g.has_edge(e.u, e.v))
            throw std::invalid_argument("add_edges: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") already present");
        edges.push_back(e);
    }
    Graph out = Graph::from_edges(g.n(), edges);
    if (out.m() != g.m() + static_cast<int>(extra.size()))
        throw std::invalid_argument("add_edges: duplicate edge among additions");
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) out.set_label(v, g.label(v));
    return out;
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n())
        throw std::invalid_argument("apply_permutation: wrong size");
    std::vector<char> hit(g.n(), 0);
    for (int p : perm) {
        if (p < 0 || p >= g.n() || hit[p])
            throw std::invalid_argument("apply_permutation: not a permutation");
        hit[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.m());
    for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
    Graph out = Graph::from_edges(g.n(), edges);
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v) out.set_label(perm[v], g.label(v));
    return out;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edges();
    for (const Edge& e : g2.edges()) edges.emplace_back(e.u + g1.n(), e.v + g1.n());
    return Graph::from_edges(g1.n() + g2.n(), edges);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::string to_edge_list_text(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

Graph parse_edge_list_text(const std::string& text) {
    std::istringstream in(text);
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing 'n m' header");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        pairs.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, pairs);
}

}  // namespace p3pack
