#include "p3pack/family.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "p3pack/constructions.hpp"

namespace p3pack {

FFamilyCert f_base_y() {
    FFamilyCert cert;
    cert.graph = base_graph("y");
    cert.leaves = {3, 4, 5};
    cert.build = "{\"op\":\"f_base\",\"name\":\"y\"}";
    return cert;
}

FFamilyCert f_base_z() {
    FFamilyCert cert;
    cert.graph = base_graph("z");
    cert.leaves = {21, 22, 23};
    cert.build = "{\"op\":\"f_base\",\"name\":\"z\"}";
    return cert;
}

std::vector<std::array<int, 3>> find_triangles(const Graph& g) {
    std::vector<std::array<int, 3>> out;
    for (const Edge& e : g.edges())
        for (int w : g.neighbors(e.v))
            if (w > e.v && g.has_edge(e.u, w)) out.push_back({e.u, e.v, w});
    std::sort(out.begin(), out.end());
    return out;
}

TCutResult t_cycle_and_cut(const Graph& g, const std::array<int, 3>& triangle) {
    auto [t1, t2, t3] = triangle;
    for (int t : triangle)
        if (!g.has_vertex(t)) throw std::invalid_argument("t_cycle_and_cut: bad vertex");
    if (!g.has_edge(t1, t2) || !g.has_edge(t1, t3) || !g.has_edge(t2, t3))
        throw std::invalid_argument("t_cycle_and_cut: not a triangle");
    std::vector<char> in_t(g.n(), 0);
    for (int t : triangle) in_t[t] = 1;
    std::set<int> nbrs;
    for (int t : triangle)
        for (int w : g.neighbors(t))
            if (!in_t[w]) nbrs.insert(w);
    if (nbrs.size() != 3)
        throw std::runtime_error("t_cycle_and_cut: triangle needs exactly 3 outside neighbors");
    std::vector<int> need(nbrs.begin(), nbrs.end());

    // all 6-cycles through need[0] avoiding T, as canonical vertex sequences
    std::set<std::vector<int>> cycles;
    std::vector<int> path = {need[0]};
    std::vector<char> used(g.n(), 0);
    used[need[0]] = 1;
    auto dfs = [&](auto&& self) -> void {
        int v = path.back();
        if (path.size() == 6) {
            if (g.has_edge(v, need[0])) {
                bool all = true;
                for (int t : need)
                    if (std::find(path.begin(), path.end(), t) == path.end()) all = false;
                if (all) {
                    std::vector<int> canon = path;
                    if (canon[1] > canon[5]) std::reverse(canon.begin() + 1, canon.end());
                    cycles.insert(canon);
                }
            }
            return;
        }
        for (int w : g.neighbors(v)) {
            if (used[w] || in_t[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self);
            path.pop_back();
            used[w] = 0;
        }
    };
    dfs(dfs);

    std::vector<TCutResult> hits;
    for (const std::vector<int>& cyc : cycles) {
        std::vector<char> in_x = in_t;
        for (int v : cyc) in_x[v] = 1;
        std::vector<Edge> boundary;
        for (const Edge& e : g.edges())
            if (in_x[e.u] != in_x[e.v]) boundary.push_back(e);
        if (boundary.size() != 3) continue;
        std::vector<int> ends;
        for (const Edge& e : boundary) {
            ends.push_back(e.u);
            ends.push_back(e.v);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end()) continue;
        if (g.n() <= 9) continue;  // the far side must be nonempty
        TCutResult r;
        r.triangle = triangle;
        r.cycle = cyc;
        r.boundary = std::move(boundary);
        hits.push_back(std::move(r));
    }
    if (hits.size() != 1)
        throw std::runtime_error("t_cycle_and_cut: expected a unique matching-cut 6-cycle, found " +
                                 std::to_string(hits.size()));
    return hits.front();
}

FFamilyCert f_compose(const FFamilyCert& a, const std::array<int, 3>& triangle,
                      const FFamilyCert& b) {
    const Graph& A = a.graph;
    const Graph& B = b.graph;
    std::array<int, 3> tri = triangle;
    std::sort(tri.begin(), tri.end());
    if (!A.has_edge(tri[0], tri[1]) || !A.has_edge(tri[0], tri[2]) ||
        !A.has_edge(tri[1], tri[2]))
        throw std::invalid_argument("f_compose: not a triangle of A");
    std::vector<char> in_t(A.n(), 0);
    for (int t : tri) in_t[t] = 1;
    std::array<int, 3> hook{};
    for (int i = 0; i < 3; ++i) {
        int found = -1;
        for (int w : A.neighbors(tri[i]))
            if (!in_t[w]) {
                if (found != -1)
                    throw std::invalid_argument("f_compose: triangle vertex with two outside edges");
                found = w;
            }
        if (found == -1)
            throw std::invalid_argument("f_compose: triangle vertex without outside edge");
        hook[i] = found;
    }
    if (hook[0] == hook[1] || hook[0] == hook[2] || hook[1] == hook[2])
        throw std::invalid_argument("f_compose: triangle needs 3 distinct outside neighbors");

    std::array<int, 3> leaf_nbr{};
    for (int i = 0; i < 3; ++i) {
        int leaf = b.leaves[i];
        if (B.degree(leaf) != 1) throw std::invalid_argument("f_compose: certificate leaf not degree 1");
        leaf_nbr[i] = B.neighbors(leaf)[0];
    }

    DeleteResult da = delete_vertices(A, {tri[0], tri[1], tri[2]});
    DeleteResult db =
        delete_vertices(B, {b.leaves[0], b.leaves[1], b.leaves[2]});
    int offset = da.graph.n();
    std::vector<Edge> edges = da.graph.edges();
    for (const Edge& e : db.graph.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    for (int i = 0; i < 3; ++i)
        edges.emplace_back(da.old_to_new[hook[i]], db.old_to_new[leaf_nbr[i]] + offset);

    FFamilyCert out;
    out.graph = Graph::from_edges(offset + db.graph.n(), edges);
    for (int i = 0; i < 3; ++i) out.leaves[i] = da.old_to_new[a.leaves[i]];
    out.build = "{\"op\":\"f_compose\",\"a\":" + a.build + ",\"b\":" + b.build +
                ",\"triangle\":[" + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                std::to_string(tri[2]) + "]}";
    if (A.has_labels())
        for (int v = 0; v < A.n(); ++v)
            if (da.old_to_new[v] >= 0 && !A.label(v).empty())
                out.graph.set_label(da.old_to_new[v], A.label(v));
    return out;
}

std::optional<std::string> validate_f_cert(const FFamilyCert& cert) {
    const Graph& g = cert.graph;
    if (g.n() % 6 != 0) return "vertex count not divisible by 6";
    if (!g.connected()) return "not connected";
    std::array<int, 3> leaves = cert.leaves;
    std::sort(leaves.begin(), leaves.end());
    if (leaves[0] == leaves[1] || leaves[1] == leaves[2]) return "duplicate leaves";
    for (int v = 0; v < g.n(); ++v) {
        bool is_leaf = std::binary_search(leaves.begin(), leaves.end(), v);
        int want = is_leaf ? 1 : 3;
        if (g.degree(v) != want)
            return "vertex " + std::to_string(v) + " has degree " +
                   std::to_string(g.degree(v)) + ", expected " + std::to_string(want);
    }
    if (g.n() == 6) return std::nullopt;  // the leaf triangle of the base has no far side
    for (const auto& tri : find_triangles(g)) {
        try {
            t_cycle_and_cut(g, tri);
        } catch (const std::exception& ex) {
            return "triangle {" + std::to_string(tri[0]) + "," + std::to_string(tri[1]) + "," +
                   std::to_string(tri[2]) + "}: " + ex.what();
        }
    }
    return std::nullopt;
}

FOpResult f_operator(const FFamilyCert& cert, FOp which) {
    const Graph& g = cert.graph;
    std::array<int, 3> leaves = cert.leaves;
    std::array<int, 3> hubs{};
    for (int i = 0; i < 3; ++i) {
        if (g.degree(leaves[i]) != 1) throw std::invalid_argument("f_operator: leaf not degree 1");
        hubs[i] = g.neighbors(leaves[i])[0];
    }
    FOpResult res;
    if (which == FOp::kDot) {
        if (hubs[0] == hubs[1] || hubs[0] == hubs[2] || hubs[1] == hubs[2])
            throw std::invalid_argument("f_operator: leaves share a support, dot would duplicate");
        DeleteResult cut =
            delete_vertices(g, {leaves[0], leaves[1], leaves[2]});
        int x = cut.graph.n();
        std::vector<Edge> edges = cut.graph.edges();
        for (int h : hubs) edges.emplace_back(cut.old_to_new[h], x);
        res.graph = Graph::from_edges(x + 1, edges);
        res.dot_vertex = x;
        return res;
    }
    std::array<int, 3> l = leaves;
    std::sort(l.begin(), l.end());
    std::vector<Edge> tri = {Edge(l[0], l[1]), Edge(l[0], l[2]), Edge(l[1], l[2])};
    Graph bar = add_edges(g, tri);
    if (which == FOp::kBar) {
        res.graph = bar;
        res.bar_triangle = tri;
        return res;
    }
    // ddot: subdivide the three new edges, then hang a hub on the midpoints
    Graph cur = bar;
    for (int i = 0; i < 3; ++i) {
        SubdivideResult s = subdivide_edge(cur, tri[i]);
        cur = s.graph;
        res.ddot_mids[i] = s.new_vertex;
    }
    int hub = cur.n();
    std::vector<Edge> spokes;
    for (int m : res.ddot_mids) spokes.emplace_back(m, hub);
    std::vector<Edge> edges = cur.edges();
    edges.insert(edges.end(), spokes.begin(), spokes.end());
    res.graph = Graph::from_edges(hub + 1, edges);
    res.ddot_hub = hub;
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v)
            if (!g.label(v).empty()) res.graph.set_label(v, g.label(v));
    return res;
}

}  // namespace p3pack
