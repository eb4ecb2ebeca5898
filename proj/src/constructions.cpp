#include "p3pack/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace p3pack {

namespace {

std::vector<int> sorted_neighbors(const Graph& g, int v) { return g.neighbors(v); }

void require_degree3(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.n() || g.degree(v) != 3)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " must exist with degree 3");
}

}  // namespace

SpliceResult splice(const Graph& A, int a, const Graph& B, int b,
                    const std::vector<std::pair<int, int>>& sigma) {
    require_degree3(A, a, "splice");
    require_degree3(B, b, "splice");
    std::vector<int> na = sorted_neighbors(A, a);
    std::vector<int> nb = sorted_neighbors(B, b);
    std::vector<std::pair<int, int>> pairing;
    if (sigma.empty()) {
        for (int i = 0; i < 3; ++i) pairing.emplace_back(na[i], nb[i]);
    } else {
        if (sigma.size() != 3) throw std::invalid_argument("splice: sigma needs 3 pairs");
        std::vector<int> firsts, seconds;
        for (auto [x, y] : sigma) {
            firsts.push_back(x);
            seconds.push_back(y);
        }
        std::vector<int> fs = firsts, ss = seconds;
        std::sort(fs.begin(), fs.end());
        std::sort(ss.begin(), ss.end());
        if (fs != na || ss != nb)
            throw std::invalid_argument("splice: sigma is not a bijection N(a) -> N(b)");
        // order by the a-side neighbor for deterministic cut edge order
        pairing = sigma;
        std::sort(pairing.begin(), pairing.end());
    }

    DeleteResult da = delete_vertices(A, {a});
    DeleteResult db = delete_vertices(B, {b});
    int offset = da.graph.n();

    std::vector<Edge> edges = da.graph.edges();
    for (const Edge& e : db.graph.edges()) edges.emplace_back(e.u + offset, e.v + offset);
    SpliceMeta meta;
    meta.map_a = da.old_to_new;
    meta.map_b = db.old_to_new;
    for (int& v : meta.map_b)
        if (v >= 0) v += offset;
    for (auto [x, y] : pairing) {
        Edge cut(meta.map_a[x], meta.map_b[y]);
        meta.cut_edges.push_back(cut);
        edges.push_back(cut);
    }
    for (int v = 0; v < offset; ++v) meta.side_a.push_back(v);
    for (int v = offset; v < offset + db.graph.n(); ++v) meta.side_b.push_back(v);

    SpliceResult res{Graph::from_edges(offset + db.graph.n(), edges), std::move(meta)};
    if (A.has_labels() || B.has_labels()) {
        for (int v = 0; v < A.n(); ++v)
            if (res.meta.map_a[v] >= 0 && !A.label(v).empty())
                res.graph.set_label(res.meta.map_a[v], A.label(v));
        for (int v = 0; v < B.n(); ++v)
            if (res.meta.map_b[v] >= 0 && !B.label(v).empty())
                res.graph.set_label(res.meta.map_b[v], B.label(v));
    }
    return res;
}

ReplacementResult vertex_replacement(const Graph& base,
                                     const std::map<int, Attachment>& gadgets) {
    if (!base.is_cubic())
        throw std::invalid_argument("vertex_replacement: base must be cubic");
    for (const auto& [v, att] : gadgets) {
        if (v < 0 || v >= base.n())
            throw std::invalid_argument("vertex_replacement: no base vertex " +
                                        std::to_string(v));
        require_degree3(att.gadget, att.attach, "vertex_replacement attachment");
    }

    ReplacementMeta meta;
    meta.block.assign(base.n(), {});
    std::vector<std::array<int, 3>> ports(base.n());  // per base vertex, by edge rank
    std::vector<Edge> edges;
    int next = 0;
    for (int v = 0; v < base.n(); ++v) {
        auto it = gadgets.find(v);
        if (it == gadgets.end()) {
            meta.block[v] = {next};
            ports[v] = {next, next, next};
            ++next;
            continue;
        }
        const Attachment& att = it->second;
        DeleteResult cut = delete_vertices(att.gadget, {att.attach});
        for (const Edge& e : cut.graph.edges()) edges.emplace_back(e.u + next, e.v + next);
        for (int w = 0; w < cut.graph.n(); ++w) meta.block[v].push_back(w + next);
        std::vector<int> hooks = sorted_neighbors(att.gadget, att.attach);
        for (int k = 0; k < 3; ++k) ports[v][k] = cut.old_to_new[hooks[k]] + next;
        next += cut.graph.n();
    }

    meta.alpha.resize(base.m());
    for (int id = 0; id < base.m(); ++id) {
        const Edge& e = base.edges()[id];
        auto rank = [&](int at, int other) {
            const auto& row = base.neighbors(at);
            return static_cast<int>(std::lower_bound(row.begin(), row.end(), other) -
                                    row.begin());
        };
        Edge image(ports[e.u][rank(e.u, e.v)], ports[e.v][rank(e.v, e.u)]);
        meta.alpha[id] = image;
        edges.push_back(image);
    }

    ReplacementResult res{Graph::from_edges(next, edges), std::move(meta)};
    for (int v = 0; v < base.n(); ++v) {
        auto it = gadgets.find(v);
        if (it == gadgets.end()) continue;
        const Graph& gd = it->second.gadget;
        if (!gd.has_labels()) continue;
        DeleteResult cut = delete_vertices(gd, {it->second.attach});
        for (int w = 0; w < gd.n(); ++w)
            if (cut.old_to_new[w] >= 0 && !gd.label(w).empty())
                res.graph.set_label(res.meta.block[v][cut.old_to_new[w]], gd.label(w));
    }
    return res;
}

YResult y_construction(const YArm& a1, const YArm& a2, const YArm& a3) {
    const YArm* arms[3] = {&a1, &a2, &a3};
    YMeta meta;
    std::vector<Edge> edges;
    int next = 0;
    std::array<std::array<int, 3>, 3> ports{};
    for (int i = 0; i < 3; ++i) {
        const YArm& arm = *arms[i];
        if (!arm.graph) {
            meta.side[i] = {next};
            ports[i] = {next, next, next};
            ++next;
            continue;
        }
        require_degree3(*arm.graph, arm.attach, "y_construction arm");
        DeleteResult cut = delete_vertices(*arm.graph, {arm.attach});
        for (const Edge& e : cut.graph.edges()) edges.emplace_back(e.u + next, e.v + next);
        for (int w = 0; w < cut.graph.n(); ++w) meta.side[i].push_back(w + next);
        std::vector<int> hooks = sorted_neighbors(*arm.graph, arm.attach);
        for (int k = 0; k < 3; ++k) ports[i][k] = cut.old_to_new[hooks[k]] + next;
        next += cut.graph.n();
    }
    for (int j = 0; j < 3; ++j) meta.hubs[j] = next + j;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Edge e(ports[i][j], meta.hubs[j]);
            meta.d[i].push_back(e);
            edges.push_back(e);
        }
    YResult res{Graph::from_edges(next + 3, edges), std::move(meta)};
    for (int j = 0; j < 3; ++j) res.graph.set_label(res.meta.hubs[j], "z" + std::to_string(j + 1));
    for (int i = 0; i < 3; ++i)
        if (!arms[i]->graph) res.graph.set_label(res.meta.side[i][0], "arm" + std::to_string(i + 1));
    return res;
}

TriangleExpandResult triangle_expand(const Graph& g, int x) {
    require_degree3(g, x, "triangle_expand");
    std::vector<int> nx = sorted_neighbors(g, x);
    DeleteResult cut = delete_vertices(g, {x});
    int base = cut.graph.n();
    std::vector<Edge> edges = cut.graph.edges();
    TriangleExpandResult res;
    res.triangle = {base, base + 1, base + 2};
    edges.emplace_back(base, base + 1);
    edges.emplace_back(base, base + 2);
    edges.emplace_back(base + 1, base + 2);
    for (int i = 0; i < 3; ++i) edges.emplace_back(res.triangle[i], cut.old_to_new[nx[i]]);
    res.graph = Graph::from_edges(base + 3, edges);
    if (g.has_labels())
        for (int v = 0; v < g.n(); ++v)
            if (cut.old_to_new[v] >= 0 && !g.label(v).empty())
                res.graph.set_label(cut.old_to_new[v], g.label(v));
    return res;
}

SubdivideConnectResult subdivide_and_connect(const Graph& g, Edge e1, Edge e2) {
    if (e1 == e2) throw std::invalid_argument("subdivide_and_connect: edges must differ");
    SubdivideResult s1 = subdivide_edge(g, e1);
    SubdivideResult s2 = subdivide_edge(s1.graph, e2);
    Graph out = add_edges(s2.graph, {Edge(s1.new_vertex, s2.new_vertex)});
    return {out, s1.new_vertex, s2.new_vertex};
}

RewireResult rewire_after_pair_deletion(const Graph& g, int x, int y) {
    if (!g.is_cubic()) throw std::invalid_argument("rewire_after_pair_deletion: graph not cubic");
    if (!g.has_edge(x, y))
        throw std::invalid_argument("rewire_after_pair_deletion: xy must be an edge");
    std::vector<int> xs, ys;
    for (int w : g.neighbors(x))
        if (w != y) xs.push_back(w);
    for (int w : g.neighbors(y))
        if (w != x) ys.push_back(w);
    RewireResult res;
    res.outer_x = {xs[0], xs[1]};
    res.outer_y = {ys[0], ys[1]};
    DeleteResult cut = delete_vertices(g, {x, y});
    res.old_to_new = cut.old_to_new;
    auto np = [&](int v) { return cut.old_to_new[v]; };
    std::array<std::array<std::pair<int, int>, 2>, 3> plans = {{
        {{{xs[0], ys[0]}, {xs[1], ys[1]}}},
        {{{xs[0], ys[1]}, {xs[1], ys[0]}}},
        {{{xs[0], xs[1]}, {ys[0], ys[1]}}},
    }};
    for (int k = 0; k < 3; ++k) {
        bool ok = true;
        std::vector<Edge> extra;
        for (auto [p, q] : plans[k]) {
            if (p == q || cut.graph.has_edge(np(p), np(q))) {
                ok = false;
                break;
            }
            Edge e(np(p), np(q));
            for (const Edge& f : extra)
                if (f == e) ok = false;
            extra.push_back(e);
        }
        if (ok) res.variants[k] = add_edges(cut.graph, extra);
    }
    return res;
}

Graph base_graph(const std::string& name) {
    std::string key;
    for (char c : name) key.push_back(static_cast<char>(std::tolower(c)));
    if (key == "k4")
        return Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    if (key == "prism")
        return Graph::from_edge_list(
            6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {0, 3}, {1, 4}, {2, 5}});
    if (key == "k33" || key == "k3,3")
        return Graph::from_edge_list(
            6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    if (key == "cube") {
        std::vector<std::pair<int, int>> pairs;
        for (int v = 0; v < 8; ++v)
            for (int bit = 0; bit < 3; ++bit)
                if (v < (v ^ (1 << bit))) pairs.emplace_back(v, v ^ (1 << bit));
        return Graph::from_edge_list(8, pairs);
    }
    if (key == "petersen") {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < 5; ++i) {
            pairs.emplace_back(i, (i + 1) % 5);          // outer cycle
            pairs.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
            pairs.emplace_back(i, 5 + i);                // spokes
        }
        return Graph::from_edge_list(10, pairs);
    }
    if (key == "y" || key == "y_base") {
        Graph g = Graph::from_edge_list(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}});
        for (int i = 0; i < 3; ++i) {
            g.set_label(i, "z" + std::to_string(i + 1));
            g.set_label(3 + i, "x" + std::to_string(i + 1));
        }
        return g;
    }
    if (key == "z" || key == "z_base") {
        std::vector<std::pair<int, int>> pairs;
        for (int copy = 0; copy < 2; ++copy) {
            int o = 9 * copy;
            pairs.insert(pairs.end(), {{o + 0, o + 1}, {o + 0, o + 2}, {o + 1, o + 2}});
            pairs.insert(pairs.end(), {{o + 0, o + 3}, {o + 1, o + 4}, {o + 2, o + 5}});
            // s'_i sees the two y's with other indices
            pairs.insert(pairs.end(), {{o + 6, o + 4}, {o + 6, o + 5}});
            pairs.insert(pairs.end(), {{o + 7, o + 3}, {o + 7, o + 5}});
            pairs.insert(pairs.end(), {{o + 8, o + 3}, {o + 8, o + 4}});
        }
        for (int i = 0; i < 3; ++i) {
            pairs.emplace_back(18 + i, 6 + i);   // c_i to first copy
            pairs.emplace_back(18 + i, 15 + i);  // c_i to second copy
            pairs.emplace_back(21 + i, 18 + i);  // leaf x_i
        }
        Graph g = Graph::from_edge_list(24, pairs);
        for (int copy = 0; copy < 2; ++copy) {
            int o = 9 * copy;
            std::string suffix = copy == 0 ? "a" : "b";
            for (int i = 0; i < 3; ++i) {
                g.set_label(o + i, "t" + std::to_string(i + 1) + suffix);
                g.set_label(o + 3 + i, "y" + std::to_string(i + 1) + suffix);
                g.set_label(o + 6 + i, "s" + std::to_string(i + 1) + suffix);
            }
        }
        for (int i = 0; i < 3; ++i) {
            g.set_label(18 + i, "c" + std::to_string(i + 1));
            g.set_label(21 + i, "x" + std::to_string(i + 1));
        }
        return g;
    }
    throw std::invalid_argument("base_graph: unknown name '" + name + "'");
}

RingResult r_s(int s) {
    if (s < 1) throw std::invalid_argument("r_s: s must be >= 1");
    int cyc = 9 * s;
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < cyc; ++v) pairs.emplace_back(v, (v + 1) % cyc);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < 3; ++j) {
            int x = cyc + 3 * i + j;
            pairs.emplace_back(x, 3 * i + j);
            pairs.emplace_back(x, 3 * (i + s) + j);
            pairs.emplace_back(x, 3 * (i + 2 * s) + j);
        }
    RingResult res;
    res.graph = Graph::from_edge_list(12 * s, pairs);
    for (int k = 0; k < 3 * s; ++k) res.base_paths.emplace_back(3 * k, 3 * k + 1, 3 * k + 2);
    return res;
}

Graph h_graph() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 3; ++i) {
        pairs.emplace_back(i, 3 + i);  // x_i ~ y_i
        pairs.emplace_back(6, i);      // z1 over the x side
        pairs.emplace_back(7, i);      // z2
        pairs.emplace_back(8, 3 + i);  // z3 over the y side
        pairs.emplace_back(9, 3 + i);  // z4
    }
    return Graph::from_edge_list(10, pairs);
}

ReplacementResult h_construction(const std::array<Attachment, 4>& arms) {
    std::map<int, Attachment> gadgets;
    for (int k = 0; k < 4; ++k) gadgets.emplace(6 + k, arms[k]);
    return vertex_replacement(h_graph(), gadgets);
}

}  // namespace p3pack
