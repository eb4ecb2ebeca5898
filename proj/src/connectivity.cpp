#include "p3pack/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace p3pack {

namespace {

// Unit-capacity max-flow (BFS augmentation) on the split-vertex network:
// node 2v = "in", 2v+1 = "out"; v_in -> v_out capacity 1 except s, t.
struct FlowNet {
    int nodes;
    std::vector<std::vector<int>> head;   // adjacency: edge ids
    std::vector<int> to;
    std::vector<int> cap;

    explicit FlowNet(int n) : nodes(n), head(n) {}

    void arc(int a, int b, int c) {
        head[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        head[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    }

    int max_flow(int s, int t) {
        int flow = 0;
        std::vector<int> pre(nodes);
        while (true) {
            std::fill(pre.begin(), pre.end(), -1);
            pre[s] = -2;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && pre[t] == -1) {
                int v = q.front();
                q.pop();
                for (int id : head[v])
                    if (cap[id] > 0 && pre[to[id]] == -1) {
                        pre[to[id]] = id;
                        q.push(to[id]);
                    }
            }
            if (pre[t] == -1) break;
            for (int v = t; v != s;) {
                int id = pre[v];
                --cap[id];
                ++cap[id ^ 1];
                v = to[id ^ 1];
            }
            ++flow;
        }
        return flow;
    }
};

bool component_has_cycle(const std::vector<int>& comp_vertices, int comp_edges) {
    return comp_edges >= static_cast<int>(comp_vertices.size()) &&
           !comp_vertices.empty();
}

// Components of g minus an edge subset; returns (vertex lists, edge counts).
struct SplitView {
    std::vector<std::vector<int>> comps;
    std::vector<int> edge_count;
    std::vector<int> comp_of;
};

SplitView components_without(const Graph& g, const std::vector<char>& edge_dead) {
    SplitView view;
    view.comp_of.assign(g.n(), -1);
    std::vector<std::vector<std::pair<int, int>>> adj(g.n());  // (nbr, edge id)
    for (int i = 0; i < g.m(); ++i) {
        if (edge_dead[i]) continue;
        const Edge& e = g.edges()[i];
        adj[e.u].push_back({e.v, i});
        adj[e.v].push_back({e.u, i});
    }
    std::vector<int> stack;
    for (int s = 0; s < g.n(); ++s) {
        if (view.comp_of[s] != -1) continue;
        int c = static_cast<int>(view.comps.size());
        view.comps.emplace_back();
        view.edge_count.push_back(0);
        view.comp_of[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            view.comps[c].push_back(v);
            for (auto [w, id] : adj[v]) {
                (void)id;
                if (view.comp_of[w] == -1) {
                    view.comp_of[w] = c;
                    stack.push_back(w);
                }
            }
        }
        std::sort(view.comps[c].begin(), view.comps[c].end());
    }
    for (int i = 0; i < g.m(); ++i)
        if (!edge_dead[i]) ++view.edge_count[view.comp_of[g.edges()[i].u]];
    return view;
}

}  // namespace

int max_vertex_disjoint_paths(const Graph& g, int s, int t) {
    if (s == t) throw std::invalid_argument("max_vertex_disjoint_paths: s == t");
    FlowNet net(2 * g.n());
    for (int v = 0; v < g.n(); ++v)
        net.arc(2 * v, 2 * v + 1, (v == s || v == t) ? g.n() : 1);
    for (const Edge& e : g.edges()) {
        net.arc(2 * e.u + 1, 2 * e.v, 1);
        net.arc(2 * e.v + 1, 2 * e.u, 1);
    }
    return net.max_flow(2 * s + 1, 2 * t);
}

int vertex_connectivity(const Graph& g) {
    if (g.n() < 2) throw std::invalid_argument("vertex_connectivity: need at least 2 vertices");
    int best = g.n() - 1;
    bool found_pair = false;
    for (int s = 0; s < g.n(); ++s)
        for (int t = s + 1; t < g.n(); ++t) {
            if (g.has_edge(s, t)) continue;
            found_pair = true;
            best = std::min(best, max_vertex_disjoint_paths(g, s, t));
            if (best == 0) return 0;
        }
    return found_pair ? best : g.n() - 1;
}

std::vector<EdgeCut> enumerate_3_edge_cuts(const Graph& g) {
    std::vector<EdgeCut> cuts;
    int m = g.m();
    if (m < 3 || !g.connected()) return cuts;
    std::vector<char> dead(m, 0);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
            for (int c = b + 1; c < m; ++c) {
                dead[a] = dead[b] = dead[c] = 1;
                SplitView view = components_without(g, dead);
                if (view.comps.size() >= 2) {
                    EdgeCut cut;
                    cut.edges = {g.edges()[a], g.edges()[b], g.edges()[c]};
                    int anchor = std::min({cut.edges[0].u, cut.edges[1].u, cut.edges[2].u});
                    int ca = view.comp_of[anchor];
                    cut.side_a = view.comps[ca];
                    for (size_t i = 0; i < view.comps.size(); ++i)
                        if (static_cast<int>(i) != ca)
                            cut.side_b.insert(cut.side_b.end(), view.comps[i].begin(),
                                              view.comps[i].end());
                    std::sort(cut.side_b.begin(), cut.side_b.end());
                    std::vector<int> ends = {cut.edges[0].u, cut.edges[0].v, cut.edges[1].u,
                                             cut.edges[1].v, cut.edges[2].u, cut.edges[2].v};
                    std::sort(ends.begin(), ends.end());
                    cut.is_matching =
                        std::adjacent_find(ends.begin(), ends.end()) == ends.end();
                    cut.is_star = cut.side_a.size() == 1 || cut.side_b.size() == 1;
                    cuts.push_back(std::move(cut));
                }
                dead[a] = dead[b] = dead[c] = 0;
            }
    return cuts;
}

std::optional<std::vector<Edge>> smallest_cycle_separating_cut(const Graph& g, int k_limit) {
    int m = g.m();
    std::vector<char> dead(m, 0);
    std::vector<int> pick;
    // subsets in increasing size so the first hit is smallest
    for (int size = 0; size < k_limit; ++size) {
        pick.assign(size, 0);
        std::optional<std::vector<Edge>> hit;
        auto test = [&]() {
            SplitView view = components_without(g, dead);
            int cyclic = 0;
            for (size_t i = 0; i < view.comps.size(); ++i)
                if (component_has_cycle(view.comps[i], view.edge_count[i])) ++cyclic;
            if (cyclic >= 2) {
                std::vector<Edge> cut;
                for (int i = 0; i < m; ++i)
                    if (dead[i]) cut.push_back(g.edges()[i]);
                hit = std::move(cut);
            }
        };
        // iterate size-subsets of edges
        std::vector<int> idx(size);
        auto rec = [&](auto&& self, int at, int from) -> bool {
            if (hit) return true;
            if (at == size) {
                test();
                return hit.has_value();
            }
            for (int i = from; i < m - (size - at - 1); ++i) {
                idx[at] = i;
                dead[i] = 1;
                if (self(self, at + 1, i + 1)) {
                    dead[i] = 0;
                    return true;
                }
                dead[i] = 0;
            }
            return false;
        };
        if (rec(rec, 0, 0)) return hit;
    }
    return std::nullopt;
}

bool is_cyclically_k_edge_connected(const Graph& g, int k) {
    if (k < 1 || k > 7)
        throw std::invalid_argument("is_cyclically_k_edge_connected: k must be in [1,7]");
    return !smallest_cycle_separating_cut(g, k).has_value();
}

}  // namespace p3pack
