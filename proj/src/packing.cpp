#include "p3pack/packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace p3pack {

std::vector<int> Packing::covered_vertices() const {
    std::vector<int> vs;
    vs.reserve(paths.size() * 3);
    for (const Path3& p : paths) {
        vs.push_back(p.a);
        vs.push_back(p.center);
        vs.push_back(p.b);
    }
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::vector<Edge> Packing::used_edges() const {
    std::vector<Edge> es;
    es.reserve(paths.size() * 2);
    for (const Path3& p : paths) {
        es.emplace_back(p.a, p.center);
        es.emplace_back(p.center, p.b);
    }
    std::sort(es.begin(), es.end());
    return es;
}

void Packing::canonicalize() { std::sort(paths.begin(), paths.end()); }

void validate_constraint(const Graph& g, const FactorConstraint& c) {
    std::vector<char> removed(g.n(), 0);
    for (int v : c.removed) {
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("constraint: removed vertex " + std::to_string(v) +
                                        " out of range");
        removed[v] = 1;
    }
    for (const Edge& e : c.required) {
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("constraint: required edge (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) + ") not in graph");
        if (removed[e.u] || removed[e.v])
            throw std::invalid_argument("constraint: required edge (" + std::to_string(e.u) +
                                        "," + std::to_string(e.v) +
                                        ") incident to a removed vertex");
        for (const Edge& f : c.forbidden)
            if (e == f)
                throw std::invalid_argument("constraint: edge (" + std::to_string(e.u) + "," +
                                            std::to_string(e.v) +
                                            ") both required and forbidden");
    }
}

namespace {

int edge_index(const Graph& g, Edge e) {
    const auto& es = g.edges();
    auto it = std::lower_bound(es.begin(), es.end(), e);
    if (it == es.end() || *it != e) return -1;
    return static_cast<int>(it - es.begin());
}

// Shared search state for factor finding and enumeration.
struct FactorSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> adj;  // forbidden edges filtered out
    std::vector<char> covered;          // removed vertices pre-covered
    std::vector<int> uncovdeg;          // uncovered neighbors via allowed edges
    int uncovered = 0;
    std::vector<int> required_ids;      // indices into g.edges()
    std::vector<char> edge_used;
    std::vector<Path3> placed;

    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool budget_hit = false;
    std::size_t limit = SIZE_MAX;
    std::vector<Packing> found;

    // scratch for the component scan
    std::vector<int> comp_stack;
    std::vector<int> comp_mark;
    int comp_epoch = 0;

    FactorSearch(const Graph& graph, const FactorConstraint& c, std::uint64_t budget_nodes)
        : g(graph), n(graph.n()), budget(budget_nodes) {
        validate_constraint(g, c);
        std::vector<char> forb(g.m(), 0);
        for (const Edge& e : c.forbidden) {
            int id = edge_index(g, e);
            if (id >= 0) forb[id] = 1;
        }
        adj.assign(n, {});
        for (int id = 0; id < g.m(); ++id) {
            if (forb[id]) continue;
            const Edge& e = g.edges()[id];
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        covered.assign(n, 0);
        for (int v : c.removed) covered[v] = 1;
        uncovered = 0;
        for (int v = 0; v < n; ++v)
            if (!covered[v]) ++uncovered;
        uncovdeg.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int w : adj[v])
                if (!covered[w]) ++uncovdeg[v];
        for (const Edge& e : c.required) required_ids.push_back(edge_index(g, e));
        std::sort(required_ids.begin(), required_ids.end());
        edge_used.assign(g.m(), 0);
        comp_mark.assign(n, 0);
    }

    void cover(int v) {
        covered[v] = 1;
        --uncovered;
        for (int w : adj[v]) --uncovdeg[w];
    }

    void uncover(int v) {
        covered[v] = 0;
        ++uncovered;
        for (int w : adj[v]) ++uncovdeg[w];
    }

    void place(int end1, int center, int end2) {
        int id1 = edge_index(g, Edge(end1, center));
        int id2 = edge_index(g, Edge(center, end2));
        cover(end1);
        cover(center);
        cover(end2);
        edge_used[id1] = 1;
        edge_used[id2] = 1;
        placed.emplace_back(end1, center, end2);
    }

    void unplace(int end1, int center, int end2) {
        placed.pop_back();
        edge_used[edge_index(g, Edge(end1, center))] = 0;
        edge_used[edge_index(g, Edge(center, end2))] = 0;
        uncover(end2);
        uncover(center);
        uncover(end1);
    }

    // every uncovered component must have size divisible by 3
    bool components_ok() {
        ++comp_epoch;
        for (int s = 0; s < n; ++s) {
            if (covered[s] || comp_mark[s] == comp_epoch) continue;
            int size = 0;
            comp_stack.clear();
            comp_stack.push_back(s);
            comp_mark[s] = comp_epoch;
            while (!comp_stack.empty()) {
                int v = comp_stack.back();
                comp_stack.pop_back();
                ++size;
                for (int w : adj[v])
                    if (!covered[w] && comp_mark[w] != comp_epoch) {
                        comp_mark[w] = comp_epoch;
                        comp_stack.push_back(w);
                    }
            }
            if (size % 3 != 0) return false;
        }
        return true;
    }

    // returns true when the search should stop entirely
    bool record() {
        Packing p{placed};
        p.canonicalize();
        found.push_back(std::move(p));
        return found.size() >= limit;
    }

    bool around(int end1, int center, int end2) {
        place(end1, center, end2);
        bool stop = run();
        unplace(end1, center, end2);
        return stop;
    }

    bool run() {
        ++nodes;
        if (budget && nodes > budget) {
            budget_hit = true;
            return true;
        }

        // required edges: the first unsatisfied one pins the next path
        for (int id : required_ids) {
            if (edge_used[id]) continue;
            const Edge& e = g.edges()[id];
            if (covered[e.u] || covered[e.v]) return false;  // can no longer be used
            for (int w : adj[e.u])
                if (w != e.v && !covered[w])
                    if (around(w, e.u, e.v)) return true;
            for (int w : adj[e.v])
                if (w != e.u && !covered[w])
                    if (around(e.u, e.v, w)) return true;
            return false;
        }

        if (uncovered == 0) return record();
        if (uncovered % 3 != 0) return false;
        if (!components_ok()) return false;

        // a vertex with a single live neighbor is forced through that neighbor
        int pick = -1;
        for (int v = 0; v < n; ++v) {
            if (covered[v]) continue;
            if (uncovdeg[v] == 0) return false;
            if (uncovdeg[v] == 1) {
                pick = v;
                break;
            }
        }
        if (pick >= 0) {
            int c = -1;
            for (int w : adj[pick])
                if (!covered[w]) {
                    c = w;
                    break;
                }
            for (int d : adj[c])
                if (d != pick && !covered[d])
                    if (around(pick, c, d)) return true;
            return false;
        }

        int x = 0;
        while (covered[x]) ++x;
        const auto& nx = adj[x];
        for (size_t i = 0; i < nx.size(); ++i) {
            if (covered[nx[i]]) continue;
            for (size_t j = i + 1; j < nx.size(); ++j) {
                if (covered[nx[j]]) continue;
                if (around(nx[i], x, nx[j])) return true;
            }
        }
        for (int c : nx) {
            if (covered[c]) continue;
            for (int d : adj[c])
                if (d != x && !covered[d])
                    if (around(x, c, d)) return true;
        }
        return false;
    }
};

}  // namespace

FactorResult find_lambda_factor(const Graph& g, const FactorConstraint& c,
                                std::uint64_t budget_nodes) {
    FactorSearch search(g, c, budget_nodes);
    search.limit = 1;
    search.run();
    FactorResult res;
    res.nodes = search.nodes;
    if (!search.found.empty()) {
        res.status = SolveStatus::kFound;
        res.factor = search.found.front();
    } else {
        res.status = search.budget_hit ? SolveStatus::kBudget : SolveStatus::kNone;
    }
    return res;
}

EnumResult enumerate_lambda_factors(const Graph& g, const FactorConstraint& c,
                                    std::size_t limit, std::uint64_t budget_nodes) {
    FactorSearch search(g, c, budget_nodes);
    search.limit = limit;
    bool stopped = search.run();
    EnumResult res;
    res.factors = std::move(search.found);
    res.nodes = search.nodes;
    res.exhausted = !stopped && !search.budget_hit;
    std::sort(res.factors.begin(), res.factors.end(),
              [](const Packing& x, const Packing& y) { return x.paths < y.paths; });
    return res;
}

namespace {

struct MaxSearch {
    const Graph& g;
    int n;
    std::vector<char> covered;  // covered by a path
    std::vector<char> skipped;  // decided to stay uncovered
    int available = 0;
    std::vector<Path3> placed;
    int best = -1;
    Packing best_packing;
    std::uint64_t nodes = 0;
    std::uint64_t budget = 0;
    bool budget_hit = false;

    explicit MaxSearch(const Graph& graph, std::uint64_t budget_nodes)
        : g(graph), n(graph.n()), budget(budget_nodes) {
        covered.assign(n, 0);
        skipped.assign(n, 0);
        available = n;
    }

    void improve() {
        if (static_cast<int>(placed.size()) > best) {
            best = static_cast<int>(placed.size());
            best_packing.paths = placed;
            best_packing.canonicalize();
        }
    }

    void run() {
        ++nodes;
        if (budget && nodes > budget) {
            budget_hit = true;
            return;
        }
        improve();
        if (static_cast<int>(placed.size()) + available / 3 <= best) return;
        int x = -1;
        for (int v = 0; v < n; ++v)
            if (!covered[v] && !skipped[v]) {
                x = v;
                break;
            }
        if (x < 0) return;

        auto usable = [&](int v) { return !covered[v] && !skipped[v]; };
        auto around = [&](int e1, int c, int e2) {
            covered[e1] = covered[c] = covered[e2] = 1;
            available -= 3;
            placed.emplace_back(e1, c, e2);
            run();
            placed.pop_back();
            available += 3;
            covered[e1] = covered[c] = covered[e2] = 0;
        };

        const auto& nx = g.neighbors(x);
        for (size_t i = 0; i < nx.size(); ++i) {
            if (!usable(nx[i])) continue;
            for (size_t j = i + 1; j < nx.size(); ++j) {
                if (!usable(nx[j])) continue;
                around(nx[i], x, nx[j]);
            }
        }
        for (int c : nx) {
            if (!usable(c)) continue;
            for (int d : g.neighbors(c))
                if (d != x && usable(d)) around(x, c, d);
        }
        skipped[x] = 1;
        --available;
        run();
        ++available;
        skipped[x] = 0;
    }
};

}  // namespace

Packing greedy_packing(const Graph& g) {
    std::vector<Path3> paths = all_paths(g);
    Packing out;
    std::vector<char> covered(g.n(), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (const Path3& p : paths) {
            if (covered[p.a] || covered[p.center] || covered[p.b]) continue;
            covered[p.a] = covered[p.center] = covered[p.b] = 1;
            out.paths.push_back(p);
            progress = true;
        }
    }
    out.canonicalize();
    return out;
}

MaxPackingResult max_lambda_packing(const Graph& g, std::uint64_t budget_nodes) {
    MaxSearch search(g, budget_nodes);
    Packing warm = greedy_packing(g);
    search.best = warm.size();
    search.best_packing = warm;
    search.run();
    MaxPackingResult res;
    res.lambda = search.best;
    res.packing = search.best_packing;
    res.nodes = search.nodes;
    res.complete = !search.budget_hit;
    return res;
}

std::vector<Path3> all_paths(const Graph& g, const FactorConstraint& c) {
    std::vector<char> removed(g.n(), 0);
    for (int v : c.removed) removed[v] = 1;
    auto allowed = [&](int u, int v) {
        Edge e(u, v);
        for (const Edge& f : c.forbidden)
            if (e == f) return false;
        return true;
    };
    std::vector<Path3> out;
    for (int center = 0; center < g.n(); ++center) {
        if (removed[center]) continue;
        const auto& row = g.neighbors(center);
        for (size_t i = 0; i < row.size(); ++i) {
            if (removed[row[i]] || !allowed(row[i], center)) continue;
            for (size_t j = i + 1; j < row.size(); ++j) {
                if (removed[row[j]] || !allowed(center, row[j])) continue;
                out.emplace_back(row[i], center, row[j]);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

OracleResult brute_force_oracle(const Graph& g, const FactorConstraint& c) {
    if (g.n() > 14)
        throw std::invalid_argument("brute_force_oracle: guarded to n <= 14, got n=" +
                                    std::to_string(g.n()));
    validate_constraint(g, c);
    std::vector<Path3> paths = all_paths(g, c);
    std::vector<int> rm = c.removed;
    std::sort(rm.begin(), rm.end());
    rm.erase(std::unique(rm.begin(), rm.end()), rm.end());
    int need_cover = g.n() - static_cast<int>(rm.size());

    OracleResult res;
    std::vector<char> covered(g.n(), 0);
    std::vector<Path3> chosen;

    auto has_required = [&]() {
        for (const Edge& e : c.required) {
            bool used = false;
            for (const Path3& p : chosen)
                if (Edge(p.a, p.center) == e || Edge(p.center, p.b) == e) {
                    used = true;
                    break;
                }
            if (!used) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, size_t from) -> void {
        ++res.packings_seen;
        res.lambda = std::max(res.lambda, static_cast<int>(chosen.size()));
        if (static_cast<int>(chosen.size() * 3) == need_cover && has_required()) {
            Packing p{chosen};
            p.canonicalize();
            res.factors.push_back(std::move(p));
        }
        for (size_t i = from; i < paths.size(); ++i) {
            const Path3& p = paths[i];
            if (covered[p.a] || covered[p.center] || covered[p.b]) continue;
            covered[p.a] = covered[p.center] = covered[p.b] = 1;
            chosen.push_back(p);
            self(self, i + 1);
            chosen.pop_back();
            covered[p.a] = covered[p.center] = covered[p.b] = 0;
        }
    };
    rec(rec, 0);
    std::sort(res.factors.begin(), res.factors.end(),
              [](const Packing& x, const Packing& y) { return x.paths < y.paths; });
    return res;
}

std::optional<std::string> validate_packing(const Graph& g, const Packing& p,
                                            const FactorConstraint& c) {
    std::vector<char> removed(g.n(), 0);
    for (int v : c.removed) {
        if (v < 0 || v >= g.n()) return "constraint removed vertex out of range";
        removed[v] = 1;
    }
    std::vector<char> seen(g.n(), 0);
    for (const Path3& path : p.paths) {
        for (int v : {path.a, path.center, path.b}) {
            if (v < 0 || v >= g.n()) return "path vertex out of range";
            if (removed[v])
                return "path uses removed vertex " + std::to_string(v);
            if (seen[v]) return "vertex " + std::to_string(v) + " covered twice";
            seen[v] = 1;
        }
        if (path.a == path.b || path.a == path.center || path.b == path.center)
            return "degenerate path";
        if (!g.has_edge(path.a, path.center) || !g.has_edge(path.center, path.b))
            return "path edges missing from graph";
        for (const Edge& f : c.forbidden)
            if (Edge(path.a, path.center) == f || Edge(path.center, path.b) == f)
                return "path uses forbidden edge (" + std::to_string(f.u) + "," +
                       std::to_string(f.v) + ")";
    }
    return std::nullopt;
}

std::optional<std::string> validate_factor(const Graph& g, const Packing& p,
                                           const FactorConstraint& c) {
    if (auto bad = validate_packing(g, p, c)) return bad;
    std::vector<char> removed(g.n(), 0);
    for (int v : c.removed) removed[v] = 1;
    std::vector<char> seen(g.n(), 0);
    for (const Path3& path : p.paths)
        for (int v : {path.a, path.center, path.b}) seen[v] = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v] && !seen[v]) return "vertex " + std::to_string(v) + " uncovered";
    std::vector<Edge> used = p.used_edges();
    for (const Edge& e : c.required)
        if (!std::binary_search(used.begin(), used.end(), e))
            return "required edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                   ") unused";
    return std::nullopt;
}

}  // namespace p3pack
