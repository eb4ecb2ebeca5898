#include "p3pack/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "p3pack/connectivity.hpp"
#include "p3pack/graph6.hpp"

namespace p3pack {

namespace {

struct CubicGen {
    int n;
    const CorpusSpec& spec;
    const std::function<bool(const Graph&)>& sink;
    std::vector<std::vector<int>> adj;
    std::vector<int> deg;
    std::vector<Edge> edges;
    int used = 0;  // vertices introduced so far
    std::unordered_set<std::string> seen;
    bool stopped = false;

    CubicGen(const CorpusSpec& s, const std::function<bool(const Graph&)>& out)
        : n(s.n), spec(s), sink(out), adj(s.n), deg(s.n, 0) {}

    bool adjacent(int a, int b) const {
        return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
    }

    void link(int a, int b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
        ++deg[a];
        ++deg[b];
        edges.emplace_back(a, b);
    }

    void unlink() {
        Edge e = edges.back();
        edges.pop_back();
        adj[e.u].pop_back();
        adj[e.v].pop_back();
        --deg[e.u];
        --deg[e.v];
    }

    void emit() {
        Graph g = Graph::from_edges(n, edges);
        if (spec.require_3connected && vertex_connectivity(g) < 3) return;
        if (spec.dedup) {
            std::string canon = canonical_form_or_throw(g);
            if (!seen.insert(canon).second) return;
        }
        if (!sink(g)) stopped = true;
    }

    void extend() {
        if (stopped) return;
        int u = -1;
        for (int v = 0; v < used; ++v)
            if (deg[v] < 3) {
                u = v;
                break;
            }
        if (u < 0) {
            // all introduced vertices are finished; anything left would start
            // a second component
            if (used == n) emit();
            return;
        }
        int need = 3 - deg[u];
        std::vector<int> existing;
        for (int w = u + 1; w < used; ++w)
            if (deg[w] < 3 && !adjacent(u, w)) existing.push_back(w);

        std::vector<int> combo;
        for (int fresh = 0; fresh <= need; ++fresh) {
            if (used + fresh > n) break;
            int from_existing = need - fresh;
            if (from_existing > static_cast<int>(existing.size())) continue;
            combo.clear();
            choose_existing(u, existing, 0, from_existing, fresh, combo);
            if (stopped) return;
        }
    }

    void choose_existing(int u, const std::vector<int>& existing, int from, int still,
                         int fresh, std::vector<int>& combo) {
        if (stopped) return;
        if (still == 0) {
            for (int w : combo) link(u, w);
            int base = used;
            for (int j = 0; j < fresh; ++j) link(u, base + j);
            used += fresh;
            extend();
            used -= fresh;
            for (int j = 0; j < fresh + static_cast<int>(combo.size()); ++j) unlink();
            return;
        }
        for (int i = from; i <= static_cast<int>(existing.size()) - still; ++i) {
            combo.push_back(existing[i]);
            choose_existing(u, existing, i + 1, still - 1, fresh, combo);
            combo.pop_back();
            if (stopped) return;
        }
    }

    void run() {
        // vertex 0's neighbors are fixed as 1,2,3: safe up to relabeling
        link(0, 1);
        link(0, 2);
        link(0, 3);
        used = 4;
        extend();
    }
};

}  // namespace

void generate_cubic(const CorpusSpec& spec, const std::function<bool(const Graph&)>& sink) {
    if (spec.n < 4 || spec.n > 16)
        throw std::invalid_argument("generate_cubic: n must be in [4,16], got " +
                                    std::to_string(spec.n));
    if (spec.n % 2 != 0)
        throw std::invalid_argument("generate_cubic: no cubic graph on an odd vertex count");
    CubicGen gen(spec, sink);
    gen.run();
}

std::vector<Graph> generate_cubic_all(const CorpusSpec& spec) {
    std::vector<Graph> out;
    generate_cubic(spec, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

namespace {

// Color refinement to a fixpoint. Color ids come from sorting signatures, so
// they do not depend on vertex labels. marked >= 0 singles one vertex out in
// the first pass (individualization); after that its color keeps it apart.
int refine(const Graph& g, std::vector<int>& colors, int marked) {
    int n = g.n();
    int classes = -1;
    while (true) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(v == marked ? 1 : 0);
            sig[v].push_back(colors[v]);
            std::vector<int> nc;
            for (int w : g.neighbors(v)) nc.push_back(colors[w]);
            std::sort(nc.begin(), nc.end());
            sig[v].insert(sig[v].end(), nc.begin(), nc.end());
        }
        marked = -1;
        std::vector<std::vector<int>> uniq = sig;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        for (int v = 0; v < n; ++v)
            colors[v] = static_cast<int>(
                std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
        int now = static_cast<int>(uniq.size());
        if (now == classes || now == n) return now;
        classes = now;
    }
}

struct CanonSearch {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool over = false;
    std::optional<std::string> best;

    CanonSearch(const Graph& graph, std::uint64_t b) : g(graph), budget(b) {}

    void descend(std::vector<int> colors, int marked) {
        if (over) return;
        if (++nodes > budget) {
            over = true;
            return;
        }
        int classes = refine(g, colors, marked);
        if (classes == g.n()) {
            Graph relabeled = apply_permutation(g, colors);
            std::string enc = graph6_encode(relabeled);
            if (!best || enc < *best) best = enc;
            return;
        }
        // smallest color id with a class of size >= 2
        std::vector<int> count(g.n(), 0);
        for (int c : colors) ++count[c];
        int target = -1;
        for (int c = 0; c < g.n(); ++c)
            if (count[c] >= 2) {
                target = c;
                break;
            }
        for (int v = 0; v < g.n(); ++v)
            if (colors[v] == target) descend(colors, v);
    }
};

}  // namespace

std::optional<std::string> canonical_form(const Graph& g, std::uint64_t budget_nodes) {
    if (g.n() == 0) return graph6_encode(g);
    CanonSearch search(g, budget_nodes);
    std::vector<int> colors(g.n(), 0);
    search.descend(colors, -1);
    if (search.over) return std::nullopt;
    return search.best;
}

std::string canonical_form_or_throw(const Graph& g, std::uint64_t budget_nodes) {
    auto form = canonical_form(g, budget_nodes);
    if (!form) throw std::runtime_error("canonical_form: node budget exceeded (unverified)");
    return *form;
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return false;
    std::vector<int> da = a.degrees(), db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form_or_throw(a) == canonical_form_or_throw(b);
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool parse_ints(const std::string& line, std::vector<long long>& out) {
    out.clear();
    std::istringstream in(line);
    long long x;
    while (in >> x) out.push_back(x);
    std::string rest;
    if (in.clear(), in >> rest) return false;
    return true;
}

}  // namespace

IngestResult ingest_text(const std::string& text, IngestFormat format) {
    IngestResult res;
    std::vector<std::string> lines = split_lines(text);
    if (format == IngestFormat::kGraph6) {
        for (size_t i = 0; i < lines.size(); ++i) {
            std::string line = lines[i];
            const std::string header = ">>graph6<<";
            if (line.rfind(header, 0) == 0) line = line.substr(header.size());
            if (line.empty()) continue;
            try {
                res.graphs.push_back(graph6_decode(line));
            } catch (const std::exception& ex) {
                res.diagnostics.push_back({static_cast<int>(i + 1), ex.what()});
            }
        }
        return res;
    }
    // edge list blocks: "n m" header then m lines "u v"
    size_t i = 0;
    std::vector<long long> nums;
    while (i < lines.size()) {
        if (lines[i].empty()) {
            ++i;
            continue;
        }
        int header_line = static_cast<int>(i + 1);
        if (!parse_ints(lines[i], nums) || nums.size() != 2 || nums[0] < 0 || nums[1] < 0) {
            res.diagnostics.push_back({header_line, "expected 'n m' header"});
            ++i;
            continue;
        }
        int n = static_cast<int>(nums[0]);
        long long m = nums[1];
        ++i;
        std::vector<std::pair<int, int>> pairs;
        bool bad = false;
        for (long long k = 0; k < m; ++k) {
            while (i < lines.size() && lines[i].empty()) ++i;
            if (i >= lines.size() || !parse_ints(lines[i], nums) || nums.size() != 2) {
                res.diagnostics.push_back(
                    {i < lines.size() ? static_cast<int>(i + 1) : header_line,
                     "block at line " + std::to_string(header_line) + ": expected " +
                         std::to_string(m) + " edges, got " + std::to_string(k)});
                bad = true;
                break;
            }
            pairs.emplace_back(static_cast<int>(nums[0]), static_cast<int>(nums[1]));
            ++i;
        }
        if (bad) continue;  // resync at the line that failed
        try {
            res.graphs.push_back(Graph::from_edge_list(n, pairs));
        } catch (const std::exception& ex) {
            res.diagnostics.push_back({header_line, ex.what()});
        }
    }
    return res;
}

IngestResult ingest_file(const std::string& path, IngestFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("ingest_file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ingest_text(buf.str(), format);
}

}  // namespace p3pack
