#include "p3pack/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "p3pack/connectivity.hpp"
#include "p3pack/graph6.hpp"

namespace p3pack {
namespace {

using nlohmann::ordered_json;

struct ClaimInfo {
    ClaimId id;
    const char* name;
    int residue;
};

constexpr ClaimInfo kClaims[] = {
    {ClaimId::kZ1, "z1", 0}, {ClaimId::kZ2, "z2", 0}, {ClaimId::kZ3, "z3", 0},
    {ClaimId::kZ4, "z4", 0}, {ClaimId::kZ5, "z5", 0}, {ClaimId::kZ6, "z6", 0},
    {ClaimId::kZ7, "z7", 0}, {ClaimId::kZ8, "z8", 0}, {ClaimId::kZ9, "z9", 0},
    {ClaimId::kT1, "t1", 2}, {ClaimId::kT2, "t2", 2}, {ClaimId::kT3, "t3", 2},
    {ClaimId::kT4, "t4", 2},
    {ClaimId::kF1, "f1", 4}, {ClaimId::kF2, "f2", 4}, {ClaimId::kF3, "f3", 4},
    {ClaimId::kF4, "f4", 4}, {ClaimId::kF5, "f5", 4}, {ClaimId::kF6, "f6", 4},
};

const ClaimInfo& info(ClaimId id) {
    for (const auto& ci : kClaims)
        if (ci.id == id) return ci;
    throw std::logic_error("unknown claim id");
}

// Shared state for one evaluate_claim call. Inner queries return
// nullopt when the node budget cuts them off; the claim then ends
// kSkipped unless a definite counter-witness was found first.
struct Ctx {
    const Graph& g;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::vector<ordered_json> undetermined;

    // true / false = factor exists / does not; nullopt = ran out of budget
    std::optional<bool> has_factor(const FactorConstraint& c) {
        FactorResult r = find_lambda_factor(g, c, budget);
        nodes += r.nodes;
        if (r.status == SolveStatus::kBudget) return std::nullopt;
        return r.status == SolveStatus::kFound;
    }
    std::optional<bool> has_factor_without(std::vector<int> removed) {
        FactorConstraint c;
        c.removed = std::move(removed);
        return has_factor(c);
    }
};

ordered_json edge_json(const Edge& e) { return ordered_json::array({e.u, e.v}); }

// A universally quantified family of queries, each expected to come out
// `want`. Returns a fail witness, or nullopt if every determined query
// agreed (budget misses are logged in ctx.undetermined).
template <typename Objects, typename Query, typename Witness>
std::optional<ordered_json> for_all(Ctx& ctx, const Objects& objects, bool want,
                                    Query query, Witness witness) {
    for (const auto& ob : objects) {
        std::optional<bool> got = query(ob);
        if (!got) {
            ctx.undetermined.push_back(witness(ob));
            continue;
        }
        if (*got != want) return witness(ob);
    }
    return std::nullopt;
}

std::vector<int> vertices_of(const Graph& g) {
    std::vector<int> v(g.n());
    for (int i = 0; i < g.n(); ++i) v[i] = i;
    return v;
}

// Unordered pairs {a,b} from N(x), giving the 3-vertex path a-x-b.
std::vector<std::pair<int, int>> center_pairs(const Graph& g, int x) {
    const auto& nb = g.neighbors(x);
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < nb.size(); ++i)
        for (std::size_t j = i + 1; j < nb.size(); ++j)
            out.push_back({nb[i], nb[j]});
    return out;
}

// 5-vertex paths w1-w2-x-w4-w5 centered at x, as vertex arrays. Reversal
// duplicates are dropped by requiring w2 < w4.
std::vector<std::array<int, 5>> five_paths_centered(const Graph& g, int x) {
    std::vector<std::array<int, 5>> out;
    const auto& nb = g.neighbors(x);
    for (int w2 : nb)
        for (int w4 : nb) {
            if (w2 >= w4) continue;
            for (int w1 : g.neighbors(w2)) {
                if (w1 == x || w1 == w4) continue;
                for (int w5 : g.neighbors(w4)) {
                    if (w5 == x || w5 == w2 || w5 == w1) continue;
                    out.push_back({w1, w2, x, w4, w5});
                }
            }
        }
    return out;
}

// 4-vertex paths z1-z2-z3-z4 with x an inner vertex, deduplicated against
// reversal.
std::vector<std::array<int, 4>> four_paths_inner(const Graph& g, int x) {
    std::set<std::array<int, 4>> seen;
    std::vector<std::array<int, 4>> out;
    for (int z1 : g.neighbors(x))
        for (int z3 : g.neighbors(x)) {
            if (z3 == z1) continue;
            for (int z4 : g.neighbors(z3)) {
                if (z4 == x || z4 == z1) continue;
                std::array<int, 4> p = {z1, x, z3, z4};
                std::array<int, 4> r = {z4, z3, x, z1};
                if (seen.insert(std::min(p, r)).second) out.push_back(p);
            }
        }
    return out;
}

ordered_json path_json(const std::array<int, 5>& w) {
    return ordered_json(std::vector<int>(w.begin(), w.end()));
}

std::optional<ordered_json> run_claim(Ctx& ctx, ClaimId id) {
    const Graph& g = ctx.g;
    switch (id) {
        case ClaimId::kZ1: {
            std::array<int, 1> one = {0};
            return for_all(
                ctx, one, true, [&](int) { return ctx.has_factor({}); },
                [&](int) { return ordered_json::object(); });
        }
        case ClaimId::kZ2:
            return for_all(
                ctx, g.edges(), true,
                [&](const Edge& e) {
                    FactorConstraint c;
                    c.forbidden = {e};
                    return ctx.has_factor(c);
                },
                [&](const Edge& e) { return ordered_json{{"avoid_edge", edge_json(e)}}; });
        case ClaimId::kZ3:
            return for_all(
                ctx, g.edges(), true,
                [&](const Edge& e) {
                    FactorConstraint c;
                    c.required = {e};
                    return ctx.has_factor(c);
                },
                [&](const Edge& e) { return ordered_json{{"use_edge", edge_json(e)}}; });
        case ClaimId::kZ4:
        case ClaimId::kZ5:
            // Around each vertex x, count the neighbor pairs {a,b} whose
            // removal along with x leaves a factor: z4 wants at least one,
            // z5 at least two.
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) -> std::optional<bool> {
                    int good = 0, need = id == ClaimId::kZ4 ? 1 : 2;
                    bool blocked = false;
                    for (auto [a, b] : center_pairs(g, x)) {
                        auto got = ctx.has_factor_without({a, x, b});
                        if (!got) {
                            blocked = true;
                            continue;
                        }
                        if (*got && ++good >= need) return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kZ6:
            // Both one-sided extensions of each edge xy must admit removal:
            // some x-y-y' and some x'-x-y.
            return for_all(
                ctx, g.edges(), true,
                [&](const Edge& e) -> std::optional<bool> {
                    for (int side = 0; side < 2; ++side) {
                        int x = side == 0 ? e.u : e.v;
                        int y = side == 0 ? e.v : e.u;
                        bool ok = false, blocked = false;
                        for (int yp : g.neighbors(y)) {
                            if (yp == x) continue;
                            auto got = ctx.has_factor_without({x, y, yp});
                            if (!got)
                                blocked = true;
                            else if (*got) {
                                ok = true;
                                break;
                            }
                        }
                        if (!ok) return blocked ? std::optional<bool>() : std::optional<bool>(false);
                    }
                    return true;
                },
                [&](const Edge& e) { return ordered_json{{"edge", edge_json(e)}}; });
        case ClaimId::kZ7: {
            std::vector<std::pair<Edge, Edge>> pairs;
            const auto& es = g.edges();
            for (std::size_t i = 0; i < es.size(); ++i)
                for (std::size_t j = i + 1; j < es.size(); ++j)
                    pairs.push_back({es[i], es[j]});
            return for_all(
                ctx, pairs, true,
                [&](const std::pair<Edge, Edge>& p) {
                    FactorConstraint c;
                    c.forbidden = {p.first, p.second};
                    return ctx.has_factor(c);
                },
                [&](const std::pair<Edge, Edge>& p) {
                    return ordered_json{
                        {"avoid_edges",
                         ordered_json::array({edge_json(p.first), edge_json(p.second)})}};
                });
        }
        case ClaimId::kZ8:
            return for_all(
                ctx, all_paths(g), true,
                [&](const Path3& p) { return ctx.has_factor_without({p.a, p.center, p.b}); },
                [&](const Path3& p) {
                    return ordered_json{{"path", ordered_json::array({p.a, p.center, p.b})}};
                });
        case ClaimId::kZ9: {
            // Every 3-edge cut, every way of picking 2 of its edges to use
            // and 1 to avoid.
            struct Obj {
                EdgeCut cut;
                int skip;
            };
            std::vector<Obj> objs;
            for (const auto& cut : enumerate_3_edge_cuts(g))
                for (int skip = 0; skip < 3; ++skip) objs.push_back({cut, skip});
            return for_all(
                ctx, objs, true,
                [&](const Obj& ob) {
                    FactorConstraint c;
                    for (int i = 0; i < 3; ++i)
                        (i == ob.skip ? c.forbidden : c.required).push_back(ob.cut.edges[i]);
                    return ctx.has_factor(c);
                },
                [&](const Obj& ob) {
                    ordered_json cut = ordered_json::array();
                    for (const Edge& e : ob.cut.edges) cut.push_back(edge_json(e));
                    return ordered_json{{"cut", cut}, {"avoid_edge", edge_json(ob.cut.edges[ob.skip])}};
                });
        }
        case ClaimId::kT1:
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) -> std::optional<bool> {
                    bool blocked = false;
                    for (int y : g.neighbors(x)) {
                        auto got = ctx.has_factor_without({x, y});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kT2:
            return for_all(
                ctx, g.edges(), true,
                [&](const Edge& e) { return ctx.has_factor_without({e.u, e.v}); },
                [&](const Edge& e) { return ordered_json{{"edge", edge_json(e)}}; });
        case ClaimId::kT3:
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) -> std::optional<bool> {
                    bool blocked = false;
                    for (const auto& w : five_paths_centered(g, x)) {
                        auto got = ctx.has_factor_without({w[0], w[1], w[2], w[3], w[4]});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kT4: {
            // For each edge xy there must be a removable 5-path centered at
            // x that does not run through y.
            std::vector<std::pair<int, int>> objs;
            for (const Edge& e : g.edges()) {
                objs.push_back({e.u, e.v});
                objs.push_back({e.v, e.u});
            }
            return for_all(
                ctx, objs, true,
                [&](const std::pair<int, int>& xy) -> std::optional<bool> {
                    bool blocked = false;
                    for (const auto& w : five_paths_centered(g, xy.first)) {
                        if (w[1] == xy.second || w[3] == xy.second) continue;
                        auto got = ctx.has_factor_without({w[0], w[1], w[2], w[3], w[4]});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](const std::pair<int, int>& xy) {
                    return ordered_json{{"center", xy.first}, {"excluded_neighbor", xy.second}};
                });
        }
        case ClaimId::kF1:
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) { return ctx.has_factor_without({x}); },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kF2: {
            std::vector<std::pair<int, Edge>> objs;
            for (int x = 0; x < g.n(); ++x)
                for (const Edge& e : g.edges()) objs.push_back({x, e});
            return for_all(
                ctx, objs, true,
                [&](const std::pair<int, Edge>& ob) {
                    FactorConstraint c;
                    c.removed = {ob.first};
                    c.forbidden = {ob.second};
                    return ctx.has_factor(c);
                },
                [&](const std::pair<int, Edge>& ob) {
                    return ordered_json{{"vertex", ob.first}, {"avoid_edge", edge_json(ob.second)}};
                });
        }
        case ClaimId::kF3:
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) -> std::optional<bool> {
                    bool blocked = false;
                    for (const auto& z : four_paths_inner(g, x)) {
                        auto got = ctx.has_factor_without({z[0], z[1], z[2], z[3]});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kF4:
            // Like f3 but the witness path must leave some edge at x unused;
            // an inner vertex of a 4-path has a third edge free, so the
            // queried removals coincide with f3's. Kept separate so both
            // stated forms are exercised.
            return for_all(
                ctx, vertices_of(g), true,
                [&](int x) -> std::optional<bool> {
                    bool blocked = false;
                    for (const auto& z : four_paths_inner(g, x)) {
                        bool free_edge = false;
                        for (int y : g.neighbors(x)) {
                            bool on_path = (z[0] == y && z[1] == x) || (z[1] == y && z[0] == x) ||
                                           (z[1] == y && z[2] == x) || (z[2] == y && z[1] == x) ||
                                           (z[2] == y && z[3] == x) || (z[3] == y && z[2] == x);
                            if (!on_path) {
                                free_edge = true;
                                break;
                            }
                        }
                        if (!free_edge) continue;
                        auto got = ctx.has_factor_without({z[0], z[1], z[2], z[3]});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](int x) { return ordered_json{{"vertex", x}}; });
        case ClaimId::kF5:
            return for_all(
                ctx, g.edges(), true,
                [&](const Edge& e) -> std::optional<bool> {
                    bool blocked = false;
                    for (int w : g.neighbors(e.u)) {
                        if (w == e.v) continue;
                        for (int z : g.neighbors(e.v)) {
                            if (z == e.u || z == w) continue;
                            auto got = ctx.has_factor_without({w, e.u, e.v, z});
                            if (!got)
                                blocked = true;
                            else if (*got)
                                return true;
                        }
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](const Edge& e) { return ordered_json{{"edge", edge_json(e)}}; });
        case ClaimId::kF6: {
            // Ordered 3-vertex paths x-y-z; the extension happens at x.
            std::vector<std::array<int, 3>> objs;
            for (const Path3& p : all_paths(g)) {
                objs.push_back({p.a, p.center, p.b});
                objs.push_back({p.b, p.center, p.a});
            }
            return for_all(
                ctx, objs, true,
                [&](const std::array<int, 3>& t) -> std::optional<bool> {
                    bool blocked = false;
                    for (int w : g.neighbors(t[0])) {
                        if (w == t[1] || w == t[2]) continue;
                        auto got = ctx.has_factor_without({w, t[0], t[1], t[2]});
                        if (!got)
                            blocked = true;
                        else if (*got)
                            return true;
                    }
                    if (blocked) return std::nullopt;
                    return false;
                },
                [&](const std::array<int, 3>& t) {
                    return ordered_json{{"path", ordered_json(std::vector<int>(t.begin(), t.end()))}};
                });
        }
    }
    throw std::logic_error("unhandled claim");
}

}  // namespace

const std::vector<ClaimId>& all_claims() {
    static const std::vector<ClaimId> ids = [] {
        std::vector<ClaimId> v;
        for (const auto& ci : kClaims) v.push_back(ci.id);
        return v;
    }();
    return ids;
}

std::string claim_name(ClaimId id) { return info(id).name; }

std::optional<ClaimId> parse_claim(const std::string& name) {
    for (const auto& ci : kClaims)
        if (name == ci.name) return ci.id;
    return std::nullopt;
}

int claim_residue(ClaimId id) { return info(id).residue; }

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::kHolds: return "holds";
        case Verdict::kFails: return "fails";
        case Verdict::kNotApplicable: return "not_applicable";
        case Verdict::kSkipped: return "skipped";
    }
    return "?";
}

ClaimReport evaluate_claim(const Graph& g, ClaimId id, std::uint64_t budget_nodes) {
    if (!g.is_cubic()) throw std::invalid_argument("evaluate_claim: graph is not cubic");
    if (vertex_connectivity(g) < 3)
        throw std::invalid_argument("evaluate_claim: graph is not 3-connected");

    ClaimReport rep;
    rep.graph_id = graph6_encode(g);
    rep.claim = id;
    auto t0 = std::chrono::steady_clock::now();
    if (g.n() % 6 != claim_residue(id)) {
        rep.verdict = Verdict::kNotApplicable;
        return rep;
    }
    Ctx ctx{g, budget_nodes, 0, {}};
    std::optional<ordered_json> fail = run_claim(ctx, id);
    rep.nodes = ctx.nodes;
    if (fail) {
        rep.verdict = Verdict::kFails;
        rep.witness = fail->dump();
    } else if (!ctx.undetermined.empty()) {
        rep.verdict = Verdict::kSkipped;
        ordered_json w;
        w["undetermined"] = ctx.undetermined.size();
        ordered_json sample = ordered_json::array();
        for (std::size_t i = 0; i < ctx.undetermined.size() && i < 3; ++i)
            sample.push_back(ctx.undetermined[i]);
        w["sample"] = sample;
        rep.witness = w.dump();
    } else {
        rep.verdict = Verdict::kHolds;
    }
    rep.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

MatrixResult corpus_claim_matrix(const std::vector<Graph>& graphs,
                                 const std::vector<ClaimId>& claims,
                                 std::uint64_t budget_nodes, int workers) {
    MatrixResult out;
    std::vector<std::vector<ClaimReport>> per_graph(graphs.size());
    std::vector<std::string> diags(graphs.size());

    auto work = [&](std::size_t i) {
        const Graph& g = graphs[i];
        if (!g.is_cubic()) {
            diags[i] = "graph " + std::to_string(i) + ": not cubic, skipped";
            return;
        }
        if (g.n() < 4 || vertex_connectivity(g) < 3) {
            diags[i] = "graph " + std::to_string(i) + ": not 3-connected, skipped";
            return;
        }
        for (ClaimId id : claims) per_graph[i].push_back(evaluate_claim(g, id, budget_nodes));
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i) work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        int nthreads = std::min<int>(workers, static_cast<int>(graphs.size()));
        for (int t = 0; t < nthreads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < graphs.size(); i = next.fetch_add(1))
                    work(i);
            });
        for (auto& th : pool) th.join();
    }

    for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (!diags[i].empty()) out.diagnostics.push_back(diags[i]);
        for (auto& r : per_graph[i]) out.reports.push_back(std::move(r));
    }
    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](const ClaimReport& a, const ClaimReport& b) {
                         if (a.graph_id != b.graph_id) return a.graph_id < b.graph_id;
                         return static_cast<int>(a.claim) < static_cast<int>(b.claim);
                     });
    for (const auto& r : out.reports) switch (r.verdict) {
            case Verdict::kHolds: ++out.holds; break;
            case Verdict::kFails: ++out.fails; break;
            case Verdict::kNotApplicable: ++out.not_applicable; break;
            case Verdict::kSkipped: ++out.skipped; break;
        }
    return out;
}

std::string cut_case_name(CutCase c) {
    switch (c) {
        case CutCase::kA1_1: return "A1.1";
        case CutCase::kA1_2: return "A1.2";
        case CutCase::kA1_3: return "A1.3";
        case CutCase::kA2_1: return "A2.1";
        case CutCase::kA2_2: return "A2.2";
        case CutCase::kA2_3: return "A2.3";
    }
    return "?";
}

CutCaseResult classify_cut_case(const Graph& g, const SpliceMeta& meta, const Packing& p) {
    for (std::size_t i = 0; i < meta.cut_edges.size(); ++i)
        for (std::size_t j = i + 1; j < meta.cut_edges.size(); ++j) {
            const Edge &a = meta.cut_edges[i], &b = meta.cut_edges[j];
            if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
                throw std::runtime_error("classify_cut_case: cut is not a matching");
        }
    if (auto err = validate_factor(g, p))
        throw std::runtime_error("classify_cut_case: not a factor: " + *err);

    CutCaseResult out;
    std::vector<char> in_a(g.n(), 0);
    for (int v : meta.side_a) in_a[v] = 1;

    // Designate the side whose size is 2 mod 3 (adding one vertex for the
    // spliced-away endpoint makes the residue 0 or 1 there).
    int ra = static_cast<int>((meta.side_a.size() + 1) % 3);
    if (ra == 2) {
        out.swapped = true;
        std::fill(in_a.begin(), in_a.end(), 1);
        for (int v : meta.side_a) in_a[v] = 0;
        ra = static_cast<int>((meta.side_b.size() + 1) % 3);
    }

    for (const Path3& path : p.paths) {
        std::array<Edge, 2> pe = {Edge{std::min(path.a, path.center), std::max(path.a, path.center)},
                                  Edge{std::min(path.center, path.b), std::max(path.center, path.b)}};
        int crossings = 0;
        for (const Edge& e : pe)
            if (std::find(meta.cut_edges.begin(), meta.cut_edges.end(), e) != meta.cut_edges.end())
                ++crossings;
        if (crossings == 0) continue;
        if (crossings != 1)
            throw std::runtime_error("classify_cut_case: path uses two cut edges");
        int count = in_a[path.a] + in_a[path.center] + in_a[path.b];
        if (count != 1 && count != 2)
            throw std::runtime_error("classify_cut_case: crossing path has side count " +
                                     std::to_string(count));
        if (count == 2) {
            // the two designated-side vertices must be joined by the path's
            // other edge
            int lone = !in_a[path.a] ? path.a : (!in_a[path.center] ? path.center : path.b);
            if (lone == path.center)
                throw std::runtime_error("classify_cut_case: split pair not adjacent");
        }
        out.side_counts.push_back(count);
        ++out.crossing_paths;
    }
    std::sort(out.side_counts.begin(), out.side_counts.end());

    const auto& sc = out.side_counts;
    auto is = [&](std::initializer_list<int> want) {
        return sc.size() == want.size() && std::equal(sc.begin(), sc.end(), want.begin());
    };
    if (ra == 0) {
        if (is({2})) out.c = CutCase::kA1_1;
        else if (is({1, 1})) out.c = CutCase::kA1_2;
        else if (is({1, 2, 2})) out.c = CutCase::kA1_3;
        else throw std::runtime_error("classify_cut_case: no case matches residue 0");
    } else if (ra == 1) {
        if (is({})) out.c = CutCase::kA2_1;
        else if (is({1, 2})) out.c = CutCase::kA2_2;
        else if (is({1, 1, 1}) || is({2, 2, 2})) out.c = CutCase::kA2_3;
        else throw std::runtime_error("classify_cut_case: no case matches residue 1");
    } else {
        throw std::runtime_error("classify_cut_case: both sides have residue 2");
    }
    return out;
}

std::array<int, 3> y_component_profile(const Graph& g, const YMeta& meta, const Packing& p) {
    if (auto err = validate_factor(g, p))
        throw std::runtime_error("y_component_profile: not a factor: " + *err);
    std::array<int, 3> profile = {0, 0, 0};
    for (const Path3& path : p.paths) {
        std::array<Edge, 2> pe = {Edge{std::min(path.a, path.center), std::max(path.a, path.center)},
                                  Edge{std::min(path.center, path.b), std::max(path.center, path.b)}};
        for (int arm = 0; arm < 3; ++arm) {
            bool uses = false;
            for (const Edge& e : pe)
                if (std::find(meta.d[arm].begin(), meta.d[arm].end(), e) != meta.d[arm].end())
                    uses = true;
            if (uses) ++profile[arm];
        }
    }
    return profile;
}

ProjectionResult check_projection(const Graph& g, const ReplacementMeta& meta,
                                  const Graph& base, const Packing& p) {
    ProjectionResult out;
    if (auto err = validate_factor(g, p)) {
        out.detail = "input is not a factor: " + *err;
        return out;
    }
    std::set<Edge> used;
    for (const Path3& path : p.paths) {
        used.insert(Edge{std::min(path.a, path.center), std::max(path.a, path.center)});
        used.insert(Edge{std::min(path.center, path.b), std::max(path.center, path.b)});
    }
    // Pull back: base edge i survives iff its image alpha[i] is used by P.
    std::vector<std::vector<int>> adj(base.n());
    const auto& be = base.edges();
    for (std::size_t i = 0; i < be.size(); ++i)
        if (used.count(meta.alpha[i])) {
            adj[be[i].u].push_back(be[i].v);
            adj[be[i].v].push_back(be[i].u);
        }
    std::vector<char> seen(base.n(), 0);
    for (int v = 0; v < base.n(); ++v) {
        if (seen[v]) continue;
        // collect the component containing v
        std::vector<int> comp{v};
        seen[v] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : adj[comp[i]])
                if (!seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                }
        if (comp.size() != 3) {
            out.detail = "pulled-back component of size " + std::to_string(comp.size()) +
                         " at vertex " + std::to_string(v);
            return out;
        }
        int center = -1, ends = 0;
        std::array<int, 2> e2 = {-1, -1};
        for (int w : comp) {
            if (adj[w].size() == 2)
                center = w;
            else if (adj[w].size() == 1)
                e2[std::min(ends++, 1)] = w;
            else {
                out.detail = "pulled-back vertex " + std::to_string(w) + " has degree " +
                             std::to_string(adj[w].size());
                return out;
            }
        }
        if (center < 0 || ends != 2) {
            out.detail = "pulled-back component at " + std::to_string(v) + " is not a path";
            return out;
        }
        out.base_factor.paths.push_back(Path3{e2[0], center, e2[1]});
    }
    std::sort(out.base_factor.paths.begin(), out.base_factor.paths.end());
    if (auto err = validate_factor(base, out.base_factor)) {
        out.detail = "pulled-back packing invalid: " + *err;
        return out;
    }
    out.ok = true;
    return out;
}

GadgetConditions verify_gadget_conditions(const Graph& a_graph, int a,
                                          std::uint64_t budget_nodes) {
    GadgetConditions out;
    out.h1 = out.h2 = out.complete = true;
    Ctx ctx{a_graph, budget_nodes, 0, {}};
    std::vector<int> na = a_graph.neighbors(a);

    std::set<int> blocked_set(na.begin(), na.end());
    blocked_set.insert(a);
    std::set<int> ys;
    for (int w : na)
        for (int y : a_graph.neighbors(w))
            if (!blocked_set.count(y)) ys.insert(y);
    for (int y : ys) {
        std::vector<int> removed(na.begin(), na.end());
        removed.push_back(a);
        removed.push_back(y);
        auto got = ctx.has_factor_without(removed);
        if (!got) {
            out.complete = false;
            out.failures.push_back("h1 undetermined at y=" + std::to_string(y));
        } else if (*got) {
            out.h1 = false;
            out.failures.push_back("h1: factor exists after removing hub, its neighbors and y=" +
                                   std::to_string(y));
        }
    }
    for (int z : na) {
        auto got = ctx.has_factor_without({a, z});
        if (!got) {
            out.complete = false;
            out.failures.push_back("h2 undetermined at z=" + std::to_string(z));
        } else if (!*got) {
            out.h2 = false;
            out.failures.push_back("h2: no factor after removing edge pair {a," + std::to_string(z) +
                                   "}");
        }
    }
    for (const auto& w : five_paths_centered(a_graph, a)) {
        auto got = ctx.has_factor_without({w[0], w[1], w[2], w[3], w[4]});
        if (!got) {
            out.complete = false;
            out.failures.push_back("h2 undetermined at 5-path " + path_json(w).dump());
        } else if (!*got) {
            out.h2 = false;
            out.failures.push_back("h2: no factor after removing 5-path " + path_json(w).dump());
        }
    }
    out.nodes = ctx.nodes;
    return out;
}

CutDisciplineResult check_cut_discipline(const Graph& g, std::uint64_t budget_nodes,
                                         std::size_t factor_limit) {
    CutDisciplineResult out;
    std::vector<EdgeCut> cuts = enumerate_3_edge_cuts(g);
    out.cuts = cuts.size();
    EnumResult en = enumerate_lambda_factors(g, {}, factor_limit, budget_nodes);
    out.exhausted = en.exhausted;
    out.factors = en.factors.size();
    for (const Packing& p : en.factors) {
        std::set<Edge> used;
        for (const Path3& path : p.paths) {
            used.insert(Edge{std::min(path.a, path.center), std::max(path.a, path.center)});
            used.insert(Edge{std::min(path.center, path.b), std::max(path.center, path.b)});
        }
        for (const EdgeCut& cut : cuts) {
            int hit = 0;
            for (const Edge& e : cut.edges) hit += used.count(e) ? 1 : 0;
            if (hit != 1 && hit != 2) {
                ordered_json w;
                ordered_json ce = ordered_json::array();
                for (const Edge& e : cut.edges) ce.push_back(edge_json(e));
                ordered_json pp = ordered_json::array();
                for (const Path3& path : p.paths)
                    pp.push_back(ordered_json::array({path.a, path.center, path.b}));
                w["cut"] = ce;
                w["factor"] = pp;
                w["cut_edges_used"] = hit;
                out.violation = w.dump();
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

}  // namespace p3pack
