// Command line front end: corpus generation, recipe builds, packing queries,
// claim sweeps and the built-in lemma suites.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "p3pack/claims.hpp"
#include "p3pack/connectivity.hpp"
#include "p3pack/constructions.hpp"
#include "p3pack/corpus.hpp"
#include "p3pack/family.hpp"
#include "p3pack/graph6.hpp"
#include "p3pack/packing.hpp"
#include "p3pack/recipes.hpp"

namespace {

using nlohmann::ordered_json;
using namespace p3pack;

// Exit codes: 0 clean, 1 usage or input error, 2 a checked property failed,
// 3 nothing failed but some verdicts were cut off by budget.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitFails = 2;
constexpr int kExitSkips = 3;

// Wall budgets are translated to a deterministic search-node allowance so
// identical invocations give identical output bytes.
std::uint64_t ms_to_nodes(std::uint64_t ms) { return ms * 2000; }

struct Output {
    std::ofstream file;
    std::ostream* os = &std::cout;
    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        os = &file;
    }
    std::ostream& stream() { return *os; }
};

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_file(const std::string& path) {
    if (path == "-") return read_stream(std::cin);
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open input file: " + path);
    return read_stream(f);
}

struct InputOptions {
    std::vector<std::string> graphs;  // graph6 strings on the command line
    std::string in_path;
    std::string in_format = "g6";
};

void add_input_options(CLI::App* cmd, InputOptions& io) {
    cmd->add_option("graphs", io.graphs, "graphs as graph6 strings");
    cmd->add_option("--in", io.in_path, "read graphs from a file (- for stdin)");
    cmd->add_option("--in-format", io.in_format, "input format: g6 or edges")
        ->check(CLI::IsMember({"g6", "edges"}));
}

std::vector<Graph> load_inputs(const InputOptions& io) {
    std::vector<Graph> graphs;
    for (const std::string& s : io.graphs) graphs.push_back(graph6_decode(s));
    if (!io.in_path.empty() || graphs.empty()) {
        std::string text = io.in_path.empty() ? read_stream(std::cin) : read_file(io.in_path);
        IngestFormat fmt =
            io.in_format == "edges" ? IngestFormat::kEdgeList : IngestFormat::kGraph6;
        IngestResult r = ingest_text(text, fmt);
        for (const auto& d : r.diagnostics)
            std::cerr << "input line " << d.line << ": " << d.message << "\n";
        for (auto& g : r.graphs) graphs.push_back(std::move(g));
    }
    if (graphs.empty()) throw std::runtime_error("no input graphs");
    return graphs;
}

Edge parse_edge_arg(std::string s) {
    for (char& c : s)
        if (c == '-' || c == ':') c = ',';
    int u = -1, v = -1;
    char extra;
    if (std::sscanf(s.c_str(), "%d ,%d %c", &u, &v, &extra) != 2 &&
        std::sscanf(s.c_str(), "%d,%d", &u, &v) != 2)
        throw std::runtime_error("cannot parse edge \"" + s + "\" (use u,v)");
    if (u == v) throw std::runtime_error("edge endpoints coincide in \"" + s + "\"");
    return Edge{std::min(u, v), std::max(u, v)};
}

ordered_json packing_json(const Packing& p) {
    ordered_json arr = ordered_json::array();
    for (const Path3& path : p.paths) arr.push_back({path.a, path.center, path.b});
    return arr;
}

ordered_json claim_report_json(const ClaimReport& r) {
    ordered_json j;
    j["graph6"] = r.graph_id;
    j["claim"] = claim_name(r.claim);
    j["verdict"] = verdict_name(r.verdict);
    j["witness"] = r.witness.empty() ? ordered_json(nullptr) : ordered_json::parse(r.witness);
    j["nodes"] = r.nodes;
    return j;
}

std::vector<ClaimId> parse_claim_list(const std::string& csv) {
    if (csv.empty() || csv == "all") return all_claims();
    std::vector<ClaimId> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        auto id = parse_claim(tok);
        if (!id) throw std::runtime_error("unknown claim \"" + tok + "\"");
        out.push_back(*id);
    }
    if (out.empty()) throw std::runtime_error("empty claim list");
    return out;
}

// ---- gen ----------------------------------------------------------------

int run_gen(int n, int n_max, bool three_connected, bool keep_isomorphic,
            const std::string& format, bool count_only, Output& out) {
    std::vector<int> sizes;
    if (n > 0)
        sizes.push_back(n);
    else
        for (int k = 4; k <= n_max; k += 2) sizes.push_back(k);
    for (int size : sizes) {
        CorpusSpec spec;
        spec.n = size;
        spec.dedup = !keep_isomorphic;
        spec.require_3connected = three_connected;
        std::size_t count = 0;
        generate_cubic(spec, [&](const Graph& g) {
            ++count;
            if (!count_only) {
                if (format == "edges")
                    out.stream() << to_edge_list_text(g) << "\n";
                else
                    out.stream() << graph6_encode(g) << "\n";
            }
            return true;
        });
        if (count_only) out.stream() << size << " " << count << "\n";
    }
    return kExitOk;
}

// ---- construct ----------------------------------------------------------

int run_construct(const std::string& recipe_path, const std::string& inline_json,
                  const std::string& format, Output& out) {
    std::string text = inline_json.empty() ? read_file(recipe_path) : inline_json;
    RecipeResult r = build_from_recipe(text);
    if (format == "g6")
        out.stream() << graph6_encode(r.graph) << "\n";
    else if (format == "edges")
        out.stream() << to_edge_list_text(r.graph);
    else
        out.stream() << recipe_summary(r) << "\n";
    return kExitOk;
}

// ---- solve --------------------------------------------------------------

int run_solve(const InputOptions& io, std::uint64_t budget_ms, Output& out) {
    std::vector<Graph> graphs = load_inputs(io);
    ordered_json doc;
    doc["budget_nodes"] = ms_to_nodes(budget_ms);
    ordered_json results = ordered_json::array();
    bool all_complete = true;
    for (const Graph& g : graphs) {
        MaxPackingResult r = max_lambda_packing(g, ms_to_nodes(budget_ms));
        ordered_json j;
        j["graph6"] = graph6_encode(g);
        j["n"] = g.n();
        j["lambda"] = r.lambda;
        j["floor_n_over_3"] = g.n() / 3;
        j["meets_floor"] = r.lambda == g.n() / 3;
        j["complete"] = r.complete;
        j["nodes"] = r.nodes;
        j["packing"] = packing_json(r.packing);
        results.push_back(std::move(j));
        all_complete = all_complete && r.complete;
    }
    doc["results"] = std::move(results);
    out.stream() << doc.dump(2) << "\n";
    return all_complete ? kExitOk : kExitSkips;
}

// ---- factor -------------------------------------------------------------

int run_factor(const InputOptions& io, const std::vector<std::string>& require,
               const std::vector<std::string>& forbid, const std::vector<int>& remove,
               std::size_t enum_limit, std::uint64_t budget_ms, Output& out) {
    std::vector<Graph> graphs = load_inputs(io);
    FactorConstraint c;
    for (const auto& s : require) c.required.push_back(parse_edge_arg(s));
    for (const auto& s : forbid) c.forbidden.push_back(parse_edge_arg(s));
    c.removed = remove;
    ordered_json doc;
    doc["budget_nodes"] = ms_to_nodes(budget_ms);
    ordered_json results = ordered_json::array();
    bool budget_hit = false;
    for (const Graph& g : graphs) {
        ordered_json j;
        j["graph6"] = graph6_encode(g);
        if (enum_limit == 0) {
            FactorResult r = find_lambda_factor(g, c, ms_to_nodes(budget_ms));
            j["status"] = r.status == SolveStatus::kFound
                              ? "found"
                              : (r.status == SolveStatus::kNone ? "none" : "budget");
            j["factor"] = r.status == SolveStatus::kFound ? packing_json(*r.factor)
                                                          : ordered_json(nullptr);
            j["nodes"] = r.nodes;
            budget_hit = budget_hit || r.status == SolveStatus::kBudget;
        } else {
            EnumResult r = enumerate_lambda_factors(g, c, enum_limit, ms_to_nodes(budget_ms));
            j["count"] = r.factors.size();
            j["exhausted"] = r.exhausted;
            j["nodes"] = r.nodes;
            ordered_json fs = ordered_json::array();
            for (const Packing& p : r.factors) fs.push_back(packing_json(p));
            j["factors"] = std::move(fs);
            budget_hit = budget_hit || !r.exhausted;
        }
        results.push_back(std::move(j));
    }
    doc["results"] = std::move(results);
    out.stream() << doc.dump(2) << "\n";
    return budget_hit ? kExitSkips : kExitOk;
}

// ---- claims -------------------------------------------------------------

int run_claims(const InputOptions& io, int n_max, const std::string& recipe_path,
               const std::string& claims_csv, std::uint64_t budget_ms, int workers,
               const std::string& format, Output& out) {
    std::vector<Graph> graphs;
    std::string recipe_text;
    if (!recipe_path.empty()) {
        recipe_text = read_file(recipe_path);
        graphs.push_back(build_from_recipe(recipe_text).graph);
    } else if (n_max > 0) {
        for (int n = 4; n <= n_max; n += 2) {
            CorpusSpec spec;
            spec.n = n;
            spec.require_3connected = true;
            for (Graph& g : generate_cubic_all(spec)) graphs.push_back(std::move(g));
        }
    } else {
        graphs = load_inputs(io);
    }
    std::vector<ClaimId> ids = parse_claim_list(claims_csv);
    MatrixResult m = corpus_claim_matrix(graphs, ids, ms_to_nodes(budget_ms), workers);
    if (format == "table") {
        for (const auto& d : m.diagnostics) out.stream() << "# " << d << "\n";
        for (const auto& r : m.reports) {
            out.stream() << r.graph_id << "  " << claim_name(r.claim) << "  "
                         << verdict_name(r.verdict) << "  nodes=" << r.nodes << "  ms=";
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.1f", r.runtime_ms);
            out.stream() << buf;
            if (!r.witness.empty()) out.stream() << "  " << r.witness;
            out.stream() << "\n";
        }
        out.stream() << "# holds=" << m.holds << " fails=" << m.fails
                     << " not_applicable=" << m.not_applicable << " skipped=" << m.skipped
                     << "\n";
    } else {
        ordered_json doc;
        doc["budget_nodes"] = ms_to_nodes(budget_ms);
        ordered_json cl = ordered_json::array();
        for (ClaimId id : ids) cl.push_back(claim_name(id));
        doc["claims"] = std::move(cl);
        doc["graphs"] = graphs.size();
        if (!recipe_text.empty()) doc["recipe"] = ordered_json::parse(recipe_text);
        doc["diagnostics"] = m.diagnostics;
        ordered_json rs = ordered_json::array();
        for (const auto& r : m.reports) rs.push_back(claim_report_json(r));
        doc["results"] = std::move(rs);
        ordered_json sum;
        sum["holds"] = m.holds;
        sum["fails"] = m.fails;
        sum["not_applicable"] = m.not_applicable;
        sum["skipped"] = m.skipped;
        doc["summary"] = std::move(sum);
        out.stream() << doc.dump(2) << "\n";
    }
    if (m.fails > 0) return kExitFails;
    if (m.skipped > 0) return kExitSkips;
    return kExitOk;
}

// ---- lemmas -------------------------------------------------------------

struct SuiteResult {
    ordered_json detail;
    bool pass = true;
    bool skipped = false;
};

// Random splices of the fixed base pairs; every enumerated factor must land
// in exactly one of the six crossing shapes.
SuiteResult suite_cut_cases(int samples, std::uint32_t seed, std::uint64_t budget) {
    SuiteResult out;
    const std::vector<std::string> bases = {"k4", "prism", "k33", "cube"};
    std::mt19937 rng(seed);
    std::map<std::string, int> counts;
    int classified = 0, factorless = 0;
    for (int i = 0; i < samples; ++i) {
        const std::string& an = bases[rng() % bases.size()];
        const std::string& bn = bases[rng() % bases.size()];
        Graph A = base_graph(an), B = base_graph(bn);
        int a = static_cast<int>(rng() % A.n()), b = static_cast<int>(rng() % B.n());
        std::vector<int> na = A.neighbors(a), nb = B.neighbors(b);
        std::shuffle(nb.begin(), nb.end(), rng);
        std::vector<std::pair<int, int>> sigma;
        for (int k = 0; k < 3; ++k) sigma.push_back({na[k], nb[k]});
        SpliceResult sp = splice(A, a, B, b, sigma);
        EnumResult en = enumerate_lambda_factors(sp.graph, {}, SIZE_MAX, budget);
        if (!en.exhausted) out.skipped = true;
        if (en.factors.empty()) {
            ++factorless;
            continue;
        }
        for (const Packing& p : en.factors) {
            try {
                CutCaseResult c = classify_cut_case(sp.graph, sp.meta, p);
                ++counts[cut_case_name(c.c)];
                ++classified;
            } catch (const std::runtime_error& e) {
                out.pass = false;
                out.detail["error"] = e.what();
                out.detail["splice"] = ordered_json::array({an, a, bn, b});
                return out;
            }
        }
    }
    out.detail["samples"] = samples;
    out.detail["factors_classified"] = classified;
    out.detail["splices_without_factor"] = factorless;
    ordered_json cj;
    for (const auto& [k, v] : counts) cj[k] = v;
    out.detail["cases"] = std::move(cj);
    return out;
}

// Three-arm hub construction: each factor touches each arm boundary once or
// twice.
SuiteResult suite_hub_profile(std::uint64_t budget) {
    SuiteResult out;
    Graph prism = base_graph("prism");
    YResult y = y_construction(YArm::of(prism, 0), YArm::of(prism, 0), YArm::of(prism, 0));
    EnumResult en = enumerate_lambda_factors(y.graph, {}, SIZE_MAX, budget);
    if (!en.exhausted) out.skipped = true;
    std::map<std::string, int> profiles;
    for (const Packing& p : en.factors) {
        std::array<int, 3> prof = y_component_profile(y.graph, y.meta, p);
        for (int c : prof)
            if (c < 1 || c > 2) {
                out.pass = false;
                out.detail["bad_profile"] = std::vector<int>(prof.begin(), prof.end());
                out.detail["factor"] = packing_json(p);
                return out;
            }
        std::string key = std::to_string(prof[0]) + std::to_string(prof[1]) +
                          std::to_string(prof[2]);
        ++profiles[key];
    }
    out.detail["n"] = y.graph.n();
    out.detail["factors"] = en.factors.size();
    ordered_json pj;
    for (const auto& [k, v] : profiles) pj[k] = v;
    out.detail["profiles"] = std::move(pj);
    if (en.factors.empty()) out.pass = false;
    return out;
}

// Certified three-leaf members and the three closing operators.
SuiteResult suite_family(std::uint64_t budget) {
    SuiteResult out;
    ordered_json steps = ordered_json::array();
    auto step = [&](const std::string& name, bool ok, const std::string& note = "") {
        ordered_json s;
        s["name"] = name;
        s["ok"] = ok;
        if (!note.empty()) s["note"] = note;
        steps.push_back(std::move(s));
        out.pass = out.pass && ok;
    };
    auto no_factor = [&](const Graph& g, const FactorConstraint& c) -> std::optional<bool> {
        FactorResult r = find_lambda_factor(g, c, budget);
        if (r.status == SolveStatus::kBudget) {
            out.skipped = true;
            return std::nullopt;
        }
        return r.status == SolveStatus::kNone;
    };

    FFamilyCert y = f_base_y();
    FFamilyCert z = f_base_z();
    step("y_base_valid", !validate_f_cert(y).has_value());
    step("z_base_valid", !validate_f_cert(z).has_value());

    FFamilyCert zy = f_compose(z, find_triangles(z.graph).front(), y);
    step("compose_valid", !validate_f_cert(zy).has_value(),
         "n=" + std::to_string(zy.graph.n()));

    FOpResult dot = f_operator(y, FOp::kDot);
    step("dot_is_k4", isomorphic(dot.graph, base_graph("k4")));
    FOpResult bar = f_operator(y, FOp::kBar);
    step("bar_is_prism", isomorphic(bar.graph, base_graph("prism")));
    FOpResult ddot = f_operator(y, FOp::kDdot);
    step("ddot_cubic_3conn",
         ddot.graph.n() == 10 && ddot.graph.is_cubic() && vertex_connectivity(ddot.graph) == 3);

    if (auto r = no_factor(y.graph, {})) step("y_no_factor", *r);
    FactorConstraint barc;
    barc.forbidden = bar.bar_triangle;
    if (auto r = no_factor(bar.graph, barc)) step("bar_minus_triangle_no_factor", *r);
    FactorConstraint ddc;
    ddc.removed = ddot.graph.neighbors(ddot.ddot_hub);
    ddc.removed.push_back(ddot.ddot_hub);
    if (auto r = no_factor(ddot.graph, ddc)) step("ddot_minus_hub_ball_no_factor", *r);

    out.detail["steps"] = std::move(steps);
    return out;
}

// 12s-vertex rings: connectivity floor and the paired-triple deletions.
SuiteResult suite_rings(std::uint64_t budget) {
    SuiteResult out;
    ordered_json steps = ordered_json::array();
    auto step = [&](const std::string& name, bool ok) {
        ordered_json s;
        s["name"] = name;
        s["ok"] = ok;
        steps.push_back(std::move(s));
        out.pass = out.pass && ok;
    };
    for (int s = 1; s <= 2; ++s) {
        RingResult r = r_s(s);
        std::string tag = "r" + std::to_string(s);
        step(tag + "_order", r.graph.n() == 12 * s && r.graph.m() == 18 * s);
        step(tag + "_cubic", r.graph.is_cubic());
        step(tag + "_cyclic_conn", is_cyclically_k_edge_connected(r.graph, s == 1 ? 5 : 6));
        // deletable pairs come from the triples sharing chord vertices:
        // indices {i, i+s, i+2s}
        int bad = 0, undecided = 0;
        for (int i = 0; i < s; ++i) {
            std::array<int, 3> group = {i, i + s, i + 2 * s};
            for (int x = 0; x < 3; ++x)
                for (int y = x + 1; y < 3; ++y) {
                    FactorConstraint c;
                    for (int idx : {group[x], group[y]}) {
                        const Path3& p = r.base_paths[idx];
                        c.removed.insert(c.removed.end(), {p.a, p.center, p.b});
                    }
                    FactorResult fr = find_lambda_factor(r.graph, c, budget);
                    if (fr.status == SolveStatus::kFound) ++bad;
                    if (fr.status == SolveStatus::kBudget) ++undecided;
                }
        }
        if (undecided > 0) out.skipped = true;
        step(tag + "_pair_deletions_blocked", bad == 0);
    }
    out.detail["steps"] = std::move(steps);
    return out;
}

// A star 3-cut meets any factor in 1 or 2 edges, so graphs whose 3-cuts are
// all stars obey the crossing discipline outright; the 14-vertex hub gadget
// extends that to its splice cut.
SuiteResult suite_cut_discipline(std::uint64_t budget) {
    SuiteResult out;
    ordered_json steps = ordered_json::array();
    auto step = [&](const std::string& name, bool ok, const std::string& note = "") {
        ordered_json s;
        s["name"] = name;
        s["ok"] = ok;
        if (!note.empty()) s["note"] = note;
        steps.push_back(std::move(s));
        out.pass = out.pass && ok;
    };

    CutDisciplineResult k33 = check_cut_discipline(base_graph("k33"), budget);
    if (!k33.exhausted) out.skipped = true;
    step("k33_all_cuts", k33.ok,
         "factors=" + std::to_string(k33.factors) + " cuts=" + std::to_string(k33.cuts));

    Graph prism = base_graph("prism");
    YResult gadget = y_construction(YArm::of(prism, 0), YArm::of(prism, 0), YArm::single());
    int bare = gadget.meta.side[2][0];
    for (const std::string& bn : {std::string("prism"), std::string("k33")}) {
        SpliceResult sp = splice(gadget.graph, bare, base_graph(bn), 0, {});
        EnumResult en = enumerate_lambda_factors(sp.graph, {}, SIZE_MAX, budget);
        if (!en.exhausted) out.skipped = true;
        bool ok = true;
        for (const Packing& p : en.factors) {
            int hit = 0;
            for (const Path3& path : p.paths) {
                Edge e1{std::min(path.a, path.center), std::max(path.a, path.center)};
                Edge e2{std::min(path.center, path.b), std::max(path.center, path.b)};
                for (const Edge& ce : sp.meta.cut_edges) hit += (ce == e1) + (ce == e2);
            }
            if (hit != 1 && hit != 2) ok = false;
        }
        step("hub_gadget_splice_" + bn, ok && !en.factors.empty(),
             "factors=" + std::to_string(en.factors.size()));
    }
    out.detail["steps"] = std::move(steps);
    return out;
}

int run_lemmas(int samples, std::uint32_t seed, std::uint64_t budget_ms, Output& out) {
    std::uint64_t budget = ms_to_nodes(budget_ms);
    ordered_json doc;
    doc["seed"] = seed;
    doc["budget_nodes"] = budget;
    ordered_json suites = ordered_json::array();
    bool pass = true, skipped = false;
    auto add = [&](const std::string& name, SuiteResult r) {
        ordered_json j;
        j["name"] = name;
        j["pass"] = r.pass;
        j["complete"] = !r.skipped;
        j["detail"] = std::move(r.detail);
        suites.push_back(std::move(j));
        pass = pass && r.pass;
        skipped = skipped || r.skipped;
    };
    add("cut_cases", suite_cut_cases(samples, seed, budget));
    add("hub_profile", suite_hub_profile(budget));
    add("family", suite_family(budget));
    add("rings", suite_rings(budget));
    add("cut_discipline", suite_cut_discipline(budget));
    doc["suites"] = std::move(suites);
    doc["pass"] = pass;
    out.stream() << doc.dump(2) << "\n";
    if (!pass) return kExitFails;
    if (skipped) return kExitSkips;
    return kExitOk;
}

// ---- report -------------------------------------------------------------

int run_report(int n_max, const std::string& claims_csv, std::uint64_t budget_ms, int workers,
               Output& out) {
    std::vector<ClaimId> ids = parse_claim_list(claims_csv);
    ordered_json doc;
    ordered_json cfg;
    cfg["n_max"] = n_max;
    ordered_json cl = ordered_json::array();
    for (ClaimId id : ids) cl.push_back(claim_name(id));
    cfg["claims"] = std::move(cl);
    cfg["budget_nodes"] = ms_to_nodes(budget_ms);
    doc["config"] = std::move(cfg);

    ordered_json sizes = ordered_json::array();
    int total_fails = 0, total_skips = 0;
    for (int n = 4; n <= n_max; n += 2) {
        CorpusSpec spec;
        spec.n = n;
        spec.require_3connected = true;
        std::vector<Graph> graphs = generate_cubic_all(spec);
        ordered_json row;
        row["n"] = n;
        row["classes"] = graphs.size();
        ordered_json mismatches = ordered_json::array();
        for (const Graph& g : graphs) {
            MaxPackingResult r = max_lambda_packing(g, ms_to_nodes(budget_ms));
            if (!r.complete || r.lambda != g.n() / 3) mismatches.push_back(graph6_encode(g));
        }
        row["lambda_meets_floor"] = mismatches.empty();
        if (!mismatches.empty()) {
            row["lambda_mismatches"] = mismatches;
            ++total_fails;
        }
        MatrixResult m = corpus_claim_matrix(graphs, ids, ms_to_nodes(budget_ms), workers);
        ordered_json cj;
        cj["holds"] = m.holds;
        cj["fails"] = m.fails;
        cj["not_applicable"] = m.not_applicable;
        cj["skipped"] = m.skipped;
        if (m.fails > 0) {
            ordered_json fw = ordered_json::array();
            for (const auto& r : m.reports)
                if (r.verdict == Verdict::kFails) fw.push_back(claim_report_json(r));
            cj["failures"] = std::move(fw);
        }
        row["claims"] = std::move(cj);
        sizes.push_back(std::move(row));
        total_fails += m.fails;
        total_skips += m.skipped;
    }
    doc["sizes"] = std::move(sizes);
    doc["fails"] = total_fails;
    doc["skipped"] = total_skips;
    out.stream() << doc.dump(2) << "\n";
    if (total_fails > 0) return kExitFails;
    if (total_skips > 0) return kExitSkips;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-vertex path packing workbench for cubic graphs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate connected cubic graphs");
    int gen_n = 0, gen_n_max = 10;
    bool gen_3conn = false, gen_keep_iso = false, gen_count = false;
    std::string gen_format = "g6", gen_out;
    gen->add_option("--n", gen_n, "exact vertex count")->check(CLI::Range(4, 16));
    gen->add_option("--n-max", gen_n_max, "sweep 4..n-max (even)")->check(CLI::Range(4, 16));
    gen->add_flag("--three-connected", gen_3conn, "keep only 3-connected graphs");
    gen->add_flag("--keep-isomorphic", gen_keep_iso, "skip isomorphism dedup");
    gen->add_flag("--count-only", gen_count, "print per-size counts instead of graphs");
    gen->add_option("--format", gen_format, "g6 or edges")->check(CLI::IsMember({"g6", "edges"}));
    gen->add_option("--out", gen_out, "write to file instead of stdout");

    // construct
    auto* con = app.add_subcommand("construct", "build a graph from a recipe tree");
    std::string con_recipe, con_json, con_format = "summary", con_out;
    con->add_option("--recipe", con_recipe, "recipe JSON file (- for stdin)");
    con->add_option("--json", con_json, "inline recipe JSON");
    con->add_option("--format", con_format, "summary, g6 or edges")
        ->check(CLI::IsMember({"summary", "g6", "edges"}));
    con->add_option("--out", con_out, "write to file instead of stdout");

    // solve
    auto* sol = app.add_subcommand("solve", "maximum packing per input graph");
    InputOptions sol_in;
    std::uint64_t sol_budget = 0;
    std::string sol_out;
    add_input_options(sol, sol_in);
    sol->add_option("--budget-ms", sol_budget, "per-graph budget (0 = unlimited)");
    sol->add_option("--out", sol_out, "write to file instead of stdout");

    // factor
    auto* fac = app.add_subcommand("factor", "constrained factor queries");
    InputOptions fac_in;
    std::vector<std::string> fac_require, fac_forbid;
    std::vector<int> fac_remove;
    std::size_t fac_enum = 0;
    std::uint64_t fac_budget = 0;
    std::string fac_out;
    add_input_options(fac, fac_in);
    fac->add_option("--require", fac_require, "edge the factor must use (u,v)");
    fac->add_option("--forbid", fac_forbid, "edge the factor must avoid (u,v)");
    fac->add_option("--remove", fac_remove, "vertex to delete first");
    fac->add_option("--enum-limit", fac_enum, "enumerate up to this many factors (0 = find one)");
    fac->add_option("--budget-ms", fac_budget, "per-graph budget (0 = unlimited)");
    fac->add_option("--out", fac_out, "write to file instead of stdout");

    // claims
    auto* clm = app.add_subcommand("claims", "evaluate deletion/constraint claims");
    InputOptions clm_in;
    std::string clm_claims = "all", clm_format = "json", clm_out, clm_recipe;
    std::uint64_t clm_budget = 0;
    int clm_workers = 1, clm_n_max = 0;
    add_input_options(clm, clm_in);
    clm->add_option("--n-max", clm_n_max, "sweep the 3-connected corpus up to this order")
        ->check(CLI::Range(4, 16));
    clm->add_option("--recipe", clm_recipe, "evaluate the graph built from this recipe file");
    clm->add_option("--claims", clm_claims, "comma separated list (default all)");
    clm->add_option("--budget-ms", clm_budget, "per-query budget (0 = unlimited)");
    clm->add_option("--workers", clm_workers, "worker threads")->check(CLI::Range(1, 64));
    clm->add_option("--format", clm_format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    clm->add_option("--out", clm_out, "write to file instead of stdout");

    // lemmas
    auto* lem = app.add_subcommand("lemmas", "run the built-in structural suites");
    int lem_samples = 30;
    std::uint32_t lem_seed = 12345;
    std::uint64_t lem_budget = 0;
    std::string lem_out;
    lem->add_option("--samples", lem_samples, "splice samples in the cut-case suite")
        ->check(CLI::Range(1, 10000));
    lem->add_option("--seed", lem_seed, "sampling seed");
    lem->add_option("--budget-ms", lem_budget, "per-query budget (0 = unlimited)");
    lem->add_option("--out", lem_out, "write to file instead of stdout");

    // report
    auto* rep = app.add_subcommand("report", "corpus sweep: packing numbers and claims");
    int rep_n_max = 10, rep_workers = 1;
    std::string rep_claims = "all", rep_out;
    std::uint64_t rep_budget = 0;
    rep->add_option("--n-max", rep_n_max, "largest vertex count (even)")->check(CLI::Range(4, 16));
    rep->add_option("--claims", rep_claims, "comma separated list (default all)");
    rep->add_option("--budget-ms", rep_budget, "per-query budget (0 = unlimited)");
    rep->add_option("--workers", rep_workers, "worker threads")->check(CLI::Range(1, 64));
    rep->add_option("--out", rep_out, "write to file instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        Output out;
        if (gen->parsed()) {
            out.open(gen_out);
            return run_gen(gen_n, gen_n_max, gen_3conn, gen_keep_iso, gen_format, gen_count, out);
        }
        if (con->parsed()) {
            if (con_recipe.empty() && con_json.empty())
                throw std::runtime_error("construct needs --recipe or --json");
            out.open(con_out);
            return run_construct(con_recipe, con_json, con_format, out);
        }
        if (sol->parsed()) {
            out.open(sol_out);
            return run_solve(sol_in, sol_budget, out);
        }
        if (fac->parsed()) {
            out.open(fac_out);
            return run_factor(fac_in, fac_require, fac_forbid, fac_remove, fac_enum, fac_budget,
                              out);
        }
        if (clm->parsed()) {
            out.open(clm_out);
            return run_claims(clm_in, clm_n_max, clm_recipe, clm_claims, clm_budget, clm_workers,
                              clm_format, out);
        }
        if (lem->parsed()) {
            out.open(lem_out);
            return run_lemmas(lem_samples, lem_seed, lem_budget, out);
        }
        if (rep->parsed()) {
            out.open(rep_out);
            return run_report(rep_n_max, rep_claims, rep_budget, rep_workers, out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
