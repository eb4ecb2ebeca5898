#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>
#include <stdexcept>

#include "p3pack/claims.hpp"
#include "p3pack/connectivity.hpp"
#include "p3pack/constructions.hpp"
#include "p3pack/corpus.hpp"
#include "p3pack/family.hpp"
#include "p3pack/packing.hpp"

using namespace p3pack;

namespace {

Graph two_block_cubic() {
    // cubic but only 2-connected: two K4-minus-an-edge blocks, two bridges
    return Graph::from_edge_list(8, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3},
                                     {4, 5}, {4, 6}, {5, 7}, {6, 7}, {4, 7},
                                     {1, 5}, {2, 6}});
}

}  // namespace

TEST_CASE("claim ids, names, residues") {
    CHECK(all_claims().size() == 19);
    std::set<std::string> names;
    for (ClaimId id : all_claims()) {
        std::string name = claim_name(id);
        names.insert(name);
        REQUIRE(parse_claim(name).has_value());
        CHECK(*parse_claim(name) == id);
        int r = claim_residue(id);
        CHECK((r == 0 || r == 2 || r == 4));
        CHECK(name[0] == (r == 0 ? 'z' : r == 2 ? 't' : 'f'));
    }
    CHECK(names.size() == 19);
    CHECK_FALSE(parse_claim("q7").has_value());
    CHECK(verdict_name(Verdict::kHolds) == "holds");
    CHECK(verdict_name(Verdict::kFails) == "fails");
    CHECK(verdict_name(Verdict::kNotApplicable) == "not_applicable");
    CHECK(verdict_name(Verdict::kSkipped) == "skipped");
}

TEST_CASE("verdicts on fixed graphs") {
    Graph prism = base_graph("prism");
    for (ClaimId id : all_claims()) {
        ClaimReport r = evaluate_claim(prism, id);
        CHECK(r.graph_id == "E{Sw");
        if (claim_residue(id) == 0) {
            CHECK(r.verdict == Verdict::kHolds);
            CHECK(r.witness.empty());
        } else {
            CHECK(r.verdict == Verdict::kNotApplicable);
        }
    }
    Graph k4 = base_graph("k4");
    for (ClaimId id : all_claims()) {
        Verdict v = evaluate_claim(k4, id).verdict;
        CHECK(v == (claim_residue(id) == 4 ? Verdict::kHolds : Verdict::kNotApplicable));
    }
    Graph cube = base_graph("cube");
    for (ClaimId id : all_claims()) {
        Verdict v = evaluate_claim(cube, id).verdict;
        CHECK(v == (claim_residue(id) == 2 ? Verdict::kHolds : Verdict::kNotApplicable));
    }
    CHECK(evaluate_claim(base_graph("petersen"), ClaimId::kF1).verdict == Verdict::kHolds);
    CHECK(evaluate_claim(base_graph("k33"), ClaimId::kZ9).verdict == Verdict::kHolds);
}

TEST_CASE("evaluation rejects ineligible graphs") {
    Graph c6 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    CHECK_THROWS_AS(evaluate_claim(c6, ClaimId::kZ1), std::invalid_argument);
    CHECK_THROWS_AS(evaluate_claim(two_block_cubic(), ClaimId::kT1), std::invalid_argument);
}

TEST_CASE("tight budgets surface as skips") {
    ClaimReport r = evaluate_claim(base_graph("prism"), ClaimId::kZ1, 1);
    CHECK(r.verdict == Verdict::kSkipped);
    CHECK(r.witness.find("undetermined") != std::string::npos);
    // generous budget: same claim holds
    CHECK(evaluate_claim(base_graph("prism"), ClaimId::kZ1, 100000).verdict ==
          Verdict::kHolds);
}

TEST_CASE("deletion claims match a direct center reading") {
    // z4: every vertex is the center of a path in some factor.
    // z5: every vertex has at least two such end pairs across factors.
    for (int n : {6, 12})
        for (const Graph& g : generate_cubic_all({n, true, true})) {
            EnumResult en = enumerate_lambda_factors(g);
            REQUIRE(en.exhausted);
            bool all_once = true, all_twice = true;
            for (int x = 0; x < g.n(); ++x) {
                std::set<std::pair<int, int>> pairs;
                for (const Packing& p : en.factors)
                    for (const Path3& q : p.paths)
                        if (q.center == x) pairs.insert({q.a, q.b});
                all_once &= !pairs.empty();
                all_twice &= pairs.size() >= 2;
            }
            CHECK((evaluate_claim(g, ClaimId::kZ4).verdict == Verdict::kHolds) == all_once);
            CHECK((evaluate_claim(g, ClaimId::kZ5).verdict == Verdict::kHolds) == all_twice);
        }
}

TEST_CASE("matrix over the small 3-connected corpus") {
    std::vector<Graph> graphs;
    for (int n = 4; n <= 8; n += 2)
        for (const Graph& g : generate_cubic_all({n, true, true})) graphs.push_back(g);
    REQUIRE(graphs.size() == 7);
    MatrixResult m = corpus_claim_matrix(graphs, all_claims());
    CHECK(m.diagnostics.empty());
    CHECK(m.reports.size() == 7 * 19);
    CHECK(m.holds == 40);
    CHECK(m.fails == 0);
    CHECK(m.not_applicable == 93);
    CHECK(m.skipped == 0);

    // scheduling must not leak into the output
    MatrixResult m4 = corpus_claim_matrix(graphs, all_claims(), 0, 4);
    REQUIRE(m4.reports.size() == m.reports.size());
    for (size_t i = 0; i < m.reports.size(); ++i) {
        CHECK(m4.reports[i].graph_id == m.reports[i].graph_id);
        CHECK(m4.reports[i].claim == m.reports[i].claim);
        CHECK(m4.reports[i].verdict == m.reports[i].verdict);
        CHECK(m4.reports[i].witness == m.reports[i].witness);
    }
}

TEST_CASE("matrix flags ineligible corpus entries") {
    Graph c6 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    MatrixResult m = corpus_claim_matrix({c6, base_graph("prism"), two_block_cubic()},
                                         {ClaimId::kZ1});
    REQUIRE(m.diagnostics.size() == 2);
    CHECK(m.diagnostics[0].find("not cubic") != std::string::npos);
    CHECK(m.diagnostics[1].find("not 3-connected") != std::string::npos);
    REQUIRE(m.reports.size() == 1);
    CHECK(m.reports[0].verdict == Verdict::kHolds);
}

TEST_CASE("cut cases, unswapped") {
    Graph k4 = base_graph("k4");
    SpliceResult s = splice(k4, 0, k4, 0);
    EnumResult en = enumerate_lambda_factors(s.graph);
    REQUIRE(en.factors.size() == 15);
    std::map<std::string, int> count;
    for (const Packing& p : en.factors) {
        CutCaseResult c = classify_cut_case(s.graph, s.meta, p);
        CHECK_FALSE(c.swapped);
        count[cut_case_name(c.c)]++;
        if (c.c == CutCase::kA2_1) {
            CHECK(c.crossing_paths == 0);
            CHECK(c.side_counts.empty());
        }
        if (c.c == CutCase::kA2_2) {
            CHECK(c.crossing_paths == 2);
            std::vector<int> sc = c.side_counts;
            std::sort(sc.begin(), sc.end());
            CHECK(sc == std::vector<int>{1, 2});
        }
    }
    CHECK(count["A2.1"] == 9);
    CHECK(count["A2.2"] == 6);
    CHECK(count.size() == 2);
}

TEST_CASE("cut cases, swapped to the short side") {
    SpliceResult s = splice(base_graph("cube"), 0, base_graph("prism"), 0);
    EnumResult en = enumerate_lambda_factors(s.graph);
    REQUIRE(en.factors.size() == 46);
    std::map<std::string, int> count;
    for (const Packing& p : en.factors) {
        CutCaseResult c = classify_cut_case(s.graph, s.meta, p);
        CHECK(c.swapped);  // 7-vertex side has the wrong residue
        count[cut_case_name(c.c)]++;
    }
    CHECK(count["A1.1"] == 30);
    CHECK(count["A1.2"] == 10);
    CHECK(count["A1.3"] == 6);
}

TEST_CASE("cut case analysis rejects broken input") {
    Graph k4 = base_graph("k4");
    SpliceResult s = splice(k4, 0, k4, 0);
    Packing empty;
    CHECK_THROWS_AS(classify_cut_case(s.graph, s.meta, empty), std::runtime_error);

    SpliceMeta shared = s.meta;
    shared.cut_edges = {Edge(0, 1), Edge(1, 2), Edge(3, 4)};  // endpoint 1 reused
    EnumResult en = enumerate_lambda_factors(s.graph, {}, 1);
    REQUIRE(en.factors.size() == 1);
    CHECK_THROWS_AS(classify_cut_case(s.graph, shared, en.factors[0]), std::runtime_error);
}

TEST_CASE("hub arm profile stays in range") {
    Graph prism = base_graph("prism");
    YResult y = y_construction(YArm::of(prism, 0), YArm::of(prism, 0), YArm::of(prism, 0));
    EnumResult en = enumerate_lambda_factors(y.graph);
    REQUIRE(en.exhausted);
    CHECK(en.factors.size() == 288);
    for (const Packing& p : en.factors) {
        std::array<int, 3> prof = y_component_profile(y.graph, y.meta, p);
        for (int c : prof) CHECK((c == 1 || c == 2));
    }
}

TEST_CASE("projection through the identity replacement") {
    Graph prism = base_graph("prism");
    ReplacementResult id = vertex_replacement(prism, {});
    for (const Packing& p : enumerate_lambda_factors(prism).factors) {
        ProjectionResult pr = check_projection(id.graph, id.meta, prism, p);
        CHECK(pr.ok);
        CHECK(pr.base_factor.paths == p.paths);
    }
}

TEST_CASE("projection fails when the core cannot host a factor") {
    Graph k4 = base_graph("k4");
    ReplacementResult r = vertex_replacement(k4, {{0, Attachment{k4, 0}}});
    EnumResult en = enumerate_lambda_factors(r.graph);
    REQUIRE(en.factors.size() == 15);
    for (const Packing& p : en.factors) {
        ProjectionResult pr = check_projection(r.graph, r.meta, k4, p);
        CHECK_FALSE(pr.ok);
        CHECK_FALSE(pr.detail.empty());
    }
}

TEST_CASE("projection succeeds through full gadget replacement") {
    Graph prism = base_graph("prism");
    YResult gadget =
        y_construction(YArm::of(prism, 0), YArm::of(prism, 0), YArm::single());
    int bare = gadget.meta.side[2][0];
    std::map<int, Attachment> all;
    for (int v = 0; v < prism.n(); ++v) all[v] = Attachment{gadget.graph, bare};
    ReplacementResult comp = vertex_replacement(prism, all);
    CHECK(comp.graph.n() == 78);
    CHECK(comp.graph.is_cubic());
    EnumResult en = enumerate_lambda_factors(comp.graph, {}, 50);
    REQUIRE(en.factors.size() == 50);
    for (const Packing& p : en.factors) {
        ProjectionResult pr = check_projection(comp.graph, comp.meta, prism, p);
        CHECK(pr.ok);
        CHECK_FALSE(validate_factor(prism, pr.base_factor).has_value());
    }
}

TEST_CASE("gadget admission conditions") {
    Graph prism = base_graph("prism");
    YResult w = y_construction(YArm::of(prism, 0), YArm::of(prism, 0), YArm::single());
    int bare = w.meta.side[2][0];
    GadgetConditions gc = verify_gadget_conditions(w.graph, bare);
    CHECK(gc.h1);
    CHECK(gc.h2);
    CHECK(gc.complete);
    CHECK(gc.failures.empty());
    CHECK(gc.nodes > 0);

    // K4 is too small to serve: deleting the attachment and a neighbor
    // leaves two vertices
    GadgetConditions k4c = verify_gadget_conditions(base_graph("k4"), 0);
    CHECK(k4c.h1);  // vacuous: no vertex outside the closed neighborhood
    CHECK_FALSE(k4c.h2);
    CHECK_FALSE(k4c.failures.empty());
}

TEST_CASE("cut discipline across whole graphs") {
    CutDisciplineResult k33 = check_cut_discipline(base_graph("k33"));
    CHECK(k33.ok);
    CHECK(k33.exhausted);
    CHECK(k33.factors == 9);
    CHECK(k33.cuts == 6);
    CHECK(k33.violation.empty());

    // the prism's two-triangle factor misses its matching cut entirely
    CutDisciplineResult pr = check_cut_discipline(base_graph("prism"));
    CHECK_FALSE(pr.ok);
    CHECK_FALSE(pr.violation.empty());

    // no factors at all: vacuously disciplined
    CutDisciplineResult cube = check_cut_discipline(base_graph("cube"));
    CHECK(cube.ok);
    CHECK(cube.factors == 0);
}
