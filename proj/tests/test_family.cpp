#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "p3pack/connectivity.hpp"
#include "p3pack/constructions.hpp"
#include "p3pack/corpus.hpp"
#include "p3pack/family.hpp"
#include "p3pack/packing.hpp"
#include "p3pack/recipes.hpp"

using namespace p3pack;

TEST_CASE("six-vertex base member") {
    FFamilyCert y = f_base_y();
    CHECK(y.graph.n() == 6);
    CHECK(y.graph.m() == 6);
    CHECK(y.leaves == std::array<int, 3>{3, 4, 5});
    for (int leaf : y.leaves) CHECK(y.graph.degree(leaf) == 1);
    for (int hub : {0, 1, 2}) CHECK(y.graph.degree(hub) == 3);
    CHECK_FALSE(validate_f_cert(y).has_value());
    CHECK(find_lambda_factor(y.graph).status == SolveStatus::kNone);
}

TEST_CASE("24-vertex base member") {
    FFamilyCert z = f_base_z();
    CHECK(z.graph.n() == 24);
    CHECK(z.graph.m() == 33);
    CHECK(z.leaves == std::array<int, 3>{21, 22, 23});
    CHECK(z.graph.connected());
    for (int leaf : z.leaves) CHECK(z.graph.degree(leaf) == 1);
    int deg3 = 0;
    for (int v = 0; v < z.graph.n(); ++v) deg3 += z.graph.degree(v) == 3;
    CHECK(deg3 == 21);
    CHECK_FALSE(validate_f_cert(z).has_value());
    CHECK(find_lambda_factor(z.graph).status == SolveStatus::kNone);
}

TEST_CASE("triangle listing") {
    CHECK(find_triangles(base_graph("k4")).size() == 4);
    CHECK(find_triangles(base_graph("prism")).size() == 2);
    CHECK(find_triangles(base_graph("k33")).empty());
    auto tris = find_triangles(f_base_z().graph);
    REQUIRE(tris.size() == 2);
    CHECK(tris[0] == std::array<int, 3>{0, 1, 2});
    CHECK(tris[1] == std::array<int, 3>{9, 10, 11});
}

TEST_CASE("triangle cycle and cut inside the 24-vertex member") {
    Graph z = f_base_z().graph;
    TCutResult a = t_cycle_and_cut(z, {0, 1, 2});
    CHECK(a.cycle == std::vector<int>{3, 7, 5, 6, 4, 8});
    CHECK(a.boundary == std::vector<Edge>{{6, 18}, {7, 19}, {8, 20}});
    TCutResult b = t_cycle_and_cut(z, {9, 10, 11});
    CHECK(b.cycle == std::vector<int>{12, 16, 14, 15, 13, 17});
    CHECK(b.boundary == std::vector<Edge>{{15, 18}, {16, 19}, {17, 20}});
    // the cycle really is a cycle of z
    for (size_t i = 0; i < a.cycle.size(); ++i)
        CHECK(z.has_edge(a.cycle[i], a.cycle[(i + 1) % a.cycle.size()]));

    CHECK_THROWS_AS(t_cycle_and_cut(base_graph("k4"), {0, 1, 2}), std::runtime_error);
    CHECK_THROWS_AS(t_cycle_and_cut(base_graph("prism"), {0, 1, 2}), std::runtime_error);
}

TEST_CASE("composition swaps a triangle for a block") {
    FFamilyCert z = f_base_z();
    FFamilyCert y = f_base_y();
    FFamilyCert c = f_compose(z, {0, 1, 2}, y);
    CHECK(c.graph.n() == 24);
    CHECK(c.graph.m() == 33);
    CHECK(c.leaves == std::array<int, 3>{18, 19, 20});
    CHECK_FALSE(validate_f_cert(c).has_value());
    CHECK(find_lambda_factor(c.graph).status == SolveStatus::kNone);

    // deeper nesting still validates
    auto tris = find_triangles(c.graph);
    REQUIRE_FALSE(tris.empty());
    FFamilyCert c2 = f_compose(c, tris.front(), y);
    CHECK(c2.graph.n() == 24);
    CHECK_FALSE(validate_f_cert(c2).has_value());
}

TEST_CASE("certificate build strings replay") {
    FFamilyCert z = f_base_z();
    FFamilyCert c = f_compose(z, {0, 1, 2}, f_base_y());
    RecipeResult r = build_from_recipe(c.build);
    REQUIRE(r.cert.has_value());
    CHECK(r.graph == c.graph);
    CHECK(r.cert->leaves == c.leaves);
    RecipeResult ry = build_from_recipe(f_base_y().build);
    CHECK(ry.graph == f_base_y().graph);
}

TEST_CASE("certificate validation failures") {
    FFamilyCert bad = f_base_y();
    bad.leaves = {0, 1, 2};  // hub triangle, degree 3 each
    CHECK(validate_f_cert(bad).has_value());

    FFamilyCert wrong_graph{base_graph("prism"), {0, 1, 2}, ""};
    CHECK(validate_f_cert(wrong_graph).has_value());  // no degree-1 vertices at all

    FFamilyCert k4ish{base_graph("k4"), {1, 2, 3}, ""};
    CHECK(validate_f_cert(k4ish).has_value());  // order not divisible by 6 either

    // disconnected six-vertex shape with two degree-1 vertices
    FFamilyCert split{disjoint_union(base_graph("k4"), Graph::from_edge_list(2, {{0, 1}})),
                      {3, 4, 5},
                      ""};
    CHECK(validate_f_cert(split).has_value());
}

TEST_CASE("identifying the leaves gives small sealed graphs") {
    FFamilyCert y = f_base_y();
    FOpResult dy = f_operator(y, FOp::kDot);
    CHECK(dy.graph.n() == 4);
    CHECK(dy.dot_vertex == 3);
    CHECK(isomorphic(dy.graph, base_graph("k4")));

    FFamilyCert z = f_base_z();
    FOpResult dz = f_operator(z, FOp::kDot);
    CHECK(dz.graph.n() == 22);
    CHECK(dz.graph.is_cubic());
    CHECK(vertex_connectivity(dz.graph) == 3);
}

TEST_CASE("closing the leaves with a triangle") {
    FFamilyCert y = f_base_y();
    FOpResult by = f_operator(y, FOp::kBar);
    CHECK(by.graph.n() == 6);
    CHECK(isomorphic(by.graph, base_graph("prism")));
    CHECK(by.bar_triangle == std::vector<Edge>{{3, 4}, {3, 5}, {4, 5}});

    // a factor exists, but never without the new triangle edges
    CHECK(find_lambda_factor(by.graph).status == SolveStatus::kFound);
    FactorConstraint avoid;
    avoid.forbidden = by.bar_triangle;
    CHECK(find_lambda_factor(by.graph, avoid).status == SolveStatus::kNone);

    FOpResult bz = f_operator(f_base_z(), FOp::kBar);
    CHECK(bz.graph.n() == 24);
    CHECK(bz.graph.is_cubic());
    CHECK(vertex_connectivity(bz.graph) == 3);
}

TEST_CASE("closing the leaves through a fresh hub") {
    FFamilyCert y = f_base_y();
    FOpResult dd = f_operator(y, FOp::kDdot);
    CHECK(dd.graph.n() == 10);
    CHECK(dd.graph.is_cubic());
    CHECK(vertex_connectivity(dd.graph) == 3);
    CHECK(dd.ddot_hub == 9);
    CHECK(dd.ddot_mids == std::array<int, 3>{6, 7, 8});
    for (int m : dd.ddot_mids) CHECK(dd.graph.has_edge(dd.ddot_hub, m));

    // removing the hub with its neighbors leaves no spanning path set
    FactorConstraint cut;
    cut.removed = {dd.ddot_hub, dd.ddot_mids[0], dd.ddot_mids[1], dd.ddot_mids[2]};
    CHECK(find_lambda_factor(dd.graph, cut).status == SolveStatus::kNone);

    FOpResult ddz = f_operator(f_base_z(), FOp::kDdot);
    CHECK(ddz.graph.n() == 28);
    CHECK(ddz.graph.is_cubic());
    CHECK(vertex_connectivity(ddz.graph) == 3);
}
