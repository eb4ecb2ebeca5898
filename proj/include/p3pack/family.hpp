#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

// Certified member of the recursively built gadget family: a connected graph
// with exactly three degree-1 leaves, everything else degree 3, and vertex
// count divisible by 6. build is a JSON recipe tree recording how it was made.
struct FFamilyCert {
    Graph graph;
    std::array<int, 3> leaves{};
    std::string build;
};

FFamilyCert f_base_y();  // hub triangle with three pendant leaves (6 vertices)
FFamilyCert f_base_z();  // 24-vertex double-gadget member

// All 3-cliques, each sorted ascending, list sorted.
std::vector<std::array<int, 3>> find_triangles(const Graph& g);

// For a triangle T with exactly three outside neighbors: the unique 6-cycle
// through those neighbors (avoiding T) whose union with T has a 3-edge
// matching boundary. Throws std::runtime_error when no such cycle exists or
// it is not unique.
struct TCutResult {
    std::array<int, 3> triangle{};
    std::vector<int> cycle;      // six vertices in cyclic order
    std::vector<Edge> boundary;  // D(T plus C): the three matching edges
};
TCutResult t_cycle_and_cut(const Graph& g, const std::array<int, 3>& triangle);

// Substitute B for a triangle of A: delete T, delete B's leaves, and join the
// i-th outside neighbor of T (by ascending triangle vertex) to the neighbor
// of B's i-th leaf (certificate leaf order). A's block keeps low indices.
FFamilyCert f_compose(const FFamilyCert& a, const std::array<int, 3>& triangle,
                      const FFamilyCert& b);

// nullopt when the certificate is structurally valid: leaf set and degrees as
// promised, connected, order divisible by 6, and (beyond the 6-vertex base)
// every triangle passes t_cycle_and_cut.
std::optional<std::string> validate_f_cert(const FFamilyCert& cert);

enum class FOp { kDot, kBar, kDdot };

struct FOpResult {
    Graph graph;
    int dot_vertex = -1;             // dot: the merged vertex
    std::vector<Edge> bar_triangle;  // bar: the three added leaf-leaf edges
    int ddot_hub = -1;               // ddot: the added hub
    std::array<int, 3> ddot_mids{-1, -1, -1};
};

// dot: identify the three leaves (order drops by 2). bar: add a triangle on
// the leaves. ddot: bar, then subdivide the three new edges and join the
// midpoints to a fresh hub (order grows by 4).
FOpResult f_operator(const FFamilyCert& cert, FOp which);

}  // namespace p3pack
