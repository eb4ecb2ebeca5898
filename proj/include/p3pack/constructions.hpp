#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"
#include "p3pack/packing.hpp"

namespace p3pack {

// ---- splice -------------------------------------------------------------
// Delete a degree-3 vertex from each side and join the two neighbor triples
// by a bijection. Result: A-a first (order preserved), then B-b.

struct SpliceMeta {
    std::vector<Edge> cut_edges;  // three joining edges, by ascending N(a)
    std::vector<int> side_a;      // image of V(A)-a
    std::vector<int> side_b;      // image of V(B)-b
    std::vector<int> map_a;       // old A index -> new (-1 for a)
    std::vector<int> map_b;       // old B index -> new (-1 for b)
};

struct SpliceResult {
    Graph graph;
    SpliceMeta meta;
};

// sigma pairs (neighbor of a, neighbor of b); empty means index order on the
// sorted neighbor triples. Throws when a or b is not degree 3, or sigma is
// not a bijection between the exact neighbor sets.
SpliceResult splice(const Graph& A, int a, const Graph& B, int b,
                    const std::vector<std::pair<int, int>>& sigma = {});

// ---- vertex replacement -------------------------------------------------
// Replace chosen vertices of a cubic base by gadget-minus-attachment blocks.
// Unreplaced vertices stay as themselves. Each base edge uv maps to a unique
// image edge joining the two ports: the k-th neighbor of the attachment (by
// index) serves the edge to the k-th neighbor of the base vertex (by index).

struct Attachment {
    Graph gadget;
    int attach = 0;
};

struct ReplacementMeta {
    std::vector<Edge> alpha;              // by base edge id: image edge
    std::vector<std::vector<int>> block;  // base vertex -> image vertex set
};

struct ReplacementResult {
    Graph graph;
    ReplacementMeta meta;
};

ReplacementResult vertex_replacement(const Graph& base,
                                     const std::map<int, Attachment>& gadgets);

// ---- Y construction -----------------------------------------------------
// Three arm blocks (gadget minus attachment) plus hubs z1,z2,z3; hub z_j is
// joined to the j-th attachment neighbor of each arm. An arm may instead be
// a bare vertex joined to all three hubs.

struct YArm {
    std::optional<Graph> graph;  // nullopt: bare vertex arm
    int attach = -1;

    static YArm single() { return YArm{}; }
    static YArm of(Graph g, int a) { return YArm{std::move(g), a}; }
};

struct YMeta {
    std::array<int, 3> hubs{};                 // z1,z2,z3 (last three indices)
    std::array<std::vector<Edge>, 3> d;        // D^i: edges between arm i and hubs
    std::array<std::vector<int>, 3> side;      // arm i image vertices
};

struct YResult {
    Graph graph;
    YMeta meta;
};

YResult y_construction(const YArm& a1, const YArm& a2, const YArm& a3);

// ---- local expansions ---------------------------------------------------

// Replace a degree-3 vertex by a triangle; new triangle vertex i hangs off
// the i-th old neighbor (ascending).
struct TriangleExpandResult {
    Graph graph;
    std::array<int, 3> triangle{};
};
TriangleExpandResult triangle_expand(const Graph& g, int x);

// Subdivide two distinct edges and join the two midpoints.
struct SubdivideConnectResult {
    Graph graph;
    int w1 = 0;
    int w2 = 0;
};
SubdivideConnectResult subdivide_and_connect(const Graph& g, Edge e1, Edge e2);

// Delete both ends of an edge of a cubic graph and reconnect the four outer
// neighbors x1,x2 (of x) and y1,y2 (of y) in the three possible ways:
// {x1y1,x2y2}, {x1y2,x2y1}, {x1x2,y1y2}. A variant is absent when it would
// need a loop or duplicate edge.
struct RewireResult {
    std::array<int, 2> outer_x{};  // original labels
    std::array<int, 2> outer_y{};
    std::vector<int> old_to_new;
    std::array<std::optional<Graph>, 3> variants;
};
RewireResult rewire_after_pair_deletion(const Graph& g, int x, int y);

// ---- named bases --------------------------------------------------------
// k4, prism (triangles 012/345, matching i~i+3), k33 (parts 012|345),
// cube (vertices 0..7, i~j iff one differing bit), petersen (outer 0-4,
// spokes, inner pentagram), y_base (hub triangle 0,1,2 with pendant leaves
// 3,4,5), z_base (24 vertices, three leaves).
Graph base_graph(const std::string& name);

// ---- ring family --------------------------------------------------------
// Cycle on 9s vertices in consecutive triples L_1..L_3s plus 3s chord
// vertices, x_{i,j} joined to the j-th vertex of L_i, L_{i+s}, L_{i+2s}.
// 12s vertices, 18s edges, cubic.
struct RingResult {
    Graph graph;
    std::vector<Path3> base_paths;  // the triples L_k as paths on the cycle
};
RingResult r_s(int s);

// ---- H pattern ----------------------------------------------------------
// 10-vertex cubic base: x_i ~ y_i (i = 0,1,2), hubs z1,z2 over the x side
// and z3,z4 over the y side (vertices 6..9). h_construction replaces the
// four hubs by gadget blocks.
Graph h_graph();
ReplacementResult h_construction(const std::array<Attachment, 4>& arms);

}  // namespace p3pack
