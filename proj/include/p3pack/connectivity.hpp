#pragma once

#include <optional>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

// Minimum over nonadjacent pairs (s,t) of the maximum number of internally
// vertex-disjoint s-t paths, computed by unit-capacity max-flow on the
// split-vertex network. Complete graphs (no nonadjacent pair) give n-1.
// Disconnected graphs give 0. Throws for n < 2.
int vertex_connectivity(const Graph& g);

// Max vertex-disjoint s-t paths for distinct s, t (internal vertices disjoint).
int max_vertex_disjoint_paths(const Graph& g, int s, int t);

// A set of exactly three edges whose removal disconnects the graph, with the
// vertex sets on the two sides. side_a is the side containing the smallest
// vertex incident to the cut; when removal leaves more than two components,
// side_a is that vertex's component and side_b collects the rest.
struct EdgeCut {
    std::vector<Edge> edges;
    std::vector<int> side_a;
    std::vector<int> side_b;
    // true when the three edges share no endpoint
    bool is_matching = false;
    // true when one side is a single vertex (the cut is that vertex's star)
    bool is_star = false;
};

// All 3-subsets of E(g) whose removal disconnects g. Exhaustive over C(m,3).
std::vector<EdgeCut> enumerate_3_edge_cuts(const Graph& g);

// True iff no set of fewer than k edges separates g into two parts that each
// contain a cycle. Graphs without two vertex-disjoint cycles (e.g. K4) pass
// for every k. Brute force over the edge subsets; k must be at most 7.
bool is_cyclically_k_edge_connected(const Graph& g, int k);

// Smallest edge set (size < k_limit) whose removal leaves two or more
// components that each contain a cycle, if one exists. Helper for reports.
std::optional<std::vector<Edge>> smallest_cycle_separating_cut(const Graph& g, int k_limit);

}  // namespace p3pack
