#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace p3pack {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// editing operations return new graphs. Optional vertex labels carry
// provenance through constructions and never affect equality.
class Graph {
public:
    Graph() = default;

    // Canonicalizes pairs (orders endpoints, sorts, collapses duplicates).
    // Throws std::invalid_argument on loops or out-of-range endpoints.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    std::vector<int> degrees() const;
    bool has_edge(int u, int v) const;
    bool has_vertex(int v) const { return v >= 0 && v < n_; }
    bool is_cubic() const;
    int residue_mod6() const { return n_ % 6; }
    bool connected() const;
    std::vector<std::vector<int>> components() const;

    const std::string& label(int v) const;
    void set_label(int v, std::string s);
    bool has_labels() const { return !labels_.empty(); }

    // Equality is on vertex count and edge set only.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;                // sorted, unique
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists
    std::vector<std::string> labels_;        // empty, or size n_

    void check_vertex(int v) const;
};

// Deletes the vertices in rm (duplicates allowed) and compacts the rest,
// preserving relative order. old_to_new[v] == -1 for deleted vertices.
struct DeleteResult {
    Graph graph;
    std::vector<int> old_to_new;
};
DeleteResult delete_vertices(const Graph& g, const std::vector<int>& rm);

// Replaces edge e by a length-2 path through a fresh vertex (index n).
struct SubdivideResult {
    Graph graph;
    int new_vertex = 0;
};
SubdivideResult subdivide_edge(const Graph& g, Edge e);

// Returns a copy with extra edges. Throws if an edge already exists or is a loop.
Graph add_edges(const Graph& g, const std::vector<Edge>& extra);

// Relabels: vertex v of g becomes perm[v]. perm must be a permutation of 0..n-1.
Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

// Disjoint union, second block shifted by g1.n().
Graph disjoint_union(const Graph& g1, const Graph& g2);

// True when the vertices split into two sides with all edges between them.
bool is_bipartite(const Graph& g);

// Text form: "n m" header line, then one "u v" line per edge.
std::string to_edge_list_text(const Graph& g);
Graph parse_edge_list_text(const std::string& text);

}  // namespace p3pack
