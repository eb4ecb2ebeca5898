#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

// Path on three vertices a-center-b, stored with a < b.
struct Path3 {
    int a = 0;
    int center = 0;
    int b = 0;

    Path3() = default;
    Path3(int end1, int c, int end2)
        : a(end1 < end2 ? end1 : end2), center(c), b(end1 < end2 ? end2 : end1) {}

    friend bool operator==(const Path3&, const Path3&) = default;
    friend bool operator<(const Path3& x, const Path3& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.center < y.center;
    }
};

// Vertex-disjoint set of 3-vertex paths, kept sorted.
struct Packing {
    std::vector<Path3> paths;

    int size() const { return static_cast<int>(paths.size()); }
    std::vector<int> covered_vertices() const;
    std::vector<Edge> used_edges() const;
    void canonicalize();
};

struct FactorConstraint {
    std::vector<int> removed;     // vertices excluded from the host graph
    std::vector<Edge> forbidden;  // edges no path may use
    std::vector<Edge> required;   // edges some path must use

    bool empty() const { return removed.empty() && forbidden.empty() && required.empty(); }
};

// Throws std::invalid_argument when the constraint is inconsistent: removed
// vertex out of range, required edge missing from g, required edge also
// forbidden, or required edge incident to a removed vertex.
void validate_constraint(const Graph& g, const FactorConstraint& c);

enum class SolveStatus { kFound, kNone, kBudget };

struct FactorResult {
    SolveStatus status = SolveStatus::kNone;
    std::optional<Packing> factor;
    std::uint64_t nodes = 0;
};

// Complete search for a spanning set of disjoint 3-vertex paths on
// V(g) minus removed, avoiding forbidden edges and using every required one.
// Deterministic: identical inputs give identical witnesses. budget_nodes == 0
// means unlimited; otherwise the search stops with kBudget when exceeded.
FactorResult find_lambda_factor(const Graph& g, const FactorConstraint& c = {},
                                std::uint64_t budget_nodes = 0);

struct EnumResult {
    std::vector<Packing> factors;
    bool exhausted = false;  // full search space visited (no limit/budget stop)
    std::uint64_t nodes = 0;
};

// All factors under the constraint, up to limit, in deterministic order.
EnumResult enumerate_lambda_factors(const Graph& g, const FactorConstraint& c = {},
                                    std::size_t limit = SIZE_MAX,
                                    std::uint64_t budget_nodes = 0);

struct MaxPackingResult {
    int lambda = 0;
    Packing packing;
    std::uint64_t nodes = 0;
    bool complete = false;  // false only when a node budget cut the search
};

// Exact maximum number of disjoint 3-vertex paths, by branch and bound with
// the floor(remaining/3) upper bound and a greedy warm start.
MaxPackingResult max_lambda_packing(const Graph& g, std::uint64_t budget_nodes = 0);

// First maximal packing in scan order: repeatedly adds the lexicographically
// smallest path disjoint from everything placed so far.
Packing greedy_packing(const Graph& g);

struct OracleResult {
    int lambda = 0;
    std::vector<Packing> factors;  // every factor, sorted
    std::uint64_t packings_seen = 0;
};

// Independent referee: enumerates every vertex-disjoint path set by recursion
// over the full path list, with no pruning beyond disjointness. lambda ranges
// over packings that respect removed/forbidden; the factor list additionally
// filters on required edges. Guarded to n <= 14.
OracleResult brute_force_oracle(const Graph& g, const FactorConstraint& c = {});

// All 3-vertex paths of g compatible with removed/forbidden, sorted.
std::vector<Path3> all_paths(const Graph& g, const FactorConstraint& c = {});

// nullopt when valid, else a description of the first problem found.
std::optional<std::string> validate_packing(const Graph& g, const Packing& p,
                                            const FactorConstraint& c = {});
std::optional<std::string> validate_factor(const Graph& g, const Packing& p,
                                           const FactorConstraint& c = {});

}  // namespace p3pack
