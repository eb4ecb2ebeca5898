#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/constructions.hpp"
#include "p3pack/graph.hpp"
#include "p3pack/packing.hpp"

namespace p3pack {

// Deletion and constraint claims about cubic 3-connected graphs, in three
// groups by vertex count mod 6: z* need 0, t* need 2, f* need 4.
enum class ClaimId {
    kZ1, kZ2, kZ3, kZ4, kZ5, kZ6, kZ7, kZ8, kZ9,
    kT1, kT2, kT3, kT4,
    kF1, kF2, kF3, kF4, kF5, kF6,
};

const std::vector<ClaimId>& all_claims();
std::string claim_name(ClaimId id);
std::optional<ClaimId> parse_claim(const std::string& name);
int claim_residue(ClaimId id);  // required n mod 6

enum class Verdict { kHolds, kFails, kNotApplicable, kSkipped };
std::string verdict_name(Verdict v);

struct ClaimReport {
    std::string graph_id;  // graph6 of the evaluated graph
    std::string provenance;
    ClaimId claim = ClaimId::kZ1;
    Verdict verdict = Verdict::kNotApplicable;
    std::string witness;   // JSON object text for fails/skips, else empty
    std::uint64_t nodes = 0;
    double runtime_ms = 0;  // wall time; reported in tables, not in JSON
};

// budget_nodes bounds each inner factor query; 0 = unlimited. Throws
// std::invalid_argument unless g is cubic and 3-connected (checked).
ClaimReport evaluate_claim(const Graph& g, ClaimId id, std::uint64_t budget_nodes = 0);

struct MatrixResult {
    std::vector<ClaimReport> reports;       // sorted by graph id, then claim
    std::vector<std::string> diagnostics;   // graphs rejected before evaluation
    int holds = 0, fails = 0, not_applicable = 0, skipped = 0;
};

// Evaluates each claim on each graph (skipping non-cubic or non-3-connected
// inputs with a diagnostic). workers > 1 spreads graphs over threads; the
// output order does not depend on scheduling.
MatrixResult corpus_claim_matrix(const std::vector<Graph>& graphs,
                                 const std::vector<ClaimId>& claims,
                                 std::uint64_t budget_nodes = 0, int workers = 1);

// ---- matching-cut case analysis ----------------------------------------
// For a factor P and a matching 3-edge cut, the paths that use a cut edge
// leave 1 or 2 vertices on the designated side (2 only as an adjacent pair),
// and the multiset of side counts falls into one of six shapes depending on
// the side's residue mod 3.

enum class CutCase { kA1_1, kA1_2, kA1_3, kA2_1, kA2_2, kA2_3 };
std::string cut_case_name(CutCase c);

struct CutCaseResult {
    CutCase c = CutCase::kA2_1;
    bool swapped = false;          // classified from side_b's point of view
    int crossing_paths = 0;
    std::vector<int> side_counts;  // designated-side vertex count per crossing path
};

// meta.cut_edges must be a matching; P must be a factor of g. Throws
// std::runtime_error when no case shape matches (a violation worth surfacing).
CutCaseResult classify_cut_case(const Graph& g, const SpliceMeta& meta, const Packing& p);

// Per arm, how many paths of P use an edge between that arm and the hubs.
std::array<int, 3> y_component_profile(const Graph& g, const YMeta& meta, const Packing& p);

// ---- projection through vertex replacement ------------------------------

struct ProjectionResult {
    bool ok = false;
    Packing base_factor;  // valid when ok
    std::string detail;
};

// Pulls E(P) back through meta.alpha and checks that the chosen base edges
// form a factor of base (every vertex covered, each piece a 3-vertex path).
ProjectionResult check_projection(const Graph& g, const ReplacementMeta& meta,
                                  const Graph& base, const Packing& p);

// Conditions a gadget (A, a) must meet for the projection argument: (h1) for
// every y outside N[a] adjacent to N(a), A - (N(a) + a + y) has no factor;
// (h2) A - {a,z} has a factor for every neighbor z, and A - V(W) has a factor
// for every 5-vertex path W centered at a.
struct GadgetConditions {
    bool h1 = false;
    bool h2 = false;
    bool complete = false;  // false when a budget stopped a query
    std::vector<std::string> failures;
    std::uint64_t nodes = 0;
};
GadgetConditions verify_gadget_conditions(const Graph& a_graph, int a,
                                          std::uint64_t budget_nodes = 0);

// ---- whole-graph cut discipline -----------------------------------------

struct CutDisciplineResult {
    bool ok = false;
    bool exhausted = false;  // all factors enumerated within budget
    std::uint64_t factors = 0;
    std::uint64_t cuts = 0;
    std::string violation;  // first factor/cut pair meeting 0 or 3 cut edges
};

// Checks |E(P) meet K| in {1,2} for every enumerated factor P and every
// 3-edge cut K.
CutDisciplineResult check_cut_discipline(const Graph& g, std::uint64_t budget_nodes = 0,
                                         std::size_t factor_limit = SIZE_MAX);

}  // namespace p3pack
