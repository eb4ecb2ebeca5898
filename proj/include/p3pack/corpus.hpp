#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

struct CorpusSpec {
    int n = 0;                      // even, 4 <= n <= 16
    bool dedup = true;              // one representative per isomorphism class
    bool require_3connected = false;
};

// Streams connected cubic graphs on n vertices to the sink; stops early when
// the sink returns false. Every isomorphism class appears; with dedup on,
// exactly once. Backtracking completes the least-index unfinished vertex,
// with vertex 0 attached to 1,2,3 and fresh vertices introduced in order.
void generate_cubic(const CorpusSpec& spec, const std::function<bool(const Graph&)>& sink);

// Convenience: collect the whole stream.
std::vector<Graph> generate_cubic_all(const CorpusSpec& spec);

// Canonical form: equal strings exactly for isomorphic graphs (the graph6
// encoding of a canonically relabeled copy). Color refinement plus full
// backtracking over the refinement tree; the minimum leaf encoding wins.
// Returns nullopt when the node budget is exceeded, never a wrong answer.
std::optional<std::string> canonical_form(const Graph& g,
                                          std::uint64_t budget_nodes = 1000000);

// Canonical form that throws std::runtime_error instead of returning nullopt.
std::string canonical_form_or_throw(const Graph& g, std::uint64_t budget_nodes = 1000000);

bool isomorphic(const Graph& a, const Graph& b);

enum class IngestFormat { kGraph6, kEdgeList };

struct IngestDiagnostic {
    int line = 0;  // 1-based line where the problem starts
    std::string message;
};

struct IngestResult {
    std::vector<Graph> graphs;
    std::vector<IngestDiagnostic> diagnostics;
};

// Parses a whole file's text. graph6: one graph per non-empty line. Edge
// list: consecutive "n m" blocks. Bad records become diagnostics with line
// numbers; good records still load.
IngestResult ingest_text(const std::string& text, IngestFormat format);
IngestResult ingest_file(const std::string& path, IngestFormat format);

}  // namespace p3pack
