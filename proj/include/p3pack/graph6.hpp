#pragma once

#include <string>
#include <vector>

#include "p3pack/graph.hpp"

namespace p3pack {

// graph6 text codec. Short form for n <= 62, three-byte extended header up to
// n = 258047. Bits cover the upper triangle column by column: (0,1), (0,2),
// (1,2), (0,3), ... packed six per printable byte (byte value = bits + 63).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(const std::string& line);

// One graph per non-empty line; lines starting with ">>graph6<<" are stripped.
std::vector<Graph> graph6_read_lines(const std::string& text);

}  // namespace p3pack
