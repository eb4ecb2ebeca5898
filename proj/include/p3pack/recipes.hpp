#pragma once

#include <optional>
#include <string>

#include "p3pack/family.hpp"
#include "p3pack/graph.hpp"

namespace p3pack {

// Result of evaluating a recipe tree. cert is set when the top op produces a
// certified three-leaf family member (f_base / f_compose).
struct RecipeResult {
    Graph graph;
    std::optional<FFamilyCert> cert;
};

// Builds a graph from a JSON recipe tree. Every node is an object with an
// "op" field; subtrees nest directly. Supported ops:
//
//   {"op":"base","name":"k4"|"prism"|"k33"|"cube"|"petersen"|"y"|"z"}
//   {"op":"g6","value":"C~"}
//   {"op":"edges","n":4,"edges":[[0,1],...]}
//   {"op":"splice","a":T,"va":0,"b":T,"vb":0,"sigma":[[p,q],[p,q],[p,q]]?}
//   {"op":"replace","base":T,"gadgets":[{"vertex":v,"graph":T,"attach":a},...]}
//   {"op":"y","arms":[A,A,A]}         A = "point" | {"graph":T,"attach":a}
//   {"op":"triangle_expand","graph":T,"vertex":x}
//   {"op":"subdivide_connect","graph":T,"e1":[u,v],"e2":[u,v]}
//   {"op":"rewire","graph":T,"x":u,"y":v,"variant":0|1|2}
//   {"op":"ring","s":k}
//   {"op":"h","arms":[{"graph":T,"attach":a} x4]}
//   {"op":"f_base","name":"y"|"z"}
//   {"op":"f_compose","a":T,"b":T,"triangle":[x,y,z]?}   (a, b cert-producing)
//   {"op":"f_op","kind":"dot"|"bar"|"ddot","cert":T}
//
// Throws std::invalid_argument on malformed input, std::runtime_error when a
// construction step rejects its arguments.
RecipeResult build_from_recipe(const std::string& json_text);

// Metadata line for a build: {"graph6":..,"n":..,"m":..,"cubic":..} plus
// "leaves" when a certificate came out. Deterministic key order.
std::string recipe_summary(const RecipeResult& r);

}  // namespace p3pack
