#include "p3pack/recipes.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"
#include "p3pack/constructions.hpp"
#include "p3pack/graph6.hpp"

namespace p3pack {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
    throw std::invalid_argument("recipe: " + where + ": " + what);
}

const json& field(const json& node, const char* key, const std::string& where) {
    auto it = node.find(key);
    if (it == node.end()) bad(where, std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& node, const char* key, const std::string& where) {
    const json& v = field(node, key, where);
    if (!v.is_number_integer()) bad(where, std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Edge edge_field(const json& v, const std::string& where) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer())
        bad(where, "edge must be a [u,v] pair");
    int u = v[0].get<int>(), w = v[1].get<int>();
    if (u == w) bad(where, "edge endpoints coincide");
    return Edge{std::min(u, w), std::max(u, w)};
}

RecipeResult eval_node(const json& node, const std::string& where);

Graph eval_graph(const json& node, const std::string& where) {
    return eval_node(node, where).graph;
}

FFamilyCert eval_cert(const json& node, const std::string& where) {
    RecipeResult r = eval_node(node, where);
    if (!r.cert) bad(where, "subtree does not produce a certified family member");
    return *r.cert;
}

RecipeResult eval_node(const json& node, const std::string& where) {
    if (!node.is_object()) bad(where, "node must be an object");
    const json& opv = field(node, "op", where);
    if (!opv.is_string()) bad(where, "\"op\" must be a string");
    std::string op = opv.get<std::string>();
    RecipeResult out;

    if (op == "base") {
        const json& name = field(node, "name", where);
        if (!name.is_string()) bad(where, "\"name\" must be a string");
        out.graph = base_graph(name.get<std::string>());
    } else if (op == "g6") {
        const json& v = field(node, "value", where);
        if (!v.is_string()) bad(where, "\"value\" must be a string");
        out.graph = graph6_decode(v.get<std::string>());
    } else if (op == "edges") {
        int n = int_field(node, "n", where);
        const json& es = field(node, "edges", where);
        if (!es.is_array()) bad(where, "\"edges\" must be an array");
        std::vector<Edge> edges;
        for (const json& e : es) edges.push_back(edge_field(e, where + "/edges"));
        out.graph = Graph::from_edges(n, edges);
    } else if (op == "splice") {
        Graph a = eval_graph(field(node, "a", where), where + "/a");
        Graph b = eval_graph(field(node, "b", where), where + "/b");
        int va = int_field(node, "va", where), vb = int_field(node, "vb", where);
        std::vector<std::pair<int, int>> sigma;
        if (auto it = node.find("sigma"); it != node.end()) {
            if (!it->is_array() || it->size() != 3) bad(where, "\"sigma\" must be 3 pairs");
            for (const json& p : *it) {
                if (!p.is_array() || p.size() != 2) bad(where, "\"sigma\" must be 3 pairs");
                sigma.push_back({p[0].get<int>(), p[1].get<int>()});
            }
        }
        out.graph = splice(a, va, b, vb, sigma).graph;
    } else if (op == "replace") {
        Graph base = eval_graph(field(node, "base", where), where + "/base");
        const json& gs = field(node, "gadgets", where);
        if (!gs.is_array()) bad(where, "\"gadgets\" must be an array");
        std::map<int, Attachment> gadgets;
        int i = 0;
        for (const json& spec : gs) {
            std::string sub = where + "/gadgets/" + std::to_string(i++);
            int v = int_field(spec, "vertex", sub);
            Attachment att;
            att.gadget = eval_graph(field(spec, "graph", sub), sub + "/graph");
            att.attach = int_field(spec, "attach", sub);
            if (!gadgets.emplace(v, std::move(att)).second) bad(sub, "duplicate vertex");
        }
        out.graph = vertex_replacement(base, gadgets).graph;
    } else if (op == "y") {
        const json& arms = field(node, "arms", where);
        if (!arms.is_array() || arms.size() != 3) bad(where, "\"arms\" must be 3 entries");
        std::array<YArm, 3> a;
        for (int i = 0; i < 3; ++i) {
            const json& arm = arms[i];
            std::string sub = where + "/arms/" + std::to_string(i);
            if (arm.is_string() && arm.get<std::string>() == "point") {
                a[i] = YArm::single();
            } else if (arm.is_object()) {
                a[i] = YArm::of(eval_graph(field(arm, "graph", sub), sub + "/graph"),
                                int_field(arm, "attach", sub));
            } else {
                bad(sub, "arm must be \"point\" or {graph, attach}");
            }
        }
        out.graph = y_construction(a[0], a[1], a[2]).graph;
    } else if (op == "triangle_expand") {
        Graph g = eval_graph(field(node, "graph", where), where + "/graph");
        out.graph = triangle_expand(g, int_field(node, "vertex", where)).graph;
    } else if (op == "subdivide_connect") {
        Graph g = eval_graph(field(node, "graph", where), where + "/graph");
        Edge e1 = edge_field(field(node, "e1", where), where);
        Edge e2 = edge_field(field(node, "e2", where), where);
        out.graph = subdivide_and_connect(g, e1, e2).graph;
    } else if (op == "rewire") {
        Graph g = eval_graph(field(node, "graph", where), where + "/graph");
        int x = int_field(node, "x", where), y = int_field(node, "y", where);
        int variant = int_field(node, "variant", where);
        if (variant < 0 || variant > 2) bad(where, "\"variant\" must be 0, 1 or 2");
        RewireResult r = rewire_after_pair_deletion(g, x, y);
        if (!r.variants[variant])
            throw std::runtime_error("recipe: " + where + ": rewire variant " +
                                     std::to_string(variant) + " not available here");
        out.graph = *r.variants[variant];
    } else if (op == "ring") {
        out.graph = r_s(int_field(node, "s", where)).graph;
    } else if (op == "h") {
        const json& arms = field(node, "arms", where);
        if (!arms.is_array() || arms.size() != 4) bad(where, "\"arms\" must be 4 entries");
        std::array<Attachment, 4> a;
        for (int i = 0; i < 4; ++i) {
            std::string sub = where + "/arms/" + std::to_string(i);
            a[i].gadget = eval_graph(field(arms[i], "graph", sub), sub + "/graph");
            a[i].attach = int_field(arms[i], "attach", sub);
        }
        out.graph = h_construction(a).graph;
    } else if (op == "f_base") {
        const json& name = field(node, "name", where);
        if (!name.is_string()) bad(where, "\"name\" must be a string");
        std::string s = name.get<std::string>();
        if (s == "y")
            out.cert = f_base_y();
        else if (s == "z")
            out.cert = f_base_z();
        else
            bad(where, "f_base name must be \"y\" or \"z\"");
        out.graph = out.cert->graph;
    } else if (op == "f_compose") {
        FFamilyCert a = eval_cert(field(node, "a", where), where + "/a");
        FFamilyCert b = eval_cert(field(node, "b", where), where + "/b");
        std::array<int, 3> tri;
        if (auto it = node.find("triangle"); it != node.end()) {
            if (!it->is_array() || it->size() != 3) bad(where, "\"triangle\" must be 3 vertices");
            for (int i = 0; i < 3; ++i) tri[i] = (*it)[i].get<int>();
        } else {
            // default: first triangle of a that supports the substitution
            bool found = false;
            for (const auto& t : find_triangles(a.graph)) {
                try {
                    t_cycle_and_cut(a.graph, t);
                } catch (const std::runtime_error&) {
                    continue;
                }
                tri = t;
                found = true;
                break;
            }
            if (!found)
                throw std::runtime_error("recipe: " + where + ": no usable triangle in \"a\"");
        }
        out.cert = f_compose(a, tri, b);
        out.graph = out.cert->graph;
    } else if (op == "f_op") {
        const json& kind = field(node, "kind", where);
        if (!kind.is_string()) bad(where, "\"kind\" must be a string");
        std::string k = kind.get<std::string>();
        FOp which;
        if (k == "dot")
            which = FOp::kDot;
        else if (k == "bar")
            which = FOp::kBar;
        else if (k == "ddot")
            which = FOp::kDdot;
        else
            bad(where, "f_op kind must be dot, bar or ddot");
        FFamilyCert c = eval_cert(field(node, "cert", where), where + "/cert");
        out.graph = f_operator(c, which).graph;
    } else {
        bad(where, "unknown op \"" + op + "\"");
    }
    return out;
}

}  // namespace

RecipeResult build_from_recipe(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("recipe: invalid JSON: ") + e.what());
    }
    return eval_node(root, "root");
}

std::string recipe_summary(const RecipeResult& r) {
    nlohmann::ordered_json j;
    j["graph6"] = graph6_encode(r.graph);
    j["n"] = r.graph.n();
    j["m"] = static_cast<int>(r.graph.edges().size());
    j["cubic"] = r.graph.is_cubic();
    if (r.cert) {
        j["leaves"] = std::vector<int>(r.cert->leaves.begin(), r.cert->leaves.end());
    }
    return j.dump();
}

}  // namespace p3pack
