#include "modcolor/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace modcolor {

namespace {

using nlohmann::json;

// Next content line, skipping blanks and '#' comments.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        return true;
    }
    return false;
}

const char* kind_name(ModuleKind kind) {
    switch (kind) {
        case ModuleKind::Leaf: return "leaf";
        case ModuleKind::Parallel: return "parallel";
        case ModuleKind::Series: return "series";
        case ModuleKind::Prime: return "prime";
    }
    return "?";
}

json mdnode_to_json(const MDNode& node) {
    json j;
    j["kind"] = kind_name(node.kind);
    j["vertices"] = node.module;
    j["children"] = json::array();
    for (const MDNode& child : node.children)
        j["children"].push_back(mdnode_to_json(child));
    return j;
}

void mdnode_to_dot(const MDNode& node, int& counter, int parent, std::string& out) {
    const int id = counter++;
    std::string label;
    if (node.is_leaf()) {
        label = std::to_string(node.vertex);
    } else {
        label = kind_name(node.kind);
        label += " {";
        for (std::size_t i = 0; i < node.module.size(); ++i) {
            if (i) label += ",";
            label += std::to_string(node.module[i]);
        }
        label += "}";
    }
    out += "  n" + std::to_string(id) + " [label=\"" + label + "\"];\n";
    if (parent >= 0)
        out += "  n" + std::to_string(parent) + " -> n" + std::to_string(id) + ";\n";
    for (const MDNode& child : node.children) mdnode_to_dot(child, counter, id, out);
}

json cotree_to_json_impl(const Cotree& t) {
    json j;
    if (t.is_leaf()) {
        j["label"] = t.vertex;
        j["children"] = json::array();
        return j;
    }
    j["label"] = t.label;
    j["children"] = json::array();
    for (const Cotree& child : t.children)
        j["children"].push_back(cotree_to_json_impl(child));
    return j;
}

Cotree cotree_from_json_impl(const json& j) {
    if (!j.contains("label"))
        throw std::invalid_argument("cotree node without label");
    const int label = j.at("label").get<int>();
    if (!j.contains("children") || j.at("children").empty()) return cotree_leaf(label);
    std::vector<Cotree> children;
    for (const json& child : j.at("children"))
        children.push_back(cotree_from_json_impl(child));
    if (label != kUnionLabel && label != kJoinLabel)
        throw std::invalid_argument("inner cotree label must be 0 or 1");
    return cotree_node(label, std::move(children));
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    if (!next_line(in, line))
        throw std::invalid_argument("edge list: missing header line");
    std::istringstream header(line);
    long long n = 0, m = 0;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw std::invalid_argument("edge list: header must be 'n m'");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, got " + std::to_string(i));
        std::istringstream row(line);
        long long u = 0, v = 0;
        if (!(row >> u >> v))
            throw std::invalid_argument("edge list: malformed edge line '" + line + "'");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Coloring read_coloring(std::istream& in, int expected_n) {
    std::vector<int> colors(expected_n, 0);
    std::vector<char> seen(expected_n, 0);
    std::string line;
    for (int i = 0; i < expected_n; ++i) {
        if (!next_line(in, line))
            throw std::invalid_argument("coloring: expected " +
                                        std::to_string(expected_n) + " lines");
        std::istringstream row(line);
        long long v = 0, c = 0;
        if (!(row >> v >> c))
            throw std::invalid_argument("coloring: malformed line '" + line + "'");
        if (v < 0 || v >= expected_n)
            throw std::invalid_argument("coloring: vertex out of range");
        if (seen[v]) throw std::invalid_argument("coloring: duplicate vertex");
        if (c <= 0) throw std::invalid_argument("coloring: colors must be positive");
        seen[static_cast<int>(v)] = 1;
        colors[static_cast<int>(v)] = static_cast<int>(c);
    }
    return Coloring(std::move(colors));
}

void write_coloring(std::ostream& out, const Coloring& sigma) {
    for (int v = 0; v < sigma.size(); ++v) out << v << ' ' << sigma.at(v) << '\n';
}

std::string mdtree_to_json(const MDTree& tree) {
    return mdnode_to_json(tree.root).dump(2);
}

std::string mdtree_to_dot(const MDTree& tree) {
    std::string out = "digraph mdtree {\n  node [shape=box];\n";
    int counter = 0;
    mdnode_to_dot(tree.root, counter, -1, out);
    out += "}\n";
    return out;
}

std::string cotree_to_json(const Cotree& t) { return cotree_to_json_impl(t).dump(2); }

Cotree cotree_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& error) {
        throw std::invalid_argument(std::string("cotree JSON: ") + error.what());
    }
    return cotree_from_json_impl(j);
}

std::string cotree_to_newick(const Cotree& t) {
    if (t.is_leaf()) return std::to_string(t.vertex);
    std::string out = "(";
    for (std::size_t i = 0; i < t.children.size(); ++i) {
        if (i) out += ",";
        out += cotree_to_newick(t.children[i]);
    }
    out += ")";
    out += std::to_string(t.label);
    return out;
}

std::string spider_to_json(const SpiderDecomposition& sd) {
    json j;
    j["flavor"] = sd.flavor == SpiderFlavor::Thin ? "thin" : "thick";
    j["K"] = sd.body;
    j["S"] = sd.legs;
    j["R"] = sd.head;
    j["matching"] = json::array();
    for (auto [k, s] : sd.matching) j["matching"].push_back(json::array({k, s}));
    return j.dump(2);
}

GeneratorConfig generator_config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& error) {
        throw std::invalid_argument(std::string("generator config JSON: ") + error.what());
    }
    GeneratorConfig config;
    const std::string flavor = j.value("flavor", "erdos_renyi");
    if (flavor == "cograph")
        config.flavor = GraphFlavor::Cograph;
    else if (flavor == "p4sparse")
        config.flavor = GraphFlavor::P4Sparse;
    else if (flavor == "erdos_renyi" || flavor == "er")
        config.flavor = GraphFlavor::ErdosRenyi;
    else if (flavor == "spider")
        config.flavor = GraphFlavor::Spider;
    else
        throw std::invalid_argument("unknown generator flavor '" + flavor + "'");
    config.n = j.value("n", config.n);
    config.seed = j.value("seed", config.seed);
    config.p_join = j.value("p_join", config.p_join);
    config.spider_rate = j.value("spider_rate", config.spider_rate);
    config.max_head = j.value("max_head", config.max_head);
    config.edge_p = j.value("p", config.edge_p);
    config.spider_k = j.value("k", config.spider_k);
    config.head_n = j.value("head_n", config.head_n);
    if (j.contains("spider_flavor"))
        config.spider_flavor = j.at("spider_flavor").get<std::string>() == "thick"
                                   ? SpiderFlavor::Thick
                                   : SpiderFlavor::Thin;
    return config;
}

OracleCaps oracle_caps_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& error) {
        throw std::invalid_argument(std::string("oracle caps JSON: ") + error.what());
    }
    OracleCaps caps;
    caps.chi_max_n = j.value("chi_max_n", caps.chi_max_n);
    caps.grundy_max_n = j.value("grundy_max_n", caps.grundy_max_n);
    caps.strong_modules_max_n = j.value("strong_modules_max_n", caps.strong_modules_max_n);
    caps.coloring_enumeration_max =
        j.value("coloring_enumeration_max", caps.coloring_enumeration_max);
    return caps;
}

}  // namespace modcolor
