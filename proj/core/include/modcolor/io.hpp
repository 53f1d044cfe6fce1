#pragma once

#include <iosfwd>
#include <string>

#include "modcolor/coloring.hpp"
#include "modcolor/cotree.hpp"
#include "modcolor/graph.hpp"
#include "modcolor/mdtree.hpp"
#include "modcolor/oracles.hpp"
#include "modcolor/p4sparse.hpp"

namespace modcolor {

// Edge-list text format: first line "n m", then m lines "u v" (0-based).
// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Coloring text format: n lines "vertex color", one per vertex.
Coloring read_coloring(std::istream& in, int expected_n);
void write_coloring(std::ostream& out, const Coloring& sigma);

// MD tree as JSON nodes {kind, vertices, children} and as DOT.
std::string mdtree_to_json(const MDTree& tree);
std::string mdtree_to_dot(const MDTree& tree);

// Cotree JSON: {label: 0|1|vertex, children: [...]}; leaves have no
// children, so a leaf labeled 0 or 1 stays unambiguous.
std::string cotree_to_json(const Cotree& t);
Cotree cotree_from_json(const std::string& text);

// Newick-style rendering, label after the closing parenthesis.
std::string cotree_to_newick(const Cotree& t);

// {flavor, K, S, R, matching: [[k, s], ...]}
std::string spider_to_json(const SpiderDecomposition& sd);

GeneratorConfig generator_config_from_json(const std::string& text);
OracleCaps oracle_caps_from_json(const std::string& text);

}  // namespace modcolor
