#pragma once

#include <span>
#include <vector>

#include "modcolor/graph.hpp"

namespace modcolor {

enum class ModuleKind { Leaf, Parallel, Series, Prime };

// Node of the modular decomposition tree. `module` is the sorted vertex set
// of the strong module the node represents; children are ordered by the
// smallest vertex in their module.
struct MDNode {
    ModuleKind kind = ModuleKind::Leaf;
    int vertex = -1;  // leaves only
    std::vector<int> module;
    std::vector<MDNode> children;

    bool is_leaf() const { return kind == ModuleKind::Leaf; }
};

struct MDTree {
    MDNode root;
};

// True iff every vertex outside `vertices` is adjacent to all of them or to
// none of them. `vertices` must be a nonempty subset of V.
bool is_module(const Graph& g, std::span<const int> vertices);

struct ModularPartition {
    std::vector<std::vector<int>> parts;  // each sorted, ordered by smallest member
    ModuleKind kind;                      // Parallel, Series or Prime
};

// Partition of V into the inclusion-maximal strong modules distinct from V,
// together with the kind of the root: components of a disconnected graph,
// co-components of a co-disconnected graph, or the maximal proper strong
// modules of a prime graph. Requires |V| >= 2.
ModularPartition maximal_modular_partition(const Graph& g);

MDTree modular_decomposition(const Graph& g);

// The vertex sets of all MD tree nodes, i.e. the strong modules of g.
// Sorted lexicographically.
std::vector<std::vector<int>> strong_modules(const Graph& g);

// One vertex per part, in the order given; parts adjacent iff their members
// are. Every part must be a module, and the parts must partition V.
Graph quotient_graph(const Graph& g, std::span<const std::vector<int>> partition);

}  // namespace modcolor
