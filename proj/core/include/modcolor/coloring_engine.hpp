#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "modcolor/coloring.hpp"
#include "modcolor/cotree.hpp"
#include "modcolor/graph.hpp"
#include "modcolor/mdtree.hpp"

namespace modcolor {

// Counts of hierarchical colorings grow as products of factorials, so they
// are kept exact in arbitrary precision.
using BigCount = boost::multiprecision::cpp_int;

// One prime module of an MD tree, handed to a PrimeSolver. Vertex ids are
// local to `subgraph`. `children` is its maximal modular partition;
// `coloring` assigns the children pairwise disjoint palettes, each of size
// child_chi[i] and minimal on every strong module below.
struct PrimeModule {
    const Graph& subgraph;
    const std::vector<std::vector<int>>& children;
    const std::vector<int>& child_chi;
    const std::vector<int>& coloring;
};

// Returns a recoloring of the module that is proper, uses exactly
// chi(subgraph) colors all drawn from the palette of `coloring`, and is
// minimal on every strong module; or nullopt when the solver does not handle
// this module.
using PrimeSolver =
    std::function<std::optional<std::vector<int>>(const PrimeModule&)>;

// Thrown when no solver accepts a prime module; names the module.
class UnsupportedPrimeError : public std::runtime_error {
public:
    explicit UnsupportedPrimeError(std::vector<int> module);
    const std::vector<int>& module() const { return module_; }

private:
    std::vector<int> module_;
};

// Tries the given solvers in order; first answer wins.
PrimeSolver chain_solvers(std::vector<PrimeSolver> solvers);

// -------------------------------------------------------------------------
// Greedy colorings

// Colors the vertices in the given order, each with the smallest color
// absent from its already colored neighbors. `order` must be a permutation
// of the vertex set.
Coloring greedy_coloring(const Graph& g, std::span<const int> order);

// True iff some vertex order reproduces sigma. Uses the local
// characterization: every vertex of color c has neighbors of all colors
// below c. Requires sigma proper.
bool is_greedy_coloring(const Graph& g, const Coloring& sigma);

// -------------------------------------------------------------------------
// Chromatic number over the MD tree

// chi(g), computed bottom-up: max over parallel children, sum over series
// children, and the solver on prime modules with children precolored.
int chromatic_number(const Graph& g, const PrimeSolver& solver);

// chi(G[X]) for every strong module X, in MD preorder.
struct ModuleChi {
    std::vector<int> module;
    int chi;
};
std::vector<ModuleChi> strong_module_chromatic_numbers(const Graph& g,
                                                       const PrimeSolver& solver);

// -------------------------------------------------------------------------
// Colorings relative to a fixed binary cotree

// Validated, flattened view of a binary cotree of a fixed graph. Repeated
// checks against the same tree should construct this once: construction
// costs a full validation, every later check is linear.
class BoundCotree {
public:
    struct Node {
        int label = -1;   // kUnionLabel / kJoinLabel; -1 for leaves
        int vertex = -1;  // leaves only
        int left = -1;
        int right = -1;
        std::vector<int> leaves;  // sorted
        int chi = 1;
        const Cotree* source = nullptr;
    };

    // Throws std::domain_error unless `tree` is a binary cotree of g.
    BoundCotree(const Graph& g, const Cotree& tree);

    const Graph& graph() const { return *graph_; }
    // Nodes in BFS order; index 0 is the root, parents precede children.
    const std::vector<Node>& nodes() const { return nodes_; }

private:
    const Graph* graph_;
    std::vector<Node> nodes_;
};

// Hierarchical-coloring check against a binary cotree: every join node has
// color-disjoint children, every union node has nested children color sets.
// On failure reports the highest violating node.
bool is_hierarchical_wrt_cotree(const Graph& g, const Coloring& sigma,
                                const Cotree& tree);
bool is_hierarchical_wrt_cotree(const Graph& g, const Coloring& sigma,
                                const Cotree& tree, const Cotree** violating);
bool is_hierarchical_wrt_cotree(const BoundCotree& tree, const Coloring& sigma,
                                const Cotree** violating = nullptr);

// True iff the color count equals the chromatic number of the node subgraph
// at every node of the tree.
bool is_cotree_minimal(const Graph& g, const Coloring& sigma, const Cotree& tree);
bool is_cotree_minimal(const BoundCotree& tree, const Coloring& sigma);

// Builds a coloring that is minimal at every node of the binary cotree:
// bottom-up, union nodes recolor the child with fewer colors via an
// injection into the other child's color set. The seeded overload picks the
// injections at random; the default is the canonical order-preserving one.
Coloring cotree_minimal_coloring(const Graph& g, const Cotree& tree);
Coloring cotree_minimal_coloring(const Graph& g, const Cotree& tree,
                                 std::uint64_t seed);

// -------------------------------------------------------------------------
// Colorings relative to the modular decomposition

// True iff at every disconnected strong module some child color set of the
// maximal modular partition contains all the others. Requires sigma proper.
bool is_hierarchical(const Graph& g, const Coloring& sigma);
bool is_hierarchical(const Graph& g, const Coloring& sigma,
                     std::vector<int>* violating_module);
bool is_hierarchical(const MDTree& tree, const Coloring& sigma,
                     std::vector<int>* violating_module = nullptr);

// Stronger variant: children color sets pairwise nested.
bool is_strictly_hierarchical(const Graph& g, const Coloring& sigma);
bool is_strictly_hierarchical(const Graph& g, const Coloring& sigma,
                              std::vector<int>* violating_module);
bool is_strictly_hierarchical(const MDTree& tree, const Coloring& sigma,
                              std::vector<int>* violating_module = nullptr);

// True iff every strong module X is colored with exactly chi(G[X]) colors.
bool is_modularly_minimal(const Graph& g, const Coloring& sigma,
                          const PrimeSolver& solver);
bool is_modularly_minimal(const Graph& g, const Coloring& sigma,
                          const PrimeSolver& solver,
                          std::vector<int>* violating_module);
// Fast path against a precomputed chi table (see
// strong_module_chromatic_numbers).
bool is_modularly_minimal(const Coloring& sigma, std::span<const ModuleChi> table,
                          std::vector<int>* violating_module = nullptr);

// Builds a modularly-minimal coloring bottom-up over the MD tree: parallel
// nodes inject all smaller children color sets into the child with the most
// colors, series nodes keep disjoint palettes, prime modules go to the
// solver constrained to the union of the children palettes.
Coloring modularly_minimal_coloring(const Graph& g, const PrimeSolver& solver);
Coloring modularly_minimal_coloring(const Graph& g, const PrimeSolver& solver,
                                    std::uint64_t seed);

// Turns a modularly-minimal coloring into one that is also strictly
// hierarchical by renaming each strong module onto a prefix of its parent's
// palette. The solver is used to verify the precondition.
Coloring strictify(const Graph& g, const Coloring& sigma, const PrimeSolver& solver);

// -------------------------------------------------------------------------
// Counting hierarchical colorings

// Number of injections of a set of size s1 into a set of size s2.
BigCount injection_count(int s1, int s2);

// Number of hierarchical colorings of g w.r.t. the binary cotree, counted up
// to bijective relabeling of the global color set: 1 at leaves, the product
// of the children counts at join nodes, and an extra factor of
// injection_count(s1, s2) at union nodes, where s1 <= s2 are the children
// chromatic numbers. The labeled count with colors {1..chi} is this value
// times chi!.
BigCount count_hierarchical_colorings(const Graph& g, const Cotree& tree);
BigCount count_hierarchical_colorings(const BoundCotree& tree);

}  // namespace modcolor
