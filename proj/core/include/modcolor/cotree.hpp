#pragma once

#include <array>
#include <cstddef>
#include <variant>
#include <vector>

#include "modcolor/coloring.hpp"
#include "modcolor/graph.hpp"

namespace modcolor {

inline constexpr int kUnionLabel = 0;
inline constexpr int kJoinLabel = 1;

// Rooted cotree. Leaves carry a vertex id; inner nodes carry the union (0)
// or join (1) label and at least two children. Binary cotrees are the
// special case where every inner node has exactly two children.
struct Cotree {
    int label = kUnionLabel;  // inner nodes only
    int vertex = -1;          // leaves only
    std::vector<Cotree> children;

    bool is_leaf() const { return children.empty(); }
};

Cotree cotree_leaf(int vertex);
Cotree cotree_node(int label, std::vector<Cotree> children);

// Sorted vertex ids at the leaves of t.
std::vector<int> cotree_leaves(const Cotree& t);

bool is_binary(const Cotree& t);

// True iff t generates exactly g (leaf set 0..n-1, unions and joins match).
bool is_cotree_of(const Graph& g, const Cotree& t);

// Cograph test via the modular decomposition: true iff the MD tree has no
// prime node. On failure the overload reports four vertices inducing a P4,
// in path order.
bool is_cograph(const Graph& g);
bool is_cograph(const Graph& g, std::array<int, 4>* p4_witness);

// The unique cotree with alternating labels; coincides with the MD tree,
// reading series nodes as joins and parallel nodes as unions. Requires a
// cograph.
Cotree discriminating_cotree(const Graph& g);

struct LeftComb {};
struct BalancedSplit {};
// Orders union children by ascending palette size and builds the caterpillar
// ((c1, c2), c3), ...; join children are combined left to right.
struct ColorSorted {
    const Coloring* sigma;
};
using RefinePolicy = std::variant<LeftComb, BalancedSplit, ColorSorted>;

// Replaces every node with more than two children by a binary tree of
// equally labeled nodes.
Cotree binary_refine(const Cotree& t, const RefinePolicy& policy);

// All binary refinements of the discriminating cotree of g, which is exactly
// the set of binary cotrees of g up to reordering of children. A node with k
// children expands into (2k-3)!! shapes, so `limit` caps the result size.
std::vector<Cotree> enumerate_binary_cotrees(const Graph& g, std::size_t limit);

// The cograph generated by the tree. Leaves must be labeled bijectively with
// 0..n-1.
Graph cograph_from_cotree(const Cotree& t);

// Contracts equal-label parent/child pairs, yielding the discriminating
// cotree of the generated graph.
Cotree contract_cotree(const Cotree& t);

// Children sorted recursively by smallest leaf; equal trees get equal forms.
Cotree canonical_cotree(const Cotree& t);

}  // namespace modcolor
