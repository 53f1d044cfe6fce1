#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace modcolor {

// Undirected simple graph on vertex ids 0..n-1. Adjacency lists are kept
// sorted, so every traversal in the library is deterministic. Instances are
// immutable once built and safe to share across threads.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adjacency_(n < 0 ? 0 : n) {}

    // Builds a graph from an edge list. Duplicate edges collapse silently;
    // self-loops and out-of-range endpoints are rejected.
    static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

    // Takes ownership of prebuilt neighbor lists, sorting and deduplicating
    // them. The lists must be symmetric and free of self-loops.
    static Graph from_adjacency(std::vector<std::vector<int>> adjacency);

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    std::size_t edge_count() const { return edge_count_; }

    const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
    int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<int>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);

// Edge complement on the same vertex set.
Graph complement(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    // local vertex id -> id in the source graph, ascending
    std::vector<int> original_id;
};

// Subgraph induced by `vertices` (nonempty, duplicate-free, in range).
// Local ids follow ascending original ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// Maximal connected vertex sets, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Connected components of the complement graph, computed directly from g
// without materializing the complement.
std::vector<std::vector<int>> co_components(const Graph& g);

}  // namespace modcolor
