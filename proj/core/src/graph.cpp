#include "modcolor/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace modcolor {

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<std::vector<int>> adjacency(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        adjacency[u].push_back(v);
        adjacency[v].push_back(u);
    }
    return from_adjacency(std::move(adjacency));
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adjacency) {
    Graph g;
    const int n = static_cast<int>(adjacency.size());
    std::size_t half_edges = 0;
    for (int v = 0; v < n; ++v) {
        auto& nbrs = adjacency[v];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        if (!nbrs.empty() && (nbrs.front() < 0 || nbrs.back() >= n))
            throw std::invalid_argument("neighbor id out of range");
        if (std::binary_search(nbrs.begin(), nbrs.end(), v))
            throw std::invalid_argument("self-loop on vertex " + std::to_string(v));
        half_edges += nbrs.size();
    }
    g.adjacency_ = std::move(adjacency);
    g.edge_count_ = half_edges / 2;
    for (int v = 0; v < n; ++v)
        for (int u : g.adjacency_[v])
            if (!g.has_edge(u, v))
                throw std::invalid_argument("adjacency is not symmetric");
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> result;
    result.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adjacency_[u])
            if (u < v) result.emplace_back(u, v);
    return result;
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
    return Graph::from_edges(n, edges);
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adjacency(n);
    for (int v = 0; v < n; ++v) {
        const auto& nbrs = g.neighbors(v);
        auto it = nbrs.begin();
        for (int u = 0; u < n; ++u) {
            while (it != nbrs.end() && *it < u) ++it;
            if (u == v || (it != nbrs.end() && *it == u)) continue;
            adjacency[v].push_back(u);
        }
    }
    Graph result;
    result = Graph::from_adjacency(std::move(adjacency));
    return result;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty())
        throw std::invalid_argument("induced subgraph of an empty vertex set");
    const int n = g.vertex_count();
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    if (sorted.front() < 0 || sorted.back() >= n)
        throw std::invalid_argument("vertex id out of range");
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate vertex in induced subgraph");

    std::vector<int> local(n, -1);
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) local[sorted[i]] = i;

    std::vector<std::vector<int>> adjacency(sorted.size());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
        for (int u : g.neighbors(sorted[i]))
            if (local[u] >= 0) adjacency[i].push_back(local[u]);
        // source adjacency is sorted and the relabeling is monotone
    }

    InducedSubgraph result;
    result.graph = Graph::from_adjacency(std::move(adjacency));
    result.original_id = std::move(sorted);
    return result;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> components;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<int> component;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (int u : g.neighbors(v)) {
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;  // seeds scanned ascending, so ordered by smallest member
}

std::vector<std::vector<int>> co_components(const Graph& g) {
    const int n = g.vertex_count();
    // Doubly linked list over the not-yet-visited vertices; index n is the
    // sentinel. BFS in the complement scans this list against a mark array,
    // which keeps the total cost at O(n + m).
    std::vector<int> next(n + 1), prev(n + 1);
    for (int v = 0; v < n; ++v) {
        next[v] = v + 1;
        prev[v] = v == 0 ? n : v - 1;
    }
    next[n] = n > 0 ? 0 : n;
    prev[n] = n > 0 ? n - 1 : n;
    auto unlink = [&](int v) {
        next[prev[v]] = next[v];
        prev[next[v]] = prev[v];
    };

    std::vector<char> mark(n, 0);
    std::vector<int> queue;
    std::vector<std::vector<int>> components;
    while (next[n] != n) {
        int seed = next[n];
        unlink(seed);
        std::vector<int> component{seed};
        queue.assign(1, seed);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int u : g.neighbors(v)) mark[u] = 1;
            std::vector<int> found;
            for (int w = next[n]; w != n; w = next[w])
                if (!mark[w]) found.push_back(w);
            for (int u : g.neighbors(v)) mark[u] = 0;
            for (int w : found) {
                unlink(w);
                component.push_back(w);
                queue.push_back(w);
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

}  // namespace modcolor
