#include "modcolor/mdtree.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <string>

#include "modcolor/p4sparse.hpp"

namespace modcolor {

namespace {

// Smallest module containing {x, y}: grow the set by any outside vertex that
// sees part of it but not all of it. Such a vertex must belong to every
// module containing the current set.
std::vector<int> module_closure(const Graph& g, int x, int y) {
    const int n = g.vertex_count();
    std::vector<char> in_set(n, 0);
    std::vector<int> inside_degree(n, 0);
    std::vector<int> members;
    auto add = [&](int v) {
        in_set[v] = 1;
        members.push_back(v);
        for (int u : g.neighbors(v)) ++inside_degree[u];
    };
    add(x);
    add(y);
    bool grew = true;
    while (grew && static_cast<int>(members.size()) < n) {
        grew = false;
        const int size = static_cast<int>(members.size());
        for (int z = 0; z < n; ++z) {
            if (in_set[z]) continue;
            if (inside_degree[z] > 0 && inside_degree[z] < size) {
                add(z);
                grew = true;
                break;
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

// Maximal proper strong modules of a graph that is connected and
// co-connected. The maximal proper module containing x is the union of the
// minimal modules {x, y} over all y, whenever that closure stays proper.
std::vector<std::vector<int>> prime_partition_by_closure(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    std::vector<std::vector<int>> parts;
    for (int x = 0; x < n; ++x) {
        if (part_of[x] >= 0) continue;
        std::vector<char> in_part(n, 0);
        in_part[x] = 1;
        std::vector<int> members{x};
        for (int y = 0; y < n; ++y) {
            if (y == x || in_part[y]) continue;
            std::vector<int> closure = module_closure(g, x, y);
            if (static_cast<int>(closure.size()) == n) continue;
            for (int v : closure) {
                if (!in_part[v]) {
                    in_part[v] = 1;
                    members.push_back(v);
                }
            }
        }
        std::sort(members.begin(), members.end());
        const int id = static_cast<int>(parts.size());
        for (int v : members) {
            if (part_of[v] != -1)
                throw std::logic_error("maximal proper modules must be disjoint");
            part_of[v] = id;
        }
        parts.push_back(std::move(members));
    }
    // graphs with 2 or 3 maximal modules are co-disconnected or disconnected
    if (parts.size() < 4)
        throw std::logic_error("prime module with fewer than four children");
    return parts;
}

// Partition below a prime node. Spiders are recognized first: their maximal
// modular partition is the body and leg singletons plus the head, which
// keeps the decomposition of P4-sparse graphs near-linear. Everything else
// falls back to the generic closure computation.
std::vector<std::vector<int>> prime_partition(const Graph& g) {
    if (auto spider = recognize_spider(g)) {
        std::vector<std::vector<int>> parts;
        for (int v : spider->body) parts.push_back({v});
        for (int v : spider->legs) parts.push_back({v});
        if (!spider->head.empty()) parts.push_back(spider->head);
        std::sort(parts.begin(), parts.end(),
                  [](const auto& a, const auto& b) { return a.front() < b.front(); });
        return parts;
    }
    return prime_partition_by_closure(g);
}

MDNode decompose_recursive(const Graph& g, std::vector<int> original) {
    MDNode node;
    node.module = original;
    if (g.vertex_count() == 1) {
        node.kind = ModuleKind::Leaf;
        node.vertex = original[0];
        return node;
    }

    std::vector<std::vector<int>> parts = connected_components(g);
    if (parts.size() > 1) {
        node.kind = ModuleKind::Parallel;
    } else {
        parts = co_components(g);
        if (parts.size() > 1) {
            node.kind = ModuleKind::Series;
        } else {
            node.kind = ModuleKind::Prime;
            parts = prime_partition(g);
        }
    }

    node.children.reserve(parts.size());
    for (const auto& part : parts) {
        InducedSubgraph sub = induced_subgraph(g, part);
        std::vector<int> child_original(sub.original_id.size());
        for (std::size_t i = 0; i < sub.original_id.size(); ++i)
            child_original[i] = original[sub.original_id[i]];
        node.children.push_back(decompose_recursive(sub.graph, std::move(child_original)));
    }
    // parts are ordered by smallest local id and the relabeling is monotone,
    // so children are already ordered by smallest original vertex
    return node;
}

void collect_modules(const MDNode& node, std::vector<std::vector<int>>& out) {
    out.push_back(node.module);
    for (const MDNode& child : node.children) collect_modules(child, out);
}

}  // namespace

bool is_module(const Graph& g, std::span<const int> vertices) {
    if (vertices.empty()) throw std::invalid_argument("a module must be nonempty");
    const int n = g.vertex_count();
    std::vector<char> inside(n, 0);
    for (int v : vertices) {
        if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
        inside[v] = 1;
    }
    int size = 0;
    for (int v = 0; v < n; ++v) size += inside[v];
    if (size != static_cast<int>(vertices.size()))
        throw std::invalid_argument("duplicate vertex in module candidate");

    for (int z = 0; z < n; ++z) {
        if (inside[z]) continue;
        int count = 0;
        for (int u : g.neighbors(z)) count += inside[u];
        if (count != 0 && count != size) return false;
    }
    return true;
}

ModularPartition maximal_modular_partition(const Graph& g) {
    if (g.vertex_count() < 2)
        throw std::invalid_argument("maximal modular partition needs at least two vertices");
    ModularPartition result;
    result.parts = connected_components(g);
    if (result.parts.size() > 1) {
        result.kind = ModuleKind::Parallel;
        return result;
    }
    result.parts = co_components(g);
    if (result.parts.size() > 1) {
        result.kind = ModuleKind::Series;
        return result;
    }
    result.kind = ModuleKind::Prime;
    result.parts = prime_partition(g);
    return result;
}

MDTree modular_decomposition(const Graph& g) {
    if (g.vertex_count() < 1)
        throw std::invalid_argument("modular decomposition needs at least one vertex");
    std::vector<int> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    return MDTree{decompose_recursive(g, std::move(all))};
}

std::vector<std::vector<int>> strong_modules(const Graph& g) {
    MDTree tree = modular_decomposition(g);
    std::vector<std::vector<int>> modules;
    collect_modules(tree.root, modules);
    std::sort(modules.begin(), modules.end());
    return modules;
}

Graph quotient_graph(const Graph& g, std::span<const std::vector<int>> partition) {
    const int n = g.vertex_count();
    std::vector<int> part_of(n, -1);
    for (std::size_t i = 0; i < partition.size(); ++i) {
        if (partition[i].empty())
            throw std::invalid_argument("quotient part must be nonempty");
        for (int v : partition[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("vertex id out of range");
            if (part_of[v] != -1)
                throw std::invalid_argument("quotient parts overlap on vertex " +
                                            std::to_string(v));
            part_of[v] = static_cast<int>(i);
        }
        if (!is_module(g, partition[i]))
            throw std::invalid_argument("quotient part " + std::to_string(i) +
                                        " is not a module");
    }
    for (int v = 0; v < n; ++v)
        if (part_of[v] == -1)
            throw std::invalid_argument("quotient parts do not cover the vertex set");

    // parts are modules, so one representative pair decides adjacency
    const int k = static_cast<int>(partition.size());
    std::vector<std::vector<int>> adjacency(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (g.has_edge(partition[i].front(), partition[j].front())) {
                adjacency[i].push_back(j);
                adjacency[j].push_back(i);
            }
    return Graph::from_adjacency(std::move(adjacency));
}

}  // namespace modcolor
