#include <doctest.h>

#include <algorithm>
#include <set>

#include "modcolor/mdtree.hpp"
#include "modcolor/oracles.hpp"
#include "test_util.hpp"

using namespace modcolor;
using namespace testutil;

namespace {

void collect(const MDNode& node, std::vector<const MDNode*>& out) {
    out.push_back(&node);
    for (const MDNode& child : node.children) collect(child, out);
}

std::vector<const MDNode*> all_nodes(const MDTree& tree) {
    std::vector<const MDNode*> nodes;
    collect(tree.root, nodes);
    return nodes;
}

}  // namespace

TEST_CASE("module predicate") {
    Graph p4 = path_graph(4);
    CHECK(!is_module(p4, std::vector<int>{1, 2}));  // vertex 0 sees 1 but not 2
    CHECK(is_module(p4, std::vector<int>{0, 1, 2, 3}));
    CHECK(is_module(k2_two_singletons(), std::vector<int>{2, 3}));
    CHECK_THROWS_AS(is_module(p4, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("maximal modular partition") {
    auto parallel = maximal_modular_partition(k2_two_singletons());
    CHECK(parallel.kind == ModuleKind::Parallel);
    REQUIRE(parallel.parts.size() == 3);
    CHECK(parallel.parts[0] == std::vector<int>{0, 1});

    auto series = maximal_modular_partition(complete_graph(3));
    CHECK(series.kind == ModuleKind::Series);
    CHECK(series.parts.size() == 3);

    // only trivial modules in a 4-path, cross-checked by enumeration
    auto prime = maximal_modular_partition(path_graph(4));
    CHECK(prime.kind == ModuleKind::Prime);
    CHECK(prime.parts.size() == 4);
    auto strong = brute_force_strong_modules(path_graph(4));
    CHECK(strong.size() == 5);  // four singletons and the whole vertex set

    CHECK_THROWS_AS(maximal_modular_partition(empty_graph(1)), std::invalid_argument);
}

TEST_CASE("decomposition of a union of cliques") {
    MDTree tree = modular_decomposition(k4_k2_k2());
    CHECK(tree.root.kind == ModuleKind::Parallel);
    REQUIRE(tree.root.children.size() == 3);
    for (const MDNode& child : tree.root.children) {
        CHECK(child.kind == ModuleKind::Series);
        for (const MDNode& leaf : child.children) CHECK(leaf.is_leaf());
    }
    CHECK(tree.root.children[0].children.size() == 4);
    CHECK(tree.root.children[1].children.size() == 2);
    CHECK(tree.root.children[2].children.size() == 2);
}

TEST_CASE("single vertex decomposes to a leaf") {
    MDTree tree = modular_decomposition(empty_graph(1));
    CHECK(tree.root.is_leaf());
    CHECK(tree.root.vertex == 0);
    CHECK(strong_modules(empty_graph(1)) == std::vector<std::vector<int>>{{0}});
}

TEST_CASE("strong modules match enumeration on fixed instances") {
    CHECK(strong_modules(path_graph(4)) == brute_force_strong_modules(path_graph(4)));
    CHECK(strong_modules(k3_union_p3()) == brute_force_strong_modules(k3_union_p3()));
    auto modules = strong_modules(k3_union_p3());
    CHECK(std::find(modules.begin(), modules.end(), std::vector<int>{0, 1, 2}) !=
          modules.end());
    CHECK(std::find(modules.begin(), modules.end(), std::vector<int>{3, 4, 5}) !=
          modules.end());
}

TEST_CASE("tree invariants on random graphs") {
    std::mt19937_64 rng(2024);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 8));
        Graph g = random_graph(rng, n, 0.2 + 0.1 * (round % 6));
        MDTree tree = modular_decomposition(g);

        CHECK(strong_modules(g) == brute_force_strong_modules(g));

        for (const MDNode* node : all_nodes(tree)) {
            CHECK(is_module(g, node->module));
            if (node->is_leaf()) {
                CHECK(node->module.size() == 1);
                continue;
            }
            // children partition the module, ordered by smallest vertex
            std::vector<int> merged;
            for (const MDNode& child : node->children)
                merged.insert(merged.end(), child.module.begin(), child.module.end());
            std::sort(merged.begin(), merged.end());
            CHECK(merged == node->module);
            for (std::size_t i = 0; i + 1 < node->children.size(); ++i)
                CHECK(node->children[i].module.front() <
                      node->children[i + 1].module.front());

            auto sub = induced_subgraph(g, node->module);
            const bool disconnected = connected_components(sub.graph).size() > 1;
            const bool co_disconnected = co_components(sub.graph).size() > 1;
            CHECK((node->kind == ModuleKind::Parallel) == disconnected);
            CHECK((node->kind == ModuleKind::Series) == (!disconnected && co_disconnected));
            if (node->kind == ModuleKind::Prime) {
                CHECK(node->children.size() >= 4);
                CHECK(!disconnected);
                CHECK(!co_disconnected);
            }
            if (node->kind == ModuleKind::Parallel)
                for (const MDNode& child : node->children)
                    CHECK(child.kind != ModuleKind::Parallel);
            if (node->kind == ModuleKind::Series)
                for (const MDNode& child : node->children)
                    CHECK(child.kind != ModuleKind::Series);
        }

        // node modules are pairwise nested or disjoint
        auto modules = strong_modules(g);
        for (const auto& a : modules) {
            for (const auto& b : modules) {
                std::vector<int> meet;
                std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                      std::back_inserter(meet));
                CHECK((meet.empty() || meet == a || meet == b));
            }
        }
    }
}

TEST_CASE("decomposition is deterministic") {
    auto same_node = [](auto&& self, const MDNode& a, const MDNode& b) -> bool {
        if (a.kind != b.kind || a.vertex != b.vertex || a.module != b.module ||
            a.children.size() != b.children.size())
            return false;
        for (std::size_t i = 0; i < a.children.size(); ++i)
            if (!self(self, a.children[i], b.children[i])) return false;
        return true;
    };
    std::mt19937_64 rng(404);
    for (int round = 0; round < 40; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 9));
        Graph g = random_graph(rng, n, 0.4);
        MDTree first = modular_decomposition(g);
        MDTree second = modular_decomposition(g);
        CHECK(same_node(same_node, first.root, second.root));
    }
}

TEST_CASE("quotient graph") {
    // contracting the components of a union of cliques gives an empty graph
    Graph g = k4_k2_k2();
    std::vector<std::vector<int>> comps = connected_components(g);
    CHECK(quotient_graph(g, comps) == empty_graph(3));

    // contracting the two sides of a complete bipartite graph gives an edge
    Graph c4 = cycle_graph(4);
    std::vector<std::vector<int>> sides{{0, 2}, {1, 3}};
    CHECK(quotient_graph(c4, sides) == complete_graph(2));

    std::vector<std::vector<int>> not_modules{{0, 1}, {2, 3}};
    CHECK_THROWS_AS(quotient_graph(path_graph(4), not_modules), std::invalid_argument);

    std::vector<std::vector<int>> not_cover{{0, 2}};
    CHECK_THROWS_AS(quotient_graph(c4, not_cover), std::invalid_argument);
}
