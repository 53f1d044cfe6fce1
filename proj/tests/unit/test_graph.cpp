#include <doctest.h>

#include <algorithm>

#include "modcolor/coloring.hpp"
#include "modcolor/graph.hpp"
#include "test_util.hpp"

using namespace modcolor;
using namespace testutil;

TEST_CASE("edge list construction") {
    Graph p4 = graph_from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    CHECK(p4.has_edge(1, 0));
    CHECK(!p4.has_edge(0, 2));

    Graph k1 = graph_from_edges(1, {});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.edge_count() == 0);

    // duplicate edges collapse
    Graph dup = graph_from_edges(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 1}});
    CHECK(dup.edge_count() == 1);
    CHECK(dup == k2_two_singletons());

    CHECK_THROWS_AS(graph_from_edges(3, std::vector<std::pair<int, int>>{{0, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(graph_from_edges(3, std::vector<std::pair<int, int>>{{1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == empty_graph(3));

    // the 4-path is self-complementary, on the order 1,3,0,2
    Graph co_p4 = complement(path_graph(4));
    CHECK(co_p4.edge_count() == 3);
    CHECK(co_p4.has_edge(1, 3));
    CHECK(co_p4.has_edge(3, 0));
    CHECK(co_p4.has_edge(0, 2));

    std::mt19937_64 rng(42);
    for (int round = 0; round < 50; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 8));
        Graph g = random_graph(rng, n, 0.4);
        CHECK(complement(complement(g)) == g);
    }
}

TEST_CASE("induced subgraph") {
    Graph p4 = path_graph(4);
    auto sub = induced_subgraph(p4, std::vector<int>{0, 1, 2});
    CHECK(sub.graph == path_graph(3));
    CHECK(sub.original_id == std::vector<int>{0, 1, 2});

    auto single = induced_subgraph(p4, std::vector<int>{2});
    CHECK(single.graph == empty_graph(1));

    auto triangle = induced_subgraph(k3_union_p3(), std::vector<int>{0, 1, 2});
    CHECK(triangle.graph == complete_graph(3));

    CHECK_THROWS_AS(induced_subgraph(p4, std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("connected components") {
    auto comps = connected_components(k2_two_singletons());
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3});

    CHECK(connected_components(cycle_graph(5)).size() == 1);
    CHECK(connected_components(empty_graph(3)).size() == 3);
}

TEST_CASE("co-components match components of the complement") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 9));
        Graph g = random_graph(rng, n, 0.5);
        CHECK(co_components(g) == connected_components(complement(g)));
    }
}

TEST_CASE("proper coloring predicate") {
    Graph k2 = complete_graph(2);
    CHECK(is_proper_coloring(k2, Coloring({1, 2})));
    CHECK(!is_proper_coloring(k2, Coloring({1, 1})));
    CHECK(is_proper_coloring(path_graph(4), Coloring({1, 2, 1, 2})));

    std::pair<int, int> bad;
    CHECK(!is_proper_coloring(k2, Coloring({3, 3}), &bad));
    CHECK(bad == std::pair<int, int>{0, 1});
}

TEST_CASE("properness decomposes over components") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        Graph g = random_graph(rng, n, 0.3);
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng_below(rng, 3));
        Coloring sigma(colors);
        bool per_component = true;
        for (const auto& comp : connected_components(g)) {
            auto sub = induced_subgraph(g, comp);
            std::vector<int> local;
            for (int v : comp) local.push_back(sigma.at(v));
            per_component = per_component && is_proper_coloring(sub.graph, Coloring(local));
        }
        CHECK(per_component == is_proper_coloring(g, sigma));
    }
}

TEST_CASE("canonicalize coloring") {
    CHECK(canonicalize_coloring(Coloring({5, 5, 9})) == Coloring({1, 1, 2}));
    CHECK(canonicalize_coloring(Coloring({1, 1, 2})) == Coloring({1, 1, 2}));

    std::mt19937_64 rng(3);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 8));
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng_below(rng, 10));
        Coloring sigma(colors);
        Coloring canon = canonicalize_coloring(sigma);
        CHECK(canonicalize_coloring(canon) == canon);
        // the color-class partition is preserved
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                CHECK((sigma.at(u) == sigma.at(v)) == (canon.at(u) == canon.at(v)));
        // so is the proper-coloring verdict
        Graph g = random_graph(rng, n, 0.5);
        CHECK(is_proper_coloring(g, sigma) == is_proper_coloring(g, canon));
    }
}
