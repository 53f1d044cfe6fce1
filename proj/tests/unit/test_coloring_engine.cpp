#include <doctest.h>

#include <algorithm>

#include "modcolor/coloring_engine.hpp"
#include "modcolor/oracles.hpp"
#include "test_util.hpp"

using namespace modcolor;
using namespace testutil;

namespace {

Cotree pair_node(int label, Cotree left, Cotree right) {
    std::vector<Cotree> children;
    children.push_back(std::move(left));
    children.push_back(std::move(right));
    return cotree_node(label, std::move(children));
}

// ((0 join 1) union 2) union 3
Cotree comb_tree_0123() {
    return pair_node(kUnionLabel,
                     pair_node(kUnionLabel,
                               pair_node(kJoinLabel, cotree_leaf(0), cotree_leaf(1)),
                               cotree_leaf(2)),
                     cotree_leaf(3));
}

// (0 join 1) union (2 union 3)
Cotree split_tree_0123() {
    return pair_node(kUnionLabel,
                     pair_node(kJoinLabel, cotree_leaf(0), cotree_leaf(1)),
                     pair_node(kUnionLabel, cotree_leaf(2), cotree_leaf(3)));
}

Graph random_cograph(std::uint64_t seed, int n, double p_join = 0.5) {
    GeneratorConfig config;
    config.flavor = GraphFlavor::Cograph;
    config.n = n;
    config.seed = seed;
    config.p_join = p_join;
    return generate(config);
}

int min_leaf_of(const Cotree& t) { return cotree_leaves(t).front(); }

}  // namespace

TEST_CASE("greedy coloring by order") {
    Graph g = k2_two_singletons();
    CHECK(greedy_coloring(g, std::vector<int>{0, 1, 2, 3}) == Coloring({1, 2, 1, 1}));
    CHECK(greedy_coloring(empty_graph(1), std::vector<int>{0}) == Coloring({1}));
    CHECK_THROWS_AS(greedy_coloring(g, std::vector<int>{0, 1, 2, 2}),
                    std::invalid_argument);

    std::mt19937_64 rng(5);
    for (int round = 0; round < 100; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 9));
        Graph h = random_graph(rng, n, 0.4);
        Coloring sigma = greedy_coloring(h, random_order(rng, n));
        CHECK(is_proper_coloring(h, sigma));
        CHECK(is_greedy_coloring(h, sigma));
    }
}

TEST_CASE("greedy verdicts on the two colorings of the running example") {
    Graph g = k2_two_singletons();
    CHECK(is_greedy_coloring(g, Coloring({1, 2, 1, 1})));
    // different colors on the two singleton components cannot arise greedily
    CHECK(!is_greedy_coloring(g, Coloring({1, 2, 1, 2})));
    CHECK_THROWS_AS(is_greedy_coloring(g, Coloring({1, 1, 1, 1})), std::domain_error);
}

TEST_CASE("local greedy characterization agrees with the order search") {
    std::mt19937_64 rng(17);
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 6));
        Graph g = random_graph(rng, n, 0.45);
        const int k = 1 + static_cast<int>(rng_below(rng, n));
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng_below(rng, k));
        Coloring sigma(colors);
        if (!is_proper_coloring(g, sigma)) continue;
        CHECK(is_greedy_coloring(g, sigma) == greedy_reachable_bruteforce(g, sigma));
    }
}

TEST_CASE("chromatic number over the decomposition") {
    CHECK(chromatic_number(k3_union_p3(), bruteforce_prime_solver()) == 3);
    CHECK(chromatic_number(k4_k2_k2(), bruteforce_prime_solver()) == 4);
    CHECK(chromatic_number(cycle_graph(5), bruteforce_prime_solver()) == 3);

    std::mt19937_64 rng(23);
    for (int round = 0; round < 120; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 7));
        Graph g = random_graph(rng, n, 0.45);
        CHECK(chromatic_number(g, bruteforce_prime_solver()) == chi_bruteforce(g));
    }

    // a refusing solver surfaces the prime module
    CHECK_THROWS_AS(chromatic_number(cycle_graph(5), chain_solvers({})),
                    UnsupportedPrimeError);
}

TEST_CASE("hierarchy check against a fixed binary cotree") {
    // edge 0-1 plus isolated 2, 3, colored (1,2,2,1)
    Graph g = k2_two_singletons();
    Coloring sigma({1, 2, 2, 1});

    Cotree good = pair_node(kUnionLabel,
                            pair_node(kUnionLabel,
                                      pair_node(kJoinLabel, cotree_leaf(0), cotree_leaf(1)),
                                      cotree_leaf(3)),
                            cotree_leaf(2));
    CHECK(is_hierarchical_wrt_cotree(g, sigma, good));

    const Cotree bad = split_tree_0123();  // witness pointers point into it
    const Cotree* violating = nullptr;
    CHECK(!is_hierarchical_wrt_cotree(g, sigma, bad, &violating));
    REQUIRE(violating != nullptr);
    CHECK(violating->label == kUnionLabel);
    CHECK(cotree_leaves(*violating) == std::vector<int>{2, 3});

    CHECK(is_hierarchical_wrt_cotree(empty_graph(1), Coloring({7}), cotree_leaf(0)));

    // trees of a different graph are rejected
    CHECK_THROWS_AS(is_hierarchical_wrt_cotree(path_graph(4), sigma, split_tree_0123()),
                    std::domain_error);
}

TEST_CASE("greedy colorings are hierarchical for every binary cotree") {
    std::mt19937_64 rng(31);
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 2 + static_cast<int>(seed % 6);
        Graph g = random_cograph(seed * 3 + 1, n);
        auto trees = enumerate_binary_cotrees(g, 2000);
        for (int round = 0; round < 5; ++round) {
            Coloring sigma = greedy_coloring(g, random_order(rng, n));
            for (const Cotree& tree : trees)
                CHECK(is_hierarchical_wrt_cotree(g, sigma, tree));
        }
    }
}

TEST_CASE("minimality at every cotree node") {
    Graph g = k3_union_p3();
    Cotree tree = binary_refine(discriminating_cotree(g), LeftComb{});
    // triangle on 3 colors, path on 2: minimal everywhere
    CHECK(is_cotree_minimal(g, Coloring({1, 2, 3, 1, 2, 1}), tree));
    // path on 3 colors wastes one at its component node
    CHECK(!is_cotree_minimal(g, Coloring({1, 2, 3, 1, 2, 3}), tree));
}

TEST_CASE("cotree minimal coloring construction") {
    Graph g = k2_two_singletons();
    CHECK(cotree_minimal_coloring(g, comb_tree_0123()) == Coloring({1, 2, 1, 1}));
    CHECK(cotree_minimal_coloring(empty_graph(1), cotree_leaf(0)) == Coloring({1}));

    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 1 + static_cast<int>(seed % 10);
        Graph h = random_cograph(seed * 11 + 2, n);
        for (const RefinePolicy& policy :
             {RefinePolicy{LeftComb{}}, RefinePolicy{BalancedSplit{}}}) {
            Cotree tree = binary_refine(discriminating_cotree(h), policy);
            Coloring sigma = cotree_minimal_coloring(h, tree);
            CHECK(is_proper_coloring(h, sigma));
            CHECK(is_cotree_minimal(h, sigma, tree));
            CHECK(is_hierarchical_wrt_cotree(h, sigma, tree));
            Coloring seeded = cotree_minimal_coloring(h, tree, seed);
            CHECK(is_hierarchical_wrt_cotree(h, seeded, tree));
        }
    }
}

TEST_CASE("hierarchical and strictly hierarchical verdicts") {
    Graph g = k4_k2_k2();
    // K4 on {1,2,3,4}, the two edges on {1,2} and {3,4}
    Coloring sigma({1, 2, 3, 4, 1, 2, 3, 4});
    CHECK(is_hierarchical(g, sigma));
    CHECK(!is_strictly_hierarchical(g, sigma));
    std::vector<int> module;
    CHECK(!is_strictly_hierarchical(g, sigma, &module));
    CHECK(module == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

    // nested palettes pass both
    Coloring nested({1, 2, 3, 4, 1, 2, 1, 2});
    CHECK(is_hierarchical(g, nested));
    CHECK(is_strictly_hierarchical(g, nested));

    // connected graphs have no disconnected strong module: vacuously true
    CHECK(is_hierarchical(cycle_graph(5), Coloring({1, 2, 1, 2, 3})));
    CHECK(is_strictly_hierarchical(cycle_graph(5), Coloring({1, 2, 1, 2, 3})));

    CHECK_THROWS_AS(is_hierarchical(g, Coloring({1, 1, 1, 1, 1, 1, 1, 1})),
                    std::domain_error);

    // strictly hierarchical implies hierarchical
    std::mt19937_64 rng(37);
    for (int round = 0; round < 150; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 6));
        Graph h = random_graph(rng, n, 0.4);
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng_below(rng, 4));
        Coloring candidate(colors);
        if (!is_proper_coloring(h, candidate)) continue;
        if (is_strictly_hierarchical(h, candidate)) CHECK(is_hierarchical(h, candidate));
    }
}

TEST_CASE("modularly minimal colorings are hierarchical on arbitrary graphs") {
    std::mt19937_64 rng(101);
    OracleCaps caps;
    for (int round = 0; round < 120; ++round) {
        const int n = 2 + static_cast<int>(rng_below(rng, 5));
        Graph g = random_graph(rng, n, 0.35);
        const int chi = chi_bruteforce(g);
        auto table = strong_module_chromatic_numbers(g, bruteforce_prime_solver());
        MDTree tree = modular_decomposition(g);
        for_each_proper_coloring(
            g, chi + 1, false,
            [&](const Coloring& sigma) {
                if (is_modularly_minimal(sigma, table))
                    CHECK(is_hierarchical(tree, sigma));
                return true;
            },
            caps);
    }
}

TEST_CASE("two nested palettes make hierarchical and strict coincide") {
    // parallel modules with exactly two children: one set containing the
    // other is the same as pairwise nesting
    Graph g = disjoint_union(complete_graph(3), complete_graph(2));
    for (const Coloring& sigma :
         {Coloring({1, 2, 3, 1, 2}), Coloring({1, 2, 3, 2, 3}), Coloring({1, 2, 3, 4, 5})}) {
        CHECK(is_hierarchical(g, sigma) == is_strictly_hierarchical(g, sigma));
    }
}

TEST_CASE("modular minimality verdicts") {
    Graph g = k3_union_p3();
    // a 3-coloring that keeps the path on two colors is modularly minimal
    CHECK(is_modularly_minimal(g, Coloring({1, 2, 3, 1, 2, 1}), bruteforce_prime_solver()));
    // using all three colors on the path is minimal overall but not per module
    std::vector<int> module;
    CHECK(!is_modularly_minimal(g, Coloring({1, 2, 3, 1, 2, 3}),
                                bruteforce_prime_solver(), &module));
    CHECK(module == std::vector<int>{3, 4, 5});

    // prime graphs only constrain the whole vertex set and the singletons
    CHECK(is_modularly_minimal(cycle_graph(5), Coloring({1, 2, 1, 2, 3}),
                               bruteforce_prime_solver()));
}

TEST_CASE("modularly minimal coloring construction") {
    CHECK(modularly_minimal_coloring(empty_graph(1), bruteforce_prime_solver()) ==
          Coloring({1}));

    Graph g = k4_k2_k2();
    Coloring sigma = modularly_minimal_coloring(g, bruteforce_prime_solver());
    CHECK(sigma.palette_size() == 4);
    auto k4_palette = sigma.color_set(std::vector<int>{0, 1, 2, 3});
    for (const auto& pair : {std::vector<int>{4, 5}, std::vector<int>{6, 7}}) {
        auto palette = sigma.color_set(pair);
        CHECK(palette.size() == 2);
        CHECK(std::includes(k4_palette.begin(), k4_palette.end(), palette.begin(),
                            palette.end()));
    }

    std::mt19937_64 rng(41);
    for (int round = 0; round < 80; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 7));
        Graph h = random_graph(rng, n, 0.45);
        Coloring result = modularly_minimal_coloring(h, bruteforce_prime_solver());
        CHECK(is_proper_coloring(h, result));
        CHECK(is_modularly_minimal(h, result, bruteforce_prime_solver()));
        CHECK(result.palette_size() == chi_bruteforce(h));
        Coloring seeded = modularly_minimal_coloring(h, bruteforce_prime_solver(), round);
        CHECK(is_modularly_minimal(h, seeded, bruteforce_prime_solver()));
    }
}

TEST_CASE("strictify") {
    Graph g = k4_k2_k2();
    Coloring sigma({1, 2, 3, 4, 1, 2, 3, 4});
    Coloring strict = strictify(g, sigma, bruteforce_prime_solver());
    CHECK(strict.color_set(std::vector<int>{4, 5}) ==
          strict.color_set(std::vector<int>{6, 7}));
    CHECK(is_strictly_hierarchical(g, strict));
    CHECK(is_modularly_minimal(g, strict, bruteforce_prime_solver()));

    // non-modularly-minimal inputs are rejected
    CHECK_THROWS_AS(strictify(k3_union_p3(), Coloring({1, 2, 3, 1, 2, 3}),
                              bruteforce_prime_solver()),
                    std::domain_error);

    std::mt19937_64 rng(43);
    for (int round = 0; round < 60; ++round) {
        const int n = 1 + static_cast<int>(rng_below(rng, 8));
        Graph h = random_graph(rng, n, 0.4);
        Coloring base = modularly_minimal_coloring(h, bruteforce_prime_solver(),
                                                   round * 977 + 5);
        Coloring strictified = strictify(h, base, bruteforce_prime_solver());
        CHECK(is_proper_coloring(h, strictified));
        CHECK(is_strictly_hierarchical(h, strictified));
        CHECK(is_modularly_minimal(h, strictified, bruteforce_prime_solver()));
        // strictifying a strictly hierarchical coloring preserves both
        Coloring again = strictify(h, strictified, bruteforce_prime_solver());
        CHECK(is_strictly_hierarchical(h, again));
        CHECK(is_modularly_minimal(h, again, bruteforce_prime_solver()));
    }
}

TEST_CASE("series children use disjoint palettes in any proper coloring") {
    std::mt19937_64 rng(47);
    for (int round = 0; round < 100; ++round) {
        const int n = 2 + static_cast<int>(rng_below(rng, 6));
        Graph g = random_graph(rng, n, 0.55);
        std::vector<int> colors(n);
        for (int v = 0; v < n; ++v) colors[v] = 1 + static_cast<int>(rng_below(rng, n));
        Coloring sigma(colors);
        if (!is_proper_coloring(g, sigma)) continue;
        MDTree tree = modular_decomposition(g);
        auto walk = [&](auto&& self, const MDNode& node) -> void {
            if (node.kind == ModuleKind::Series) {
                for (std::size_t i = 0; i < node.children.size(); ++i)
                    for (std::size_t j = i + 1; j < node.children.size(); ++j) {
                        auto a = sigma.color_set(node.children[i].module);
                        auto b = sigma.color_set(node.children[j].module);
                        std::vector<int> meet;
                        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                              std::back_inserter(meet));
                        CHECK(meet.empty());
                    }
            }
            for (const MDNode& child : node.children) self(self, child);
        };
        walk(walk, tree.root);
    }
}

TEST_CASE("restriction of a greedy coloring to component unions stays greedy") {
    std::mt19937_64 rng(53);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng_below(rng, 7));
        Graph g = random_graph(rng, n, 0.25);
        Coloring sigma = greedy_coloring(g, random_order(rng, n));
        auto comps = connected_components(g);
        const int k = static_cast<int>(comps.size());
        for (int subset = 1; subset < (1 << k); ++subset) {
            std::vector<int> kept;
            for (int i = 0; i < k; ++i)
                if (subset & (1 << i))
                    kept.insert(kept.end(), comps[i].begin(), comps[i].end());
            std::sort(kept.begin(), kept.end());
            auto sub = induced_subgraph(g, kept);
            std::vector<int> local;
            for (int v : kept) local.push_back(sigma.at(v));
            CHECK(is_greedy_coloring(sub.graph, Coloring(local)));
        }
    }
}

TEST_CASE("injection counting kernel") {
    CHECK(injection_count(2, 3) == 6);
    CHECK(injection_count(0, 5) == 1);
    CHECK(injection_count(3, 3) == 6);
    CHECK(injection_count(4, 3) == 0);
    CHECK(injection_count(10, 20) == BigCount("670442572800"));
}

TEST_CASE("hierarchical coloring counts on the running example") {
    Graph g = k2_two_singletons();
    CHECK(count_hierarchical_colorings(g, split_tree_0123()) == 2);
    CHECK(count_hierarchical_colorings(g, comb_tree_0123()) == 4);

    // labeled enumeration with colors {1..chi} gives the count times chi!
    for (const Cotree& tree : {split_tree_0123(), comb_tree_0123()}) {
        BoundCotree bound(g, tree);
        int labeled = 0;
        for_each_proper_coloring(g, 2, false, [&](const Coloring& sigma) {
            if (is_hierarchical_wrt_cotree(bound, sigma)) ++labeled;
            return true;
        });
        CHECK(labeled == count_hierarchical_colorings(bound) * 2);
    }
}

TEST_CASE("hierarchy verdicts ignore color names, including colors beyond 64") {
    // checks route through bitmask palettes when colors fit in 64 bits and
    // through sorted sets otherwise; both must agree
    std::mt19937_64 rng(97);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        Graph g = random_cograph(seed * 41 + 3, n);
        Cotree tree = binary_refine(discriminating_cotree(g), LeftComb{});
        BoundCotree bound(g, tree);
        for (int round = 0; round < 30; ++round) {
            std::vector<int> colors(n);
            for (int v = 0; v < n; ++v)
                colors[v] = 1 + static_cast<int>(rng_below(rng, 4));
            Coloring sigma(colors);
            std::vector<int> shifted(colors);
            for (int& c : shifted) c += 1000;
            Coloring big(shifted);
            CHECK(is_hierarchical_wrt_cotree(bound, sigma) ==
                  is_hierarchical_wrt_cotree(bound, big));
            CHECK(is_cotree_minimal(bound, sigma) == is_cotree_minimal(bound, big));
        }
    }
}

TEST_CASE("counts agree across caterpillars ordered by chromatic number") {
    // ties between equally colored children may be ordered arbitrarily
    // without changing the count
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const int n = 2 + static_cast<int>(seed % 7);
        Graph g = random_cograph(seed * 19 + 13, n);
        Cotree disc = discriminating_cotree(g);
        if (disc.is_leaf()) continue;

        auto child_chi = [&](const Cotree& child) {
            auto leaves = cotree_leaves(child);
            return chi_bruteforce(induced_subgraph(g, leaves).graph);
        };
        auto comb = [&](std::vector<Cotree> items, int label) {
            Cotree acc = std::move(items.front());
            for (std::size_t i = 1; i < items.size(); ++i) {
                std::vector<Cotree> pair;
                pair.push_back(std::move(acc));
                pair.push_back(std::move(items[i]));
                acc = cotree_node(label, std::move(pair));
            }
            return acc;
        };
        // caterpillar refinements with ascending child chi, breaking ties in
        // two different ways
        std::optional<BigCount> reference;
        for (int tie_break = 0; tie_break < 2; ++tie_break) {
            auto refine = [&](auto&& self, const Cotree& node) -> Cotree {
                if (node.is_leaf()) return node;
                std::vector<Cotree> children;
                for (const Cotree& child : node.children)
                    children.push_back(self(self, child));
                std::stable_sort(children.begin(), children.end(),
                                 [&](const Cotree& a, const Cotree& b) {
                                     const int ca = child_chi(a);
                                     const int cb = child_chi(b);
                                     if (ca != cb) return ca < cb;
                                     return tie_break == 1 &&
                                            min_leaf_of(a) > min_leaf_of(b);
                                 });
                return comb(std::move(children), node.label);
            };
            Cotree tree = refine(refine, disc);
            BigCount z = count_hierarchical_colorings(g, tree);
            if (!reference)
                reference = z;
            else
                CHECK(*reference == z);
        }
    }
}

TEST_CASE("hierarchical colorings use exactly the chromatic number of colors") {
    std::mt19937_64 rng(59);
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const int n = 2 + static_cast<int>(seed % 5);
        Graph g = random_cograph(seed * 29 + 11, n);
        const int chi = chi_bruteforce(g);
        Cotree tree = binary_refine(discriminating_cotree(g), LeftComb{});
        BoundCotree bound(g, tree);
        for_each_proper_coloring(g, chi + 1, false, [&](const Coloring& sigma) {
            if (is_hierarchical_wrt_cotree(bound, sigma))
                CHECK(sigma.palette_size() == chi);
            return true;
        });
    }
}
