#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "modcolor/coloring.hpp"
#include "modcolor/coloring_engine.hpp"
#include "modcolor/graph.hpp"
#include "modcolor/mdtree.hpp"

namespace modcolor {

enum class SpiderFlavor { Thin, Thick };

// Partition of a spider: clique body K, independent leg set S of the same
// size matched one to one with the body, and an optional head R joined to
// every body vertex and to no leg. Thin spiders realize the matching as the
// only body-leg edges; thick spiders as the only body-leg non-edges.
struct SpiderDecomposition {
    SpiderFlavor flavor = SpiderFlavor::Thin;
    std::vector<int> body;  // K, sorted
    std::vector<int> legs;  // S, sorted
    std::vector<int> head;  // R, sorted, may be empty
    std::vector<std::pair<int, int>> matching;  // (body, leg), sorted by body
};

// Finds a spider partition of h, or nullopt. Thin is tried before thick, so
// the ambiguous |K| = 2 case reports Thin. Candidates come from the degree
// signature (legs have minimum degree); all partition conditions are then
// verified explicitly.
std::optional<SpiderDecomposition> recognize_spider(const Graph& h);

struct SpiderInstance {
    Graph graph;
    SpiderDecomposition decomposition;
};

// Builds an exact spider with body 0..k-1, legs k..2k-1 (vertex i matched to
// k+i) and the given head graph shifted to 2k... Requires k >= 2.
SpiderInstance construct_spider(int k, SpiderFlavor flavor, const Graph& head);

// True iff every prime node of the MD tree contracts to a spider whose head
// position holds the only non-singleton child, which characterizes the
// graphs with at most one induced P4 among any five vertices. The overload
// reports a violating prime module.
bool is_p4_sparse(const Graph& g);
bool is_p4_sparse(const Graph& g, std::vector<int>* non_spider_module);

// Colors the spider with chi(head) + |K| colors such that the legs reuse the
// body palette exactly: sigma(S) == sigma(K). `head_coloring` maps local
// head positions (ascending head ids) to colors and must be a minimal proper
// coloring of the head subgraph; pass an empty coloring iff the head is
// empty.
Coloring color_spider(const Graph& h, const SpiderDecomposition& sd,
                      const Coloring& head_coloring);

// PrimeSolver that handles exactly the spider modules of P4-sparse MD trees.
PrimeSolver spider_prime_solver();

// Modularly-minimal coloring of a P4-sparse graph via the MD tree and the
// spider solver; near-linear on sparse inputs. Non-P4-sparse inputs raise a
// domain error naming a prime non-spider module.
Coloring p4sparse_modmin_coloring(const Graph& g);

}  // namespace modcolor
