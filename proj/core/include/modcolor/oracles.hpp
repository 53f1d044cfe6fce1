#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "modcolor/coloring.hpp"
#include "modcolor/coloring_engine.hpp"
#include "modcolor/graph.hpp"
#include "modcolor/p4sparse.hpp"

namespace modcolor {

// Hard size caps for the brute-force oracles. Every oracle refuses inputs
// beyond its cap instead of silently blowing up; callers with a reason to go
// higher pass their own caps (also loadable from JSON, see io.hpp).
struct OracleCaps {
    int chi_max_n = 12;
    int grundy_max_n = 8;
    int strong_modules_max_n = 9;
    std::uint64_t coloring_enumeration_max = std::uint64_t{1} << 22;
};

class OracleCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Exact chromatic number by backtracking k-coloring for k = 1, 2, ...
int chi_bruteforce(const Graph& g, const OracleCaps& caps = {});

// Worst greedy palette size over all vertex orders.
int grundy_bruteforce(const Graph& g, const OracleCaps& caps = {});

// All strong modules by subset enumeration: keep the modules, then drop any
// module that overlaps another one. Sorted lexicographically.
std::vector<std::vector<int>> brute_force_strong_modules(const Graph& g,
                                                         const OracleCaps& caps = {});

// Visits every proper coloring with colors from {1..k} in lexicographic
// order; stops early when the visitor returns false. Requires k^n within the
// enumeration cap.
void for_each_proper_coloring(const Graph& g, int k, bool surjective_only,
                              const std::function<bool(const Coloring&)>& visit,
                              const OracleCaps& caps = {});
std::vector<Coloring> enumerate_colorings(const Graph& g, int k,
                                          bool surjective_only = false,
                                          const OracleCaps& caps = {});

// True iff some greedy vertex order reproduces sigma exactly. Backtracking
// over order prefixes; a vertex is only appended when greedy would give it
// sigma's color, which prunes most of the n! orders.
bool greedy_reachable_bruteforce(const Graph& g, const Coloring& sigma,
                                 const OracleCaps& caps = {});

// Five-subset scan: true iff no five vertices induce two or more P4s.
// Polynomial, so it carries no cap.
bool p4_sparse_bruteforce(const Graph& g);

// Prime solver backed by exhaustive coloring; refuses modules larger than
// the chi cap. The returned coloring keeps every child minimally colored by
// renaming the exhaustive solution through the children's current palettes.
PrimeSolver bruteforce_prime_solver(const OracleCaps& caps = {});

// Spider solver first, brute force as fallback.
PrimeSolver default_prime_solver(const OracleCaps& caps = {});

// ---------------------------------------------------------------------
// Seeded random instance generators. The same config always yields the same
// graph, independent of platform.

enum class GraphFlavor { Cograph, P4Sparse, ErdosRenyi, Spider };

struct GeneratorConfig {
    GraphFlavor flavor = GraphFlavor::ErdosRenyi;
    int n = 1;
    std::uint64_t seed = 0;
    double p_join = 0.5;       // Cograph: probability of a join node
    double spider_rate = 0.3;  // P4Sparse: probability of splicing a spider
    int max_head = 8;          // P4Sparse: spider head size bound
    double edge_p = 0.5;       // ErdosRenyi
    int spider_k = 2;          // Spider: body size
    SpiderFlavor spider_flavor = SpiderFlavor::Thin;
    int head_n = 0;            // Spider: head vertex count
};

Graph generate(const GeneratorConfig& config);

}  // namespace modcolor
