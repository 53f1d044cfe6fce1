#pragma once

#include <optional>
#include <vector>

#include "modcolor/coloring_engine.hpp"
#include "modcolor/graph.hpp"

namespace modcolor::detail {

// Backtracking k-coloring; colors are 1..k, vertices tried in descending
// degree order with the usual used-colors+1 symmetry cut. Returns nullopt if
// g has no proper k-coloring.
std::optional<std::vector<int>> try_k_coloring(const Graph& g, int k);

// Smallest k admitting a proper k-coloring, by plain backtracking.
int exact_chromatic_number(const Graph& g);

// Chromatic number via the MD recursion with `solver`; prime modules the
// solver refuses fall back to plain backtracking on the whole graph.
int chromatic_number_with_fallback(const Graph& g, const PrimeSolver& solver);

}  // namespace modcolor::detail
