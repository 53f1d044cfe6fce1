#include "modcolor/detail/exact_coloring.hpp"

#include <algorithm>
#include <numeric>

namespace modcolor::detail {

namespace {

struct Backtracker {
    const Graph& g;
    int k;
    std::vector<int> order;   // vertices, descending degree
    std::vector<int> colors;  // by vertex id, 0 = unassigned

    bool assign(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const int ceiling = std::min(k, used + 1);
        for (int c = 1; c <= ceiling; ++c) {
            bool clash = false;
            for (int u : g.neighbors(v)) {
                if (colors[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors[v] = c;
            if (assign(pos + 1, std::max(used, c))) return true;
            colors[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> try_k_coloring(const Graph& g, int k) {
    const int n = g.vertex_count();
    if (k < 1) return n == 0 ? std::make_optional(std::vector<int>{}) : std::nullopt;
    Backtracker bt{g, k, std::vector<int>(n), std::vector<int>(n, 0)};
    std::iota(bt.order.begin(), bt.order.end(), 0);
    std::stable_sort(bt.order.begin(), bt.order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    if (!bt.assign(0, 0)) return std::nullopt;
    return bt.colors;
}

int exact_chromatic_number(const Graph& g) {
    if (g.vertex_count() == 0) return 0;
    for (int k = 1;; ++k)
        if (try_k_coloring(g, k)) return k;
}

int chromatic_number_with_fallback(const Graph& g, const PrimeSolver& solver) {
    try {
        return chromatic_number(g, solver);
    } catch (const UnsupportedPrimeError&) {
        return exact_chromatic_number(g);
    }
}

}  // namespace modcolor::detail
