#include "modcolor/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>

#include "modcolor/detail/exact_coloring.hpp"

namespace modcolor {

namespace {

void require_cap(int n, int cap, const char* what) {
    if (n > cap)
        throw OracleCapExceeded(std::string(what) + " refuses n = " + std::to_string(n) +
                                " (cap " + std::to_string(cap) + ")");
}

// Deterministic helpers on top of the fully specified mt19937_64 stream;
// standard distributions are implementation-defined, so they are avoided.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % n;
}

double unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

int chi_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.vertex_count(), caps.chi_max_n, "chi_bruteforce");
    return detail::exact_chromatic_number(g);
}

namespace {

struct GrundySearch {
    const Graph& g;
    std::vector<int> colors;
    int best = 0;

    void dfs(int colored, int palette) {
        const int n = g.vertex_count();
        if (colored == n) {
            best = std::max(best, palette);
            return;
        }
        if (palette + (n - colored) <= best) return;  // cannot beat best
        for (int v = 0; v < n; ++v) {
            if (colors[v] != 0) continue;
            std::uint32_t used = 0;
            for (int u : g.neighbors(v))
                if (colors[u] != 0) used |= std::uint32_t{1} << (colors[u] - 1);
            int c = 1;
            while (used & (std::uint32_t{1} << (c - 1))) ++c;
            colors[v] = c;
            dfs(colored + 1, std::max(palette, c));
            colors[v] = 0;
        }
    }
};

}  // namespace

int grundy_bruteforce(const Graph& g, const OracleCaps& caps) {
    require_cap(g.vertex_count(), caps.grundy_max_n, "grundy_bruteforce");
    if (g.vertex_count() == 0) return 0;
    GrundySearch search{g, std::vector<int>(g.vertex_count(), 0)};
    search.dfs(0, 0);
    return search.best;
}

std::vector<std::vector<int>> brute_force_strong_modules(const Graph& g,
                                                         const OracleCaps& caps) {
    const int n = g.vertex_count();
    require_cap(n, caps.strong_modules_max_n, "brute_force_strong_modules");
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj_mask[v] |= std::uint32_t{1} << u;

    std::vector<std::uint32_t> modules;
    for (std::uint32_t set = 1; set < (std::uint32_t{1} << n); ++set) {
        const int size = std::popcount(set);
        bool ok = true;
        for (int z = 0; z < n && ok; ++z) {
            if (set & (std::uint32_t{1} << z)) continue;
            const int hits = std::popcount(adj_mask[z] & set);
            ok = hits == 0 || hits == size;
        }
        if (ok) modules.push_back(set);
    }

    std::vector<std::vector<int>> strong;
    for (std::uint32_t m : modules) {
        bool overlaps = false;
        for (std::uint32_t other : modules) {
            const std::uint32_t meet = m & other;
            if (meet != 0 && meet != m && meet != other) {
                overlaps = true;
                break;
            }
        }
        if (overlaps) continue;
        std::vector<int> vertices;
        for (int v = 0; v < n; ++v)
            if (m & (std::uint32_t{1} << v)) vertices.push_back(v);
        strong.push_back(std::move(vertices));
    }
    std::sort(strong.begin(), strong.end());
    return strong;
}

void for_each_proper_coloring(const Graph& g, int k, bool surjective_only,
                              const std::function<bool(const Coloring&)>& visit,
                              const OracleCaps& caps) {
    const int n = g.vertex_count();
    if (k < 1) throw std::invalid_argument("color count must be positive");
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        if (total > caps.coloring_enumeration_max / static_cast<std::uint64_t>(k))
            throw OracleCapExceeded("coloring enumeration cap exceeded");
        total *= static_cast<std::uint64_t>(k);
    }

    std::vector<int> colors(n, 0);
    bool stop = false;
    auto rec = [&](auto&& self, int v) -> void {
        if (stop) return;
        if (v == n) {
            if (surjective_only) {
                std::uint32_t used = 0;
                for (int c : colors) used |= std::uint32_t{1} << (c - 1);
                if (std::popcount(used) != k) return;
            }
            if (!visit(Coloring(colors))) stop = true;
            return;
        }
        for (int c = 1; c <= k && !stop; ++c) {
            bool clash = false;
            for (int u : g.neighbors(v)) {
                if (u < v && colors[u] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colors[v] = c;
            self(self, v + 1);
        }
        colors[v] = 0;
    };
    rec(rec, 0);
}

std::vector<Coloring> enumerate_colorings(const Graph& g, int k, bool surjective_only,
                                          const OracleCaps& caps) {
    std::vector<Coloring> result;
    for_each_proper_coloring(
        g, k, surjective_only,
        [&](const Coloring& sigma) {
            result.push_back(sigma);
            return true;
        },
        caps);
    return result;
}

namespace {

bool greedy_order_dfs(const Graph& g, const Coloring& sigma, std::vector<int>& colors,
                      int colored) {
    const int n = g.vertex_count();
    if (colored == n) return true;
    for (int v = 0; v < n; ++v) {
        if (colors[v] != 0) continue;
        std::uint32_t used = 0;
        for (int u : g.neighbors(v))
            if (colors[u] != 0) used |= std::uint32_t{1} << (colors[u] - 1);
        int c = 1;
        while (used & (std::uint32_t{1} << (c - 1))) ++c;
        if (c != sigma.at(v)) continue;  // this prefix can never reproduce sigma at v
        colors[v] = c;
        if (greedy_order_dfs(g, sigma, colors, colored + 1)) return true;
        colors[v] = 0;
    }
    return false;
}

}  // namespace

bool greedy_reachable_bruteforce(const Graph& g, const Coloring& sigma,
                                 const OracleCaps& caps) {
    require_cap(g.vertex_count(), caps.grundy_max_n, "greedy_reachable_bruteforce");
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the vertex set");
    if (!is_proper_coloring(g, sigma)) return false;
    std::vector<int> colors(g.vertex_count(), 0);
    return greedy_order_dfs(g, sigma, colors, 0);
}

namespace {

bool quad_induces_p4(const Graph& g, int a, int b, int c, int d) {
    const int quad[4] = {a, b, c, d};
    int degrees[4] = {0, 0, 0, 0};
    int edge_count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(quad[i], quad[j])) {
                ++edge_count;
                ++degrees[i];
                ++degrees[j];
            }
    if (edge_count != 3) return false;
    const auto [lo, hi] = std::minmax_element(degrees, degrees + 4);
    return *lo == 1 && *hi == 2;
}

}  // namespace

bool p4_sparse_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> pick(5);
    for (pick[0] = 0; pick[0] < n; ++pick[0])
        for (pick[1] = pick[0] + 1; pick[1] < n; ++pick[1])
            for (pick[2] = pick[1] + 1; pick[2] < n; ++pick[2])
                for (pick[3] = pick[2] + 1; pick[3] < n; ++pick[3])
                    for (pick[4] = pick[3] + 1; pick[4] < n; ++pick[4]) {
                        int p4s = 0;
                        for (int skip = 0; skip < 5 && p4s < 2; ++skip) {
                            int quad[4];
                            int t = 0;
                            for (int i = 0; i < 5; ++i)
                                if (i != skip) quad[t++] = pick[i];
                            if (quad_induces_p4(g, quad[0], quad[1], quad[2], quad[3]))
                                ++p4s;
                        }
                        if (p4s >= 2) return false;
                    }
    return true;
}

PrimeSolver bruteforce_prime_solver(const OracleCaps& caps) {
    return [caps](const PrimeModule& pm) -> std::optional<std::vector<int>> {
        const Graph& sub = pm.subgraph;
        if (sub.vertex_count() > caps.chi_max_n) return std::nullopt;
        const int chi = detail::exact_chromatic_number(sub);
        std::vector<int> tau = detail::try_k_coloring(sub, chi).value();

        // Rename the exhaustive solution so that each child keeps exactly its
        // own chi colors: inside child i, replace the current palette by the
        // first child_chi[i] colors tau uses there, order preserving. Cross
        // edges between children force disjoint tau palettes, so the result
        // stays proper, still uses chi colors, and every strong module below
        // keeps its color count.
        std::vector<int> result(sub.vertex_count(), 0);
        for (std::size_t i = 0; i < pm.children.size(); ++i) {
            const auto& child = pm.children[i];
            std::vector<int> tau_palette;
            std::vector<int> current_palette;
            for (int v : child) {
                tau_palette.push_back(tau[v]);
                current_palette.push_back(pm.coloring[v]);
            }
            std::sort(tau_palette.begin(), tau_palette.end());
            tau_palette.erase(std::unique(tau_palette.begin(), tau_palette.end()),
                              tau_palette.end());
            std::sort(current_palette.begin(), current_palette.end());
            current_palette.erase(
                std::unique(current_palette.begin(), current_palette.end()),
                current_palette.end());
            tau_palette.resize(current_palette.size());  // first chi_i colors
            for (int v : child) {
                const auto pos = std::lower_bound(current_palette.begin(),
                                                  current_palette.end(), pm.coloring[v]) -
                                 current_palette.begin();
                result[v] = tau_palette[pos];
            }
        }

        // Map the chi tau colors onto the smallest budget colors.
        std::vector<int> budget(pm.coloring);
        std::sort(budget.begin(), budget.end());
        budget.erase(std::unique(budget.begin(), budget.end()), budget.end());
        std::vector<int> tau_colors;
        for (int c : tau) tau_colors.push_back(c);
        std::sort(tau_colors.begin(), tau_colors.end());
        tau_colors.erase(std::unique(tau_colors.begin(), tau_colors.end()),
                         tau_colors.end());
        std::vector<int> to_budget(tau_colors.back() + 1, 0);
        for (std::size_t i = 0; i < tau_colors.size(); ++i)
            to_budget[tau_colors[i]] = budget[i];
        for (int& c : result) c = to_budget[c];
        return result;
    };
}

PrimeSolver default_prime_solver(const OracleCaps& caps) {
    return chain_solvers({spider_prime_solver(), bruteforce_prime_solver(caps)});
}

// ---------------------------------------------------------------------
// Generators

namespace {

void emit_cross(std::vector<std::pair<int, int>>& edges, int lo, int mid, int hi) {
    for (int u = lo; u < mid; ++u)
        for (int v = mid; v < hi; ++v) edges.emplace_back(u, v);
}

void gen_cograph_range(std::mt19937_64& rng, double p_join, int lo, int hi,
                       std::vector<std::pair<int, int>>& edges) {
    if (hi - lo <= 1) return;
    const int mid = lo + 1 + static_cast<int>(bounded(rng, hi - lo - 1));
    const bool join = unit(rng) < p_join;
    gen_cograph_range(rng, p_join, lo, mid, edges);
    gen_cograph_range(rng, p_join, mid, hi, edges);
    if (join) emit_cross(edges, lo, mid, hi);
}

void emit_spider(int lo, int k, int hi, bool thin,
                 std::vector<std::pair<int, int>>& edges) {
    // body lo..lo+k-1, legs lo+k..lo+2k-1, head lo+2k..hi-1
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(lo + i, lo + j);
    for (int i = 0; i < k; ++i) {
        if (thin) {
            edges.emplace_back(lo + i, lo + k + i);
        } else {
            for (int j = 0; j < k; ++j)
                if (j != i) edges.emplace_back(lo + i, lo + k + j);
        }
    }
    for (int h = lo + 2 * k; h < hi; ++h)
        for (int i = 0; i < k; ++i) edges.emplace_back(h, lo + i);
}

void gen_p4sparse_range(std::mt19937_64& rng, const GeneratorConfig& cfg, int lo,
                        int hi, std::vector<std::pair<int, int>>& edges) {
    const int s = hi - lo;
    if (s <= 1) return;

    // splice a spider when the head fits under the bound
    const int k_hi = std::min(5, s / 2);
    int k_lo = 2;
    while (k_lo <= k_hi && s - 2 * k_lo > cfg.max_head) ++k_lo;
    if (s >= 4 && k_lo <= k_hi && unit(rng) < cfg.spider_rate) {
        const int k = k_lo + static_cast<int>(bounded(rng, k_hi - k_lo + 1));
        const bool thin = unit(rng) < 0.5;
        emit_spider(lo, k, hi, thin, edges);
        if (s - 2 * k > 0) gen_p4sparse_range(rng, cfg, lo + 2 * k, hi, edges);
        return;
    }

    // Joins keep one side small, and their probability falls off with the
    // subproblem size so the expected edge contribution per node stays
    // bounded; large scales are union-dominated, which is what sparse
    // P4-sparse graphs look like.
    const double dampen = s > 64 ? 64.0 / s : 1.0;
    const bool join = unit(rng) < cfg.p_join * dampen;
    const int left_max = join ? std::min(2, s - 1) : s - 1;
    const int mid = lo + 1 + static_cast<int>(bounded(rng, left_max));
    gen_p4sparse_range(rng, cfg, lo, mid, edges);
    gen_p4sparse_range(rng, cfg, mid, hi, edges);
    if (join) emit_cross(edges, lo, mid, hi);
}

Graph gen_erdos_renyi(std::mt19937_64& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    if (p >= 1.0) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        return Graph::from_edges(n, edges);
    }
    if (p > 0.0) {
        // geometric jumps between successive present pairs
        const double log_q = std::log1p(-p);
        const std::uint64_t total =
            static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
        std::uint64_t index = 0;
        int row = 0;
        std::uint64_t row_start = 0;  // index of pair (row, row+1)
        while (index < total) {
            const double r = unit(rng);
            const double skip = std::floor(std::log1p(-r) / log_q);
            index += 1 + static_cast<std::uint64_t>(skip);
            if (index > total) break;
            const std::uint64_t flat = index - 1;
            while (row_start + static_cast<std::uint64_t>(n - 1 - row) <= flat) {
                row_start += static_cast<std::uint64_t>(n - 1 - row);
                ++row;
            }
            const int col = row + 1 + static_cast<int>(flat - row_start);
            edges.emplace_back(row, col);
        }
    }
    return Graph::from_edges(n, edges);
}

}  // namespace

Graph generate(const GeneratorConfig& config) {
    if (config.n < 1) throw std::invalid_argument("generator needs n >= 1");
    auto check_probability = [](double p, const char* name) {
        if (p < 0.0 || p > 1.0)
            throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    };
    check_probability(config.p_join, "p_join");
    check_probability(config.spider_rate, "spider_rate");
    check_probability(config.edge_p, "p");
    std::mt19937_64 rng(config.seed);

    switch (config.flavor) {
        case GraphFlavor::Cograph: {
            std::vector<std::pair<int, int>> edges;
            gen_cograph_range(rng, config.p_join, 0, config.n, edges);
            return Graph::from_edges(config.n, edges);
        }
        case GraphFlavor::P4Sparse: {
            if (config.max_head < 0)
                throw std::invalid_argument("max_head must be nonnegative");
            std::vector<std::pair<int, int>> edges;
            gen_p4sparse_range(rng, config, 0, config.n, edges);
            return Graph::from_edges(config.n, edges);
        }
        case GraphFlavor::ErdosRenyi:
            return gen_erdos_renyi(rng, config.n, config.edge_p);
        case GraphFlavor::Spider: {
            if (config.spider_k < 2)
                throw std::invalid_argument("spider body needs k >= 2");
            if (config.head_n < 0)
                throw std::invalid_argument("head_n must be nonnegative");
            Graph head = gen_erdos_renyi(rng, config.head_n, 0.5);
            return construct_spider(config.spider_k, config.spider_flavor, head).graph;
        }
    }
    throw std::invalid_argument("unknown generator flavor");
}

}  // namespace modcolor
