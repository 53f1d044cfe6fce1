#include "modcolor/coloring_engine.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <string>
#include <unordered_map>

namespace modcolor {

namespace {

std::string module_to_string(std::span<const int> module) {
    std::string s = "{";
    for (std::size_t i = 0; i < module.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(module[i]);
    }
    return s + "}";
}

// sorted-vector set helpers
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool sets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i < *j)
            ++i;
        else if (*j < *i)
            ++j;
        else
            return false;
    }
    return true;
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Injective color map from one sorted palette into another. Canonical form
// maps the i-th smallest source color to the i-th smallest target color; the
// seeded form picks a uniformly random injection.
std::unordered_map<int, int> make_injection(const std::vector<int>& from,
                                            const std::vector<int>& to,
                                            std::mt19937_64* rng) {
    assert(from.size() <= to.size());
    std::unordered_map<int, int> phi;
    phi.reserve(from.size());
    if (rng == nullptr) {
        for (std::size_t i = 0; i < from.size(); ++i) phi[from[i]] = to[i];
        return phi;
    }
    std::vector<int> targets(to);
    for (std::size_t i = targets.size() - 1; i > 0; --i) {
        std::size_t j = (*rng)() % (i + 1);
        std::swap(targets[i], targets[j]);
    }
    for (std::size_t i = 0; i < from.size(); ++i) phi[from[i]] = targets[i];
    return phi;
}

void require_total(const Graph& g, const Coloring& sigma) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the vertex set");
}

void require_proper(const Graph& g, const Coloring& sigma) {
    require_total(g, sigma);
    if (!is_proper_coloring(g, sigma))
        throw std::domain_error("coloring is not proper");
}

// ---------------------------------------------------------------------
// Modularly-minimal coloring over the MD tree

struct ModminRun {
    const Graph& g;
    const PrimeSolver& solver;
    std::mt19937_64* rng = nullptr;
    std::vector<int> colors;
    std::vector<ModuleChi>* chi_log = nullptr;  // filled in preorder if set

    explicit ModminRun(const Graph& graph, const PrimeSolver& s, std::mt19937_64* r)
        : g(graph), solver(s), rng(r), colors(graph.vertex_count()) {
        for (int v = 0; v < graph.vertex_count(); ++v) colors[v] = v + 1;
    }

    std::vector<int> palette_of(std::span<const int> module) const {
        std::vector<int> p;
        p.reserve(module.size());
        for (int v : module) p.push_back(colors[v]);
        std::sort(p.begin(), p.end());
        p.erase(std::unique(p.begin(), p.end()), p.end());
        return p;
    }

    std::vector<int> process(const MDNode& node) {
        std::size_t log_slot = 0;
        if (chi_log) {
            log_slot = chi_log->size();
            chi_log->push_back({node.module, 1});
        }
        std::vector<int> palette = dispatch(node);
        if (chi_log) (*chi_log)[log_slot].chi = static_cast<int>(palette.size());
        return palette;
    }

    std::vector<int> dispatch(const MDNode& node) {
        if (node.is_leaf()) return {colors[node.vertex]};

        std::vector<std::vector<int>> child_palettes;
        child_palettes.reserve(node.children.size());
        for (const MDNode& child : node.children)
            child_palettes.push_back(process(child));

        switch (node.kind) {
            case ModuleKind::Series: {
                std::vector<int> merged;
                for (const auto& palette : child_palettes) {
                    assert(sets_disjoint(merged, palette));
                    merged = set_union(merged, palette);
                }
                return merged;
            }
            case ModuleKind::Parallel: {
                std::size_t target = 0;
                for (std::size_t i = 1; i < child_palettes.size(); ++i)
                    if (child_palettes[i].size() > child_palettes[target].size())
                        target = i;
                const std::vector<int>& wide = child_palettes[target];
                for (std::size_t i = 0; i < child_palettes.size(); ++i) {
                    if (i == target) continue;
                    auto phi = make_injection(child_palettes[i], wide, rng);
                    for (int v : node.children[i].module) colors[v] = phi.at(colors[v]);
                }
                return wide;
            }
            case ModuleKind::Prime:
                return solve_prime(node);
            case ModuleKind::Leaf:
                break;
        }
        throw std::logic_error("unreachable MD node kind");
    }

    std::vector<int> solve_prime(const MDNode& node) {
        InducedSubgraph sub = induced_subgraph(g, node.module);
        // node.module is sorted, so local ids are positions in it
        auto local_id = [&](int v) {
            return static_cast<int>(
                std::lower_bound(node.module.begin(), node.module.end(), v) -
                node.module.begin());
        };
        std::vector<std::vector<int>> children_local(node.children.size());
        std::vector<int> child_chi(node.children.size());
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            for (int v : node.children[i].module)
                children_local[i].push_back(local_id(v));
            child_chi[i] =
                static_cast<int>(palette_of(node.children[i].module).size());
        }
        std::vector<int> local_colors(node.module.size());
        for (std::size_t i = 0; i < node.module.size(); ++i)
            local_colors[i] = colors[node.module[i]];

        PrimeModule request{sub.graph, children_local, child_chi, local_colors};
        std::optional<std::vector<int>> answer = solver(request);
        if (!answer) throw UnsupportedPrimeError(node.module);
        if (answer->size() != node.module.size())
            throw std::logic_error("prime solver returned a coloring of wrong size");
        Coloring check(*answer);
        if (!is_proper_coloring(sub.graph, check))
            throw std::logic_error("prime solver returned an improper coloring");
        std::vector<int> budget(local_colors);
        std::sort(budget.begin(), budget.end());
        for (int c : *answer)
            if (!std::binary_search(budget.begin(), budget.end(), c))
                throw std::logic_error("prime solver used a color outside its budget");

        for (std::size_t i = 0; i < node.module.size(); ++i)
            colors[node.module[i]] = (*answer)[i];
        return palette_of(node.module);
    }
};

std::vector<int> run_modmin(const Graph& g, const MDTree& tree, const PrimeSolver& solver,
                            std::mt19937_64* rng, std::vector<ModuleChi>* chi_log) {
    ModminRun run(g, solver, rng);
    run.chi_log = chi_log;
    run.process(tree.root);
    return std::move(run.colors);
}

// ---------------------------------------------------------------------
// Hierarchy checks over the MD tree

enum class HierarchyMode { Some, Nested };

bool hierarchy_check(const MDNode& node, const Coloring& sigma, HierarchyMode mode,
                     std::vector<int>* violating_module) {
    if (node.kind == ModuleKind::Parallel) {
        std::vector<std::vector<int>> palettes;
        palettes.reserve(node.children.size());
        for (const MDNode& child : node.children)
            palettes.push_back(sigma.color_set(child.module));
        bool ok = true;
        if (mode == HierarchyMode::Some) {
            std::size_t widest = 0;
            for (std::size_t i = 1; i < palettes.size(); ++i)
                if (palettes[i].size() > palettes[widest].size()) widest = i;
            ok = false;
            for (std::size_t j = 0; j < palettes.size() && !ok; ++j) {
                if (palettes[j].size() != palettes[widest].size()) continue;
                bool contains_all = true;
                for (std::size_t i = 0; i < palettes.size() && contains_all; ++i)
                    contains_all = is_subset(palettes[i], palettes[j]);
                ok = contains_all;
            }
        } else {
            std::sort(palettes.begin(), palettes.end(),
                      [](const auto& a, const auto& b) { return a.size() < b.size(); });
            for (std::size_t i = 0; ok && i + 1 < palettes.size(); ++i)
                ok = is_subset(palettes[i], palettes[i + 1]);
        }
        if (!ok) {
            if (violating_module) *violating_module = node.module;
            return false;
        }
    }
    for (const MDNode& child : node.children)
        if (!hierarchy_check(child, sigma, mode, violating_module)) return false;
    return true;
}

}  // namespace

UnsupportedPrimeError::UnsupportedPrimeError(std::vector<int> module)
    : std::runtime_error("prime module unsupported: " + module_to_string(module)),
      module_(std::move(module)) {}

PrimeSolver chain_solvers(std::vector<PrimeSolver> solvers) {
    return [solvers = std::move(solvers)](
               const PrimeModule& pm) -> std::optional<std::vector<int>> {
        for (const PrimeSolver& solver : solvers)
            if (auto answer = solver(pm)) return answer;
        return std::nullopt;
    };
}

Coloring greedy_coloring(const Graph& g, std::span<const int> order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw std::invalid_argument("order must cover every vertex");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("order is not a permutation of the vertex set");
        seen[v] = 1;
    }
    std::vector<int> colors(n, 0);
    std::vector<char> used(n + 2, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (colors[u] > 0) used[colors[u]] = 1;
        int c = 1;
        while (used[c]) ++c;
        colors[v] = c;
        for (int u : g.neighbors(v))
            if (colors[u] > 0) used[colors[u]] = 0;
    }
    return Coloring(std::move(colors));
}

bool is_greedy_coloring(const Graph& g, const Coloring& sigma) {
    require_proper(g, sigma);
    const int n = g.vertex_count();
    std::vector<char> present(n + 2, 0);
    for (int v = 0; v < n; ++v) {
        const int c = sigma.at(v);
        if (c > n) return false;  // greedy never needs more than n colors
        for (int u : g.neighbors(v)) present[sigma.at(u)] = 1;
        bool ok = true;
        for (int lower = 1; lower < c && ok; ++lower) ok = present[lower];
        for (int u : g.neighbors(v)) present[sigma.at(u)] = 0;
        if (!ok) return false;
    }
    return true;
}

int chromatic_number(const Graph& g, const PrimeSolver& solver) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("chromatic number of the empty graph");
    MDTree tree = modular_decomposition(g);
    std::vector<int> colors = run_modmin(g, tree, solver, nullptr, nullptr);
    std::vector<int> palette(colors);
    std::sort(palette.begin(), palette.end());
    palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
    return static_cast<int>(palette.size());
}

std::vector<ModuleChi> strong_module_chromatic_numbers(const Graph& g,
                                                       const PrimeSolver& solver) {
    MDTree tree = modular_decomposition(g);
    std::vector<ModuleChi> table;
    run_modmin(g, tree, solver, nullptr, &table);
    return table;
}

// ---------------------------------------------------------------------
// BoundCotree and checks against it

BoundCotree::BoundCotree(const Graph& g, const Cotree& tree) : graph_(&g) {
    if (!is_binary(tree)) throw std::domain_error("cotree is not binary");
    if (!is_cotree_of(g, tree))
        throw std::domain_error("tree is not a cotree of the graph");

    std::vector<const Cotree*> queue{&tree};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const Cotree* t = queue[head];
        Node node;
        node.source = t;
        if (t->is_leaf()) {
            node.vertex = t->vertex;
            node.leaves = {t->vertex};
        } else {
            node.label = t->label;
            node.left = static_cast<int>(queue.size());
            queue.push_back(&t->children[0]);
            node.right = static_cast<int>(queue.size());
            queue.push_back(&t->children[1]);
        }
        nodes_.push_back(std::move(node));
    }
    for (std::size_t i = nodes_.size(); i-- > 0;) {
        Node& node = nodes_[i];
        if (node.left < 0) continue;
        node.leaves = set_union(nodes_[node.left].leaves, nodes_[node.right].leaves);
        const int cl = nodes_[node.left].chi;
        const int cr = nodes_[node.right].chi;
        node.chi = node.label == kJoinLabel ? cl + cr : std::max(cl, cr);
    }
}

namespace {

// Per-node palettes, as bitmasks when all colors fit in 64 bits, otherwise
// as sorted vectors. Scans in BFS order so the first violation reported is
// the highest one.
struct CotreePalettes {
    bool use_masks = false;
    std::vector<std::uint64_t> masks;
    std::vector<std::vector<int>> sets;

    CotreePalettes(const BoundCotree& bt, const Coloring& sigma) {
        const auto& nodes = bt.nodes();
        int max_color = 0;
        for (int c : sigma.values()) max_color = std::max(max_color, c);
        use_masks = max_color <= 64;
        if (use_masks) {
            masks.resize(nodes.size());
            for (std::size_t i = nodes.size(); i-- > 0;) {
                if (nodes[i].left < 0)
                    masks[i] = std::uint64_t{1} << (sigma.at(nodes[i].vertex) - 1);
                else
                    masks[i] = masks[nodes[i].left] | masks[nodes[i].right];
            }
        } else {
            sets.resize(nodes.size());
            for (std::size_t i = nodes.size(); i-- > 0;) {
                if (nodes[i].left < 0)
                    sets[i] = {sigma.at(nodes[i].vertex)};
                else
                    sets[i] = set_union(sets[nodes[i].left], sets[nodes[i].right]);
            }
        }
    }

    bool disjoint(int a, int b) const {
        return use_masks ? (masks[a] & masks[b]) == 0 : sets_disjoint(sets[a], sets[b]);
    }
    bool nested(int a, int b) const {
        if (use_masks) {
            const std::uint64_t meet = masks[a] & masks[b];
            return meet == masks[a] || meet == masks[b];
        }
        return is_subset(sets[a], sets[b]) || is_subset(sets[b], sets[a]);
    }
    int size(int a) const {
        return use_masks ? std::popcount(masks[a]) : static_cast<int>(sets[a].size());
    }
};

}  // namespace

bool is_hierarchical_wrt_cotree(const BoundCotree& tree, const Coloring& sigma,
                                const Cotree** violating) {
    require_total(tree.graph(), sigma);
    CotreePalettes palettes(tree, sigma);
    const auto& nodes = tree.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i].left < 0) continue;
        const bool ok = nodes[i].label == kJoinLabel
                            ? palettes.disjoint(nodes[i].left, nodes[i].right)
                            : palettes.nested(nodes[i].left, nodes[i].right);
        if (!ok) {
            if (violating) *violating = nodes[i].source;
            return false;
        }
    }
    return true;
}

bool is_hierarchical_wrt_cotree(const Graph& g, const Coloring& sigma,
                                const Cotree& tree) {
    return is_hierarchical_wrt_cotree(BoundCotree(g, tree), sigma, nullptr);
}

bool is_hierarchical_wrt_cotree(const Graph& g, const Coloring& sigma,
                                const Cotree& tree, const Cotree** violating) {
    return is_hierarchical_wrt_cotree(BoundCotree(g, tree), sigma, violating);
}

bool is_cotree_minimal(const BoundCotree& tree, const Coloring& sigma) {
    require_total(tree.graph(), sigma);
    CotreePalettes palettes(tree, sigma);
    const auto& nodes = tree.nodes();
    for (std::size_t i = 0; i < nodes.size(); ++i)
        if (palettes.size(static_cast<int>(i)) != nodes[i].chi) return false;
    return true;
}

bool is_cotree_minimal(const Graph& g, const Coloring& sigma, const Cotree& tree) {
    return is_cotree_minimal(BoundCotree(g, tree), sigma);
}

namespace {

Coloring cotree_minimal_impl(const Graph& g, const Cotree& tree, std::mt19937_64* rng) {
    BoundCotree bt(g, tree);
    const auto& nodes = bt.nodes();
    std::vector<int> colors(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) colors[v] = v + 1;

    std::vector<std::vector<int>> palette(nodes.size());
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto& node = nodes[i];
        if (node.left < 0) {
            palette[i] = {colors[node.vertex]};
            continue;
        }
        std::vector<int>& left = palette[node.left];
        std::vector<int>& right = palette[node.right];
        if (node.label == kJoinLabel) {
            assert(sets_disjoint(left, right));
            palette[i] = set_union(left, right);
            continue;
        }
        // union node: recolor the child with fewer colors into the palette of
        // the other one; ties keep the first child as target
        const bool left_wins = left.size() >= right.size();
        const int target = left_wins ? node.left : node.right;
        const int source = left_wins ? node.right : node.left;
        auto phi = make_injection(palette[source], palette[target], rng);
        for (int v : nodes[source].leaves) colors[v] = phi.at(colors[v]);
        palette[i] = palette[target];
    }
    return Coloring(std::move(colors));
}

}  // namespace

Coloring cotree_minimal_coloring(const Graph& g, const Cotree& tree) {
    return cotree_minimal_impl(g, tree, nullptr);
}

Coloring cotree_minimal_coloring(const Graph& g, const Cotree& tree,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return cotree_minimal_impl(g, tree, &rng);
}

// ---------------------------------------------------------------------
// MD-based hierarchy predicates

bool is_hierarchical(const MDTree& tree, const Coloring& sigma,
                     std::vector<int>* violating_module) {
    return hierarchy_check(tree.root, sigma, HierarchyMode::Some, violating_module);
}

bool is_hierarchical(const Graph& g, const Coloring& sigma) {
    return is_hierarchical(g, sigma, nullptr);
}

bool is_hierarchical(const Graph& g, const Coloring& sigma,
                     std::vector<int>* violating_module) {
    require_proper(g, sigma);
    return is_hierarchical(modular_decomposition(g), sigma, violating_module);
}

bool is_strictly_hierarchical(const MDTree& tree, const Coloring& sigma,
                              std::vector<int>* violating_module) {
    return hierarchy_check(tree.root, sigma, HierarchyMode::Nested, violating_module);
}

bool is_strictly_hierarchical(const Graph& g, const Coloring& sigma) {
    return is_strictly_hierarchical(g, sigma, nullptr);
}

bool is_strictly_hierarchical(const Graph& g, const Coloring& sigma,
                              std::vector<int>* violating_module) {
    require_proper(g, sigma);
    return is_strictly_hierarchical(modular_decomposition(g), sigma, violating_module);
}

bool is_modularly_minimal(const Coloring& sigma, std::span<const ModuleChi> table,
                          std::vector<int>* violating_module) {
    for (const ModuleChi& entry : table) {
        if (static_cast<int>(sigma.color_set(entry.module).size()) != entry.chi) {
            if (violating_module) *violating_module = entry.module;
            return false;
        }
    }
    return true;
}

bool is_modularly_minimal(const Graph& g, const Coloring& sigma,
                          const PrimeSolver& solver) {
    return is_modularly_minimal(g, sigma, solver, nullptr);
}

bool is_modularly_minimal(const Graph& g, const Coloring& sigma,
                          const PrimeSolver& solver,
                          std::vector<int>* violating_module) {
    require_proper(g, sigma);
    std::vector<ModuleChi> table = strong_module_chromatic_numbers(g, solver);
    return is_modularly_minimal(sigma, table, violating_module);
}

Coloring modularly_minimal_coloring(const Graph& g, const PrimeSolver& solver) {
    MDTree tree = modular_decomposition(g);
    return Coloring(run_modmin(g, tree, solver, nullptr, nullptr));
}

Coloring modularly_minimal_coloring(const Graph& g, const PrimeSolver& solver,
                                    std::uint64_t seed) {
    MDTree tree = modular_decomposition(g);
    std::mt19937_64 rng(seed);
    return Coloring(run_modmin(g, tree, solver, &rng, nullptr));
}

namespace {

// Top-down renaming onto prefix palettes. `target` is sorted and has exactly
// as many colors as the input coloring uses on the node's module.
void strictify_recolor(const MDNode& node, const Coloring& sigma,
                       const std::vector<int>& target, std::vector<int>& out) {
    if (node.is_leaf()) {
        out[node.vertex] = target[0];
        return;
    }
    switch (node.kind) {
        case ModuleKind::Parallel: {
            for (const MDNode& child : node.children) {
                const std::size_t size = sigma.color_set(child.module).size();
                std::vector<int> prefix(target.begin(), target.begin() + size);
                strictify_recolor(child, sigma, prefix, out);
            }
            return;
        }
        case ModuleKind::Series: {
            std::size_t offset = 0;
            for (const MDNode& child : node.children) {
                const std::size_t size = sigma.color_set(child.module).size();
                std::vector<int> slice(target.begin() + offset,
                                       target.begin() + offset + size);
                offset += size;
                strictify_recolor(child, sigma, slice, out);
            }
            return;
        }
        case ModuleKind::Prime: {
            // rename the module palette onto the target, order preserving,
            // which keeps the palette sets of the children intact
            std::vector<int> current = sigma.color_set(node.module);
            std::unordered_map<int, int> rho;
            rho.reserve(current.size());
            for (std::size_t i = 0; i < current.size(); ++i) rho[current[i]] = target[i];
            for (const MDNode& child : node.children) {
                std::vector<int> child_target;
                for (int c : sigma.color_set(child.module)) child_target.push_back(rho.at(c));
                std::sort(child_target.begin(), child_target.end());
                strictify_recolor(child, sigma, child_target, out);
            }
            return;
        }
        case ModuleKind::Leaf:
            break;
    }
    throw std::logic_error("unreachable MD node kind");
}

}  // namespace

Coloring strictify(const Graph& g, const Coloring& sigma, const PrimeSolver& solver) {
    require_proper(g, sigma);
    MDTree tree = modular_decomposition(g);
    std::vector<ModuleChi> table = strong_module_chromatic_numbers(g, solver);
    std::vector<int> bad;
    if (!is_modularly_minimal(sigma, table, &bad))
        throw std::domain_error("coloring is not modularly minimal on module " +
                                module_to_string(bad));
    const int total = static_cast<int>(sigma.color_set(tree.root.module).size());
    std::vector<int> target(total);
    for (int i = 0; i < total; ++i) target[i] = i + 1;
    std::vector<int> out(g.vertex_count(), 0);
    strictify_recolor(tree.root, sigma, target, out);
    return Coloring(std::move(out));
}

// ---------------------------------------------------------------------
// Counting

BigCount injection_count(int s1, int s2) {
    if (s1 < 0 || s2 < 0) throw std::invalid_argument("set sizes must be nonnegative");
    if (s1 > s2) return 0;
    BigCount result = 1;
    for (int i = 0; i < s1; ++i) result *= (s2 - i);
    return result;  // binom(s2, s1) * s1!
}

BigCount count_hierarchical_colorings(const BoundCotree& tree) {
    const auto& nodes = tree.nodes();
    std::vector<BigCount> z(nodes.size());
    for (std::size_t i = nodes.size(); i-- > 0;) {
        const auto& node = nodes[i];
        if (node.left < 0) {
            z[i] = 1;
            continue;
        }
        z[i] = z[node.left] * z[node.right];
        if (node.label == kUnionLabel) {
            const int s1 = std::min(nodes[node.left].chi, nodes[node.right].chi);
            const int s2 = std::max(nodes[node.left].chi, nodes[node.right].chi);
            z[i] *= injection_count(s1, s2);
        }
    }
    return z[0];
}

BigCount count_hierarchical_colorings(const Graph& g, const Cotree& tree) {
    return count_hierarchical_colorings(BoundCotree(g, tree));
}

}  // namespace modcolor
