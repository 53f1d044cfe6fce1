#include "modcolor/p4sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "modcolor/detail/exact_coloring.hpp"

namespace modcolor {

namespace {

std::string module_to_string(const std::vector<int>& module) {
    std::string s = "{";
    for (std::size_t i = 0; i < module.size(); ++i) {
        if (i > 0) s += ", ";
        s += std::to_string(module[i]);
    }
    return s + "}";
}

// Checks every condition of the spider definition for the candidate parts.
bool verify_spider(const Graph& h, SpiderDecomposition& sd) {
    const int n = h.vertex_count();
    const std::size_t k = sd.body.size();
    if (k != sd.legs.size() || k < 2) return false;
    if (sd.body.size() + sd.legs.size() + sd.head.size() != static_cast<std::size_t>(n))
        return false;

    enum Role { kBody, kLeg, kHead, kNone };
    std::vector<char> role(n, kNone);
    for (int v : sd.body) role[v] = kBody;
    for (int v : sd.legs) {
        if (role[v] != kNone) return false;
        role[v] = kLeg;
    }
    for (int v : sd.head) {
        if (role[v] != kNone) return false;
        role[v] = kHead;
    }
    for (int v = 0; v < n; ++v)
        if (role[v] == kNone) return false;

    const bool thin = sd.flavor == SpiderFlavor::Thin;
    std::vector<int> matched_leg(n, -1);
    for (auto [b, s] : sd.matching) {
        if (b < 0 || b >= n || s < 0 || s >= n) return false;
        if (role[b] != kBody || role[s] != kLeg) return false;
        if (matched_leg[b] != -1) return false;
        matched_leg[b] = s;
    }
    if (sd.matching.size() != k) return false;
    {
        std::vector<int> seen;
        for (auto [b, s] : sd.matching) seen.push_back(s);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }

    for (int b : sd.body) {
        int legs_hit = 0;
        int body_hit = 0;
        int head_hit = 0;
        for (int u : h.neighbors(b)) {
            if (role[u] == kLeg) {
                ++legs_hit;
                if (thin && u != matched_leg[b]) return false;
                if (!thin && u == matched_leg[b]) return false;
            } else if (role[u] == kBody) {
                ++body_hit;
            } else {
                ++head_hit;
            }
        }
        if (body_hit != static_cast<int>(k) - 1) return false;  // K is a clique
        if (thin && legs_hit != 1) return false;
        if (!thin && legs_hit != static_cast<int>(k) - 1) return false;
        if (head_hit != static_cast<int>(sd.head.size())) return false;
    }
    for (int s : sd.legs)
        for (int u : h.neighbors(s))
            if (role[u] != kBody) return false;  // S stable, no leg-head edges
    return true;
}

std::optional<SpiderDecomposition> try_thin(const Graph& h) {
    const int n = h.vertex_count();
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, h.degree(v));
    if (dmin != 1) return std::nullopt;  // thin legs have exactly one neighbor

    SpiderDecomposition sd;
    sd.flavor = SpiderFlavor::Thin;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == 1) sd.legs.push_back(v);

    std::vector<char> in_body(n, 0);
    std::vector<char> in_legs(n, 0);
    for (int s : sd.legs) in_legs[s] = 1;
    for (int s : sd.legs) {
        const int b = h.neighbors(s)[0];
        if (in_legs[b] || in_body[b]) return std::nullopt;
        in_body[b] = 1;
        sd.matching.emplace_back(b, s);
    }
    for (int v = 0; v < n; ++v) {
        if (in_body[v])
            sd.body.push_back(v);
        else if (!in_legs[v])
            sd.head.push_back(v);
    }
    std::sort(sd.matching.begin(), sd.matching.end());
    if (!verify_spider(h, sd)) return std::nullopt;
    return sd;
}

std::optional<SpiderDecomposition> try_thick(const Graph& h) {
    const int n = h.vertex_count();
    int dmin = n;
    for (int v = 0; v < n; ++v) dmin = std::min(dmin, h.degree(v));

    SpiderDecomposition sd;
    sd.flavor = SpiderFlavor::Thick;
    for (int v = 0; v < n; ++v)
        if (h.degree(v) == dmin) sd.legs.push_back(v);
    if (sd.legs.size() < 2) return std::nullopt;

    // legs see the whole body except their matched vertex
    std::vector<char> in_body(n, 0);
    std::vector<char> in_legs(n, 0);
    for (int s : sd.legs) in_legs[s] = 1;
    for (int s : sd.legs) {
        for (int u : h.neighbors(s)) {
            if (in_legs[u]) return std::nullopt;  // S must be stable
            if (!in_body[u]) {
                in_body[u] = 1;
                sd.body.push_back(u);
            }
        }
    }
    std::sort(sd.body.begin(), sd.body.end());
    if (sd.body.size() != sd.legs.size()) return std::nullopt;
    for (int s : sd.legs) {
        int matched = -1;
        for (int b : sd.body) {
            if (!h.has_edge(s, b)) {
                if (matched != -1) return std::nullopt;
                matched = b;
            }
        }
        if (matched == -1) return std::nullopt;
        sd.matching.emplace_back(matched, s);
    }
    std::sort(sd.matching.begin(), sd.matching.end());
    for (int v = 0; v < n; ++v)
        if (!in_body[v] && !in_legs[v]) sd.head.push_back(v);
    if (!verify_spider(h, sd)) return std::nullopt;
    return sd;
}

}  // namespace

std::optional<SpiderDecomposition> recognize_spider(const Graph& h) {
    if (h.vertex_count() < 4) return std::nullopt;
    if (auto thin = try_thin(h)) return thin;
    return try_thick(h);
}

SpiderInstance construct_spider(int k, SpiderFlavor flavor, const Graph& head) {
    if (k < 2) throw std::invalid_argument("spider body needs at least two vertices");
    const int head_n = head.vertex_count();
    const int n = 2 * k + head_n;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(i, j);  // body clique
    for (int i = 0; i < k; ++i) {
        if (flavor == SpiderFlavor::Thin) {
            edges.emplace_back(i, k + i);
        } else {
            for (int j = 0; j < k; ++j)
                if (j != i) edges.emplace_back(i, k + j);
        }
    }
    for (int h_idx = 0; h_idx < head_n; ++h_idx)
        for (int i = 0; i < k; ++i) edges.emplace_back(2 * k + h_idx, i);
    for (auto [u, v] : head.edges()) edges.emplace_back(2 * k + u, 2 * k + v);

    SpiderInstance result;
    result.graph = Graph::from_edges(n, edges);
    result.decomposition.flavor = flavor;
    for (int i = 0; i < k; ++i) {
        result.decomposition.body.push_back(i);
        result.decomposition.legs.push_back(k + i);
        result.decomposition.matching.emplace_back(i, k + i);
    }
    for (int h_idx = 0; h_idx < head_n; ++h_idx)
        result.decomposition.head.push_back(2 * k + h_idx);
    return result;
}

bool is_p4_sparse(const Graph& g) { return is_p4_sparse(g, nullptr); }

namespace {

bool check_p4_sparse(const Graph& g, const MDNode& node,
                     std::vector<int>* non_spider_module) {
    if (node.kind == ModuleKind::Prime) {
        // quotient via one representative per child; children are modules
        std::vector<int> reps;
        reps.reserve(node.children.size());
        for (const MDNode& child : node.children) reps.push_back(child.module.front());
        InducedSubgraph quotient = induced_subgraph(g, reps);
        auto spider = recognize_spider(quotient.graph);
        bool ok = spider.has_value();
        if (ok) {
            // non-singleton children may sit only at the head position
            std::vector<char> in_head(reps.size(), 0);
            for (int q : spider->head) in_head[q] = 1;
            for (std::size_t i = 0; i < node.children.size(); ++i)
                if (node.children[i].module.size() > 1 && !in_head[i]) ok = false;
        }
        if (!ok) {
            if (non_spider_module) *non_spider_module = node.module;
            return false;
        }
    }
    for (const MDNode& child : node.children)
        if (!check_p4_sparse(g, child, non_spider_module)) return false;
    return true;
}

}  // namespace

bool is_p4_sparse(const Graph& g, std::vector<int>* non_spider_module) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("P4-sparse test needs at least one vertex");
    MDTree tree = modular_decomposition(g);
    return check_p4_sparse(g, tree.root, non_spider_module);
}

namespace {

// Fresh palette for the body/leg pair: the smallest positive colors that do
// not collide with the head palette.
std::vector<int> fresh_colors(int count, const std::vector<int>& avoid) {
    std::vector<int> result;
    int c = 1;
    auto it = avoid.begin();
    while (static_cast<int>(result.size()) < count) {
        while (it != avoid.end() && *it < c) ++it;
        if (it != avoid.end() && *it == c) {
            ++c;
            continue;
        }
        result.push_back(c++);
    }
    return result;
}

}  // namespace

Coloring color_spider(const Graph& h, const SpiderDecomposition& sd,
                      const Coloring& head_coloring) {
    {
        SpiderDecomposition copy = sd;
        if (!verify_spider(h, copy))
            throw std::domain_error("not a valid spider decomposition of the graph");
    }
    if (sd.head.empty() != (head_coloring.size() == 0))
        throw std::domain_error("head coloring must be given exactly for a nonempty head");

    std::vector<int> head_palette;
    if (!sd.head.empty()) {
        InducedSubgraph head_sub = induced_subgraph(h, sd.head);
        if (head_coloring.size() != head_sub.graph.vertex_count())
            throw std::domain_error("head coloring has the wrong size");
        if (!is_proper_coloring(head_sub.graph, head_coloring))
            throw std::domain_error("head coloring is not proper");
        head_palette = head_coloring.palette();
        const int head_chi =
            detail::chromatic_number_with_fallback(head_sub.graph, spider_prime_solver());
        if (static_cast<int>(head_palette.size()) != head_chi)
            throw std::domain_error("head coloring is not minimal");
    }

    const int k = static_cast<int>(sd.body.size());
    std::vector<int> palette = fresh_colors(k, head_palette);
    std::vector<int> colors(h.vertex_count(), 0);
    for (std::size_t i = 0; i < sd.head.size(); ++i)
        colors[sd.head[i]] = head_coloring.at(static_cast<int>(i));

    std::vector<std::pair<int, int>> matching = sd.matching;  // sorted by body
    if (sd.flavor == SpiderFlavor::Thin) {
        // body takes the fresh palette; each leg takes the color of the next
        // body vertex in cyclic order, which avoids its matched vertex and
        // covers the whole body palette
        for (int i = 0; i < k; ++i) colors[matching[i].first] = palette[i];
        for (int i = 0; i < k; ++i) colors[matching[i].second] = palette[(i + 1) % k];
    } else {
        // legs take the fresh palette; each body vertex copies its matched
        // leg, the only leg it is not adjacent to
        for (int i = 0; i < k; ++i) colors[matching[i].second] = palette[i];
        for (int i = 0; i < k; ++i) colors[matching[i].first] = palette[i];
    }
    return Coloring(std::move(colors));
}

PrimeSolver spider_prime_solver() {
    return [](const PrimeModule& pm) -> std::optional<std::vector<int>> {
        auto spider = recognize_spider(pm.subgraph);
        if (!spider) return std::nullopt;
        // children must be the body and leg singletons plus the head module
        std::vector<char> is_leg(pm.subgraph.vertex_count(), 0);
        std::vector<char> is_body(pm.subgraph.vertex_count(), 0);
        for (int v : spider->legs) is_leg[v] = 1;
        for (int v : spider->body) is_body[v] = 1;
        for (const auto& child : pm.children) {
            if (child.size() == 1) {
                const int v = child[0];
                if (is_leg[v] || is_body[v]) continue;
                if (spider->head != child) return std::nullopt;
            } else if (child != spider->head) {
                return std::nullopt;
            }
        }

        std::vector<int> colors = pm.coloring;
        const auto& matching = spider->matching;
        const int k = static_cast<int>(matching.size());
        if (spider->flavor == SpiderFlavor::Thin) {
            for (int i = 0; i < k; ++i)
                colors[matching[i].second] = pm.coloring[matching[(i + 1) % k].first];
        } else {
            for (int i = 0; i < k; ++i)
                colors[matching[i].first] = pm.coloring[matching[i].second];
        }
        return colors;
    };
}

Coloring p4sparse_modmin_coloring(const Graph& g) {
    try {
        return modularly_minimal_coloring(g, spider_prime_solver());
    } catch (const UnsupportedPrimeError& error) {
        throw std::domain_error("graph is not P4-sparse: prime module " +
                                module_to_string(error.module()) +
                                " is not a spider");
    }
}

}  // namespace modcolor
