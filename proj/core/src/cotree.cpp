#include "modcolor/cotree.hpp"

#include <algorithm>
#include <stdexcept>

#include "modcolor/mdtree.hpp"

namespace modcolor {

namespace {

void check_wellformed(const Cotree& t) {
    if (t.is_leaf()) {
        if (t.vertex < 0) throw std::domain_error("cotree leaf without vertex id");
        return;
    }
    if (t.label != kUnionLabel && t.label != kJoinLabel)
        throw std::domain_error("cotree inner label must be 0 or 1");
    if (t.children.size() < 2)
        throw std::domain_error("cotree inner node needs at least two children");
    for (const Cotree& child : t.children) check_wellformed(child);
}

void collect_leaves(const Cotree& t, std::vector<int>& out) {
    if (t.is_leaf()) {
        out.push_back(t.vertex);
        return;
    }
    for (const Cotree& child : t.children) collect_leaves(child, out);
}

int min_leaf(const Cotree& t) {
    if (t.is_leaf()) return t.vertex;
    int best = min_leaf(t.children.front());
    for (std::size_t i = 1; i < t.children.size(); ++i)
        best = std::min(best, min_leaf(t.children[i]));
    return best;
}

// Adds the edges generated by t into `adjacency`; returns the leaf list.
std::vector<int> expand_edges(const Cotree& t, std::vector<std::vector<int>>& adjacency) {
    if (t.is_leaf()) return {t.vertex};
    std::vector<int> leaves;
    std::vector<std::vector<int>> per_child;
    per_child.reserve(t.children.size());
    for (const Cotree& child : t.children)
        per_child.push_back(expand_edges(child, adjacency));
    if (t.label == kJoinLabel) {
        for (std::size_t i = 0; i < per_child.size(); ++i)
            for (std::size_t j = i + 1; j < per_child.size(); ++j)
                for (int u : per_child[i])
                    for (int v : per_child[j]) {
                        adjacency[u].push_back(v);
                        adjacency[v].push_back(u);
                    }
    }
    for (auto& child_leaves : per_child)
        leaves.insert(leaves.end(), child_leaves.begin(), child_leaves.end());
    return leaves;
}

Cotree from_md_node(const MDNode& node) {
    if (node.is_leaf()) return cotree_leaf(node.vertex);
    if (node.kind == ModuleKind::Prime)
        throw std::domain_error("graph is not a cograph: prime module in MD tree");
    std::vector<Cotree> children;
    children.reserve(node.children.size());
    for (const MDNode& child : node.children) children.push_back(from_md_node(child));
    const int label = node.kind == ModuleKind::Series ? kJoinLabel : kUnionLabel;
    return cotree_node(label, std::move(children));
}

const MDNode* find_prime(const MDNode& node) {
    if (node.kind == ModuleKind::Prime) return &node;
    for (const MDNode& child : node.children)
        if (const MDNode* hit = find_prime(child)) return hit;
    return nullptr;
}

// Induced P4 in path order among the four vertices, if any.
bool quad_is_p4(const Graph& g, std::array<int, 4>& quad) {
    // try all 12 distinct path orders via permutations with first < last
    std::array<int, 4> p = quad;
    std::sort(p.begin(), p.end());
    do {
        if (p[0] > p[3]) continue;  // path reversal symmetry
        if (g.has_edge(p[0], p[1]) && g.has_edge(p[1], p[2]) && g.has_edge(p[2], p[3]) &&
            !g.has_edge(p[0], p[2]) && !g.has_edge(p[0], p[3]) && !g.has_edge(p[1], p[3])) {
            quad = p;
            return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

Cotree binarize(int label, std::vector<Cotree> items, const RefinePolicy& policy);

Cotree left_comb(int label, std::vector<Cotree> items) {
    Cotree acc = std::move(items.front());
    for (std::size_t i = 1; i < items.size(); ++i) {
        std::vector<Cotree> pair;
        pair.push_back(std::move(acc));
        pair.push_back(std::move(items[i]));
        acc = cotree_node(label, std::move(pair));
    }
    return acc;
}

Cotree balanced_split(int label, std::vector<Cotree> items) {
    if (items.size() == 1) return std::move(items.front());
    const std::size_t half = (items.size() + 1) / 2;
    std::vector<Cotree> left(std::make_move_iterator(items.begin()),
                             std::make_move_iterator(items.begin() + half));
    std::vector<Cotree> right(std::make_move_iterator(items.begin() + half),
                              std::make_move_iterator(items.end()));
    std::vector<Cotree> pair;
    pair.push_back(balanced_split(label, std::move(left)));
    pair.push_back(balanced_split(label, std::move(right)));
    return cotree_node(label, std::move(pair));
}

Cotree binarize(int label, std::vector<Cotree> items, const RefinePolicy& policy) {
    if (items.size() == 2) return cotree_node(label, std::move(items));
    if (std::holds_alternative<BalancedSplit>(policy))
        return balanced_split(label, std::move(items));
    if (const auto* sorted = std::get_if<ColorSorted>(&policy);
        sorted != nullptr && label == kUnionLabel) {
        std::stable_sort(items.begin(), items.end(), [&](const Cotree& a, const Cotree& b) {
            const auto la = cotree_leaves(a);
            const auto lb = cotree_leaves(b);
            return sorted->sigma->color_set(la).size() < sorted->sigma->color_set(lb).size();
        });
    }
    return left_comb(label, std::move(items));
}

Cotree refine_recursive(const Cotree& t, const RefinePolicy& policy) {
    if (t.is_leaf()) return t;
    std::vector<Cotree> children;
    children.reserve(t.children.size());
    for (const Cotree& child : t.children)
        children.push_back(refine_recursive(child, policy));
    return binarize(t.label, std::move(children), policy);
}

// Rebuilds a shape with one extra leaf inserted above its `target`-th node
// in preorder.
Cotree insert_leaf(const Cotree& node, int leaf_id, int label, int target,
                   int& counter) {
    const int my_index = counter++;
    if (my_index == target) {
        std::vector<Cotree> pair;
        pair.push_back(node);
        pair.push_back(cotree_leaf(leaf_id));
        return cotree_node(label, std::move(pair));
    }
    if (node.is_leaf()) return node;
    std::vector<Cotree> children;
    children.reserve(node.children.size());
    for (const Cotree& child : node.children)
        children.push_back(insert_leaf(child, leaf_id, label, target, counter));
    Cotree result;
    result.label = node.label;
    result.children = std::move(children);
    return result;
}

Cotree substitute_items(const Cotree& shape, const std::vector<Cotree>& items) {
    if (shape.is_leaf()) return items[shape.vertex];
    std::vector<Cotree> children;
    children.reserve(shape.children.size());
    for (const Cotree& child : shape.children)
        children.push_back(substitute_items(child, items));
    Cotree result;
    result.label = shape.label;
    result.children = std::move(children);
    return result;
}

// All rooted binary trees over the given subtrees (unordered children). The
// items stay opaque: shapes are enumerated over placeholder leaves by
// inserting one leaf at a time at each of the 2j-1 positions, giving
// (2k-3)!! shapes, and the subtrees are substituted afterwards.
std::vector<Cotree> all_shapes(int label, const std::vector<Cotree>& items) {
    const int k = static_cast<int>(items.size());
    std::vector<Cotree> shapes{cotree_leaf(0)};
    for (int next = 1; next < k; ++next) {
        std::vector<Cotree> extended;
        const int node_count = 2 * next - 1;
        for (const Cotree& shape : shapes) {
            for (int pos = 0; pos < node_count; ++pos) {
                int counter = 0;
                extended.push_back(insert_leaf(shape, next, label, pos, counter));
            }
        }
        shapes = std::move(extended);
    }
    std::vector<Cotree> trees;
    trees.reserve(shapes.size());
    for (const Cotree& shape : shapes) trees.push_back(substitute_items(shape, items));
    return trees;
}

// Cartesian product of the binary refinements of every child, combined with
// every shape over the refined children.
void enumerate_refinements(const Cotree& t, std::size_t limit, std::vector<Cotree>& out) {
    if (t.is_leaf()) {
        out.push_back(t);
        return;
    }
    std::vector<std::vector<Cotree>> child_options;
    child_options.reserve(t.children.size());
    for (const Cotree& child : t.children) {
        std::vector<Cotree> options;
        enumerate_refinements(child, limit, options);
        child_options.push_back(std::move(options));
    }
    std::vector<std::size_t> pick(child_options.size(), 0);
    while (true) {
        std::vector<Cotree> chosen;
        chosen.reserve(pick.size());
        for (std::size_t i = 0; i < pick.size(); ++i)
            chosen.push_back(child_options[i][pick[i]]);
        for (Cotree& shape : all_shapes(t.label, chosen)) {
            if (out.size() >= limit) return;
            out.push_back(std::move(shape));
        }
        // odometer over child choices
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == child_options[i].size()) {
            pick[i] = 0;
            ++i;
        }
        if (i == pick.size()) break;
    }
}

}  // namespace

Cotree cotree_leaf(int vertex) {
    Cotree t;
    t.vertex = vertex;
    t.label = -1;
    return t;
}

Cotree cotree_node(int label, std::vector<Cotree> children) {
    Cotree t;
    t.label = label;
    t.children = std::move(children);
    return t;
}

std::vector<int> cotree_leaves(const Cotree& t) {
    std::vector<int> leaves;
    collect_leaves(t, leaves);
    std::sort(leaves.begin(), leaves.end());
    return leaves;
}

bool is_binary(const Cotree& t) {
    if (t.is_leaf()) return true;
    if (t.children.size() != 2) return false;
    return is_binary(t.children[0]) && is_binary(t.children[1]);
}

bool is_cotree_of(const Graph& g, const Cotree& t) {
    try {
        return cograph_from_cotree(t) == g;
    } catch (const std::exception&) {
        return false;
    }
}

bool is_cograph(const Graph& g) { return is_cograph(g, nullptr); }

bool is_cograph(const Graph& g, std::array<int, 4>* p4_witness) {
    if (g.vertex_count() == 0)
        throw std::invalid_argument("cograph test needs at least one vertex");
    MDTree tree = modular_decomposition(g);
    const MDNode* prime = find_prime(tree.root);
    if (prime == nullptr) return true;
    if (p4_witness != nullptr) {
        // scan quadruples of the prime quotient, via one representative per
        // child; a prime graph on >= 4 vertices always contains a P4
        std::vector<int> reps;
        reps.reserve(prime->children.size());
        for (const MDNode& child : prime->children) reps.push_back(child.module.front());
        const int k = static_cast<int>(reps.size());
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                for (int c = b + 1; c < k; ++c)
                    for (int d = c + 1; d < k; ++d) {
                        std::array<int, 4> quad{reps[a], reps[b], reps[c], reps[d]};
                        if (quad_is_p4(g, quad)) {
                            *p4_witness = quad;
                            return false;
                        }
                    }
        throw std::logic_error("prime module without an induced P4");
    }
    return false;
}

Cotree discriminating_cotree(const Graph& g) {
    MDTree tree = modular_decomposition(g);
    return from_md_node(tree.root);
}

Cotree binary_refine(const Cotree& t, const RefinePolicy& policy) {
    check_wellformed(t);
    return refine_recursive(t, policy);
}

std::vector<Cotree> enumerate_binary_cotrees(const Graph& g, std::size_t limit) {
    Cotree base = discriminating_cotree(g);
    std::vector<Cotree> result;
    enumerate_refinements(base, limit, result);
    for (Cotree& t : result) t = canonical_cotree(t);
    return result;
}

Graph cograph_from_cotree(const Cotree& t) {
    check_wellformed(t);
    std::vector<int> leaves;
    collect_leaves(t, leaves);
    const int n = static_cast<int>(leaves.size());
    std::vector<char> seen(n, 0);
    for (int v : leaves) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("cotree leaves must be labeled 0..n-1");
        if (seen[v]) throw std::invalid_argument("duplicate cotree leaf label");
        seen[v] = 1;
    }
    std::vector<std::vector<int>> adjacency(n);
    expand_edges(t, adjacency);
    return Graph::from_adjacency(std::move(adjacency));
}

Cotree contract_cotree(const Cotree& t) {
    if (t.is_leaf()) return t;
    std::vector<Cotree> merged;
    for (const Cotree& child : t.children) {
        Cotree contracted = contract_cotree(child);
        if (!contracted.is_leaf() && contracted.label == t.label) {
            for (Cotree& grandchild : contracted.children)
                merged.push_back(std::move(grandchild));
        } else {
            merged.push_back(std::move(contracted));
        }
    }
    return cotree_node(t.label, std::move(merged));
}

Cotree canonical_cotree(const Cotree& t) {
    if (t.is_leaf()) return t;
    std::vector<Cotree> children;
    children.reserve(t.children.size());
    for (const Cotree& child : t.children) children.push_back(canonical_cotree(child));
    std::sort(children.begin(), children.end(),
              [](const Cotree& a, const Cotree& b) { return min_leaf(a) < min_leaf(b); });
    return cotree_node(t.label, std::move(children));
}

}  // namespace modcolor
