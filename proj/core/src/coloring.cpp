#include "modcolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace modcolor {

Coloring::Coloring(std::vector<int> colors) : colors_(std::move(colors)) {
    for (int c : colors_)
        if (c <= 0) throw std::invalid_argument("colors must be positive");
}

std::vector<int> Coloring::palette() const {
    std::vector<int> result(colors_);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

std::vector<int> Coloring::color_set(std::span<const int> vertices) const {
    std::vector<int> result;
    result.reserve(vertices.size());
    for (int v : vertices) {
        if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
        result.push_back(colors_[v]);
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

bool is_proper_coloring(const Graph& g, const Coloring& sigma) {
    return is_proper_coloring(g, sigma, nullptr);
}

bool is_proper_coloring(const Graph& g, const Coloring& sigma,
                        std::pair<int, int>* bad_edge) {
    if (sigma.size() != g.vertex_count())
        throw std::invalid_argument("coloring does not cover the vertex set");
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v : g.neighbors(u)) {
            if (u < v && sigma.at(u) == sigma.at(v)) {
                if (bad_edge) *bad_edge = {u, v};
                return false;
            }
        }
    }
    return true;
}

Coloring canonicalize_coloring(const Coloring& sigma) {
    std::unordered_map<int, int> rename;
    rename.reserve(sigma.size());
    std::vector<int> result(sigma.size());
    int fresh = 0;
    for (int v = 0; v < sigma.size(); ++v) {
        auto [it, inserted] = rename.try_emplace(sigma.at(v), fresh + 1);
        if (inserted) ++fresh;
        result[v] = it->second;
    }
    return Coloring(std::move(result));
}

}  // namespace modcolor
