#pragma once

#include <span>
#include <utility>
#include <vector>

#include "modcolor/graph.hpp"

namespace modcolor {

// Total map vertex id -> positive color id. Color-set queries return sorted
// vectors of distinct colors. Immutable after construction.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> colors);

    int size() const { return static_cast<int>(colors_.size()); }
    int at(int v) const { return colors_[v]; }
    const std::vector<int>& values() const { return colors_; }

    // sigma(V): sorted distinct colors in use.
    std::vector<int> palette() const;
    int palette_size() const { return static_cast<int>(palette().size()); }

    // sigma(W) for a vertex subset.
    std::vector<int> color_set(std::span<const int> vertices) const;

    friend bool operator==(const Coloring&, const Coloring&) = default;

private:
    std::vector<int> colors_;
};

// True iff no edge has equal colors on both endpoints. The overload with
// `bad_edge` reports the first monochromatic edge found.
bool is_proper_coloring(const Graph& g, const Coloring& sigma);
bool is_proper_coloring(const Graph& g, const Coloring& sigma,
                        std::pair<int, int>* bad_edge);

// Renames colors to 1..k by first appearance in vertex order. Preserves the
// partition into color classes; idempotent.
Coloring canonicalize_coloring(const Coloring& sigma);

}  // namespace modcolor
