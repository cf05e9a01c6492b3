#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gli/surface_diagram.hpp"

namespace gli {

enum class FaceColor : uint8_t { White = 0, Black = 1 };

// An assignment of colors to the faces of a diagram such that faces sharing
// an edge get opposite colors.
struct Coloring {
    std::vector<FaceColor> face;  // indexed by face id
    bool operator==(const Coloring&) const = default;

    bool white(int f) const { return face[f] == FaceColor::White; }
};

// The dual pair of checkerboard colorings (xi, xi*) of a connected diagram,
// xi being the one in which face 0 is White. Returns nullopt when the
// face-adjacency graph is not bipartite (the diagram is not checkerboard
// colorable). Throws NotConnected on split diagrams.
std::optional<std::pair<Coloring, Coloring>> checkerboard_colorings(const SurfaceDiagram& d);

// Local data of one crossing under a coloring. eta records which diagonal
// quadrant pair is black relative to the over/under strands; the type
// decides whether the crossing contributes to the mu correction.
struct CrossingColorData {
    int eta = 0;
    bool type2 = false;
    int white_a = -1, white_b = -1;  // faces owning the two white quadrants
};

std::vector<CrossingColorData> crossing_color_data(const SurfaceDiagram& d, const Coloring& col);

// mu(coloring) = sum of eta over type II crossings.
int mu_correction(const SurfaceDiagram& d, const Coloring& col);

}  // namespace gli
