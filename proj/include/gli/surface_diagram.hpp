#pragma once

#include <string>
#include <vector>

#include "gli/gauss_code.hpp"

namespace gli {

// The cellular embedding a Gauss code determines: one 4-valent vertex per
// classical crossing, one edge per strand segment, and the counterclockwise
// dart order at each vertex fixed by the crossing sign. Faces are the orbits
// of sigma-after-alpha, and the genus of the resulting closed oriented
// surface is an invariant of the code.
//
// Dart numbering: global pass p owns the out-dart 2p (leaving its crossing
// along the strand) and the in-dart 2p+1 (arriving at its crossing).
// Rotation at a positive crossing, counterclockwise: under-in, over-in,
// under-out, over-out; at a negative crossing the mirror order.
//
// Components with zero crossings contribute no darts; each lives on its own
// sphere summand and contributes two (empty) faces, listed after all
// dart-bearing faces.
class SurfaceDiagram {
  public:
    explicit SurfaceDiagram(const GaussCode& code);

    const GaussCode& code() const { return code_; }
    int crossing_count() const { return static_cast<int>(code_.signs.size()); }
    int dart_count() const { return static_cast<int>(alpha_.size()); }

    int alpha(int d) const { return alpha_[d]; }  // other end of the edge
    int sigma(int d) const { return sigma_[d]; }  // next dart ccw at the vertex
    int vertex_of(int d) const { return vertex_[d]; }

    // The four darts of a crossing by role.
    int over_out(int x) const { return 2 * over_pass_[x]; }
    int over_in(int x) const { return 2 * over_pass_[x] + 1; }
    int under_out(int x) const { return 2 * under_pass_[x]; }
    int under_in(int x) const { return 2 * under_pass_[x] + 1; }

    // Face cycles in canonical form: each cycle rotated to start at its
    // least dart, cycles sorted by that dart; empty cycles (unknot spheres)
    // come last. Face ids are indices into this list.
    const std::vector<std::vector<int>>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of_dart(int d) const { return face_of_dart_[d]; }

    // Face owning the quadrant between dart d and sigma(d) at their vertex.
    int face_of_corner(int d) const { return face_of_corner_[d]; }

    // Sum of component genera (a single number; diagrams of interest are
    // connected, where this is just the genus).
    int genus() const { return genus_; }

    bool is_connected() const { return connected_; }
    int unknot_components() const { return unknot_components_; }

    // Stable text dump (darts, rotation, faces) for golden tests.
    std::string debug_dump() const;

  private:
    GaussCode code_;
    std::vector<int> alpha_, sigma_, vertex_;
    std::vector<int> over_pass_, under_pass_;  // global pass index per crossing
    std::vector<std::vector<int>> faces_;
    std::vector<int> face_of_dart_, face_of_corner_;
    int genus_ = 0;
    int unknot_components_ = 0;
    bool connected_ = true;
};

}  // namespace gli
