#pragma once

#include <string>
#include <vector>

#include "gli/coloring.hpp"
#include "gli/matrix.hpp"
#include "gli/surface_diagram.hpp"

namespace gli {

// The symmetric integer form carried by the white faces of a checkerboard
// coloring, together with the correction term that turns its signature into
// a link invariant.
struct GoeritzForm {
    Matrix full;     // one row/col per white face, zero row sums
    Matrix reduced;  // full with one row and column struck out
    std::vector<int> white_faces;  // face ids, ascending
    int deleted = 0;               // index into white_faces that was struck
    int mu = 0;
};

// delete_index selects which white face to strike (the resulting invariants
// do not depend on the choice). Throws IndexError when out of range.
GoeritzForm goeritz_form(const SurfaceDiagram& d, const Coloring& col, int delete_index = 0);

struct InvariantTriple {
    int sigma = 0;
    Int det = 0;
    int nullity = 0;
    int mu = 0;

    // mu is bookkeeping for how sigma was reached, not part of the invariant:
    // two pipelines may agree on the triple while correcting by different
    // amounts.
    bool operator==(const InvariantTriple& o) const {
        return sigma == o.sigma && det == o.det && nullity == o.nullity;
    }
};

// sigma = signature(reduced) - mu, det = |det(reduced)|, nullity of reduced.
InvariantTriple coloring_invariants(const SurfaceDiagram& d, const Coloring& col);

// Euler number of the spanning surface the coloring describes (-2 mu).
int euler_number_checkerboard(const SurfaceDiagram& d, const Coloring& col);

enum class GenusCertificate { Minimal, Inconclusive, NotColorable };
std::string to_string(GenusCertificate c);

// Minimal when both checkerboard determinants are nonzero, which certifies
// that the diagram's surface realizes the smallest supporting genus.
GenusCertificate genus_certificate(const SurfaceDiagram& d);

}  // namespace gli
