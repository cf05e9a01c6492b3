#pragma once

// Reference diagrams used across the test suite, with their expected
// invariants. The named virtual knots are pinned by the full set of
// published values they must reproduce (genus, colorability, both invariant
// triples, correction terms, Goeritz forms); the codes below were found by
// exhaustive search over all codes of their crossing number and are the
// canonical rotations whose face-0-white coloring matches the published
// coloring labelled xi.

namespace fixtures {

// Classical right-handed trefoil: genus 0, both triples (-2, 3, 0).
inline constexpr const char* kTrefoil = "O1+U2+O3+U1+O2+U3+";

// Two-crossing virtual knot on the torus; not checkerboard colorable.
inline constexpr const char* kVirtual21 = "O1+O2+U1+U2+";

// Three-crossing checkerboard colorable virtual knot of genus 1 with both
// determinants nonzero; triples (-2, 2, 0) and (-2, 1, 0).
inline constexpr const char* kVirtual35 = "O1+O2+O3+U1+U2+U3+";

// Three-crossing genus-1 knot with xi the single-white-face coloring:
// triples (2, 1, 0) / (0, 2, 0), mu -2 / +1, euler numbers 4 / -2.
inline constexpr const char* kVirtual37 = "O1+U2-O3-U1+O2-U3-";

// Five-crossing genus-2 knot whose xi-determinant vanishes even though the
// diagram is minimal: triples (1, 0, 1) / (0, 1, 0), mu -1 / 0.
inline constexpr const char* kVirtual52024 = "O1+O2+O3-O4-O5-U1+U4-U3-U2+U5-";

// Disk-band surface files, frozen in canonical serialized form. Feet
// arrangements were picked by exhaustive search as the least ones reproducing
// the pinned euler numbers and invariant triples; the twist counts and
// crossing lists pin the form matrices.

// Checkerboard surface of the genus-1 three-crossing knot:
// GL [[-1,1],[1,-3]], e = 4, triple (0, 2, 0).
inline constexpr const char* kSurface37F =
    "bands 2\n"
    "twists -1 -3\n"
    "feet 1 1 2 2\n"
    "X 1 2 +\n"
    "V 1 2\n";

// Its dual: GL [[1,1,0],[1,2,0],[0,0,1]], e = -2, triple (2, 1, 0).
inline constexpr const char* kSurface37Fdual =
    "bands 3\n"
    "twists 1 2 1\n"
    "feet 1 2 3 1 3 2\n"
    "X 1 2 +\n"
    "V 1 2\n";

// Checkerboard surfaces of a trefoil drawn on the torus (genus-1 diagram of
// a classical knot): GL [-3], e = 6, triple (2, 3, 0), and its dual
// GL diag(1,1,1,0), e = 0, triple (3, 0, 1).
inline constexpr const char* kSurfaceTrefoilTorusF =
    "bands 1\n"
    "twists -3\n"
    "feet 1 1\n";
inline constexpr const char* kSurfaceTrefoilTorusFdual =
    "bands 4\n"
    "twists 1 1 1 0\n"
    "feet 1 2 3 4 1 3 2 4\n";

// Spanning surface of a four-crossing genus-2 knot:
// GL [[-1,0,0,0],[0,0,0,1],[0,0,1,1],[0,1,1,2]], e = 0, triple (0, 1, 0).
inline constexpr const char* kSurface498 =
    "bands 4\n"
    "twists -1 0 1 2\n"
    "feet 1 1 2 3 3 4 2 4\n"
    "X 2 4 +\n"
    "V 2 4\n"
    "X 3 4 +\n"
    "V 3 4\n";

}  // namespace fixtures
