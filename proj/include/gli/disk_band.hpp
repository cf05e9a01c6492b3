#pragma once

#include <array>
#include <string>
#include <vector>

#include "gli/goeritz.hpp"
#include "gli/matrix.hpp"

namespace gli {

// A crossing between two band images in the plane. Classical crossings carry
// an over/under choice and a sign; virtual crossings carry neither and never
// contribute to linking data.
struct BandEvent {
    enum class Kind { Classical, Virtual };
    Kind kind = Kind::Classical;
    int a = 0;     // Classical: the band passing over; Virtual: either of the pair
    int b = 0;     // Classical: the band passing under; Virtual: the other
    int sign = 0;  // +1 or -1 when classical, 0 when virtual
    bool operator==(const BandEvent&) const = default;
};

// A disk with twisted bands attached along its boundary. feet lists the
// 2 * n_bands band ids in cyclic order around the disk; the first occurrence
// of an id is that band's foot A, the second its foot B, and the band core is
// oriented from A to B. Crossing signs in events are taken relative to those
// core orientations. Twists count signed half twists, right-handed when >= 0.
struct DiskBandSurface {
    int n_bands = 0;
    std::vector<int> twists;
    std::vector<int> feet;
    std::vector<BandEvent> events;
    bool operator==(const DiskBandSurface&) const = default;
};

// Shape checks: twist/feet lengths, every band with exactly two feet, event
// ids in range and distinct, classical signs +-1. Throws StructureError or,
// for out-of-range band ids, IndexError.
void validate(const DiskBandSurface& s);

// Line-oriented text form:
//   bands <n>
//   twists <k_1> ... <k_n>
//   feet <2n band ids, 1-based>
//   X <over> <under> <+|->      one line per classical crossing, in order
//   V <a> <b>                   one line per virtual crossing, in order
// serialize_dbs emits the canonical form (single spaces, trailing newline);
// parse_dbs accepts any whitespace and blank lines but is otherwise strict.
DiskBandSurface parse_dbs(const std::string& text);
std::string serialize_dbs(const DiskBandSurface& s);

// The symmetric form carried by the band cores: diagonal entry i is the twist
// count of band i, off-diagonal entry (i, j) the sum of classical crossing
// signs between bands i and j regardless of which passes over.
Matrix gl_matrix(const DiskBandSurface& s);

// A virtual link with a framing on every component. Components are indexed
// 0..n-1; the matrix holds the pairwise linking numbers with the framings on
// its diagonal, which is all the structure the operations here consume.
struct FramedVirtualLink {
    std::vector<Int> framings;
    Matrix matrix;
    bool operator==(const FramedVirtualLink&) const = default;
};

// Doubles each band core with its reflection. A classical crossing of band i
// over band j puts the upper copy of i over j and the reflected copy of j
// over i, so both mixed linking numbers pick up the same sign and the linking
// matrix of the doubled link is exactly gl_matrix(s).
FramedVirtualLink kirby_diagram(const DiskBandSurface& s);

// Slide component i over component j (sign +1) or its reverse (-1): adds or
// subtracts row and column j to row and column i, which updates the framing
// of i to fr_i + fr_j +- 2 vlk(i, j). Throws IndexError when i == j or out of
// range.
FramedVirtualLink handle_slide(const FramedVirtualLink& l, int i, int j, int sign);

// Combinatorics of the surface boundary. dir[i] holds the directions of the
// two boundary arcs running along band i, +1 when an arc is traversed
// parallel to the core (foot A toward foot B) and -1 otherwise; each closed
// boundary curve is traced starting from its least corner.
struct BandBoundary {
    int components = 0;
    std::vector<std::array<int, 2>> dir;
};
BandBoundary trace_boundary(const DiskBandSurface& s);

// Euler number of the surface: minus the linking number of the boundary with
// its push-off just inside the surface.
int euler_number(const DiskBandSurface& s);

// sigma = signature(gl_matrix) + e/2, det = |det(gl_matrix)|, nullity of
// gl_matrix; mu is recorded as -e/2. Throws OddEuler if e comes out odd,
// which cannot happen for well-formed data and would signal a bookkeeping bug.
InvariantTriple surface_invariants(const DiskBandSurface& s);

// Builds a surface whose gl_matrix equals m (exactly) and whose boundary is a
// single closed curve. m must be symmetric and allowable: even size, or an
// odd diagonal entry somewhere. Throws NotAllowable otherwise.
DiskBandSurface realize(const Matrix& m);

}  // namespace gli
