#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gli/gauss_code.hpp"

namespace gli {

// Diagram-level symmetries and local moves. ReverseComponent and
// CrossingChange take the component or crossing index in `index`; the
// mirrors ignore it.
struct Transform {
    enum class Kind { VerticalMirror, HorizontalMirror, ReverseComponent, CrossingChange };
    Kind kind = Kind::VerticalMirror;
    int index = 0;
};

inline Transform vertical_mirror() { return {Transform::Kind::VerticalMirror, 0}; }
inline Transform horizontal_mirror() { return {Transform::Kind::HorizontalMirror, 0}; }
inline Transform reverse_component(int i) { return {Transform::Kind::ReverseComponent, i}; }
inline Transform crossing_change(int c) { return {Transform::Kind::CrossingChange, c}; }

// VerticalMirror flips every pass between over and under and negates every
// sign (the diagram seen from behind the page); HorizontalMirror negates the
// signs only (the diagram reflected in the page). ReverseComponent reverses
// the cyclic pass order of one component and negates the signs of crossings
// shared with other components, since those see one strand reversed.
// CrossingChange flips over/under and the sign at a single crossing. Throws
// IndexError for a bad component or crossing index.
GaussCode apply(const GaussCode& code, const Transform& t);

// Checks produce one line per verified property:
//   PASS|FAIL <property> <code-hash> <details>
using Report = std::vector<std::string>;
bool all_pass(const Report& r);

// Both mirrors must negate both signatures while preserving determinants and
// nullities. The vertical mirror keeps the face structure pointwise, so its
// colorings are compared slot by slot; the horizontal mirror rebuilds the
// faces, so its two triples are compared as an unordered pair. Requires a
// connected colorable code; errors propagate.
Report check_mirror_properties(const GaussCode& code);

// Changing a positive crossing to negative may only keep each signature or
// grow it by two, with the mixed case pinned by the nullities: equal
// nullities force a shift of 0 or 2, unequal nullities force exactly 1. The
// projection is unchanged, so both diagrams share their colorings. Throws
// NotPositive unless the crossing is positive, IndexError if it does not
// exist.
Report check_crossing_change(const GaussCode& code, int crossing);

// Reversing one component of a link must shift both signatures by the sum of
// its linking numbers with the rest of the link, leaving determinants and
// nullities alone. Compared as unordered triple pairs.
Report check_orientation_reversal(const GaussCode& code, int component);

// Deterministic corpus of `target` distinct connected, checkerboard
// colorable codes with the given component count and at most max_crossings
// crossings. The same seed always yields the same corpus.
std::vector<GaussCode> sample_corpus(int target, std::uint64_t seed, int components = 1,
                                     int max_crossings = 6);

}  // namespace gli
