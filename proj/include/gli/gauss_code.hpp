#pragma once

#include <string>
#include <vector>

#include "gli/matrix.hpp"

namespace gli {

// One pass of a strand through a classical crossing.
struct Pass {
    int crossing = 0;  // dense 0-based crossing id
    bool over = false;
    bool operator==(const Pass&) const = default;
};

// A virtual link diagram given combinatorially: per component the cyclic
// sequence of over/under passes, plus one sign per crossing. Virtual
// crossings are not recorded (they carry no information at this level).
struct GaussCode {
    std::vector<std::vector<Pass>> components;
    std::vector<int> signs;  // +1 / -1 per crossing

    int crossing_count() const { return static_cast<int>(signs.size()); }
    int component_count() const { return static_cast<int>(components.size()); }
    bool operator==(const GaussCode&) const = default;
};

// Text grammar: components separated by ';', each a sequence of tokens
// O<id><sign> / U<id><sign> with sign '+' or '-'; whitespace is ignored.
// Crossing ids are renumbered densely by first appearance, so "O7+U7+"
// parses the same as "O1+U1+". Every crossing must appear exactly once as
// O and once as U, with matching signs.
//
// Throws SyntaxError for malformed tokens, StructureError for violations
// of the pairing rules or an input with no components.
GaussCode parse_gauss_code(const std::string& text);

// Inverse of parse_gauss_code: components in index order, passes from the
// stored head, ids printed 1-based. parse(serialize(c)) == c for any code
// whose ids are already dense and in first-appearance order.
std::string serialize_gauss_code(const GaussCode& code);

// vlk(i,j) = sum of the signs of classical crossings at which component i
// passes over component j. Diagonal entries are the self-writhes. Not
// symmetric in general.
Matrix vlk_matrix(const GaussCode& code);

// Total linking lambda(L) = sum over ordered pairs i != j of vlk(i,j).
Int total_linking(const GaussCode& code);

// Sum of vlk(i,j) + vlk(j,i) over j != i: by how much sigma shifts when the
// orientation of component i is reversed.
Int orientation_reversal_shift(const GaussCode& code, int component);

// Stable 8-hex-digit FNV-1a hash of the serialized code, used to key
// property-check report lines.
std::string code_hash(const GaussCode& code);

}  // namespace gli
