#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gli {

using Int = mpz_class;
using Rat = mpq_class;

// Dense square matrix with exact integer entries. Row-major storage.
// The 0x0 matrix is a legitimate value: determinant 1, signature 0,
// nullity 0 (the form on a zero-dimensional lattice).
class Matrix {
  public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static Matrix from_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return n_; }

    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    bool is_symmetric() const;

    // Principal submatrix on the given (strictly increasing) index set.
    Matrix principal(const std::vector<int>& idx) const;

    // Copy with row k and column k removed.
    Matrix without(int k) const;

    bool operator==(const Matrix&) const = default;

  private:
    int n_ = 0;
    std::vector<Int> a_;
};

// Exact determinant via Bareiss fraction-free elimination.
Int determinant(const Matrix& m);

// Rank over the rationals (exact), and nullity = size - rank.
int rank(const Matrix& m);
int nullity(const Matrix& m);

// Signature of a symmetric integer matrix, computed by symmetric congruence
// diagonalization over Q. Throws NotSymmetric.
int signature(const Matrix& m);

// Signature via a chain of nested principal minors d_0 = 1, d_1, ..., d_r
// (r = rank) in which no two consecutive determinants vanish:
//     sigma = sum_i sign(d_i * d_{i+1}).
// Independent of signature(); kept as a second route so the two can be
// cross-checked. Requires size() <= 12. Throws NotSymmetric.
int signature_minor_chain(const Matrix& m);

// P^T * M * P. Throws NotUnimodular unless |det P| == 1, IndexError on
// size mismatch.
Matrix congruent(const Matrix& m, const Matrix& p);

// Text form: rows of comma-separated integers, rows joined by ';'.
// Example: "-3,-1;-1,-1". Whitespace around tokens is ignored.
// Throws SyntaxError on malformed text, StructureError if not square.
Matrix parse_matrix(const std::string& text);
std::string format_matrix(const Matrix& m);

}  // namespace gli
