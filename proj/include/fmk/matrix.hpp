#pragma once

#include <vector>

#include "fmk/rational.hpp"

namespace fmk {

// Small dense rational matrices. Everything here is exact; sizes are at desk
// scale (d <= 4 for data matrices, a few dozen rows for Gram matrices), so a
// plain vector-of-rows representation is enough.
using Matrix = std::vector<std::vector<Rational>>;
using Vector = std::vector<Rational>;

Matrix zero_matrix(int rows, int cols);
Matrix identity_matrix(int n);
// Rank-one matrix E_{ij} = e_i e_j^T (0-based indices).
Matrix unit_matrix(int n, int i, int j);

Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_sub(const Matrix& a, const Matrix& b);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Rational& s, const Matrix& a);
Matrix mat_transpose(const Matrix& a);
Vector mat_apply(const Matrix& a, const Vector& v);

bool mat_equal(const Matrix& a, const Matrix& b);
bool is_symmetric(const Matrix& a);
bool is_zero_matrix(const Matrix& a);

Rational dot(const Vector& a, const Vector& b);

// Exact determinant by fraction-free-ish Gaussian elimination.
Rational determinant(Matrix a);

// Positive semidefiniteness of a symmetric matrix by exact LDL^T in natural
// order. A PSD matrix with a zero diagonal pivot must have the whole
// row/column zero, so no pivot search is needed: a zero pivot with a nonzero
// row, or a negative pivot, is a certificate of indefiniteness.
bool is_positive_semidefinite(Matrix a);

// Basis of the null space, as rows. Exact Gauss-Jordan.
std::vector<Vector> null_space(Matrix a);

}  // namespace fmk
