// Small exact linear algebra over integer matrices.

#ifndef HURWITZ_LINALG_HPP
#define HURWITZ_LINALG_HPP

#include "hurwitz/arith.hpp"

#include <cstddef>
#include <vector>

namespace hurwitz {

using IntMatrix = std::vector<IntVector>;            // row-major
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Bareiss fraction-free determinant of a square integer matrix.
Int determinant(IntMatrix m);

std::size_t rank(const IntMatrix& m);

/// Reduced row echelon form; returns the pivot column of each nonzero row.
/// Zero rows are removed from `m`.
std::vector<std::size_t> rref(RationalMatrix& m);

/// Basis of the integer kernel {x : m x = 0}, one primitive vector per free
/// column of the echelon form, oriented so the free entry is positive.
std::vector<IntVector> integer_kernel(const IntMatrix& m, std::size_t cols);

/// Coefficients c with sum_i c_i p_i = 0 and sum_i c_i = 0 when the points
/// span an affine space of dimension size()-2 (a unique dependence up to
/// scale); primitive, first nonzero entry positive.  Empty when the points are
/// affinely independent.  Throws Error(InvalidArgument) if the dependence space
/// has dimension > 1.
IntVector affine_dependence(const std::vector<const IntVector*>& points);

/// Affine rank (dimension of the affine span) of a nonempty point set.
std::size_t affine_dimension(const std::vector<const IntVector*>& points);

/// Normal of the hyperplane through k points in Z^k given as k-1 difference
/// vectors (generalized cross product); zero when they are dependent.
IntVector cofactor_normal(const IntMatrix& differences);

Int dot(const IntVector& a, const IntVector& b);

}  // namespace hurwitz

#endif
