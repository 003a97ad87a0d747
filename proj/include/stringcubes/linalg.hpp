/**
 * Exact dense linear algebra over rationals for the small systems that show
 * up in vertex enumeration and smoothness checks: square solves, rank,
 * determinants, null spaces, and integer kernels via column Hermite reduction.
 */

#pragma once

#include "stringcubes/rational.hpp"

namespace stringcubes::linalg {

/** Solve A x = b exactly. Returns false when A is singular. */
bool solve_square(MatrixXr A, VectorXr b, VectorXr& x);

int rank(MatrixXr A);

Rational determinant(MatrixXr A);

/** Columns form a basis of the right null space {x : A x = 0}. */
MatrixXr nullspace(const MatrixXr& A);

/**
 * Scale a rational vector to a primitive integer vector pointing the same
 * way: clear denominators, divide by the gcd of the entries. The zero vector
 * maps to itself.
 */
VectorXz primitive(const VectorXr& v);

/**
 * Basis (as columns) of the saturated lattice {x in Z^n : A x = 0} for an
 * integer matrix A, computed by column Hermite reduction. The result spans
 * the full rational kernel and is closed under the integer points it
 * contains, which is what lattice-preserving coordinate charts need.
 */
MatrixXz integer_kernel(const MatrixXz& A);

}  // namespace stringcubes::linalg
