/// @file linsolve.hpp
/// @brief Exact dense linear algebra: Gaussian elimination, kernels, inverses.
///
/// Everything works over the same exact scalar type as the rest of the library,
/// so solutions are exact and membership/uniqueness questions are decidable.

#pragma once

#include <optional>
#include <vector>

#include "hopfyd/scalar.hpp"

namespace hopfyd {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

/// Row-reduce in place to reduced row echelon form; returns pivot columns.
std::vector<int> rowReduce(Matrix& m);

/// Rank of a matrix.
int matrixRank(Matrix m);

/// One exact solution of A x = b, or nullopt if inconsistent.  When the system
/// is underdetermined the solution with zero free variables is returned, which
/// makes the result deterministic.
std::optional<Vector> solveLinear(const Matrix& a, const Vector& b);

/// Deterministic basis of the null space (reduced echelon parametrization,
/// free columns in increasing order).
std::vector<Vector> kernelBasis(const Matrix& a);

/// Exact inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverseMatrix(const Matrix& a);

Vector matVec(const Matrix& a, const Vector& x);

}  // namespace hopfyd
