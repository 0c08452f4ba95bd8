#pragma once

// Reference computations used only by tests. They deliberately avoid the
// library's own solution paths: dense Gaussian elimination instead of trace
// projections or SVD, and Eigen's general (non-Hermitian) eigensolver
// instead of the self-adjoint one.

#include <array>
#include <vector>

#include "gendirac/clifford.hpp"
#include "gendirac/random.hpp"

namespace gendirac::testing {

using DenseMatrix = std::vector<std::vector<Complex>>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
std::vector<Complex> solve_dense(DenseMatrix a, std::vector<Complex> b);

/// Numerical rank by row reduction with full pivoting; entries below
/// `tol * max|a|` count as zero.
int rank_dense(DenseMatrix a, double tol);

Complex determinant(ComplexMatrix4 m);

/// Basis coefficients found by solving the 16x16 system sum_i x_i E_i = M,
/// in the library's basis order.
std::array<Complex, 16> decompose_by_elimination(const ComplexMatrix4& m);

/// Eigenvalues from Eigen::ComplexEigenSolver, real parts sorted ascending.
std::array<double, 4> general_eigenvalues(const ComplexMatrix4& m);

ComplexMatrix4 random_matrix(Rng& rng, double scale = 1.0);
Spinor random_unit_spinor(Rng& rng);

}  // namespace gendirac::testing
