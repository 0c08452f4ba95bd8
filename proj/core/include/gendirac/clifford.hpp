#pragma once

// Gamma matrices, the 16-element Clifford basis and basis decomposition.
//
// Conventions: Dirac representation with an explicit factor i on the
// spatial gammas,
//
//     gamma^0 = diag(I, -I),   gamma^j = [[0, i sigma^j], [-i sigma^j, 0]],
//
// so every gamma^mu is Hermitian and squares to +I, and
// {gamma^mu, gamma^nu} = 2 delta^{mu nu} I. Covariant gammas are
// gamma_mu = (gamma^0, -gamma^j).

#include <array>
#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace gendirac {

using Complex = std::complex<double>;
using ComplexMatrix2 = Eigen::Matrix<Complex, 2, 2>;
using ComplexMatrix4 = Eigen::Matrix<Complex, 4, 4>;
using Spinor = Eigen::Matrix<Complex, 4, 1>;
using TwoSpinor = Eigen::Matrix<Complex, 2, 1>;

/// Four complex components indexed by a spacetime index 0..3.
using ComplexVec4 = std::array<Complex, 4>;

inline constexpr double kAlgebraTolerance = 1e-12;

/// Pauli matrix sigma^j, j in {1,2,3}.
const ComplexMatrix2& pauli(int j);

/// Contravariant gamma^mu, mu in {0,1,2,3}. Throws std::out_of_range.
const ComplexMatrix4& gamma(int mu);

/// Covariant gamma_mu = eta_{mu nu} gamma^nu.
ComplexMatrix4 gamma_lower(int mu);

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 (anti-Hermitian here).
const ComplexMatrix4& gamma5();

/// sigma^{mu nu} = (i/2)[gamma^mu, gamma^nu].
ComplexMatrix4 sigma(int mu, int nu);

/// gamma^5 gamma^mu.
ComplexMatrix4 gamma5_gamma(int mu);

ComplexMatrix4 anticommutator(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs);
ComplexMatrix4 commutator(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs);

/// Largest entry magnitude.
double max_abs(const ComplexMatrix4& m);

bool approx_equal(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs,
                  double tol = kAlgebraTolerance);

bool is_hermitian(const ComplexMatrix4& m, double tol = kAlgebraTolerance);

/// Index pairs (mu, nu), mu < nu, in the order used by BasisCoefficients::b.
inline constexpr std::array<std::array<int, 2>, 6> kSigmaPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Coefficients of a 4x4 matrix in the basis
/// { I, sigma^{mu nu} (mu<nu), gamma^mu, gamma^5 gamma^mu, gamma^5 }.
struct BasisCoefficients {
  Complex a{};
  std::array<Complex, 6> b{};
  ComplexVec4 c{};
  ComplexVec4 d{};
  Complex e5{};

  ComplexMatrix4 reconstruct() const;

  /// Hermiticity read off the coefficients: every basis element except
  /// gamma^5 is Hermitian and gamma^5 is anti-Hermitian, so the matrix is
  /// Hermitian iff a, b, c, d are real and e5 is purely imaginary.
  bool hermitian(double tol = kAlgebraTolerance) const;
};

/// Unique decomposition in the 16-element basis via trace inner products
/// (the basis is trace-orthogonal with tr(E_i^dagger E_j) = 4 delta_ij).
/// Throws std::logic_error if the basis table fails its orthogonality check.
BasisCoefficients basis_decompose(const ComplexMatrix4& m);

struct BasisElement {
  std::string_view name;
  ComplexMatrix4 matrix;
};

/// The 16 basis elements in coefficient order: I, sigma^{mu nu}, gamma^mu,
/// gamma^5 gamma^mu, gamma^5.
const std::array<BasisElement, 16>& clifford_basis();

/// max |tr(E_i^dagger E_j)/4 - delta_ij| over the basis table. Zero up to
/// roundoff for an intact table.
double basis_orthogonality_defect();

}  // namespace gendirac
