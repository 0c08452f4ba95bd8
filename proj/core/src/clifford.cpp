#include "gendirac/clifford.hpp"

#include <stdexcept>
#include <string>

namespace gendirac {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_spacetime_index(int mu) {
  if (mu < 0 || mu > 3) {
    throw std::out_of_range("spacetime index must be in 0..3, got " + std::to_string(mu));
  }
}

std::array<ComplexMatrix2, 3> make_pauli() {
  std::array<ComplexMatrix2, 3> s;
  s[0] << 0.0, 1.0, 1.0, 0.0;
  s[1] << 0.0, -kI, kI, 0.0;
  s[2] << 1.0, 0.0, 0.0, -1.0;
  return s;
}

const std::array<ComplexMatrix2, 3>& pauli_table() {
  static const auto table = make_pauli();
  return table;
}

std::array<ComplexMatrix4, 4> make_gammas() {
  std::array<ComplexMatrix4, 4> g;
  g[0].setZero();
  g[0].diagonal() << 1.0, 1.0, -1.0, -1.0;
  for (int j = 1; j <= 3; ++j) {
    const ComplexMatrix2& s = pauli_table()[j - 1];
    g[j].setZero();
    g[j].topRightCorner<2, 2>() = kI * s;
    g[j].bottomLeftCorner<2, 2>() = -kI * s;
  }
  return g;
}

const std::array<ComplexMatrix4, 4>& gamma_table() {
  static const auto table = make_gammas();
  return table;
}

std::array<BasisElement, 16> make_basis() {
  std::array<BasisElement, 16> basis;
  basis[0] = {"I", ComplexMatrix4::Identity()};
  static constexpr std::array<std::string_view, 6> sigma_names{
      "sigma01", "sigma02", "sigma03", "sigma12", "sigma13", "sigma23"};
  for (std::size_t i = 0; i < kSigmaPairs.size(); ++i) {
    basis[1 + i] = {sigma_names[i], sigma(kSigmaPairs[i][0], kSigmaPairs[i][1])};
  }
  static constexpr std::array<std::string_view, 4> gamma_names{"gamma0", "gamma1", "gamma2",
                                                               "gamma3"};
  static constexpr std::array<std::string_view, 4> g5g_names{"gamma5gamma0", "gamma5gamma1",
                                                             "gamma5gamma2", "gamma5gamma3"};
  for (int mu = 0; mu < 4; ++mu) {
    basis[7 + mu] = {gamma_names[mu], gamma(mu)};
    basis[11 + mu] = {g5g_names[mu], gamma5_gamma(mu)};
  }
  basis[15] = {"gamma5", gamma5()};
  return basis;
}

}  // namespace

const ComplexMatrix2& pauli(int j) {
  if (j < 1 || j > 3) {
    throw std::out_of_range("Pauli index must be in 1..3, got " + std::to_string(j));
  }
  return pauli_table()[j - 1];
}

const ComplexMatrix4& gamma(int mu) {
  check_spacetime_index(mu);
  return gamma_table()[mu];
}

ComplexMatrix4 gamma_lower(int mu) {
  check_spacetime_index(mu);
  return mu == 0 ? gamma(0) : ComplexMatrix4(-gamma(mu));
}

const ComplexMatrix4& gamma5() {
  static const ComplexMatrix4 g5 = kI * gamma(0) * gamma(1) * gamma(2) * gamma(3);
  return g5;
}

ComplexMatrix4 sigma(int mu, int nu) {
  return (kI / 2.0) * commutator(gamma(mu), gamma(nu));
}

ComplexMatrix4 gamma5_gamma(int mu) { return gamma5() * gamma(mu); }

ComplexMatrix4 anticommutator(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs) {
  return lhs * rhs + rhs * lhs;
}

ComplexMatrix4 commutator(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs) {
  return lhs * rhs - rhs * lhs;
}

double max_abs(const ComplexMatrix4& m) { return m.cwiseAbs().maxCoeff(); }

bool approx_equal(const ComplexMatrix4& lhs, const ComplexMatrix4& rhs, double tol) {
  return max_abs(lhs - rhs) <= tol;
}

bool is_hermitian(const ComplexMatrix4& m, double tol) {
  return max_abs(m - m.adjoint()) <= tol;
}

const std::array<BasisElement, 16>& clifford_basis() {
  static const auto basis = make_basis();
  return basis;
}

double basis_orthogonality_defect() {
  const auto& basis = clifford_basis();
  double defect = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Complex overlap = (basis[i].matrix.adjoint() * basis[j].matrix).trace() / 4.0;
      defect = std::max(defect, std::abs(overlap - (i == j ? 1.0 : 0.0)));
    }
  }
  return defect;
}

BasisCoefficients basis_decompose(const ComplexMatrix4& m) {
  static const double defect = basis_orthogonality_defect();
  if (defect > 1e-13) {
    throw std::logic_error("Clifford basis table is not orthonormal (defect " +
                           std::to_string(defect) + ")");
  }
  const auto& basis = clifford_basis();
  std::array<Complex, 16> coeff;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    coeff[i] = (basis[i].matrix.adjoint() * m).trace() / 4.0;
  }
  BasisCoefficients out;
  out.a = coeff[0];
  for (std::size_t i = 0; i < 6; ++i) out.b[i] = coeff[1 + i];
  for (std::size_t mu = 0; mu < 4; ++mu) {
    out.c[mu] = coeff[7 + mu];
    out.d[mu] = coeff[11 + mu];
  }
  out.e5 = coeff[15];
  return out;
}

ComplexMatrix4 BasisCoefficients::reconstruct() const {
  const auto& basis = clifford_basis();
  ComplexMatrix4 m = a * basis[0].matrix;
  for (std::size_t i = 0; i < 6; ++i) m += b[i] * basis[1 + i].matrix;
  for (std::size_t mu = 0; mu < 4; ++mu) {
    m += c[mu] * basis[7 + mu].matrix;
    m += d[mu] * basis[11 + mu].matrix;
  }
  m += e5 * basis[15].matrix;
  return m;
}

bool BasisCoefficients::hermitian(double tol) const {
  auto real = [tol](Complex z) { return std::abs(z.imag()) <= tol; };
  if (!real(a)) return false;
  for (const Complex& z : b) {
    if (!real(z)) return false;
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    if (!real(c[mu]) || !real(d[mu])) return false;
  }
  return std::abs(e5.real()) <= tol;
}

}  // namespace gendirac
