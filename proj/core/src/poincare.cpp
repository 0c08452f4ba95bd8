#include "gendirac/poincare.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/LU>

namespace gendirac {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_axis(int axis) {
  if (axis < 1 || axis > 3) {
    throw std::out_of_range("spatial axis must be in 1..3, got " + std::to_string(axis));
  }
}

void check_finite(double value, const char* what) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

}  // namespace

Rapidity Rapidity::from_velocity(double beta) {
  if (!(std::abs(beta) < 1.0)) {
    throw std::domain_error("boost velocity must satisfy |v| < c = 1");
  }
  return Rapidity{std::atanh(beta)};
}

double Rapidity::velocity() const { return std::tanh(eta); }

std::array<int, 2> rotation_plane(int axis) {
  check_axis(axis);
  switch (axis) {
    case 1:
      return {2, 3};
    case 2:
      return {3, 1};
    default:
      return {1, 2};
  }
}

ComplexMatrix4 spinor_rotation(int axis, double theta) {
  check_finite(theta, "rotation angle");
  const auto [k, l] = rotation_plane(axis);
  return std::cos(theta / 2.0) * ComplexMatrix4::Identity() -
         gamma_lower(k) * gamma_lower(l) * std::sin(theta / 2.0);
}

ComplexMatrix4 spinor_boost(int axis, double eta) {
  check_axis(axis);
  check_finite(eta, "rapidity");
  return std::cosh(eta / 2.0) * ComplexMatrix4::Identity() +
         kI * gamma_lower(axis) * gamma_lower(0) * std::sinh(eta / 2.0);
}

ComplexMatrix4 vector_rep(TransformKind kind, int axis, double parameter) {
  check_axis(axis);
  check_finite(parameter, "transform parameter");
  ComplexMatrix4 lambda = ComplexMatrix4::Identity();
  if (kind == TransformKind::boost) {
    const double ch = std::cosh(parameter);
    const double sh = std::sinh(parameter);
    lambda(0, 0) = ch;
    lambda(0, axis) = -kI * sh;
    lambda(axis, 0) = kI * sh;
    lambda(axis, axis) = ch;
  } else {
    const auto [k, l] = rotation_plane(axis);
    const double c = std::cos(parameter);
    const double s = std::sin(parameter);
    lambda(k, k) = c;
    lambda(k, l) = s;
    lambda(l, k) = -s;
    lambda(l, l) = c;
  }
  return lambda;
}

PoincareTransform::PoincareTransform(TransformKind kind, int axis, double parameter)
    : kind_(kind),
      axis_(axis),
      parameter_(parameter),
      spinor_(kind == TransformKind::rotation ? spinor_rotation(axis, parameter)
                                              : spinor_boost(axis, parameter)),
      vector_(gendirac::vector_rep(kind, axis, parameter)) {}

PoincareTransform PoincareTransform::identity() { return rotation(3, 0.0); }

PoincareTransform PoincareTransform::rotation(int axis, double theta) {
  return PoincareTransform(TransformKind::rotation, axis, theta);
}

PoincareTransform PoincareTransform::boost(int axis, double eta) {
  return PoincareTransform(TransformKind::boost, axis, eta);
}

ComplexMatrix4 PoincareTransform::spinor_inverse() const {
  Eigen::FullPivLU<ComplexMatrix4> lu(spinor_);
  if (!lu.isInvertible()) {
    throw std::domain_error("spinor representation is singular");
  }
  return lu.inverse();
}

PoincareTransform PoincareTransform::inverse() const {
  return PoincareTransform(kind_, axis_, -parameter_);
}

MatrixQuad gamma_set() { return {gamma(0), gamma(1), gamma(2), gamma(3)}; }

double covariance_residual(const MatrixQuad& matrices, const PoincareTransform& transform) {
  const ComplexMatrix4& s = transform.spinor_rep();
  const ComplexMatrix4 s_inv = transform.spinor_inverse();
  const ComplexMatrix4& lambda = transform.vector_rep();
  double residual = 0.0;
  for (int beta = 0; beta < 4; ++beta) {
    ComplexMatrix4 lhs = ComplexMatrix4::Zero();
    for (int mu = 0; mu < 4; ++mu) lhs += lambda(beta, mu) * matrices[mu];
    residual = std::max(residual, max_abs(lhs - s * matrices[beta] * s_inv));
  }
  return residual;
}

}  // namespace gendirac
