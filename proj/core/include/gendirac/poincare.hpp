#pragma once

// Spinor and index representations of rotations and boosts.
//
//   rotation about axis j (plane k-l, (j,k,l) cyclic):
//       R = cos(theta/2) I - gamma_k gamma_l sin(theta/2)
//   boost along axis j:
//       S = cosh(eta/2) I + i gamma_j gamma_0 sinh(eta/2)
//
// with covariant gammas. The index representation Lambda acts on the mu
// index of a 4-tuple of matrices B^mu; for a boost it mixes B^0 and B^j as
//
//       B^0 -> B^0 cosh(eta) - i B^j sinh(eta)
//       B^j -> B^j cosh(eta) + i B^0 sinh(eta)
//
// and the pair satisfies Lambda^beta_mu gamma^mu = S gamma^beta S^-1.

#include <array>

#include "gendirac/clifford.hpp"

namespace gendirac {

enum class TransformKind { rotation, boost };

/// Boost angle; tanh(eta) = v/c with c = 1.
struct Rapidity {
  double eta = 0.0;

  static Rapidity from_velocity(double beta);
  double velocity() const;
};

/// R for a rotation by theta (radians) about axis 1..3.
ComplexMatrix4 spinor_rotation(int axis, double theta);

/// S for a boost of rapidity eta along axis 1..3. Throws on non-finite eta.
ComplexMatrix4 spinor_boost(int axis, double eta);

/// Lambda acting on the spacetime index; complex because boosts carry i.
ComplexMatrix4 vector_rep(TransformKind kind, int axis, double parameter);

class PoincareTransform {
 public:
  static PoincareTransform identity();
  static PoincareTransform rotation(int axis, double theta);
  static PoincareTransform boost(int axis, double eta);
  static PoincareTransform boost(int axis, Rapidity rapidity) { return boost(axis, rapidity.eta); }

  TransformKind kind() const { return kind_; }
  int axis() const { return axis_; }
  double parameter() const { return parameter_; }
  const ComplexMatrix4& spinor_rep() const { return spinor_; }
  const ComplexMatrix4& vector_rep() const { return vector_; }

  /// Inverse of spinor_rep(). Throws std::domain_error if singular.
  ComplexMatrix4 spinor_inverse() const;

  /// Same kind and axis with the parameter negated.
  PoincareTransform inverse() const;

 private:
  PoincareTransform(TransformKind kind, int axis, double parameter);

  TransformKind kind_;
  int axis_;
  double parameter_;
  ComplexMatrix4 spinor_;
  ComplexMatrix4 vector_;
};

/// Four matrices indexed by a contravariant spacetime index.
using MatrixQuad = std::array<ComplexMatrix4, 4>;

/// (gamma^0, gamma^1, gamma^2, gamma^3).
MatrixQuad gamma_set();

/// max_beta || Lambda^beta_mu B^mu - S B^beta S^-1 ||_max.
double covariance_residual(const MatrixQuad& matrices, const PoincareTransform& transform);

/// The (k, l) plane rotated by a rotation about `axis`: 1 -> (2,3),
/// 2 -> (3,1), 3 -> (1,2). Throws std::out_of_range for an invalid axis.
std::array<int, 2> rotation_plane(int axis);

}  // namespace gendirac
