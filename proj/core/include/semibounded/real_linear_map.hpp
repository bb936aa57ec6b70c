#pragma once

#include <Eigen/Dense>

namespace semibounded {

using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;

/// Real-linear operator on C^d, v -> G1 v + G2 conj(v).
///
/// The real picture identifies v = x + iy with (x; y) in R^{2d}; there the
/// symplectic form Im<v, w> (inner product linear in the first slot) is
/// v^T Omega w with Omega = [[0, -1], [1, 0]], which is also the matrix of
/// multiplication by i.
class RealLinearMap {
 public:
  RealLinearMap() = default;
  RealLinearMap(ComplexMatrix linear, ComplexMatrix antilinear);

  static RealLinearMap identity(int d);
  static RealLinearMap zero(int d);
  /// Multiplication by i.
  static RealLinearMap complex_structure(int d);
  static RealLinearMap complex_linear(const ComplexMatrix& g1);
  static RealLinearMap antilinear(const ComplexMatrix& g2);
  static RealLinearMap from_real(const RealMatrix& r);

  int dimension() const { return static_cast<int>(g1_.rows()); }
  const ComplexMatrix& linear() const { return g1_; }
  const ComplexMatrix& antilinear_part() const { return g2_; }

  ComplexVector apply(const ComplexVector& v) const;
  RealMatrix real_matrix() const;
  /// Adjoint for Re<.,.>: (G1^*, G2^T).
  RealLinearMap adjoint() const;
  /// Inverse through the real picture; throws NumericalFailure if singular.
  RealLinearMap inverse() const;

  RealLinearMap operator*(const RealLinearMap& other) const;
  RealLinearMap operator+(const RealLinearMap& other) const;
  RealLinearMap operator-(const RealLinearMap& other) const;
  RealLinearMap operator*(double s) const;

  /// Frobenius norm of the real picture.
  double norm() const { return real_matrix().norm(); }

 private:
  ComplexMatrix g1_, g2_;
};

RealLinearMap commutator(const RealLinearMap& x, const RealLinearMap& y);

/// Standard symplectic matrix Omega of size 2d.
RealMatrix omega_matrix(int d);

/// Im<v, w>.
double symplectic_form(const ComplexVector& v, const ComplexVector& w);

/// Preserves Im<.,.>: R^T Omega R = Omega.
bool is_symplectic(const RealLinearMap& g, double tol = 1e-10);
/// Preserves Re<.,.>: R^T R = 1.
bool is_orthogonal(const RealLinearMap& g, double tol = 1e-10);
/// omega(Xv, w) symmetric: G1 anti-Hermitian and G2 symmetric.
bool in_symplectic_algebra(const RealLinearMap& x, double tol = 1e-10);
/// Skew for Re<.,.>: G1 anti-Hermitian and G2 antisymmetric.
bool in_orthogonal_algebra(const RealLinearMap& x, double tol = 1e-10);

/// Hilbert-Schmidt norm of [g, I], the quantity bounded in the restricted groups.
double restricted_defect(const RealLinearMap& g);

}  // namespace semibounded
