#pragma once

#include <Eigen/Dense>
#include <string>

#include "semibounded/random.hpp"
#include "semibounded/real_linear_map.hpp"

namespace semibounded::symplectic {

/// Threshold for strict positive definiteness.
inline constexpr double kConeThreshold = 1e-10;

/// Symmetric matrix S of omega(X., .) in the real picture: S = R^T Omega.
RealMatrix hamiltonian_form(const RealLinearMap& X);

/// H_X(v) = omega(Xv, v) / 2. DomainError unless X is in the symplectic algebra.
double hamiltonian(const RealLinearMap& X, const ComplexVector& v);

/// Smallest eigenvalue of hamiltonian_form(X).
double cone_margin(const RealLinearMap& X);
bool in_cone_Wsp(const RealLinearMap& X);

/// J = (-A^2)^{-1/2} A for a cone element.
RealLinearMap positive_complex_structure(const RealLinearMap& A);

struct UnitaryConjugation {
  /// Symplectic g with J = g I g^{-1}.
  RealLinearMap g;
  /// g^{-1} A g, complex-linear up to rounding.
  RealLinearMap conjugated;
  RealLinearMap complex_structure;
};

/// With J = positive_complex_structure(A) and x = log(J^T J) / 2, returns
/// g = exp(-x/2) and A' = g^{-1} A g.
UnitaryConjugation conjugate_to_unitary(const RealLinearMap& A);

/// Jacobi-algebra element (c, x, A): f(v) = c + omega(x, v) + H_A(v).
struct QuadraticState {
  double c = 0.0;
  ComplexVector x;
  RealLinearMap A;
};

double jacobi_objective(const QuadraticState& q, const ComplexVector& v);

struct JacobiMinimum {
  ComplexVector argmin;
  double value = 0.0;
};

/// argmin -A^{-1} x, value c - omega(x, A^{-1} x) / 2.
JacobiMinimum jacobi_minimum(const QuadraticState& q);

/// State describing v -> f(v + w): (f(w), x + A w, A).
QuadraticState translate(const QuadraticState& q, const ComplexVector& w);

/// x h + y u + z t with h = diag(1,-1), u = [[0,1],[-1,0]], t = [[0,1],[1,0]].
struct Sl2Element {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Eigen::Matrix2d matrix() const;
  static Sl2Element from_matrix(const Eigen::Matrix2d& m);
};

/// -tr(ab).
double lorentz_form(const Sl2Element& a, const Sl2Element& b);

enum class OrbitType { timelike_positive, timelike_negative, spacelike, null_positive, null_negative, zero };

std::string to_string(OrbitType type);
OrbitType orbit_type(const Sl2Element& a, double tol = 1e-12);

/// g a g^{-1}.
Sl2Element adjoint_sl2(const Eigen::Matrix2d& g, const Sl2Element& a);

/// (1/i) <x v, v> / <v, v> for anti-Hermitian x.
double momentum_map(const ComplexMatrix& x, const ComplexVector& v);
/// -i tr(x P_v), P_v the orthogonal projection onto C v.
double momentum_trace(const ComplexMatrix& x, const ComplexVector& v);

/// Largest eigenvalue of the Hermitian matrix i x.
double spectral_support(const ComplexMatrix& x);

/// For omega(v, w) = (A v, w) with A real skew and invertible:
/// J = -A (-A^2)^{-1/2}, so that J^2 = -1, J^T J = 1 and omega(Jv, v) > 0.
RealMatrix compatible_complex_structure(const RealMatrix& A);

/// exp(p) u with p symmetric antilinear of size `scale` and u unitary.
RealLinearMap random_symplectic(Rng& rng, int d, double scale = 0.5);
/// Omega S with S symmetric positive definite (eigenvalues in [lo, hi]).
RealLinearMap random_cone_element(Rng& rng, int d, double lo = 0.2, double hi = 2.0);
ComplexMatrix random_unitary(Rng& rng, int d);
ComplexMatrix random_anti_hermitian(Rng& rng, int d);
/// Random element of the symplectic Lie algebra.
RealLinearMap random_sp_element(Rng& rng, int d);
/// Random element of the orthogonal Lie algebra.
RealLinearMap random_o_element(Rng& rng, int d);
ComplexVector random_vector(Rng& rng, int d);

}  // namespace semibounded::symplectic
