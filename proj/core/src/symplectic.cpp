#include "semibounded/symplectic.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>

#include "semibounded/errors.hpp"

namespace semibounded::symplectic {

namespace {

void require_sp(const RealLinearMap& X, const char* what) {
  if (!in_symplectic_algebra(X)) throw DomainError(std::string(what) + ": not in the symplectic algebra");
}

void require_cone(const RealLinearMap& A, const char* what) {
  require_sp(A, what);
  if (!in_cone_Wsp(A)) throw DomainError(std::string(what) + ": not in the open cone");
}

void require_anti_hermitian(const ComplexMatrix& x, const char* what) {
  if (x.rows() != x.cols()) throw DimensionMismatch(std::string(what) + ": matrix must be square");
  if ((x + x.adjoint()).norm() > 1e-10 * std::max(1.0, x.norm())) {
    throw DomainError(std::string(what) + ": matrix must be anti-Hermitian");
  }
}

ComplexVector to_complex(const Eigen::VectorXd& r) {
  const Eigen::Index d = r.size() / 2;
  ComplexVector v(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) = {r(i), r(i + d)};
  return v;
}

Eigen::VectorXd to_real(const ComplexVector& v) {
  const Eigen::Index d = v.size();
  Eigen::VectorXd r(2 * d);
  r.head(d) = v.real();
  r.tail(d) = v.imag();
  return r;
}

RealMatrix random_orthogonal(Rng& rng, int n) {
  RealMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<RealMatrix> qr(m);
  return qr.householderQ();
}

}  // namespace

RealMatrix hamiltonian_form(const RealLinearMap& X) {
  const RealMatrix s = X.real_matrix().transpose() * omega_matrix(X.dimension());
  return 0.5 * (s + s.transpose());
}

double hamiltonian(const RealLinearMap& X, const ComplexVector& v) {
  require_sp(X, "hamiltonian");
  if (v.size() != X.dimension()) throw DimensionMismatch("hamiltonian: vector size");
  return 0.5 * symplectic_form(X.apply(v), v);
}

double cone_margin(const RealLinearMap& X) {
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(hamiltonian_form(X), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().minCoeff();
}

bool in_cone_Wsp(const RealLinearMap& X) {
  require_sp(X, "in_cone_Wsp");
  return cone_margin(X) > kConeThreshold;
}

RealLinearMap positive_complex_structure(const RealLinearMap& A) {
  require_cone(A, "positive_complex_structure");
  const RealMatrix r = A.real_matrix();
  const RealMatrix square = -r * r;
  const RealMatrix root = square.sqrt();
  return RealLinearMap::from_real(root.inverse() * r);
}

UnitaryConjugation conjugate_to_unitary(const RealLinearMap& A) {
  const RealLinearMap J = positive_complex_structure(A);
  const RealMatrix j = J.real_matrix();
  const RealMatrix jtj = j.transpose() * j;
  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (jtj + jtj.transpose()));
  if (eig.eigenvalues().minCoeff() <= 0.0) throw NumericalFailure("conjugate_to_unitary: J^T J is not positive");
  // exp(-x/2) with x = log(J^T J)/2 is (J^T J)^{-1/4}.
  const Eigen::VectorXd quarter = eig.eigenvalues().array().pow(-0.25);
  const RealMatrix g = eig.eigenvectors() * quarter.asDiagonal() * eig.eigenvectors().transpose();
  const Eigen::VectorXd inverse_quarter = eig.eigenvalues().array().pow(0.25);
  const RealMatrix g_inv = eig.eigenvectors() * inverse_quarter.asDiagonal() * eig.eigenvectors().transpose();
  UnitaryConjugation out;
  out.g = RealLinearMap::from_real(g);
  out.conjugated = RealLinearMap::from_real(g_inv * A.real_matrix() * g);
  out.complex_structure = J;
  return out;
}

double jacobi_objective(const QuadraticState& q, const ComplexVector& v) {
  return q.c + symplectic_form(q.x, v) + 0.5 * symplectic_form(q.A.apply(v), v);
}

JacobiMinimum jacobi_minimum(const QuadraticState& q) {
  require_cone(q.A, "jacobi_minimum");
  if (q.x.size() != q.A.dimension()) throw DimensionMismatch("jacobi_minimum: vector size");
  const Eigen::VectorXd solved = q.A.real_matrix().fullPivLu().solve(to_real(q.x));
  const ComplexVector a_inv_x = to_complex(solved);
  return {-a_inv_x, q.c - 0.5 * symplectic_form(q.x, a_inv_x)};
}

QuadraticState translate(const QuadraticState& q, const ComplexVector& w) {
  return {jacobi_objective(q, w), q.x + q.A.apply(w), q.A};
}

Eigen::Matrix2d Sl2Element::matrix() const {
  Eigen::Matrix2d m;
  m << x, y + z, -y + z, -x;
  return m;
}

Sl2Element Sl2Element::from_matrix(const Eigen::Matrix2d& m) {
  return {0.5 * (m(0, 0) - m(1, 1)), 0.5 * (m(0, 1) - m(1, 0)), 0.5 * (m(0, 1) + m(1, 0))};
}

double lorentz_form(const Sl2Element& a, const Sl2Element& b) { return -(a.matrix() * b.matrix()).trace(); }

std::string to_string(OrbitType type) {
  switch (type) {
    case OrbitType::timelike_positive:
      return "timelike+";
    case OrbitType::timelike_negative:
      return "timelike-";
    case OrbitType::spacelike:
      return "spacelike";
    case OrbitType::null_positive:
      return "null+";
    case OrbitType::null_negative:
      return "null-";
    case OrbitType::zero:
      return "zero";
  }
  return "unknown";
}

OrbitType orbit_type(const Sl2Element& a, double tol) {
  const double size = a.x * a.x + a.y * a.y + a.z * a.z;
  if (size == 0.0) return OrbitType::zero;
  const double q = lorentz_form(a, a);
  if (q > tol * size) return a.y > 0 ? OrbitType::timelike_positive : OrbitType::timelike_negative;
  if (q < -tol * size) return OrbitType::spacelike;
  return a.y > 0 ? OrbitType::null_positive : OrbitType::null_negative;
}

Sl2Element adjoint_sl2(const Eigen::Matrix2d& g, const Sl2Element& a) {
  return Sl2Element::from_matrix(g * a.matrix() * g.inverse());
}

double momentum_map(const ComplexMatrix& x, const ComplexVector& v) {
  require_anti_hermitian(x, "momentum_map");
  if (v.size() != x.rows()) throw DimensionMismatch("momentum_map: vector size");
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw DomainError("momentum_map: zero vector");
  const std::complex<double> value = v.dot(x * v) / std::complex<double>(0.0, 1.0);
  return value.real() / norm2;
}

double momentum_trace(const ComplexMatrix& x, const ComplexVector& v) {
  require_anti_hermitian(x, "momentum_trace");
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw DomainError("momentum_trace: zero vector");
  const ComplexMatrix projection = v * v.adjoint() / norm2;
  return (std::complex<double>(0.0, -1.0) * (x * projection).trace()).real();
}

double spectral_support(const ComplexMatrix& x) {
  require_anti_hermitian(x, "spectral_support");
  const ComplexMatrix h = std::complex<double>(0.0, 1.0) * x;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
  return eig.eigenvalues().maxCoeff();
}

RealMatrix compatible_complex_structure(const RealMatrix& A) {
  if (A.rows() != A.cols() || A.rows() % 2 != 0) throw DimensionMismatch("compatible_complex_structure: size");
  if ((A + A.transpose()).norm() > 1e-12 * std::max(1.0, A.norm())) {
    throw DomainError("compatible_complex_structure: matrix is not skew-symmetric");
  }
  // Skew matrices are orthogonally block diagonal with blocks b [[0, 1], [-1, 0]];
  // -A |A|^{-1} replaces each b by -sign(b).
  const Eigen::RealSchur<RealMatrix> schur(A);
  const RealMatrix& T = schur.matrixT();
  const RealMatrix& Q = schur.matrixU();
  const Eigen::Index n = A.rows();
  const double scale = std::max(1.0, A.norm());
  RealMatrix blocks = RealMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n;) {
    const double b = i + 1 < n ? 0.5 * (T(i, i + 1) - T(i + 1, i)) : 0.0;
    if (i + 1 >= n || std::abs(b) <= 1e-14 * scale) {
      throw DomainError("compatible_complex_structure: matrix is singular");
    }
    const double sign = b > 0 ? -1.0 : 1.0;
    blocks(i, i + 1) = sign;
    blocks(i + 1, i) = -sign;
    i += 2;
  }
  return Q * blocks * Q.transpose();
}

ComplexMatrix random_unitary(Rng& rng, int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
  }
  Eigen::HouseholderQR<ComplexMatrix> qr(m);
  return qr.householderQ();
}

ComplexMatrix random_anti_hermitian(Rng& rng, int d) {
  ComplexMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = rng.complex_normal();
  }
  return 0.5 * (m - m.adjoint());
}

ComplexVector random_vector(Rng& rng, int d) {
  ComplexVector v(d);
  for (int i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v;
}

RealLinearMap random_sp_element(Rng& rng, int d) {
  ComplexMatrix b(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) b(i, j) = rng.complex_normal();
  }
  return {random_anti_hermitian(rng, d), 0.5 * (b + b.transpose())};
}

RealLinearMap random_o_element(Rng& rng, int d) {
  ComplexMatrix b(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) b(i, j) = rng.complex_normal();
  }
  return {random_anti_hermitian(rng, d), 0.5 * (b - b.transpose())};
}

RealLinearMap random_symplectic(Rng& rng, int d, double scale) {
  ComplexMatrix b(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) b(i, j) = rng.complex_normal();
  }
  b = (0.5 * (b + b.transpose())).eval();
  b *= scale / std::max(b.norm(), 1e-300);
  const RealMatrix p = RealLinearMap::antilinear(b).real_matrix();
  const RealMatrix e = p.exp();
  return RealLinearMap::from_real(e) * RealLinearMap::complex_linear(random_unitary(rng, d));
}

RealLinearMap random_cone_element(Rng& rng, int d, double lo, double hi) {
  const RealMatrix q = random_orthogonal(rng, 2 * d);
  Eigen::VectorXd spectrum(2 * d);
  for (int i = 0; i < 2 * d; ++i) spectrum(i) = rng.uniform(lo, hi);
  const RealMatrix s = q * spectrum.asDiagonal() * q.transpose();
  return RealLinearMap::from_real(omega_matrix(d) * s);
}

}  // namespace semibounded::symplectic
