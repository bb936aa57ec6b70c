#include "semibounded/real_linear_map.hpp"

#include <string>

#include "semibounded/errors.hpp"

namespace semibounded {

RealLinearMap::RealLinearMap(ComplexMatrix linear, ComplexMatrix antilinear)
    : g1_(std::move(linear)), g2_(std::move(antilinear)) {
  if (g1_.rows() != g1_.cols() || g2_.rows() != g2_.cols() || g1_.rows() != g2_.rows()) {
    throw DimensionMismatch("RealLinearMap parts must be square of equal size");
  }
}

RealLinearMap RealLinearMap::identity(int d) {
  return {ComplexMatrix::Identity(d, d), ComplexMatrix::Zero(d, d)};
}

RealLinearMap RealLinearMap::zero(int d) { return {ComplexMatrix::Zero(d, d), ComplexMatrix::Zero(d, d)}; }

RealLinearMap RealLinearMap::complex_structure(int d) {
  return {std::complex<double>(0.0, 1.0) * ComplexMatrix::Identity(d, d), ComplexMatrix::Zero(d, d)};
}

RealLinearMap RealLinearMap::complex_linear(const ComplexMatrix& g1) {
  return {g1, ComplexMatrix::Zero(g1.rows(), g1.cols())};
}

RealLinearMap RealLinearMap::antilinear(const ComplexMatrix& g2) {
  return {ComplexMatrix::Zero(g2.rows(), g2.cols()), g2};
}

RealLinearMap RealLinearMap::from_real(const RealMatrix& r) {
  if (r.rows() != r.cols() || r.rows() % 2 != 0) throw DimensionMismatch("real picture must be 2d x 2d");
  const Eigen::Index d = r.rows() / 2;
  const RealMatrix p = r.topLeftCorner(d, d), q = r.topRightCorner(d, d);
  const RealMatrix s = r.bottomLeftCorner(d, d), t = r.bottomRightCorner(d, d);
  ComplexMatrix g1(d, d), g2(d, d);
  g1.real() = 0.5 * (p + t);
  g1.imag() = 0.5 * (s - q);
  g2.real() = 0.5 * (p - t);
  g2.imag() = 0.5 * (s + q);
  return {g1, g2};
}

ComplexVector RealLinearMap::apply(const ComplexVector& v) const {
  if (v.size() != g1_.rows()) throw DimensionMismatch("RealLinearMap::apply: vector size");
  return g1_ * v + g2_ * v.conjugate();
}

RealMatrix RealLinearMap::real_matrix() const {
  const Eigen::Index d = g1_.rows();
  RealMatrix r(2 * d, 2 * d);
  const RealMatrix a1 = g1_.real(), b1 = g1_.imag(), a2 = g2_.real(), b2 = g2_.imag();
  r.topLeftCorner(d, d) = a1 + a2;
  r.topRightCorner(d, d) = -b1 + b2;
  r.bottomLeftCorner(d, d) = b1 + b2;
  r.bottomRightCorner(d, d) = a1 - a2;
  return r;
}

RealLinearMap RealLinearMap::adjoint() const { return {g1_.adjoint(), g2_.transpose()}; }

RealLinearMap RealLinearMap::inverse() const {
  const RealMatrix r = real_matrix();
  Eigen::FullPivLU<RealMatrix> lu(r);
  if (!lu.isInvertible()) throw NumericalFailure("RealLinearMap is singular");
  return from_real(lu.inverse());
}

RealLinearMap RealLinearMap::operator*(const RealLinearMap& o) const {
  if (dimension() != o.dimension()) throw DimensionMismatch("RealLinearMap composition");
  // (g1 + g2 C)(h1 + h2 C) = g1 h1 + g2 conj(h2) + (g1 h2 + g2 conj(h1)) C.
  return {g1_ * o.g1_ + g2_ * o.g2_.conjugate(), g1_ * o.g2_ + g2_ * o.g1_.conjugate()};
}

RealLinearMap RealLinearMap::operator+(const RealLinearMap& o) const {
  if (dimension() != o.dimension()) throw DimensionMismatch("RealLinearMap sum");
  return {g1_ + o.g1_, g2_ + o.g2_};
}

RealLinearMap RealLinearMap::operator-(const RealLinearMap& o) const {
  if (dimension() != o.dimension()) throw DimensionMismatch("RealLinearMap difference");
  return {g1_ - o.g1_, g2_ - o.g2_};
}

RealLinearMap RealLinearMap::operator*(double s) const { return {s * g1_, s * g2_}; }

RealLinearMap commutator(const RealLinearMap& x, const RealLinearMap& y) { return x * y - y * x; }

RealMatrix omega_matrix(int d) {
  RealMatrix o = RealMatrix::Zero(2 * d, 2 * d);
  o.topRightCorner(d, d) = -RealMatrix::Identity(d, d);
  o.bottomLeftCorner(d, d) = RealMatrix::Identity(d, d);
  return o;
}

double symplectic_form(const ComplexVector& v, const ComplexVector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("symplectic_form: sizes differ");
  return w.dot(v).imag();  // Eigen's dot conjugates its left operand: <v, w> = w^* v.
}

bool is_symplectic(const RealLinearMap& g, double tol) {
  const RealMatrix r = g.real_matrix();
  const RealMatrix o = omega_matrix(g.dimension());
  return (r.transpose() * o * r - o).norm() <= tol * std::max(1.0, r.squaredNorm());
}

bool is_orthogonal(const RealLinearMap& g, double tol) {
  const RealMatrix r = g.real_matrix();
  return (r.transpose() * r - RealMatrix::Identity(r.rows(), r.cols())).norm() <= tol * std::max(1.0, r.squaredNorm());
}

bool in_symplectic_algebra(const RealLinearMap& x, double tol) {
  const double scale = std::max(1.0, x.norm());
  return (x.linear() + x.linear().adjoint()).norm() <= tol * scale &&
         (x.antilinear_part() - x.antilinear_part().transpose()).norm() <= tol * scale;
}

bool in_orthogonal_algebra(const RealLinearMap& x, double tol) {
  const double scale = std::max(1.0, x.norm());
  return (x.linear() + x.linear().adjoint()).norm() <= tol * scale &&
         (x.antilinear_part() + x.antilinear_part().transpose()).norm() <= tol * scale;
}

double restricted_defect(const RealLinearMap& g) {
  return commutator(g, RealLinearMap::complex_structure(g.dimension())).norm();
}

}  // namespace semibounded
