#pragma once

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;

/// Distance from x to cone(G), by projected gradient on min |G l - x|, l >= 0.
inline double cone_distance(const std::vector<Eigen::VectorXd>& gens, const Eigen::VectorXd& x, int iters = 20000) {
  if (gens.empty()) return x.norm();
  Eigen::MatrixXd G(x.size(), static_cast<Eigen::Index>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j) G.col(static_cast<Eigen::Index>(j)) = gens[j];
  const double L = std::max(1e-12, (G.transpose() * G).norm());
  Eigen::VectorXd l = Eigen::VectorXd::Zero(G.cols());
  Eigen::VectorXd y = l;
  double t = 1.0;
  for (int k = 0; k < iters; ++k) {
    const Eigen::VectorXd next = (y - G.transpose() * (G * y - x) / L).cwiseMax(0.0);
    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / tn) * (next - l);
    l = next;
    t = tn;
  }
  return (G * l - x).norm();
}

/// (1/2pi) integral over one period, adaptive Gauss-Kronrod.
inline double periodic_average(const std::function<double(double)>& fn) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      fn, 0.0, 2.0 * std::numbers::pi, 20, 1e-15, &error);
  return value / (2.0 * std::numbers::pi);
}

/// max_v <H v, v> / <v, v> by shifted power iteration, H Hermitian.
inline double rayleigh_max(const Eigen::MatrixXcd& H, int iters = 5000) {
  const auto d = H.rows();
  const double shift = H.norm() + 1.0;
  const Eigen::MatrixXcd S = H + shift * Eigen::MatrixXcd::Identity(d, d);
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(d);
  for (Eigen::Index i = 0; i < d; ++i) v(i) += Complex(0.1 * static_cast<double>(i), 0.37 * static_cast<double>(i * i));
  v.normalize();
  for (int k = 0; k < iters; ++k) v = (S * v).normalized();
  return (v.dot(H * v)).real();
}

/// Normalized solution of (a + t a^*) F = 0 on occupations 0..n: the
/// equations at levels 0..n-1 with F_0 = 1 form a square linear system.
inline Eigen::VectorXd one_mode_squeezed_vacuum(double t, int n) {
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  // Row k: sqrt(k+1) F_{k+1} + t sqrt(k) F_{k-1} = 0, unknowns F_1..F_n.
  for (int k = 0; k < n; ++k) {
    M(k, k) = std::sqrt(static_cast<double>(k + 1));
    if (k >= 2) M(k, k - 2) = t * std::sqrt(static_cast<double>(k));
  }
  if (n >= 2) rhs(1) = -t;
  Eigen::VectorXd F(n + 1);
  F(0) = 1.0;
  F.tail(n) = M.partialPivLu().solve(rhs);
  return F / F.norm();
}

}  // namespace oracle
