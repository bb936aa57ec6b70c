#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace semibounded::virasoro {

using Rational = boost::multiprecision::cpp_rational;

/// Largest level accepted by the Gram routines.
inline constexpr int kMaxVermaLevel = 6;

/// Parts n_1 >= n_2 >= ... of a partition; the word d_{-n_1} d_{-n_2} ... v.
using Partition = std::vector<int>;

template <class Scalar>
using GramMatrix = std::vector<std::vector<Scalar>>;

/// Partitions of `level` in reverse lexicographic order ([level] first).
std::vector<Partition> partitions(int level);

/// Gram matrix of the given words in the Verma module with central charge c
/// (the value on c^ = (24 pi i, 0)) and lowest weight h. Entry (i, j) is
/// <w_i, w_j> with d_n^* = d_{-n}. Scalar is double or Rational.
template <class Scalar>
GramMatrix<Scalar> verma_gram(const std::vector<Partition>& basis, const Scalar& c, const Scalar& h);

template <class Scalar>
GramMatrix<Scalar> verma_gram(int level, const Scalar& c, const Scalar& h) {
  return verma_gram<Scalar>(partitions(level), c, h);
}

/// Fraction-free exact determinant.
Rational determinant(const GramMatrix<Rational>& m);

Eigen::MatrixXd to_matrix(const GramMatrix<double>& m);
Eigen::MatrixXd to_matrix(const GramMatrix<Rational>& m);

/// Determinant of the Gram matrix of {d_{-2n} v, d_{-n}^2 v}.
Rational pair_determinant(int n, const Rational& c, const Rational& h);

struct UnitarityPoint {
  double c = 0.0;
  double h = 0.0;
  /// First level with a negative Gram eigenvalue; 0 if none up to max_level.
  int first_negative_level = 0;
  /// Smallest Gram eigenvalue over all scanned levels.
  double min_eigenvalue = 0.0;
  /// First n with det Gram{d_{-2n}v, d_{-n}^2 v} < 0 (0 if none with 2n <= max_level).
  int first_negative_pair = 0;
};

std::vector<UnitarityPoint> unitarity_scan(const std::vector<double>& c_grid, const std::vector<double>& h_grid,
                                           int max_level);

}  // namespace semibounded::virasoro
