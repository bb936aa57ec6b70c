#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace semibounded::circle {

using Complex = std::complex<double>;

/// Truncated Fourier series f(theta) = sum_{|k| <= N} c_k e^{ik theta}.
class FourierFunction {
 public:
  explicit FourierFunction(int degree = 1);
  FourierFunction(int degree, std::vector<Complex> coeffs);

  static FourierFunction constant(Complex value, int degree);
  /// value * e^{ik theta}.
  static FourierFunction mode(int k, Complex value, int degree);
  static FourierFunction cosine(int k, int degree);
  static FourierFunction sine(int k, int degree);
  /// Coefficients |k| <= degree from samples on the uniform grid 2 pi j / M.
  static FourierFunction from_samples(const std::vector<Complex>& samples, int degree);
  static FourierFunction from_real_samples(const std::vector<double>& samples, int degree);
  /// Samples `fn` on a grid of `grid` points, then transforms.
  static FourierFunction from_callable(const std::function<Complex(double)>& fn, int degree, int grid);

  int degree() const { return degree_; }
  /// Zero outside the stored band.
  Complex coeff(int k) const;
  void set_coeff(int k, Complex value);
  const std::vector<Complex>& coeffs() const { return coeffs_; }

  Complex operator()(double theta) const;
  /// Real part of the value; intended for real functions.
  double real_at(double theta) const { return (*this)(theta).real(); }
  /// Values on the uniform grid of M points (M >= 2N+1 not required).
  std::vector<Complex> samples(int grid) const;
  std::vector<double> real_samples(int grid) const;

  /// c_{-k} = conj(c_k) for all k, to `tol`.
  bool is_real(double tol = 1e-12) const;
  /// Projects onto real functions by symmetrizing the coefficients.
  FourierFunction real_part() const;
  FourierFunction conj() const;

  /// Same function with a different band; dropping modes loses them.
  FourierFunction resized(int degree) const;
  /// Sum of |c_k|^2 over modes |k| > degree.
  double tail_energy(int degree) const;

  double l2_norm() const;
  double max_abs_coeff() const;

  FourierFunction& operator+=(const FourierFunction& other);
  FourierFunction& operator-=(const FourierFunction& other);
  FourierFunction& operator*=(Complex s);

 private:
  int degree_;
  std::vector<Complex> coeffs_;  // index k + degree_
};

FourierFunction operator+(FourierFunction a, const FourierFunction& b);
FourierFunction operator-(FourierFunction a, const FourierFunction& b);
FourierFunction operator-(FourierFunction a);
FourierFunction operator*(Complex s, FourierFunction a);
FourierFunction operator*(FourierFunction a, Complex s);

/// Energy dropped when a result is cut back to its target band.
struct TruncationLoss {
  double discarded_energy = 0.0;
};

/// Pointwise product. The full product has degree N_f + N_g; it is cut back to
/// `degree` (default max(N_f, N_g)) and the dropped energy is added to `loss`.
FourierFunction multiply(const FourierFunction& f, const FourierFunction& g, int degree = -1,
                         TruncationLoss* loss = nullptr);

/// (f')_k = ik c_k.
FourierFunction derivative(const FourierFunction& f, int order = 1);
/// Integral over [0, 2 pi): 2 pi c_0.
Complex integrate(const FourierFunction& f);
/// Integral of f g over [0, 2 pi): 2 pi sum_k f_k g_{-k}.
Complex integrate_product(const FourierFunction& f, const FourierFunction& g);

/// Max |f(theta_j) - g(theta_j)| on the uniform grid of M points.
double sup_distance(const FourierFunction& f, const FourierFunction& g, int grid);

/// Forward transform of grid samples: returns c_k for |k| <= degree.
std::vector<Complex> grid_to_coeffs(const std::vector<Complex>& samples, int degree);

}  // namespace semibounded::circle
