#include "semibounded/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unsupported/Eigen/FFT>

#include "semibounded/errors.hpp"

namespace semibounded::circle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

int wrap(int k, int m) { return ((k % m) + m) % m; }

}  // namespace

FourierFunction::FourierFunction(int degree) : degree_(degree), coeffs_(2 * degree + 1) {
  if (degree < 0) throw DomainError("Fourier degree must be non-negative");
}

FourierFunction::FourierFunction(int degree, std::vector<Complex> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw DomainError("Fourier degree must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(2 * degree + 1)) {
    throw DimensionMismatch("Fourier coefficient count " + std::to_string(coeffs_.size()) +
                            " does not match degree " + std::to_string(degree));
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("non-finite Fourier coefficient");
    }
  }
}

FourierFunction FourierFunction::constant(Complex value, int degree) {
  FourierFunction f(degree);
  f.set_coeff(0, value);
  return f;
}

FourierFunction FourierFunction::mode(int k, Complex value, int degree) {
  FourierFunction f(std::max(degree, std::abs(k)));
  f.set_coeff(k, value);
  return f;
}

FourierFunction FourierFunction::cosine(int k, int degree) {
  FourierFunction f(std::max(degree, std::abs(k)));
  if (k == 0) {
    f.set_coeff(0, 1.0);
  } else {
    f.set_coeff(k, 0.5);
    f.set_coeff(-k, 0.5);
  }
  return f;
}

FourierFunction FourierFunction::sine(int k, int degree) {
  FourierFunction f(std::max(degree, std::abs(k)));
  if (k != 0) {
    f.set_coeff(k, Complex(0.0, -0.5));
    f.set_coeff(-k, Complex(0.0, 0.5));
  }
  return f;
}

std::vector<Complex> grid_to_coeffs(const std::vector<Complex>& samples, int degree) {
  const int m = static_cast<int>(samples.size());
  if (m < 2 * degree + 1) {
    throw DomainError("grid of " + std::to_string(m) + " points cannot resolve degree " +
                      std::to_string(degree));
  }
  Eigen::FFT<double> fft;
  std::vector<Complex> spectrum;
  fft.fwd(spectrum, samples);
  std::vector<Complex> out(2 * degree + 1);
  for (int k = -degree; k <= degree; ++k) out[k + degree] = spectrum[wrap(k, m)] / static_cast<double>(m);
  // The Nyquist bin of an even grid is shared by +-M/2; split it evenly.
  if (m % 2 == 0 && 2 * degree >= m) {
    out[m / 2 + degree] *= 0.5;
    out[-m / 2 + degree] *= 0.5;
  }
  return out;
}

FourierFunction FourierFunction::from_samples(const std::vector<Complex>& samples, int degree) {
  return FourierFunction(degree, grid_to_coeffs(samples, degree));
}

FourierFunction FourierFunction::from_real_samples(const std::vector<double>& samples, int degree) {
  std::vector<Complex> z(samples.begin(), samples.end());
  return from_samples(z, degree).real_part();
}

FourierFunction FourierFunction::from_callable(const std::function<Complex(double)>& fn, int degree,
                                               int grid) {
  std::vector<Complex> z(grid);
  for (int j = 0; j < grid; ++j) z[j] = fn(kTwoPi * j / grid);
  return from_samples(z, degree);
}

Complex FourierFunction::coeff(int k) const {
  if (k < -degree_ || k > degree_) return 0.0;
  return coeffs_[k + degree_];
}

void FourierFunction::set_coeff(int k, Complex value) {
  if (k < -degree_ || k > degree_) {
    throw DomainError("mode " + std::to_string(k) + " outside degree " + std::to_string(degree_));
  }
  coeffs_[k + degree_] = value;
}

Complex FourierFunction::operator()(double theta) const {
  // Horner-style accumulation of e^{ik theta} by repeated multiplication.
  const Complex step = std::polar(1.0, theta);
  Complex pos = 1.0, neg = 1.0;
  Complex sum = coeffs_[degree_];
  for (int k = 1; k <= degree_; ++k) {
    pos *= step;
    neg = std::conj(pos);
    sum += coeffs_[degree_ + k] * pos + coeffs_[degree_ - k] * neg;
  }
  return sum;
}

std::vector<Complex> FourierFunction::samples(int grid) const {
  if (grid <= 0) throw DomainError("grid size must be positive");
  if (grid < 2 * degree_ + 1) {
    std::vector<Complex> out(grid);
    for (int j = 0; j < grid; ++j) out[j] = (*this)(kTwoPi * j / grid);
    return out;
  }
  std::vector<Complex> spectrum(grid, 0.0);
  for (int k = -degree_; k <= degree_; ++k) spectrum[wrap(k, grid)] += coeff(k) * static_cast<double>(grid);
  Eigen::FFT<double> fft;
  std::vector<Complex> out;
  fft.inv(out, spectrum);
  return out;
}

std::vector<double> FourierFunction::real_samples(int grid) const {
  const auto z = samples(grid);
  std::vector<double> out(z.size());
  std::transform(z.begin(), z.end(), out.begin(), [](Complex c) { return c.real(); });
  return out;
}

bool FourierFunction::is_real(double tol) const {
  for (int k = 0; k <= degree_; ++k) {
    if (std::abs(coeff(-k) - std::conj(coeff(k))) > tol) return false;
  }
  return true;
}

FourierFunction FourierFunction::real_part() const {
  FourierFunction out(degree_);
  for (int k = -degree_; k <= degree_; ++k) out.set_coeff(k, 0.5 * (coeff(k) + std::conj(coeff(-k))));
  return out;
}

FourierFunction FourierFunction::conj() const {
  FourierFunction out(degree_);
  for (int k = -degree_; k <= degree_; ++k) out.set_coeff(k, std::conj(coeff(-k)));
  return out;
}

FourierFunction FourierFunction::resized(int degree) const {
  FourierFunction out(degree);
  const int n = std::min(degree, degree_);
  for (int k = -n; k <= n; ++k) out.set_coeff(k, coeff(k));
  return out;
}

double FourierFunction::tail_energy(int degree) const {
  double e = 0.0;
  for (int k = degree + 1; k <= degree_; ++k) e += std::norm(coeff(k)) + std::norm(coeff(-k));
  return e;
}

double FourierFunction::l2_norm() const {
  double e = 0.0;
  for (const auto& c : coeffs_) e += std::norm(c);
  return std::sqrt(kTwoPi * e);
}

double FourierFunction::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

FourierFunction& FourierFunction::operator+=(const FourierFunction& other) {
  if (other.degree_ > degree_) *this = resized(other.degree_);
  for (int k = -other.degree_; k <= other.degree_; ++k) coeffs_[k + degree_] += other.coeff(k);
  return *this;
}

FourierFunction& FourierFunction::operator-=(const FourierFunction& other) {
  if (other.degree_ > degree_) *this = resized(other.degree_);
  for (int k = -other.degree_; k <= other.degree_; ++k) coeffs_[k + degree_] -= other.coeff(k);
  return *this;
}

FourierFunction& FourierFunction::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

FourierFunction operator+(FourierFunction a, const FourierFunction& b) { return a += b; }
FourierFunction operator-(FourierFunction a, const FourierFunction& b) { return a -= b; }
FourierFunction operator-(FourierFunction a) { return a *= -1.0; }
FourierFunction operator*(Complex s, FourierFunction a) { return a *= s; }
FourierFunction operator*(FourierFunction a, Complex s) { return a *= s; }

FourierFunction multiply(const FourierFunction& f, const FourierFunction& g, int degree, TruncationLoss* loss) {
  const int nf = f.degree(), ng = g.degree();
  const int full = nf + ng;
  // Exact convolution; identical to sampling on >= 2(N_f+N_g)+1 points.
  FourierFunction product(full);
  std::vector<Complex> acc(2 * full + 1, 0.0);
  for (int a = -nf; a <= nf; ++a) {
    const Complex fa = f.coeff(a);
    if (fa == 0.0) continue;
    for (int b = -ng; b <= ng; ++b) acc[a + b + full] += fa * g.coeff(b);
  }
  product = FourierFunction(full, std::move(acc));
  const int target = degree < 0 ? std::max(nf, ng) : degree;
  if (loss != nullptr) loss->discarded_energy += product.tail_energy(target);
  return product.resized(target);
}

FourierFunction derivative(const FourierFunction& f, int order) {
  FourierFunction out(f.degree());
  for (int k = -f.degree(); k <= f.degree(); ++k) {
    Complex factor = 1.0;
    for (int r = 0; r < order; ++r) factor *= Complex(0.0, k);
    out.set_coeff(k, factor * f.coeff(k));
  }
  return out;
}

Complex integrate(const FourierFunction& f) { return kTwoPi * f.coeff(0); }

Complex integrate_product(const FourierFunction& f, const FourierFunction& g) {
  const int n = std::min(f.degree(), g.degree());
  Complex sum = 0.0;
  for (int k = -n; k <= n; ++k) sum += f.coeff(k) * g.coeff(-k);
  return kTwoPi * sum;
}

double sup_distance(const FourierFunction& f, const FourierFunction& g, int grid) {
  const auto a = f.samples(grid);
  const auto b = g.samples(grid);
  double m = 0.0;
  for (int j = 0; j < grid; ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace semibounded::circle
