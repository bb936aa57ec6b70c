#pragma once

#include <algorithm>

#include "semibounded/fourier.hpp"
#include "semibounded/random.hpp"

namespace semibounded::circle {

inline constexpr int kDefaultDegree = 32;

/// Default sampling grid for a degree-N object: 4N+1 points.
inline int default_grid(int degree) { return 4 * degree + 1; }
/// Grid used for compositions and pullbacks: 8N points.
inline int composition_grid(int degree) { return 8 * std::max(degree, 1); }

/// f(theta) d/dtheta. Complex coefficient functions are allowed for algebra
/// checks on the Witt basis; group-level routines require real fields.
struct VectorField {
  FourierFunction f;
};

/// u(theta) (dtheta)^s.
struct Density {
  FourierFunction u;
  double weight = 0.0;
};

/// d_n = i e^{in theta} d/dtheta.
VectorField witt_generator(int n, int degree = kDefaultDegree);

/// Orientation-preserving diffeomorphism theta -> theta + p(theta), p real.
class CircleDiffeo {
 public:
  /// Throws DomainError unless p is real and 1 + p' > 0 on `grid` points
  /// (grid 0 selects 4N+1; smaller values are raised to 4N+1).
  explicit CircleDiffeo(FourierFunction offset, int grid = 0);

  static CircleDiffeo identity(int degree = kDefaultDegree);
  static CircleDiffeo rotation(double angle, int degree = kDefaultDegree);

  const FourierFunction& offset() const { return p_; }
  int degree() const { return p_.degree(); }
  int grid() const { return grid_; }

  /// phi(theta), not reduced mod 2 pi.
  double operator()(double theta) const;
  /// First, second or third derivative of phi.
  double derivative_at(double theta, int order) const;
  /// Smallest phi' over the validation grid.
  double min_slope() const;

 private:
  FourierFunction p_, dp_, d2p_, d3p_;
  int grid_;
};

/// [f d, g d] = (f g' - f' g) d. Result degree defaults to max of inputs.
VectorField lie_bracket(const VectorField& X, const VectorField& Y, int degree = -1,
                        TruncationLoss* loss = nullptr);

/// (u o phi) (phi')^s, sampled on `grid` points (0 selects 8N) and
/// re-expanded to `degree` (default: max of the two degrees).
Density pullback_density(const CircleDiffeo& phi, const Density& u, int grid = 0, int degree = -1);

/// (f u' + s f' u) (dtheta)^s.
Density lie_derivative(const VectorField& X, const Density& u, int degree = -1,
                       TruncationLoss* loss = nullptr);

/// phi o psi.
CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi, int degree = -1, int grid = 0);
/// Per-grid-point Newton inversion; NumericalFailure after 50 iterations.
CircleDiffeo invert(const CircleDiffeo& phi, int degree = -1, int grid = 0);
/// Time-t flow of a real field, classical RK4 with step <= max_step.
CircleDiffeo flow(const VectorField& X, double t, int degree = -1, double max_step = 1e-2, int grid = 0);

/// phi'''/phi' - 3/2 (phi''/phi')^2 at a point.
double schwarzian_at(const CircleDiffeo& phi, double theta);
/// Schwarzian plus (phi'^2 - 1)/2 at a point.
double modified_schwarzian_at(const CircleDiffeo& phi, double theta);
FourierFunction schwarzian(const CircleDiffeo& phi, int grid = 0);
FourierFunction modified_schwarzian(const CircleDiffeo& phi, int grid = 0);

/// Integral of f' g''.
Complex gelfand_fuchs(const VectorField& X, const VectorField& Y);
/// Integral of (f''' + f') g.
Complex omega_cocycle(const VectorField& X, const VectorField& Y);

struct RandomDiffeoOptions {
  int max_mode = 3;
  /// Bound on sum_k k (|a_k| + |b_k|); below 1 keeps phi' > 0.
  double amplitude = 0.2;
  bool random_rotation = true;
};

CircleDiffeo random_diffeo(Rng& rng, int degree = kDefaultDegree, const RandomDiffeoOptions& options = {});

/// Real trigonometric polynomial with normal coefficients in modes 0..max_mode.
FourierFunction random_real_function(Rng& rng, int max_mode, int degree, double scale = 1.0);

}  // namespace semibounded::circle
