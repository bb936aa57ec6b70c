#include "semibounded/circle.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "semibounded/errors.hpp"

namespace semibounded::circle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double grid_point(int j, int m) { return kTwoPi * j / m; }

void require_real(const FourierFunction& f, const char* what) {
  if (!f.is_real(1e-10)) throw DomainError(std::string(what) + ": expected a real function");
}

}  // namespace

VectorField witt_generator(int n, int degree) {
  return {FourierFunction::mode(n, Complex(0.0, 1.0), std::max(degree, std::abs(n)))};
}

CircleDiffeo::CircleDiffeo(FourierFunction offset, int grid) {
  require_real(offset, "CircleDiffeo");
  p_ = offset.real_part();
  dp_ = derivative(p_, 1);
  d2p_ = derivative(p_, 2);
  d3p_ = derivative(p_, 3);
  grid_ = std::max(grid, default_grid(p_.degree()));
  const double slope = min_slope();
  if (!(slope > 0.0)) {
    throw DomainError("not a diffeomorphism: phi' reaches " + std::to_string(slope));
  }
}

CircleDiffeo CircleDiffeo::identity(int degree) { return CircleDiffeo(FourierFunction(degree)); }

CircleDiffeo CircleDiffeo::rotation(double angle, int degree) {
  return CircleDiffeo(FourierFunction::constant(angle, degree));
}

double CircleDiffeo::operator()(double theta) const { return theta + p_.real_at(theta); }

double CircleDiffeo::derivative_at(double theta, int order) const {
  switch (order) {
    case 1:
      return 1.0 + dp_.real_at(theta);
    case 2:
      return d2p_.real_at(theta);
    case 3:
      return d3p_.real_at(theta);
    default:
      throw DomainError("derivative order must be 1, 2 or 3");
  }
}

double CircleDiffeo::min_slope() const {
  const auto s = dp_.real_samples(grid_);
  return 1.0 + *std::min_element(s.begin(), s.end());
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y, int degree, TruncationLoss* loss) {
  const int target = degree < 0 ? std::max(X.f.degree(), Y.f.degree()) : degree;
  auto a = multiply(X.f, derivative(Y.f), target, loss);
  auto b = multiply(derivative(X.f), Y.f, target, loss);
  return {a - b};
}

Density pullback_density(const CircleDiffeo& phi, const Density& u, int grid, int degree) {
  const int target = degree < 0 ? std::max(phi.degree(), u.u.degree()) : degree;
  const int m = std::max(grid > 0 ? grid : composition_grid(target), 2 * target + 1);
  std::vector<Complex> values(m);
  for (int j = 0; j < m; ++j) {
    const double t = grid_point(j, m);
    values[j] = u.u(phi(t)) * std::pow(phi.derivative_at(t, 1), u.weight);
  }
  return {FourierFunction::from_samples(values, target), u.weight};
}

Density lie_derivative(const VectorField& X, const Density& u, int degree, TruncationLoss* loss) {
  const int target = degree < 0 ? std::max(X.f.degree(), u.u.degree()) : degree;
  auto a = multiply(X.f, derivative(u.u), target, loss);
  auto b = multiply(derivative(X.f), u.u, target, loss);
  return {a + u.weight * b, u.weight};
}

CircleDiffeo compose(const CircleDiffeo& phi, const CircleDiffeo& psi, int degree, int grid) {
  const int target = degree < 0 ? std::max(phi.degree(), psi.degree()) : degree;
  const int m = std::max(grid > 0 ? grid : composition_grid(target), 2 * target + 1);
  std::vector<double> offset(m);
  for (int j = 0; j < m; ++j) {
    const double t = grid_point(j, m);
    offset[j] = phi(psi(t)) - t;
  }
  return CircleDiffeo(FourierFunction::from_real_samples(offset, target));
}

CircleDiffeo invert(const CircleDiffeo& phi, int degree, int grid) {
  const int target = degree < 0 ? phi.degree() : degree;
  const int m = std::max(grid > 0 ? grid : composition_grid(target), 2 * target + 1);
  constexpr int kMaxIterations = 50;
  std::vector<double> offset(m);
  for (int j = 0; j < m; ++j) {
    const double goal = grid_point(j, m);
    double y = goal - phi.offset().real_at(goal);
    bool converged = false;
    for (int it = 0; it < kMaxIterations; ++it) {
      const double step = (phi(y) - goal) / phi.derivative_at(y, 1);
      y -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(y))) {
        converged = true;
        break;
      }
    }
    if (!converged && std::abs(phi(y) - goal) > 1e-13) {
      throw NumericalFailure("Newton inversion did not converge at grid point " + std::to_string(j));
    }
    offset[j] = y - goal;
  }
  return CircleDiffeo(FourierFunction::from_real_samples(offset, target));
}

CircleDiffeo flow(const VectorField& X, double t, int degree, double max_step, int grid) {
  require_real(X.f, "flow");
  if (!(max_step > 0.0)) throw DomainError("flow step must be positive");
  const int target = degree < 0 ? std::max(kDefaultDegree, X.f.degree()) : degree;
  const int m = std::max(grid > 0 ? grid : composition_grid(target), 2 * target + 1);
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(t) / max_step)));
  const double h = t / steps;
  const FourierFunction f = X.f.real_part();
  auto rhs = [&f](double y) { return f.real_at(y); };
  std::vector<double> offset(m);
  for (int j = 0; j < m; ++j) {
    const double start = grid_point(j, m);
    double y = start;
    for (int s = 0; s < steps; ++s) {
      const double k1 = rhs(y);
      const double k2 = rhs(y + 0.5 * h * k1);
      const double k3 = rhs(y + 0.5 * h * k2);
      const double k4 = rhs(y + h * k3);
      y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    offset[j] = y - start;
  }
  return CircleDiffeo(FourierFunction::from_real_samples(offset, target));
}

double schwarzian_at(const CircleDiffeo& phi, double theta) {
  const double d1 = phi.derivative_at(theta, 1);
  const double d2 = phi.derivative_at(theta, 2);
  const double d3 = phi.derivative_at(theta, 3);
  const double r = d2 / d1;
  return d3 / d1 - 1.5 * r * r;
}

double modified_schwarzian_at(const CircleDiffeo& phi, double theta) {
  const double d1 = phi.derivative_at(theta, 1);
  return schwarzian_at(phi, theta) + 0.5 * (d1 * d1 - 1.0);
}

FourierFunction schwarzian(const CircleDiffeo& phi, int grid) {
  const int m = std::max(grid > 0 ? grid : composition_grid(phi.degree()), 2 * phi.degree() + 1);
  std::vector<double> values(m);
  for (int j = 0; j < m; ++j) values[j] = schwarzian_at(phi, grid_point(j, m));
  return FourierFunction::from_real_samples(values, phi.degree());
}

FourierFunction modified_schwarzian(const CircleDiffeo& phi, int grid) {
  const int m = std::max(grid > 0 ? grid : composition_grid(phi.degree()), 2 * phi.degree() + 1);
  std::vector<double> values(m);
  for (int j = 0; j < m; ++j) values[j] = modified_schwarzian_at(phi, grid_point(j, m));
  return FourierFunction::from_real_samples(values, phi.degree());
}

Complex gelfand_fuchs(const VectorField& X, const VectorField& Y) {
  return integrate_product(derivative(X.f, 1), derivative(Y.f, 2));
}

Complex omega_cocycle(const VectorField& X, const VectorField& Y) {
  return integrate_product(derivative(X.f, 3) + derivative(X.f, 1), Y.f);
}

CircleDiffeo random_diffeo(Rng& rng, int degree, const RandomDiffeoOptions& options) {
  if (!(options.amplitude >= 0.0 && options.amplitude < 1.0)) {
    throw DomainError("random diffeo amplitude must lie in [0, 1)");
  }
  const int modes = std::min(options.max_mode, degree);
  std::vector<double> a(modes + 1), b(modes + 1);
  double weight = 0.0;
  for (int k = 1; k <= modes; ++k) {
    a[k] = rng.uniform(-1.0, 1.0);
    b[k] = rng.uniform(-1.0, 1.0);
    weight += k * (std::abs(a[k]) + std::abs(b[k]));
  }
  const double scale = weight > 0.0 ? options.amplitude / weight : 0.0;
  FourierFunction p(degree);
  if (options.random_rotation) p.set_coeff(0, rng.uniform(-std::numbers::pi, std::numbers::pi));
  for (int k = 1; k <= modes; ++k) {
    const Complex c = 0.5 * scale * Complex(a[k], -b[k]);
    p.set_coeff(k, c);
    p.set_coeff(-k, std::conj(c));
  }
  return CircleDiffeo(p);
}

FourierFunction random_real_function(Rng& rng, int max_mode, int degree, double scale) {
  FourierFunction f(std::max(degree, max_mode));
  f.set_coeff(0, scale * rng.normal());
  for (int k = 1; k <= max_mode; ++k) {
    const Complex c = 0.5 * scale * Complex(rng.normal(), rng.normal());
    f.set_coeff(k, c);
    f.set_coeff(-k, std::conj(c));
  }
  return f;
}

}  // namespace semibounded::circle
