#include "semibounded/virasoro.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "semibounded/errors.hpp"

namespace semibounded::virasoro {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

double periodic_mean(const std::function<double(double)>& fn, int min_points) {
  constexpr int kMaxPoints = 1 << 20;
  int m = std::max(min_points, 4);
  double sum = 0.0;
  for (int j = 0; j < m; ++j) sum += fn(kTwoPi * j / m);
  double mean = sum / m;
  double last_change = std::numeric_limits<double>::infinity();
  while (m < kMaxPoints) {
    // Refine by the midpoints of the current grid.
    double mid = 0.0;
    for (int j = 0; j < m; ++j) mid += fn(kTwoPi * (j + 0.5) / m);
    sum += mid;
    m *= 2;
    const double next = sum / m;
    const double change = std::abs(next - mean);
    const double scale = std::max(1.0, std::abs(next));
    // Converged, or stagnating below a 1e-9 relative change.
    const bool done = change <= 1e-14 * scale || (change <= 1e-9 * scale && change > 0.5 * last_change);
    last_change = change;
    mean = next;
    if (done) return mean;
  }
  throw NumericalFailure("periodic quadrature did not converge");
}

VirasoroElement vir_bracket(const VirasoroElement& x, const VirasoroElement& y, int degree) {
  return {circle::omega_cocycle(x.x, y.x), circle::lie_bracket(x.x, y.x, degree)};
}

double schwarzian_inverse_integral(const CircleDiffeo& phi, const FourierFunction& f) {
  // With theta = phi(y) and the cocycle identity for phi o phi^{-1}:
  //   integral f S~(phi^{-1}) = - integral (f o phi) S~(phi) / phi'.
  const int start = std::max(64, circle::composition_grid(std::max(phi.degree(), f.degree())));
  const double mean = periodic_mean(
      [&](double y) {
        return f.real_at(phi(y)) * circle::modified_schwarzian_at(phi, y) / phi.derivative_at(y, 1);
      },
      start);
  return -kTwoPi * mean;
}

VirasoroElement adjoint_action(const CircleDiffeo& phi, const VirasoroElement& x, int grid) {
  if (!x.x.f.is_real(1e-10)) throw DomainError("adjoint_action: field must be real");
  const double shift = schwarzian_inverse_integral(phi, x.x.f);
  const Density moved = circle::pullback_density(phi, Density{x.x.f, -1.0}, grid);
  return {Complex(x.z.real() - shift, 0.0), VectorField{moved.u.real_part()}};
}

VirasoroFunctional coadjoint_action(const CircleDiffeo& phi, const VirasoroFunctional& lambda, int grid) {
  if (!lambda.u.u.is_real(1e-10)) throw DomainError("coadjoint_action: density must be real");
  const int degree = std::max(phi.degree(), lambda.u.u.degree());
  const int m = std::max(grid > 0 ? grid : circle::composition_grid(degree), 2 * degree + 1);
  std::vector<double> values(m);
  for (int j = 0; j < m; ++j) {
    const double t = kTwoPi * j / m;
    const double slope = phi.derivative_at(t, 1);
    values[j] = lambda.u.u.real_at(phi(t)) * slope * slope - lambda.a * circle::modified_schwarzian_at(phi, t);
  }
  return {lambda.a, Density{FourierFunction::from_real_samples(values, degree), 2.0}};
}

double pairing(const VirasoroFunctional& lambda, const VirasoroElement& x) {
  return lambda.a * x.z.real() + circle::integrate_product(lambda.u.u, x.x.f).real();
}

double chi(const VectorField& X) {
  const FourierFunction& f = X.f;
  if (!f.is_real(1e-10)) throw DomainError("chi: field must be real");
  const auto s = f.real_samples(circle::default_grid(f.degree()));
  const double lowest = *std::min_element(s.begin(), s.end());
  if (!(lowest > 0.0)) throw DomainError("chi: field is not positive (min " + std::to_string(lowest) + ")");
  return periodic_mean(
      [&](double t) {
        const double v = f.real_at(t);
        if (!(v > 0.0)) throw DomainError("chi: field is not positive");
        return 1.0 / v;
      },
      std::max(64, circle::default_grid(f.degree())));
}

CartanCoords orbit_invariants(const VirasoroElement& x) {
  const double chi_value = chi(x.x);
  const FourierFunction& f = x.x.f;
  const FourierFunction df = circle::derivative(f);
  const double energy = kTwoPi * periodic_mean(
                                     [&](double t) {
                                       const double d = df.real_at(t);
                                       return d * d / (2.0 * f.real_at(t));
                                     },
                                     std::max(64, circle::default_grid(f.degree())));
  const double integral = circle::integrate(f).real();
  const double beta = x.z.real() - energy + 0.5 * integral - std::numbers::pi / chi_value;
  return {beta, 1.0 / chi_value};
}

CartanCoords cartan_projection(const VirasoroElement& x) { return {x.z.real(), x.x.f.coeff(0).real()}; }

VirasoroElement from_cartan(const CartanCoords& x, int degree) {
  return {Complex(x.beta, 0.0), VectorField{FourierFunction::constant(x.alpha, degree)}};
}

ConvexityReport convexity_check(const CartanCoords& x, int trials, std::uint64_t seed,
                                const circle::RandomDiffeoOptions& options) {
  if (!(x.alpha > 0.0)) throw DomainError("convexity_check: alpha must be positive");
  if (trials < 0) throw DomainError("convexity_check: trials must be non-negative");
  Rng rng(seed);
  const VirasoroElement element = from_cartan(x);
  ConvexityReport report;
  report.trials = trials;
  report.worst_beta_margin = std::numeric_limits<double>::infinity();
  report.worst_alpha_margin = std::numeric_limits<double>::infinity();
  if (trials == 0) {
    report.worst_beta_margin = report.worst_alpha_margin = 0.0;
    return report;
  }
  for (int i = 0; i < trials; ++i) {
    const CircleDiffeo phi = circle::random_diffeo(rng, circle::kDefaultDegree, options);
    const CartanCoords p = cartan_projection(adjoint_action(phi, element));
    report.worst_beta_margin = std::min(report.worst_beta_margin, p.beta - x.beta);
    report.worst_alpha_margin = std::min(report.worst_alpha_margin, p.alpha - x.alpha);
  }
  return report;
}

double beta_hessian_form(const FourierFunction& h) {
  if (!h.is_real(1e-10)) throw DomainError("beta_hessian_form: direction must be real");
  double sum = 0.0;
  for (int k = 1; k <= h.degree(); ++k) {
    sum += (1.0 - static_cast<double>(k) * k) * (std::norm(h.coeff(k)) + std::norm(h.coeff(-k)));
  }
  return kTwoPi * sum;
}

VectorField root_field(int n, int degree) {
  if (n < 1) throw DomainError("root_field: n must be positive");
  return {-2.0 * FourierFunction::sine(n, degree)};
}

std::vector<CartanCoords> projection_curve(const CartanCoords& x, int n, const std::vector<double>& s_values,
                                           int degree) {
  const VectorField X = root_field(n, degree);
  const VirasoroElement element = from_cartan(x, degree);
  std::vector<CartanCoords> out;
  out.reserve(s_values.size());
  for (double s : s_values) {
    const CircleDiffeo phi = circle::flow(X, s, degree);
    out.push_back(cartan_projection(adjoint_action(phi, element)));
  }
  return out;
}

}  // namespace semibounded::virasoro
