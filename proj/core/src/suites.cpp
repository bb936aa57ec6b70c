#include "semibounded/suites.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "json.hpp"
#include "semibounded/circle.hpp"
#include "semibounded/convex.hpp"
#include "semibounded/fock.hpp"
#include "semibounded/symplectic.hpp"
#include "semibounded/verma.hpp"
#include "semibounded/virasoro.hpp"

namespace semibounded::verify {

namespace {

using circle::Complex;
using circle::FourierFunction;
using circle::VectorField;
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Context {
  const SuiteConfig& config;
  Report& report;
  Rng rng;

  double tol(double t) const { return t * config.tol_scale; }
  void check(const std::string& id, const std::string& anchor, double residual, double tolerance) {
    report.add(id, anchor, residual, tol(tolerance));
  }
  void flag(const std::string& id, const std::string& anchor, bool ok) { report.add_flag(id, anchor, ok); }
};

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double positive_part(double x) { return std::max(0.0, x); }

// ---------------------------------------------------------------- convex

void convex_suite(Context& ctx) {
  using convex::Vector;
  const int trials = ctx.config.int_param("trials", 20);

  {
    convex::SampledSet X;
    for (int i = 0; i < 3; ++i) {
      X.points.push_back(Vector::Unit(3, i));
      X.points.push_back(-Vector::Unit(3, i));
    }
    Vector v(3);
    v << 1, 2, 3;
    double brute = -std::numeric_limits<double>::infinity();
    for (const auto& p : X.points) brute = std::max(brute, -p.dot(v));
    ctx.check("support-cross-polytope", "s_X(v) = -min <p, v>", std::abs(convex::support_function(X, v) - brute),
              0.0);
  }

  double homogeneity = 0.0, subadditivity = 0.0;
  for (int t = 0; t < trials; ++t) {
    convex::SampledSet X;
    for (int i = 0; i < 12; ++i) {
      Vector p(4);
      for (int k = 0; k < 4; ++k) p(k) = ctx.rng.normal();
      X.points.push_back(p);
    }
    Vector v(4), w(4);
    for (int k = 0; k < 4; ++k) {
      v(k) = ctx.rng.normal();
      w(k) = ctx.rng.normal();
    }
    const double s = ctx.rng.uniform(0.0, 5.0);
    const double sv = convex::support_function(X, v);
    homogeneity = std::max(homogeneity, std::abs(convex::support_function(X, s * v) - s * sv) / (1.0 + std::abs(s * sv)));
    subadditivity = std::max(
        subadditivity, positive_part(convex::support_function(X, v + w) - sv - convex::support_function(X, w)));
  }
  ctx.check("support-homogeneity", "s_X(tv) = t s_X(v), t >= 0", homogeneity, 1e-14);
  ctx.check("support-convexity", "s_X(v+w) <= s_X(v) + s_X(w)", subadditivity, 1e-12);

  bool double_dual = true;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + t % 4;
    std::vector<Vector> gens;
    const int count = n + 1 + ctx.rng.integer(0, 2);
    for (int i = 0; i < count; ++i) {
      Vector g(n);
      for (int k = 0; k < n; ++k) g(k) = ctx.rng.normal();
      gens.push_back(g);
    }
    const auto C = convex::PolyCone::generated(gens, n);
    double_dual = double_dual && convex::equivalent(C, convex::dual_cone(convex::dual_cone(C)));
  }
  ctx.flag("double-dual", "C** = C for polyhedral cones", double_dual);

  {
    convex::Polyhedron P{{Vector::Unit(2, 0), Vector::Ones(2)}, {0.0, -3.0}, 2};
    const auto expected = convex::PolyCone::halfspace({Vector::Unit(2, 0), Vector::Ones(2)}, 2);
    ctx.flag("recession-example", "lim(C) = {x : <a_i, x> >= 0}",
             convex::equivalent(convex::recession_cone(P), expected));
    convex::Polyhedron half{{Vector::Unit(3, 0)}, {0.0}, 3};
    ctx.flag("lineality-example", "H(C) = lim(C) cap -lim(C)", convex::lineality_space(half).size() == 2);
  }

  double limcone = 0.0;
  for (int t = 0; t < trials; ++t) {
    convex::Polyhedron P;
    P.dimension = 3;
    for (int i = 0; i < 5; ++i) {
      Vector a(3);
      for (int k = 0; k < 3; ++k) a(k) = ctx.rng.normal();
      P.normals.push_back(a);
      P.offsets.push_back(ctx.rng.uniform(-2.0, 0.0));
    }
    const auto rec = convex::recession_cone(P).to_generators();
    const auto bb = convex::bounded_below_functionals(P).to_generators();
    for (const auto& d : rec.vectors()) {
      for (const auto& a : bb.vectors()) limcone = std::max(limcone, positive_part(-a.dot(d)));
    }
  }
  ctx.check("recession-duality", "lim(C) = (functionals bounded below on C)*", limcone, 1e-9);

  {
    // Hexagon invariant under rotation by pi/3.
    convex::Polyhedron hex;
    hex.dimension = 2;
    std::vector<Eigen::Matrix2d> group;
    for (int k = 0; k < 6; ++k) {
      const double a = kPi * k / 3.0;
      hex.normals.push_back(Vector{{std::cos(a), std::sin(a)}});
      hex.offsets.push_back(-1.0);
      Eigen::Matrix2d r;
      r << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
      group.push_back(r);
    }
    double worst = 0.0;
    for (int t = 0; t < trials; ++t) {
      Vector x(2);
      do {
        x << ctx.rng.uniform(-1.2, 1.2), ctx.rng.uniform(-1.2, 1.2);
      } while (!hex.contains(x));
      std::vector<Vector> orbit;
      for (const auto& g : group) orbit.push_back(g * x);
      worst = std::max(worst, positive_part(-hex.margin(convex::group_average(orbit))));
    }
    ctx.check("group-average-invariant", "fixed-point projection stays in invariant sets", worst, 1e-9);

    std::vector<Vector> orbit;
    for (int k = 0; k < 360; ++k) {
      const double a = kTwoPi * k / 360.0;
      orbit.push_back(Vector{{2.0 * std::cos(a), 2.0 * std::sin(a)}});
    }
    ctx.check("group-average-rotation", "average of a full rotation orbit is 0",
              convex::group_average(orbit).norm(), 1e-12);
  }

  {
    convex::SampledSet circle_sample, line;
    for (int k = 0; k < 64; ++k) {
      const double a = kTwoPi * k / 64.0;
      circle_sample.points.push_back(Vector{{std::cos(a), std::sin(a)}});
    }
    for (int k = 0; k <= 100; ++k) {
      line.points.push_back(Vector{{static_cast<double>(k), 0.0}});
      line.points.push_back(Vector{{-static_cast<double>(k), 0.0}});
    }
    ctx.flag("interior-surrogate-bounded", "surrogate: bounded sample has B(X) interior",
             convex::has_interior_B(circle_sample).has_interior);
    ctx.flag("interior-surrogate-line", "surrogate: two-sided ray family has no B(X) interior",
             !convex::has_interior_B(line).has_interior);
  }
}

// ---------------------------------------------------------------- circle / cocycles

void cocycle_suite(Context& ctx) {
  const int N = ctx.config.int_param("N", circle::kDefaultDegree);
  const int trials = ctx.config.int_param("trials", 50);
  const int grid = ctx.config.int_param("grid", 256);

  for (int n = 1; n <= 8; ++n) {
    const Complex value = circle::omega_cocycle(circle::witt_generator(n, N), circle::witt_generator(-n, N));
    const Complex expected(0.0, kTwoPi * (n * n * n - n));
    ctx.check("omega-witt-" + std::to_string(n), "omega(d_n, d_-n) = 2 pi i (n^3 - n)", std::abs(value - expected),
              1e-9);
  }

  double structure = 0.0;
  for (int n = -8; n <= 8; ++n) {
    for (int m = -8; m <= 8; ++m) {
      const auto b = circle::lie_bracket(circle::witt_generator(n, 16), circle::witt_generator(m, 16), 16);
      const auto expected = static_cast<double>(n - m) * circle::witt_generator(n + m, 16).f;
      structure = std::max(structure, (b.f - expected).max_abs_coeff());
    }
  }
  ctx.check("witt-structure-constants", "[d_n, d_m] = (n - m) d_{n+m}", structure, 1e-12);

  double antisym = 0.0, jacobi = 0.0, cocycle = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int budget = 4;
    const VectorField X{circle::random_real_function(ctx.rng, budget, 3 * budget)};
    const VectorField Y{circle::random_real_function(ctx.rng, budget, 3 * budget)};
    const VectorField Z{circle::random_real_function(ctx.rng, budget, 3 * budget)};
    antisym = std::max(antisym, std::abs(circle::omega_cocycle(X, X)));
    auto br = [](const VectorField& a, const VectorField& b) { return circle::lie_bracket(a, b, 3 * 4); };
    const auto j = br(br(X, Y), Z).f + br(br(Y, Z), X).f + br(br(Z, X), Y).f;
    jacobi = std::max(jacobi, j.max_abs_coeff());
    cocycle = std::max(cocycle, std::abs(circle::omega_cocycle(br(X, Y), Z) + circle::omega_cocycle(br(Y, Z), X) +
                                         circle::omega_cocycle(br(Z, X), Y)));
  }
  ctx.check("omega-antisymmetry", "omega(X, X) = 0", antisym, 1e-10);
  ctx.check("bracket-jacobi", "Jacobi identity for [f d, g d] = (f g' - f' g) d", jacobi, 1e-10);
  ctx.check("omega-cocycle-identity", "omega([X,Y],Z) + cyclic = 0", cocycle, 1e-9);

  {
    const auto d2 = circle::witt_generator(2, N), dm2 = circle::witt_generator(-2, N);
    const Complex lhs = circle::gelfand_fuchs(d2, dm2) - circle::omega_cocycle(d2, dm2);
    const Complex rhs = 0.5 * circle::integrate(circle::lie_bracket(d2, dm2).f);
    ctx.check("gelfand-fuchs-decomposition", "omega_GF - omega = lambda([X, Y]) / 2", std::abs(lhs - rhs), 1e-12);
  }

  double schwarzian = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto phi = circle::random_diffeo(ctx.rng, N);
    const auto psi = circle::random_diffeo(ctx.rng, N);
    const auto composed = circle::compose(phi, psi, N);
    for (int j = 0; j < grid; ++j) {
      const double th = kTwoPi * j / grid;
      const double slope = psi.derivative_at(th, 1);
      const double rhs = circle::schwarzian_at(phi, psi(th)) * slope * slope + circle::schwarzian_at(psi, th);
      schwarzian = std::max(schwarzian, std::abs(circle::schwarzian_at(composed, th) - rhs));
    }
  }
  ctx.check("schwarzian-cocycle", "S(phi o psi) = (S(phi) o psi) psi'^2 + S(psi)", schwarzian, 1e-8);

  {
    const auto rot = circle::CircleDiffeo::rotation(0.7, N);
    double zero = 0.0;
    for (int j = 0; j < 16; ++j) zero = std::max(zero, std::abs(circle::modified_schwarzian_at(rot, kTwoPi * j / 16)));
    ctx.check("schwarzian-rotation", "S~(rotation) = 0", zero, 1e-14);
  }

  {
    const VectorField X{circle::random_real_function(ctx.rng, 3, N, 0.3)};
    const double eps = 1e-3;
    const auto plus = circle::flow(X, eps, N), minus = circle::flow(X, -eps, N);
    const auto target = circle::derivative(X.f, 3) + circle::derivative(X.f, 1);
    double err = 0.0, scale = 0.0;
    for (int j = 0; j < grid; ++j) {
      const double th = kTwoPi * j / grid;
      const double fd =
          (circle::modified_schwarzian_at(plus, th) - circle::modified_schwarzian_at(minus, th)) / (2.0 * eps);
      err = std::max(err, std::abs(fd - target.real_at(th)));
      scale = std::max(scale, std::abs(target.real_at(th)));
    }
    ctx.check("modified-schwarzian-derivative", "T_id S~ (f) = f''' + f'", err / scale, 1e-5);
  }

  {
    double action = 0.0;
    for (int t = 0; t < std::min(trials, 10); ++t) {
      const auto phi = circle::random_diffeo(ctx.rng, N);
      const auto psi = circle::random_diffeo(ctx.rng, N);
      const circle::Density u{circle::random_real_function(ctx.rng, 3, N), 2.0};
      const auto lhs = circle::pullback_density(circle::compose(psi, phi, N), u);
      const auto rhs = circle::pullback_density(phi, circle::pullback_density(psi, u));
      action = std::max(action, circle::sup_distance(lhs.u, rhs.u, circle::default_grid(N)));
    }
    ctx.check("pullback-action", "(psi o phi)^* = phi^* psi^* on densities", action, 1e-8);
  }

  {
    const VectorField X{circle::random_real_function(ctx.rng, 3, N, 0.5)};
    const circle::Density u{circle::random_real_function(ctx.rng, 3, N), 1.5};
    const double h = 1e-4;
    const auto plus = circle::pullback_density(circle::flow(X, h, N), u);
    const auto minus = circle::pullback_density(circle::flow(X, -h, N), u);
    const auto fd = (1.0 / (2.0 * h)) * (plus.u - minus.u);
    const auto exact = circle::lie_derivative(X, u).u;
    const double rel = circle::sup_distance(fd, exact, 129) / std::max(1e-300, exact.max_abs_coeff());
    ctx.check("lie-derivative-flow", "d/dt (exp tX)^* u = L_X u", rel, 1e-6);
  }
}

// ---------------------------------------------------------------- virasoro orbits

void orbit_suite(Context& ctx) {
  const int N = ctx.config.int_param("N", circle::kDefaultDegree);
  const int trials = ctx.config.int_param("trials", 100);
  const int convexity_trials = ctx.config.int_param("convexity_trials", 200);
  const int hessian_trials = ctx.config.int_param("hessian_trials", 200);

  {
    const VectorField f{FourierFunction::constant(2.0, N) + FourierFunction::cosine(1, N)};
    ctx.check("chi-closed-form", "chi(2 + cos) = 1/sqrt(3)", std::abs(virasoro::chi(f) - 1.0 / std::sqrt(3.0)),
              1e-10);
    ctx.check("alpha-closed-form", "alpha(z, 2 + cos) = sqrt(3)",
              std::abs(virasoro::orbit_invariants({0.0, f}).alpha - std::sqrt(3.0)), 1e-9);
    const virasoro::VirasoroElement c{0.3, VectorField{FourierFunction::constant(1.7, N)}};
    const auto inv = virasoro::orbit_invariants(c);
    ctx.check("invariants-constant-field", "(beta, alpha)(z, c) = (z, c)",
              std::max(std::abs(inv.beta - 0.3), std::abs(inv.alpha - 1.7)), 1e-12);
  }

  double chi_inv = 0.0, orbit_inv = 0.0, pairing = 0.0;
  for (int t = 0; t < trials; ++t) {
    FourierFunction f = circle::random_real_function(ctx.rng, 3, N, 0.15);
    f.set_coeff(0, 1.0 + std::abs(ctx.rng.normal()));
    const virasoro::VirasoroElement x{ctx.rng.normal(), VectorField{f}};
    const auto phi = circle::random_diffeo(ctx.rng, N);
    const auto moved = virasoro::adjoint_action(phi, x);
    chi_inv = std::max(chi_inv, std::abs(virasoro::chi(moved.x) - virasoro::chi(x.x)));
    const auto a = virasoro::orbit_invariants(x), b = virasoro::orbit_invariants(moved);
    orbit_inv = std::max(orbit_inv, std::max(std::abs(a.beta - b.beta), std::abs(a.alpha - b.alpha)));
    const virasoro::VirasoroFunctional lambda{ctx.rng.normal(),
                                              {circle::random_real_function(ctx.rng, 3, N), 2.0}};
    pairing = std::max(pairing, std::abs(virasoro::pairing(virasoro::coadjoint_action(phi, lambda), moved) -
                                         virasoro::pairing(lambda, x)));
  }
  ctx.check("chi-invariance", "chi(Ad_phi f) = chi(f)", chi_inv, 1e-9);
  ctx.check("orbit-invariants-invariance", "(beta, alpha) constant on adjoint orbits", orbit_inv, 1e-7);
  ctx.check("coadjoint-pairing", "<Ad*_phi lambda, Ad_phi x> = <lambda, x>", pairing, 1e-7);

  {
    const auto report = virasoro::convexity_check({0.0, 1.0}, convexity_trials, ctx.rng.next());
    ctx.check("convexity-beta", "p_t(O_x) in x + C+ (c-coordinate)", positive_part(-report.worst_beta_margin), 1e-8);
    ctx.check("convexity-alpha", "p_t(O_x) in x + C+ (d-coordinate)", positive_part(-report.worst_alpha_margin), 1e-8);
  }

  {
    double worst = -std::numeric_limits<double>::infinity();
    for (int t = 0; t < hessian_trials; ++t) {
      worst = std::max(worst, virasoro::beta_hessian_form(circle::random_real_function(ctx.rng, 8, N)));
    }
    ctx.check("beta-hessian-semidefinite", "beta is concave along constant fields", positive_part(worst), 1e-9);
    double cos_err = 0.0;
    for (int n = 1; n <= 8; ++n) {
      cos_err = std::max(cos_err, std::abs(virasoro::beta_hessian_form(FourierFunction::cosine(n, N)) -
                                           kPi * (1.0 - n * n)));
    }
    ctx.check("beta-hessian-cosine", "Hessian at cos(n theta) = pi (1 - n^2)", cos_err, 1e-9);
  }

  {
    const auto curve = virasoro::projection_curve({0.0, 1.0}, 2, {0.0, 1e-2}, N);
    ctx.check("projection-curve-origin", "curve starts at x",
              std::hypot(curve[0].beta, curve[0].alpha - 1.0), 1e-12);
    const double ratio = curve[1].beta / (curve[1].alpha - 1.0);
    ctx.check("projection-curve-slope-n2", "root direction pi (n^2 - 1) c + d, n = 2", std::abs(ratio - 3.0 * kPi),
              1e-3);
    ctx.flag("projection-curve-forward", "curve moves into x + C+", curve[1].alpha - 1.0 > 0.0);
    const auto n1 = virasoro::projection_curve({0.0, 1.0}, 1, {0.1}, N);
    ctx.check("projection-curve-n1", "n = 1 root direction is pure d", std::abs(n1[0].beta), 1e-9);
  }

  {
    // chi of t + (1 - t)(1 + cos) equals 1/sqrt(2t - t^2).
    bool monotone = true;
    double previous = 0.0;
    for (double t : {0.5, 0.1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7}) {
      const VectorField f{FourierFunction::constant(1.0, 2) + (1.0 - t) * FourierFunction::cosine(1, 2)};
      const double value = virasoro::chi(f);
      monotone = monotone && value > previous;
      previous = value;
    }
    ctx.flag("chi-boundary-monotone", "chi grows toward the cone boundary", monotone);
    ctx.flag("chi-boundary-blowup", "chi > 1e3 at t = 1e-7", previous > 1e3);
  }

  {
    double lower = 0.0;
    for (int t = 0; t < convexity_trials; ++t) {
      const auto phi = circle::random_diffeo(ctx.rng, N);
      const auto p = virasoro::cartan_projection(virasoro::adjoint_action(phi, virasoro::from_cartan({0.0, 1.0}, N)));
      lower = std::max(lower, positive_part(1.0 - p.alpha));
    }
    ctx.check("projection-alpha-lower-bound", "p_t(O_{c d}) = [c, inf) d", lower, 1e-9);
  }
}

// ---------------------------------------------------------------- Verma

void gram_suite(Context& ctx) {
  using virasoro::Rational;
  const std::vector<std::pair<Rational, Rational>> params = {
      {Rational(0), Rational(1)}, {Rational(1), Rational(1, 2)}, {Rational(7, 3), Rational(5, 4)}, {Rational(-2), Rational(3)}};
  bool singleton = true;
  for (const auto& [c, h] : params) {
    for (int n = 1; n <= 5; ++n) {
      const auto g = virasoro::verma_gram<Rational>({virasoro::Partition{n}}, c, h);
      singleton = singleton && g[0][0] == Rational(2 * n) * h + c * Rational(n * n * n - n, 12);
    }
  }
  ctx.flag("singleton-norm-exact", "<d_-n v, d_-n v> = 2nh + c (n^3 - n)/12", singleton);

  bool pair = true;
  for (const auto& [c, h] : params) {
    for (int n = 1; n <= 3; ++n) {
      pair = pair && virasoro::pair_determinant(n, 0, h) == Rational(4 * n * n * n) * h * h * (Rational(8) * h - Rational(5 * n));
    }
    (void)c;
  }
  ctx.flag("pair-determinant-exact", "det = 4 n^3 h^2 (8h - 5n) at c = 0", pair);
  ctx.flag("pair-determinant-n1h1", "det = 12 at n = 1, h = 1", virasoro::pair_determinant(1, 0, 1) == Rational(12));

  bool symmetric = true;
  for (int level = 1; level <= virasoro::kMaxVermaLevel; ++level) {
    const auto g = virasoro::verma_gram<Rational>(level, Rational(3, 2), Rational(2, 3));
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = 0; j < g.size(); ++j) symmetric = symmetric && g[i][j] == g[j][i];
    }
  }
  ctx.flag("gram-symmetric", "d_n^* = d_-n makes the Gram matrix symmetric", symmetric);

  const auto scan = virasoro::unitarity_scan({0.0, 1.0}, {0.0, 1.0}, 5);
  for (const auto& p : scan) {
    if (p.c == 0.0 && p.h == 1.0) {
      ctx.flag("unitarity-c0-h1", "c = 0, h > 0: negative pair determinant once 8h < 5n", p.first_negative_pair == 2);
    }
    if (p.c == 1.0 && p.h == 1.0) {
      ctx.check("unitarity-c1-h1", "Gram positive semidefinite up to level 5", positive_part(-p.min_eigenvalue), 1e-9);
    }
  }
  {
    const auto g = virasoro::verma_gram<double>(1, 1.0, 0.0);
    ctx.check("null-level1-h0", "h = 0 gives a null vector at level 1", std::abs(g[0][0]), 0.0);
  }
}

// ---------------------------------------------------------------- Fock

ComplexVector unit_random(Rng& rng, int d) {
  ComplexVector v = symplectic::random_vector(rng, d);
  return v / v.norm();
}

void ccr_suite(Context& ctx) {
  const int d = ctx.config.int_param("d", 3);
  const int N = ctx.config.int_param("N", 12);
  const int trials = ctx.config.int_param("trials", 10);
  const auto bos = fock::FockSpace::bosonic(d, N);
  const auto fer = fock::FockSpace::fermionic(d);
  const auto safe = bos.level_projector(N - 2);

  double ccr = 0.0, ccr_aa = 0.0, car = 0.0, car_aa = 0.0;
  for (int t = 0; t < trials; ++t) {
    const ComplexVector f = unit_random(ctx.rng, d), g = unit_random(ctx.rng, d);
    const Complex inner = f.dot(g);  // <g, f> = f^* g in Eigen's convention
    const auto af = bos.annihilate(f), ag = bos.annihilate(g), cg = bos.create(g);
    ccr = std::max(ccr, (safe * (af * cg - cg * af - inner * bos.identity()) * safe).norm());
    ccr_aa = std::max(ccr_aa, (safe * (af * ag - ag * af) * safe).norm());
    const auto fa = fer.annihilate(f), fga = fer.annihilate(g), fc = fer.create(g);
    car = std::max(car, (fa * fc + fc * fa - inner * fer.identity()).norm());
    car_aa = std::max(car_aa, (fa * fga + fga * fa).norm());
  }
  ctx.check("ccr-mixed", "[a(f), a*(g)] = <g, f> on the cutoff-safe subspace", ccr, 1e-12);
  ctx.check("ccr-annihilators", "[a(f), a(g)] = 0", ccr_aa, 1e-12);
  ctx.check("car-mixed", "{a(f), a*(g)} = <g, f>", car, 1e-13);
  ctx.check("car-annihilators", "{a(f), a(g)} = 0", car_aa, 1e-13);
  ctx.check("annihilator-vacuum", "a(f) Omega = 0", (bos.annihilate(unit_random(ctx.rng, d)) * bos.vacuum()).norm(),
            0.0);

  {
    const double r = 0.8;
    const RealLinearMap squeeze(ComplexMatrix::Constant(1, 1, std::cosh(r)), ComplexMatrix::Constant(1, 1, std::sinh(r)));
    ctx.flag("squeeze-symplectic", "cosh^2 - sinh^2 = 1", is_symplectic(squeeze));
    const double a = 0.4;
    const RealLinearMap reflect(ComplexMatrix::Zero(1, 1), ComplexMatrix::Constant(1, 1, std::polar(1.0, a)));
    ctx.flag("conjugation-orthogonal", "rotation with conjugation is orthogonal, not symplectic",
             is_orthogonal(reflect) && !is_symplectic(reflect));
  }

  {
    fock::HeisenbergElement e1{0.0, ComplexVector::Unit(1, 0)};
    fock::HeisenbergElement ie1{0.0, Complex(0.0, 1.0) * ComplexVector::Unit(1, 0)};
    ctx.check("heisenberg-central", "(0, e1)(0, i e1) has central part -1/2",
              std::abs(fock::heisenberg_mul(e1, ie1).t + 0.5), 0.0);
    double assoc = 0.0;
    for (int t = 0; t < trials; ++t) {
      fock::HeisenbergElement a{ctx.rng.normal(), symplectic::random_vector(ctx.rng, d)};
      fock::HeisenbergElement b{ctx.rng.normal(), symplectic::random_vector(ctx.rng, d)};
      fock::HeisenbergElement c{ctx.rng.normal(), symplectic::random_vector(ctx.rng, d)};
      const auto l = fock::heisenberg_mul(fock::heisenberg_mul(a, b), c);
      const auto r = fock::heisenberg_mul(a, fock::heisenberg_mul(b, c));
      assoc = std::max(assoc, std::abs(l.t - r.t) + (l.v - r.v).norm());
    }
    ctx.check("heisenberg-associative", "Heisenberg product is associative", assoc, 1e-12);
  }

  {
    const auto x = RealLinearMap::complex_linear(symplectic::random_anti_hermitian(ctx.rng, d));
    const auto dx = fock::second_quantize(bos, x);
    const auto number = bos.number_operator();
    ctx.check("number-grading", "dpi(u(d)) commutes with the number operator", (dx * number - number * dx).norm(),
              1e-12);
  }
}

double weyl_relation_residual(int N, const ComplexVector& f, const ComplexVector& g) {
  const auto space = fock::FockSpace::bosonic(static_cast<int>(f.size()), N);
  const fock::FockOperator lhs = fock::weyl(space, 0.0, f) * fock::weyl(space, 0.0, g);
  const fock::FockOperator rhs = std::polar(1.0, 0.5 * symplectic_form(f, g)) * fock::weyl(space, 0.0, f + g);
  return ((lhs - rhs) * space.level_projector(N / 2)).norm();
}

void weyl_suite(Context& ctx) {
  const int N = ctx.config.int_param("N", 32);
  const auto space = fock::FockSpace::bosonic(1, N);
  for (double norm2 : {1.0, 2.0, 4.0}) {
    const ComplexVector f = ComplexVector::Constant(1, std::sqrt(norm2));
    const Complex coefficient = space.vacuum().dot(fock::weyl(space, 0.0, f) * space.vacuum());
    ctx.check("weyl-vacuum-coefficient-" + format_number(norm2), "<W(0,f) Omega, Omega> = exp(-|f|^2/4)",
              std::abs(coefficient - std::exp(-norm2 / 4.0)), 1e-6);
  }
  {
    const double t = 0.9;
    const ComplexVector f = ComplexVector::Constant(1, Complex(0.6, -0.8));
    const Complex coefficient = space.vacuum().dot(fock::weyl(space, t, f) * space.vacuum());
    ctx.check("weyl-phase", "<W(t,f) Omega, Omega> = exp(it - |f|^2/4)",
              std::abs(coefficient - std::exp(Complex(-0.25, t))), 1e-6);
  }
  {
    const ComplexVector f = ComplexVector::Constant(1, Complex(0.5, 0.2));
    const ComplexVector g = ComplexVector::Constant(1, Complex(-0.3, 0.6));
    std::vector<double> residuals;
    for (int n : {8, 16, 24, 32}) residuals.push_back(weyl_relation_residual(n, f, g));
    bool decreasing = true;
    for (std::size_t i = 1; i < residuals.size(); ++i) decreasing = decreasing && residuals[i] < residuals[i - 1];
    ctx.flag("weyl-relation-convergence", "W(f)W(g) = e^{i Im<f,g>/2} W(f+g) as the cutoff grows", decreasing);
    ctx.check("weyl-relation-residual", "W(f)W(g) = e^{i Im<f,g>/2} W(f+g)", residuals.back(), 1e-6);
  }
}

RealLinearMap one_mode_squeeze(double r) {
  return {ComplexMatrix::Constant(1, 1, std::cosh(r)), ComplexMatrix::Constant(1, 1, std::sinh(r))};
}

void vacuum_suite(Context& ctx) {
  const int N = ctx.config.int_param("N", 40);
  const auto space = fock::FockSpace::bosonic(1, N);
  for (double r : {0.25, 0.5, 1.0}) {
    const auto vac = fock::vacuum_implementer(space, one_mode_squeeze(r));
    const std::string tag = format_number(r);
    ctx.check("squeeze-c-" + tag, "c(g) = 1/sqrt(cosh r)", std::abs(vac.c - 1.0 / std::sqrt(std::cosh(r))), 1e-6);
    double odd = 0.0;
    for (int i = 0; i < space.dimension(); ++i) {
      if (space.particle_number(i) % 2 == 1) odd = std::max(odd, std::abs(vac.state(i)));
    }
    ctx.check("odd-components-" + tag, "F_{2k+1} = 0", odd, 1e-14);
  }
  {
    std::vector<double> residuals;
    for (int n : {8, 16, 24, 32}) {
      residuals.push_back(fock::vacuum_implementer(fock::FockSpace::bosonic(1, n), one_mode_squeeze(0.5)).max_residual());
    }
    bool geometric = true;
    for (std::size_t i = 1; i < residuals.size(); ++i) geometric = geometric && residuals[i] < 0.5 * residuals[i - 1];
    ctx.flag("vacuum-equation-convergence", "a(f)F + a*(T f)F -> 0 geometrically in the cutoff", geometric);
  }
  {
    const auto two = fock::FockSpace::bosonic(2, 6);
    const auto u = RealLinearMap::complex_linear(symplectic::random_unitary(ctx.rng, 2));
    const auto vac = fock::vacuum_implementer(two, u);
    ctx.check("unitary-vacuum", "unitary g fixes the vacuum with c = 1",
              std::abs(vac.c - 1.0) + (vac.state - two.vacuum()).norm(), 1e-14);
  }
}

void central_suite(Context& ctx) {
  const int pairs = ctx.config.int_param("pairs", 50);
  const int hat_trials = ctx.config.int_param("hat_trials", 100);
  const int bos_cutoff = ctx.config.int_param("N", 4);

  double bos = 0.0, fer = 0.0, antisym = 0.0, cocycle = 0.0;
  for (int t = 0; t < pairs; ++t) {
    const int d = 1 + t % 3;
    const auto bspace = fock::FockSpace::bosonic(d, bos_cutoff);
    const auto fspace = fock::FockSpace::fermionic(d);
    const auto x = symplectic::random_sp_element(ctx.rng, d), y = symplectic::random_sp_element(ctx.rng, d);
    const Complex eta = fock::central_term(bspace, x, y);
    bos = std::max(bos, std::abs(eta - fock::expected_central_term(fock::Statistics::bosonic, x, y)));
    antisym = std::max(antisym, std::abs(eta + fock::central_term(bspace, y, x)));
    const auto p = symplectic::random_o_element(ctx.rng, d), q = symplectic::random_o_element(ctx.rng, d);
    fer = std::max(fer, std::abs(fock::central_term(fspace, p, q) -
                                 fock::expected_central_term(fock::Statistics::fermionic, p, q)));
    const auto z = symplectic::random_sp_element(ctx.rng, d);
    cocycle = std::max(cocycle, std::abs(fock::central_term(bspace, commutator(x, y), z) +
                                         fock::central_term(bspace, commutator(y, z), x) +
                                         fock::central_term(bspace, commutator(z, x), y)));
  }
  ctx.check("central-term-bosonic", "eta(x, y) = (1/2i) tr [x2, y2]", bos, 1e-8);
  ctx.check("central-term-fermionic", "eta(x, y) = -(1/2i) tr [x2, y2]", fer, 1e-8);
  ctx.check("central-term-antisymmetry", "eta(x, y) = -eta(y, x)", antisym, 1e-9);
  ctx.check("central-term-cocycle", "eta([x,y],z) + cyclic = 0", cocycle, 1e-8);

  {
    const auto one = fock::FockSpace::bosonic(1, bos_cutoff);
    const auto x = RealLinearMap::antilinear(ComplexMatrix::Constant(1, 1, 1.0));
    const auto y = RealLinearMap::antilinear(ComplexMatrix::Constant(1, 1, Complex(0.0, 1.0)));
    ctx.check("central-term-one-mode", "x2 = conj, y2 = i conj: eta = -1",
              std::abs(fock::central_term(one, x, y) - Complex(-1.0)), 1e-8);
    const auto u1 = RealLinearMap::complex_linear(symplectic::random_anti_hermitian(ctx.rng, 1));
    const auto u2 = RealLinearMap::complex_linear(symplectic::random_anti_hermitian(ctx.rng, 1));
    ctx.check("central-term-unitary", "no antilinear part: eta = 0", std::abs(fock::central_term(one, u1, u2)), 1e-12);
  }

  double hat_norm_b = 0.0, hat_inner_b = 0.0, hat_norm_f = 0.0, hat_inner_f = 0.0;
  for (int t = 0; t < hat_trials; ++t) {
    const int d = 1 + t % 4;
    const int df = 2 + t % 3;
    const auto bspace = fock::FockSpace::bosonic(d, 2);
    const auto fspace = fock::FockSpace::fermionic(df);
    auto random_matrix = [&](int n) {
      ComplexMatrix m(n, n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = ctx.rng.complex_normal();
      }
      return m;
    };
    const ComplexMatrix a = random_matrix(d), b = random_matrix(d);
    const ComplexMatrix as = 0.5 * (a + a.transpose()), bs = 0.5 * (b + b.transpose());
    const ComplexMatrix p = random_matrix(df), q = random_matrix(df);
    const ComplexMatrix aa = 0.5 * (p - p.transpose()), ba = 0.5 * (q - q.transpose());
    const auto ha = fock::hat_element(bspace, as), hb = fock::hat_element(bspace, bs);
    hat_norm_b = std::max(hat_norm_b, std::abs(ha.squaredNorm() - 0.5 * as.squaredNorm()));
    hat_inner_b = std::max(hat_inner_b, std::abs(hb.dot(ha) - 0.5 * (as * bs.conjugate()).trace()));
    const auto fa = fock::hat_element(fspace, aa), fb = fock::hat_element(fspace, ba);
    hat_norm_f = std::max(hat_norm_f, std::abs(fa.squaredNorm() - 0.5 * aa.squaredNorm()));
    hat_inner_f = std::max(hat_inner_f, std::abs(fb.dot(fa) + 0.5 * (aa * ba.conjugate()).trace()));
  }
  ctx.check("hat-norm-bosonic", "|A^|^2 = |A|_2^2 / 2", hat_norm_b, 1e-10);
  ctx.check("hat-inner-bosonic", "<A^, B^> = tr(AB) / 2", hat_inner_b, 1e-10);
  ctx.check("hat-norm-fermionic", "|A^|^2 = |A|_2^2 / 2 (skew)", hat_norm_f, 1e-10);
  ctx.check("hat-inner-fermionic", "<A^, B^> = -tr(AB) / 2 (skew)", hat_inner_f, 1e-10);

  {
    const int d = 3;
    const auto fspace = fock::FockSpace::fermionic(d);
    const ComplexVector v = symplectic::random_vector(ctx.rng, d), w = symplectic::random_vector(ctx.rng, d);
    const auto q = RealLinearMap::complex_linear(fock::rank_two_generator(v, w));
    const auto lhs = fock::second_quantize(fspace, q);
    const fock::FockOperator rhs = fspace.create(v) * fspace.annihilate(w) - fspace.create(w) * fspace.annihilate(v);
    ctx.check("rank-two-generator", "dpi(Q_{v,w}) = a*(v)a(w) - a*(w)a(v)", (lhs - rhs).norm(), 1e-13);
  }

  {
    const int d = 3;
    const auto fspace = fock::FockSpace::fermionic(d);
    double car = 0.0;
    for (int t = 0; t < 10; ++t) {
      RealMatrix m(d, d);
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m(i, j) = ctx.rng.normal();
      }
      const RealMatrix q = Eigen::HouseholderQR<RealMatrix>(m).householderQ();
      const int rank = ctx.rng.integer(0, d);
      const RealMatrix p = q.leftCols(rank) * q.leftCols(rank).transpose();
      const ComplexMatrix P = p.cast<Complex>();
      const ComplexMatrix gamma = ComplexMatrix::Identity(d, d);
      const ComplexVector f = symplectic::random_vector(ctx.rng, d), g = symplectic::random_vector(ctx.rng, d);
      const auto af = fock::quasifree_annihilator(fspace, P, gamma, f);
      const auto ag = fock::quasifree_annihilator(fspace, P, gamma, g);
      const fock::FockOperator adag = ag.adjoint();
      car = std::max(car, (af * adag + adag * af - f.dot(g) * fspace.identity()).norm());
    }
    ctx.check("quasifree-car", "{a_P(f), a_P(g)*} = <g, f>", car, 1e-13);
  }

  {
    const auto space = fock::FockSpace::bosonic(2, 4);
    const ComplexVector e1 = space.create(ComplexVector::Unit(2, 0)) * space.vacuum();
    const ComplexVector sq = fock::symmetric_product(space, e1, e1);
    ctx.check("symmetric-square-norm", "|e1 v e1| = sqrt(2)", std::abs(sq.norm() - std::sqrt(2.0)), 1e-14);
  }
}

// ---------------------------------------------------------------- symplectic

void symplectic_suite(Context& ctx) {
  const int trials = ctx.config.int_param("trials", 100);
  const int jacobi_instances = ctx.config.int_param("jacobi_instances", 20);
  const int jacobi_samples = ctx.config.int_param("jacobi_samples", 10000);
  const int skew_trials = ctx.config.int_param("skew_trials", 50);

  {
    const auto I = RealLinearMap::complex_structure(2);
    const ComplexVector v = symplectic::random_vector(ctx.rng, 2);
    ctx.check("hamiltonian-complex-structure", "H_I(v) = |v|^2 / 2",
              std::abs(symplectic::hamiltonian(I, v) - 0.5 * v.squaredNorm()), 1e-14);
    ctx.flag("cone-contains-I", "I in W_sp", symplectic::in_cone_Wsp(I));
    ctx.flag("cone-excludes-minus-I", "-I not in W_sp", !symplectic::in_cone_Wsp(I * -1.0));
  }

  double j_square = 0.0, j_positive = 0.0, j_commute = 0.0;
  double anti = 0.0, negative = 0.0, g_sp = 0.0, cone_inv = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + t % 4;
    const auto A = symplectic::random_cone_element(ctx.rng, d);
    const auto J = symplectic::positive_complex_structure(A);
    j_square = std::max(j_square, (J * J + RealLinearMap::identity(d)).norm());
    j_positive = std::max(j_positive, positive_part(-symplectic::cone_margin(J)));
    j_commute = std::max(j_commute, commutator(J, A).norm());
    const auto conj = symplectic::conjugate_to_unitary(A);
    anti = std::max(anti, conj.conjugated.antilinear_part().norm());
    const ComplexMatrix h = Complex(0.0, 1.0) * conj.conjugated.linear();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);
    negative = std::max(negative, positive_part(eig.eigenvalues().maxCoeff()));
    if (!is_symplectic(conj.g, 1e-9)) g_sp = 1.0;
    const auto g = symplectic::random_symplectic(ctx.rng, d);
    cone_inv = std::max(cone_inv, positive_part(-symplectic::cone_margin(g * A * g.inverse())));
  }
  ctx.check("complex-structure-square", "J^2 = -1", j_square, 1e-9);
  ctx.check("complex-structure-positive", "omega(Jv, v) > 0", j_positive, 1e-9);
  ctx.check("complex-structure-commutes", "[J, A] = 0", j_commute, 1e-9);
  ctx.check("unitary-conjugate-linear", "Ad(g)^{-1} A is complex-linear", anti, 1e-8);
  ctx.check("unitary-conjugate-negative", "i Ad(g)^{-1} A is negative definite", negative, 0.0);
  ctx.flag("unitary-conjugate-symplectic", "g in Sp", g_sp == 0.0);
  ctx.check("cone-invariance", "Ad(Sp) W_sp = W_sp", cone_inv, 0.0);

  {
    // x = i K with K Hermitian has Hamiltonian v^* K v / 2, so x lies in the cone iff K > 0.
    bool agree = true;
    for (int t = 0; t < 40; ++t) {
      const int d = 1 + t % 3;
      Eigen::VectorXd spectrum(d);
      for (int i = 0; i < d; ++i) {
        const double magnitude = ctx.rng.uniform(0.1, 2.0);
        spectrum(i) = ctx.rng.uniform01() < 0.7 ? magnitude : -magnitude;
      }
      const ComplexMatrix u = symplectic::random_unitary(ctx.rng, d);
      const ComplexMatrix K = u * spectrum.cast<Complex>().asDiagonal() * u.adjoint();
      const auto x = RealLinearMap::complex_linear(Complex(0.0, 1.0) * K);
      agree = agree && symplectic::in_cone_Wsp(x) == (spectrum.minCoeff() > 0.0);
    }
    ctx.flag("unitary-cone-intersection", "C_u = W_sp cap u", agree);
  }

  double jacobi = 0.0, translation = 0.0;
  for (int t = 0; t < jacobi_instances; ++t) {
    const int d = 1 + t % 3;
    symplectic::QuadraticState q{ctx.rng.normal(), symplectic::random_vector(ctx.rng, d),
                                 symplectic::random_cone_element(ctx.rng, d)};
    const auto m = symplectic::jacobi_minimum(q);
    const double scale = std::max(1.0, m.argmin.norm());
    for (int s = 0; s < jacobi_samples; ++s) {
      const ComplexVector v = m.argmin + scale * ctx.rng.uniform(0.0, 2.0) * unit_random(ctx.rng, d);
      jacobi = std::max(jacobi, positive_part(m.value - symplectic::jacobi_objective(q, v)));
    }
    const auto moved = symplectic::translate(q, symplectic::random_vector(ctx.rng, d));
    translation = std::max(translation, std::abs(symplectic::jacobi_minimum(moved).value - m.value));
  }
  ctx.check("jacobi-minimum", "f(v) >= f(-A^{-1} x)", jacobi, 1e-9);
  ctx.check("jacobi-translation", "minimum value is translation invariant", translation, 1e-9);
  {
    symplectic::QuadraticState q{0.0, ComplexVector::Unit(1, 0), RealLinearMap::complex_structure(1)};
    ctx.check("jacobi-example", "A = I, x = e1: value -1/2", std::abs(symplectic::jacobi_minimum(q).value + 0.5),
              1e-15);
  }

  double cs_square = 0.0, cs_orth = 0.0, cs_pos = 0.0;
  for (int t = 0; t < skew_trials; ++t) {
    const int n = 2 * (1 + t % 4);
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = ctx.rng.normal();
    }
    const RealMatrix A = m - m.transpose();
    const RealMatrix J = symplectic::compatible_complex_structure(A);
    cs_square = std::max(cs_square, (J * J + RealMatrix::Identity(n, n)).norm());
    cs_orth = std::max(cs_orth, (J.transpose() * J - RealMatrix::Identity(n, n)).norm());
    // omega(Jv, v) = (A J v, v); its symmetric part must be positive definite.
    const RealMatrix form = A * J;
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (form + form.transpose()), Eigen::EigenvaluesOnly);
    cs_pos = std::max(cs_pos, positive_part(-eig.eigenvalues().minCoeff()));
  }
  ctx.check("compatible-structure-square", "J^2 = -1", cs_square, 1e-9);
  ctx.check("compatible-structure-orthogonal", "J^T J = 1", cs_orth, 1e-9);
  ctx.check("compatible-structure-positive", "omega(Jv, v) > 0", cs_pos, 1e-9);

  {
    const symplectic::Sl2Element h{1, 0, 0}, u{0, 1, 0}, t{0, 0, 1};
    const double diag = std::abs(symplectic::lorentz_form(h, h) + 2.0) + std::abs(symplectic::lorentz_form(u, u) - 2.0) +
                        std::abs(symplectic::lorentz_form(t, t) + 2.0);
    ctx.check("lorentz-diagonal", "beta(h,h) = -2, beta(u,u) = 2, beta(t,t) = -2", diag, 0.0);
    ctx.flag("lorentz-null", "u + t is null", symplectic::orbit_type({0, 1, 1}) == symplectic::OrbitType::null_positive);
    bool constant = true;
    for (int k = 0; k < 20; ++k) {
      const symplectic::Sl2Element a{ctx.rng.normal(), ctx.rng.normal(), ctx.rng.normal()};
      const symplectic::Sl2Element gen{ctx.rng.normal(), ctx.rng.normal(), ctx.rng.normal()};
      const auto type = symplectic::orbit_type(a);
      for (int s = 1; s <= 10; ++s) {
        const Eigen::Matrix2d g = (0.1 * s * gen.matrix()).exp();
        constant = constant && symplectic::orbit_type(symplectic::adjoint_sl2(g, a)) == type;
      }
    }
    ctx.flag("lorentz-orbit-type", "orbit type constant along Ad(SL2) orbits", constant);
  }
}

// ---------------------------------------------------------------- momentum

double rayleigh_maximum(Rng& rng, const ComplexMatrix& x, int restarts) {
  // Power iteration on i x + shift, maximizing Phi([v])(-x) = <i x v, v>/|v|^2.
  const auto d = x.rows();
  const ComplexMatrix h = Complex(0.0, 1.0) * x;
  const double shift = x.norm() + 1.0;
  const ComplexMatrix shifted = h + shift * ComplexMatrix::Identity(d, d);
  double best = -std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    ComplexVector v = symplectic::random_vector(rng, static_cast<int>(d));
    for (int it = 0; it < 3000; ++it) {
      v = shifted * v;
      v /= v.norm();
    }
    best = std::max(best, symplectic::momentum_map(-x, v));
  }
  return best;
}

void momentum_suite(Context& ctx) {
  const int trials = ctx.config.int_param("trials", 20);
  double formula = 0.0, equivariance = 0.0, duality = 0.0, sublinear = 0.0, invariance = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int d = 1 + t % 4;
    const ComplexMatrix x = symplectic::random_anti_hermitian(ctx.rng, d);
    const ComplexMatrix y = symplectic::random_anti_hermitian(ctx.rng, d);
    const ComplexVector v = symplectic::random_vector(ctx.rng, d);
    const ComplexMatrix g = symplectic::random_unitary(ctx.rng, d);
    formula = std::max(formula, std::abs(symplectic::momentum_map(x, v) - symplectic::momentum_trace(x, v)));
    equivariance = std::max(equivariance, std::abs(symplectic::momentum_map(x, g * v) -
                                                   symplectic::momentum_map(g.adjoint() * x * g, v)));
    duality = std::max(duality, std::abs(symplectic::spectral_support(x) - rayleigh_maximum(ctx.rng, x, 4)));
    sublinear = std::max(sublinear, positive_part(symplectic::spectral_support(x + y) - symplectic::spectral_support(x) -
                                                  symplectic::spectral_support(y)));
    invariance = std::max(invariance, std::abs(symplectic::spectral_support(g * x * g.adjoint()) -
                                               symplectic::spectral_support(x)));
  }
  ctx.check("momentum-trace-formula", "Phi([v])(x) = -i tr(x P_v)", formula, 1e-12);
  ctx.check("momentum-equivariance", "Phi(g v)(x) = Phi(v)(g^{-1} x g)", equivariance, 1e-12);
  ctx.check("spectral-support-duality", "sup Spec(i x) = sup_v Phi([v])(-x)", duality, 1e-8);
  ctx.check("spectral-support-sublinear", "s(x + y) <= s(x) + s(y)", sublinear, 1e-10);
  ctx.check("spectral-support-invariance", "s(g x g^{-1}) = s(x)", invariance, 1e-10);
  {
    ComplexMatrix x = ComplexMatrix::Zero(2, 2);
    x(0, 0) = Complex(0.0, 1.0);
    x(1, 1) = Complex(0.0, -1.0);
    ctx.check("momentum-example", "x = diag(i, -i), v = e1: Phi = 1",
              std::abs(symplectic::momentum_map(x, ComplexVector::Unit(2, 0)) - 1.0), 1e-15);
    ctx.check("spectral-support-example", "s(diag(i, -i)) = 1", std::abs(symplectic::spectral_support(x) - 1.0), 1e-15);
    const ComplexMatrix i1 = Complex(0.0, 1.0) * ComplexMatrix::Identity(3, 3);
    ctx.check("momentum-central", "Phi([v])(i 1) = 1",
              std::abs(symplectic::momentum_map(i1, symplectic::random_vector(ctx.rng, 3)) - 1.0), 1e-15);
  }
}

using SuiteFn = void (*)(Context&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"convex-cones", convex_suite},     {"virasoro-cocycle", cocycle_suite}, {"virasoro-orbits", orbit_suite},
      {"virasoro-gram", gram_suite},      {"fock-ccr", ccr_suite},             {"fock-weyl", weyl_suite},
      {"fock-vacuum", vacuum_suite},      {"fock-central", central_suite},     {"symplectic-cones", symplectic_suite},
      {"momentum", momentum_suite},
  };
  return suites;
}

}  // namespace

double SuiteConfig::param(const std::string& name, double fallback) const {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

int SuiteConfig::int_param(const std::string& name, int fallback) const {
  const double value = param(name, fallback);
  if (value != std::floor(value) || value < 1 || value > 1e9) {
    throw DomainError("parameter '" + name + "' must be a positive integer");
  }
  return static_cast<int>(value);
}

SuiteConfig parse_config(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("config must be a JSON object");
  SuiteConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "suite") {
      config.suite = value.get<std::string>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<long long>() >= 0)) {
        throw DomainError("seed must be a non-negative integer");
      }
      config.seed = value.get<std::uint64_t>();
    } else if (key == "tol_scale") {
      config.tol_scale = value.get<double>();
    } else if (value.is_number()) {
      config.params[key] = value.get<double>();
    } else {
      throw DomainError("config value for '" + key + "' must be numeric");
    }
  }
  if (!(config.tol_scale > 0.0)) throw DomainError("tol_scale must be positive");
  return config;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

Report run_suite(const SuiteConfig& config) {
  if (!(config.tol_scale > 0.0)) throw DomainError("tol_scale must be positive");
  for (const auto& [key, value] : config.params) {
    if (!(value > 0.0)) throw DomainError("parameter '" + key + "' must be positive");
  }
  for (const auto& [name, fn] : registry()) {
    if (name != config.suite) continue;
    Report report;
    report.suite = name;
    report.seed = config.seed;
    report.environment["library"] = "semibounded 0.1.0";
    report.environment["rng"] = "mt19937_64; uniform = (x >> 11) * 2^-53; normal = Box-Muller";
    report.environment["tol_scale"] = format_number(config.tol_scale);
    for (const auto& [key, value] : config.params) report.environment["param." + key] = format_number(value);
    Context ctx{config, report, Rng(config.seed)};
    fn(ctx);
    report.normalize();
    return report;
  }
  std::string message = "unknown suite '" + config.suite + "'; valid suites:";
  for (const auto& name : suite_names()) message += " " + name;
  throw UnknownSuite(message);
}

}  // namespace semibounded::verify
