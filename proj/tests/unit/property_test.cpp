#include <gtest/gtest.h>

#include "semibounded/convex.hpp"
#include "semibounded/fock.hpp"
#include "semibounded/symplectic.hpp"
#include "semibounded/virasoro.hpp"

using namespace semibounded;

class SeededProperty : public ::testing::TestWithParam<std::uint64_t> {
 protected:
  Rng rng{GetParam()};
};

TEST_P(SeededProperty, SupportFunctionIsSublinear) {
  convex::SampledSet X;
  for (int i = 0; i < 10; ++i) X.points.push_back(Eigen::VectorXd::NullaryExpr(3, [&] { return rng.normal(); }));
  const Eigen::VectorXd v = Eigen::VectorXd::NullaryExpr(3, [&] { return rng.normal(); });
  const Eigen::VectorXd w = Eigen::VectorXd::NullaryExpr(3, [&] { return rng.normal(); });
  const double t = rng.uniform(0.0, 4.0);
  EXPECT_NEAR(convex::support_function(X, t * v), t * convex::support_function(X, v), 1e-12);
  EXPECT_LE(convex::support_function(X, v + w), convex::support_function(X, v) + convex::support_function(X, w) + 1e-12);
}

TEST_P(SeededProperty, DualityIsInvolutive) {
  const int n = 2 + static_cast<int>(GetParam() % 3);
  std::vector<Eigen::VectorXd> gens;
  for (int i = 0; i < n + 2; ++i) gens.push_back(Eigen::VectorXd::NullaryExpr(n, [&] { return rng.normal(); }));
  const auto C = convex::PolyCone::generated(gens, n);
  EXPECT_TRUE(convex::equivalent(convex::dual_cone(convex::dual_cone(C)), C));
}

TEST_P(SeededProperty, WittCocycleIdentity) {
  const circle::VectorField X{circle::random_real_function(rng, 3, 12)}, Y{circle::random_real_function(rng, 3, 12)},
      Z{circle::random_real_function(rng, 3, 12)};
  auto br = [](const circle::VectorField& a, const circle::VectorField& b) { return circle::lie_bracket(a, b, 12); };
  const auto sum = circle::omega_cocycle(br(X, Y), Z) + circle::omega_cocycle(br(Y, Z), X) +
                   circle::omega_cocycle(br(Z, X), Y);
  EXPECT_LT(std::abs(sum), 1e-9);
  EXPECT_LT(std::abs(circle::omega_cocycle(X, Y) + circle::omega_cocycle(Y, X)), 1e-10);
}

TEST_P(SeededProperty, SchwarzianCocycle) {
  const auto phi = circle::random_diffeo(rng), psi = circle::random_diffeo(rng);
  const auto composed = circle::compose(phi, psi);
  for (int j = 0; j < 32; ++j) {
    const double t = 2.0 * std::numbers::pi * j / 32.0;
    const double slope = psi.derivative_at(t, 1);
    const double rhs = circle::schwarzian_at(phi, psi(t)) * slope * slope + circle::schwarzian_at(psi, t);
    EXPECT_NEAR(circle::schwarzian_at(composed, t), rhs, 1e-8);
  }
}

TEST_P(SeededProperty, AdjointOrbitInvariants) {
  circle::FourierFunction f = circle::random_real_function(rng, 3, 32, 0.15);
  f.set_coeff(0, 1.0 + std::abs(rng.normal()));
  const virasoro::VirasoroElement x{rng.normal(), {f}};
  const auto y = virasoro::adjoint_action(circle::random_diffeo(rng), x);
  const auto a = virasoro::orbit_invariants(x), b = virasoro::orbit_invariants(y);
  EXPECT_NEAR(a.beta, b.beta, 1e-7);
  EXPECT_NEAR(a.alpha, b.alpha, 1e-7);
}

TEST_P(SeededProperty, ConvexityAndConcavity) {
  EXPECT_GE(virasoro::convexity_check({rng.normal(), 1.0 + rng.uniform01()}, 10, GetParam()).worst_margin(), -1e-8);
  EXPECT_LE(virasoro::beta_hessian_form(circle::random_real_function(rng, 6, 16)), 1e-9);
}

TEST_P(SeededProperty, CentralTermCocycle) {
  const int d = 1 + static_cast<int>(GetParam() % 3);
  const auto space = fock::FockSpace::bosonic(d, 4);
  const auto x = symplectic::random_sp_element(rng, d), y = symplectic::random_sp_element(rng, d),
             z = symplectic::random_sp_element(rng, d);
  const auto sum = fock::central_term(space, commutator(x, y), z) + fock::central_term(space, commutator(y, z), x) +
                   fock::central_term(space, commutator(z, x), y);
  EXPECT_LT(std::abs(sum), 1e-8);
  EXPECT_LT(std::abs(fock::central_term(space, x, y) + fock::central_term(space, y, x)), 1e-9);
}

TEST_P(SeededProperty, ComplexStructureOfConeElement) {
  const int d = 1 + static_cast<int>(GetParam() % 4);
  const auto A = symplectic::random_cone_element(rng, d);
  const auto J = symplectic::positive_complex_structure(A);
  EXPECT_LT((J * J + RealLinearMap::identity(d)).norm(), 1e-9);
  EXPECT_LT(commutator(J, A).norm(), 1e-9);
  EXPECT_TRUE(symplectic::in_cone_Wsp(J));
}

TEST_P(SeededProperty, SpectralSupportIsSublinearAndInvariant) {
  const int d = 1 + static_cast<int>(GetParam() % 4);
  const ComplexMatrix x = symplectic::random_anti_hermitian(rng, d), y = symplectic::random_anti_hermitian(rng, d);
  const ComplexMatrix g = symplectic::random_unitary(rng, d);
  EXPECT_LE(symplectic::spectral_support(x + y), symplectic::spectral_support(x) + symplectic::spectral_support(y) + 1e-10);
  EXPECT_NEAR(symplectic::spectral_support(g * x * g.adjoint()), symplectic::spectral_support(x), 1e-10);
  const ComplexVector v = symplectic::random_vector(rng, d);
  EXPECT_LE(symplectic::momentum_map(-x, v), symplectic::spectral_support(x) + 1e-12);
}

INSTANTIATE_TEST_SUITE_P(Seeds, SeededProperty, ::testing::Range<std::uint64_t>(1, 9));
