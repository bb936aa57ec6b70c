#include <gtest/gtest.h>

#include <boost/math/special_functions/binomial.hpp>
#include <cmath>

#include "oracles.hpp"
#include "semibounded/errors.hpp"
#include "semibounded/fock.hpp"
#include "semibounded/symplectic.hpp"

using namespace semibounded;
using namespace semibounded::fock;

namespace {

ComplexVector random_unit(Rng& rng, int d) { return symplectic::random_vector(rng, d).normalized(); }

RealLinearMap squeeze(double r) {
  return {ComplexMatrix::Constant(1, 1, std::cosh(r)), ComplexMatrix::Constant(1, 1, std::sinh(r))};
}

}  // namespace

TEST(FockSpace, Dimensions) {
  for (int d = 1; d <= 3; ++d) {
    for (int N : {2, 5}) {
      EXPECT_EQ(FockSpace::bosonic(d, N).dimension(), static_cast<int>(boost::math::binomial_coefficient<double>(N + d, d)));
    }
    EXPECT_EQ(FockSpace::fermionic(d).dimension(), 1 << d);
  }
  EXPECT_THROW(FockSpace::fermionic(13), DomainError);
}

TEST(FockSpace, BasisOrderedByLevel) {
  const auto s = FockSpace::bosonic(2, 3);
  for (int i = 1; i < s.dimension(); ++i) EXPECT_LE(s.particle_number(i - 1), s.particle_number(i));
  EXPECT_EQ(s.index(s.occupation(4)), 4);
  EXPECT_EQ(s.index({4, 0}), -1);
}

TEST(CanonicalRelations, CommutatorsOnSafeSubspace) {
  Rng rng(1);
  const auto s = FockSpace::bosonic(3, 12);
  const FockOperator P = s.level_projector(10);
  for (int k = 0; k < 5; ++k) {
    const ComplexVector f = random_unit(rng, 3), g = random_unit(rng, 3);
    const FockOperator af = s.annihilate(f), cg = s.create(g), ag = s.annihilate(g);
    const FockOperator ccr = af * cg - cg * af - f.dot(g) * s.identity();
    EXPECT_LT((P * ccr * P).norm(), 1e-12);
    EXPECT_LT((P * (af * ag - ag * af) * P).norm(), 1e-12);
    EXPECT_LT((s.create(f) - af.adjoint()).norm(), 1e-14);
  }
}

TEST(CanonicalRelations, Anticommutators) {
  Rng rng(2);
  const auto s = FockSpace::fermionic(4);
  for (int k = 0; k < 5; ++k) {
    const ComplexVector f = random_unit(rng, 4), g = random_unit(rng, 4);
    const FockOperator af = s.annihilate(f), cg = s.create(g), ag = s.annihilate(g);
    EXPECT_LT((af * cg + cg * af - f.dot(g) * s.identity()).norm(), 1e-13);
    EXPECT_LT((af * ag + ag * af).norm(), 1e-13);
  }
}

TEST(CanonicalRelations, AnnihilatorsKillVacuumAndAreAntilinear) {
  Rng rng(3);
  const auto s = FockSpace::bosonic(2, 4);
  const ComplexVector f = random_unit(rng, 2);
  EXPECT_EQ((s.annihilate(f) * s.vacuum()).norm(), 0.0);
  const Complex lambda(0.3, -1.2);
  EXPECT_LT((s.annihilate(lambda * f) - std::conj(lambda) * s.annihilate(f)).norm(), 1e-14);
}

TEST(Operators, NumberAndBilinear) {
  const auto s = FockSpace::bosonic(2, 5);
  const FockOperator n = s.number_operator();
  for (int i = 0; i < s.dimension(); ++i) EXPECT_NEAR(n(i, i).real(), s.particle_number(i), 1e-14);
  Rng rng(4);
  const ComplexMatrix M = symplectic::random_anti_hermitian(rng, 2);
  const ComplexVector f = random_unit(rng, 2);
  const FockOperator B = s.bilinear(M);
  const FockOperator P = s.level_projector(3);
  EXPECT_LT((P * (B * s.create(f) - s.create(f) * B - s.create(M * f)) * P).norm(), 1e-12);
}

TEST(Weyl, VacuumCoefficientAndUnitarity) {
  const auto s = FockSpace::bosonic(1, 32);
  for (double n2 : {1.0, 2.0, 4.0}) {
    const ComplexVector f = ComplexVector::Constant(1, std::sqrt(n2));
    const Complex c = s.vacuum().dot(weyl(s, 0.0, f) * s.vacuum());
    EXPECT_NEAR(std::abs(c - std::exp(-n2 / 4.0)), 0.0, 1e-6);
  }
  const FockOperator W = weyl(s, 0.4, ComplexVector::Constant(1, Complex(0.3, 0.5)));
  EXPECT_LT((W.adjoint() * W - s.identity()).norm(), 1e-10);
  EXPECT_THROW(weyl(FockSpace::fermionic(2), 0.0, ComplexVector::Zero(2)), DomainError);
}

TEST(Heisenberg, ProductExample) {
  const HeisenbergElement a{0.0, ComplexVector::Unit(1, 0)};
  const HeisenbergElement b{0.0, Complex(0.0, 1.0) * ComplexVector::Unit(1, 0)};
  EXPECT_DOUBLE_EQ(heisenberg_mul(a, b).t, -0.5);
  EXPECT_DOUBLE_EQ(heisenberg_mul(b, a).t, 0.5);
}

TEST(Vacuum, MatchesLinearSolveOracle) {
  const int N = 40;
  const auto s = FockSpace::bosonic(1, N);
  for (double r : {0.25, 0.5, 1.0}) {
    const auto vac = vacuum_implementer(s, squeeze(r));
    const auto expected = oracle::one_mode_squeezed_vacuum(std::tanh(r), N);
    EXPECT_NEAR(vac.c, expected(0), 1e-6) << r;
    EXPECT_NEAR(vac.c, 1.0 / std::sqrt(std::cosh(r)), 1e-6) << r;
    for (int i = 0; i < s.dimension(); ++i) {
      if (s.particle_number(i) % 2 == 1) EXPECT_LT(std::abs(vac.state(i)), 1e-14);
    }
    EXPECT_NEAR(std::abs(vac.T(0, 0)), std::tanh(r), 1e-14);
  }
}

TEST(Vacuum, ResidualShrinksWithCutoffAndUnitaryFixesVacuum) {
  double previous = std::numeric_limits<double>::infinity();
  for (int N : {8, 16, 32}) {
    const double res = vacuum_implementer(FockSpace::bosonic(1, N), squeeze(0.5)).max_residual();
    EXPECT_LT(res, previous);
    previous = res;
  }
  Rng rng(5);
  const auto s = FockSpace::bosonic(2, 4);
  const auto vac = vacuum_implementer(s, RealLinearMap::complex_linear(symplectic::random_unitary(rng, 2)));
  EXPECT_NEAR(vac.c, 1.0, 1e-14);
  EXPECT_LT((vac.state - s.vacuum()).norm(), 1e-14);
}

TEST(CentralTerm, MatchesTraceFormula) {
  Rng rng(6);
  for (int k = 0; k < 10; ++k) {
    const int d = 1 + k % 3;
    const auto x = symplectic::random_sp_element(rng, d), y = symplectic::random_sp_element(rng, d);
    const Complex eta = central_term(FockSpace::bosonic(d, 4), x, y);
    EXPECT_NEAR(std::abs(eta - expected_central_term(Statistics::bosonic, x, y)), 0.0, 1e-8);
    const auto p = symplectic::random_o_element(rng, d), q = symplectic::random_o_element(rng, d);
    const Complex zeta = central_term(FockSpace::fermionic(d), p, q);
    EXPECT_NEAR(std::abs(zeta - expected_central_term(Statistics::fermionic, p, q)), 0.0, 1e-8);
  }
  const auto s = FockSpace::bosonic(1, 4);
  const auto x = RealLinearMap::antilinear(ComplexMatrix::Constant(1, 1, 1.0));
  const auto y = RealLinearMap::antilinear(ComplexMatrix::Constant(1, 1, Complex(0.0, 1.0)));
  EXPECT_NEAR(std::abs(central_term(s, x, y) + 1.0), 0.0, 1e-12);
}

TEST(HatElement, PairingDefinitionAndNorms) {
  Rng rng(7);
  const int d = 3;
  const auto s = FockSpace::bosonic(d, 2);
  ComplexMatrix A(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) A(i, j) = rng.complex_normal();
  }
  A = 0.5 * (A + A.transpose()).eval();
  const FockVector hat = hat_element(s, A);
  EXPECT_EQ(homogeneous_degree(s, hat), 2);
  const ComplexVector f1 = random_unit(rng, d), f2 = random_unit(rng, d);
  const FockVector prod = symmetric_product(s, s.create(f1) * s.vacuum(), s.create(f2) * s.vacuum());
  // <A^, f1 v f2> = <A conj(f1), f2>
  EXPECT_NEAR(std::abs(prod.dot(hat) - f2.dot(A * f1.conjugate())), 0.0, 1e-12);
  EXPECT_NEAR(hat.squaredNorm(), 0.5 * A.squaredNorm(), 1e-12);
}

TEST(HatElement, FermionicNorm) {
  Rng rng(8);
  const int d = 4;
  ComplexMatrix A(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) A(i, j) = rng.complex_normal();
  }
  A = 0.5 * (A - A.transpose()).eval();
  EXPECT_NEAR(hat_element(FockSpace::fermionic(d), A).squaredNorm(), 0.5 * A.squaredNorm(), 1e-12);
  EXPECT_THROW(hat_element(FockSpace::fermionic(d), A + A.transpose() + ComplexMatrix::Identity(d, d)), DomainError);
}

TEST(SecondQuantization, RankTwoGenerator) {
  Rng rng(9);
  const auto s = FockSpace::fermionic(3);
  const ComplexVector v = symplectic::random_vector(rng, 3), w = symplectic::random_vector(rng, 3);
  const FockOperator lhs = second_quantize(s, RealLinearMap::complex_linear(rank_two_generator(v, w)));
  const FockOperator rhs = s.create(v) * s.annihilate(w) - s.create(w) * s.annihilate(v);
  EXPECT_LT((lhs - rhs).norm(), 1e-13);
}

TEST(SecondQuantization, IsLieHomomorphismOnUnitaryPart) {
  Rng rng(10);
  const auto s = FockSpace::bosonic(2, 5);
  const auto x = RealLinearMap::complex_linear(symplectic::random_anti_hermitian(rng, 2));
  const auto y = RealLinearMap::complex_linear(symplectic::random_anti_hermitian(rng, 2));
  const FockOperator dx = second_quantize(s, x), dy = second_quantize(s, y);
  EXPECT_LT((dx * dy - dy * dx - second_quantize(s, commutator(x, y))).norm(), 1e-12);
}

TEST(Quasifree, CarAndCharge) {
  const int d = 2;
  const auto s = FockSpace::fermionic(d);
  ComplexMatrix P = ComplexMatrix::Zero(d, d);
  P(0, 0) = 1.0;
  const ComplexMatrix G = ComplexMatrix::Identity(d, d);
  ASSERT_TRUE(valid_quasifree_data(P, G));
  Rng rng(11);
  const ComplexVector f = symplectic::random_vector(rng, d), g = symplectic::random_vector(rng, d);
  const FockOperator af = quasifree_annihilator(s, P, G, f), ag = quasifree_annihilator(s, P, G, g);
  const FockOperator agd = ag.adjoint();
  EXPECT_LT((af * agd + agd * af - f.dot(g) * s.identity()).norm(), 1e-13);
  EXPECT_LT((af * ag + ag * af).norm(), 1e-13);
  const FockOperator Q = quasifree_charge(s, P);
  EXPECT_NEAR(Q(0, 0).real(), 0.0, 1e-14);
  EXPECT_FALSE(valid_quasifree_data(2.0 * P, G));
}

TEST(SymmetricProduct, NormsAndSigns) {
  const auto b = FockSpace::bosonic(2, 4);
  const FockVector e1 = b.create(ComplexVector::Unit(2, 0)) * b.vacuum();
  const FockVector e2 = b.create(ComplexVector::Unit(2, 1)) * b.vacuum();
  EXPECT_NEAR(symmetric_product(b, e1, e1).norm(), std::sqrt(2.0), 1e-14);
  EXPECT_NEAR(symmetric_product(b, e1, e2).norm(), 1.0, 1e-14);

  const auto f = FockSpace::fermionic(2);
  const FockVector u1 = f.create(ComplexVector::Unit(2, 0)) * f.vacuum();
  const FockVector u2 = f.create(ComplexVector::Unit(2, 1)) * f.vacuum();
  EXPECT_LT((symmetric_product(f, u1, u2) + symmetric_product(f, u2, u1)).norm(), 1e-14);
  EXPECT_LT(symmetric_product(f, u1, u1).norm(), 1e-14);
}

TEST(Bogoliubov, Predicates) {
  EXPECT_TRUE(is_symplectic(squeeze(0.7)));
  EXPECT_FALSE(is_orthogonal(squeeze(0.7)));
  const RealLinearMap reflect(ComplexMatrix::Zero(1, 1), ComplexMatrix::Constant(1, 1, std::polar(1.0, 0.3)));
  EXPECT_TRUE(is_orthogonal(reflect));
  EXPECT_FALSE(is_symplectic(reflect));
  const auto [g1f, g2f] = bogoliubov_transform(squeeze(0.5), ComplexVector::Constant(1, 2.0));
  EXPECT_NEAR(g1f(0).real(), 2.0 * std::cosh(0.5), 1e-14);
  EXPECT_NEAR(g2f(0).real(), 2.0 * std::sinh(0.5), 1e-14);
}
