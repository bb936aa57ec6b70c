#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "oracles.hpp"
#include "semibounded/errors.hpp"
#include "semibounded/symplectic.hpp"

using namespace semibounded;
using namespace semibounded::symplectic;
using Complex = std::complex<double>;

namespace {

RealLinearMap random_map(Rng& rng, int d) {
  ComplexMatrix a(d, d), b(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = rng.complex_normal();
      b(i, j) = rng.complex_normal();
    }
  }
  return {a, b};
}

Eigen::VectorXd to_real(const ComplexVector& v) {
  Eigen::VectorXd r(2 * v.size());
  r << v.real(), v.imag();
  return r;
}

}  // namespace

TEST(RealLinearMap, RealPictureIsHomomorphism) {
  Rng rng(1);
  const auto x = random_map(rng, 3), y = random_map(rng, 3);
  EXPECT_LT(((x * y).real_matrix() - x.real_matrix() * y.real_matrix()).norm(), 1e-12);
  const ComplexVector v = random_vector(rng, 3);
  EXPECT_LT((to_real(x.apply(v)) - x.real_matrix() * to_real(v)).norm(), 1e-12);
  EXPECT_LT((x.adjoint().real_matrix() - x.real_matrix().transpose()).norm(), 1e-12);
  EXPECT_LT(((x * x.inverse()) - RealLinearMap::identity(3)).norm(), 1e-10);
}

TEST(RealLinearMap, SymplecticFormIsOmegaMatrix) {
  Rng rng(2);
  const ComplexVector v = random_vector(rng, 2), w = random_vector(rng, 2);
  EXPECT_NEAR(symplectic_form(v, w), to_real(v).dot(omega_matrix(2) * to_real(w)), 1e-13);
  EXPECT_LT((RealLinearMap::complex_structure(2).real_matrix() - omega_matrix(2)).norm(), 1e-15);
}

TEST(Cone, ComplexStructureExamples) {
  const auto I = RealLinearMap::complex_structure(2);
  EXPECT_TRUE(in_cone_Wsp(I));
  EXPECT_FALSE(in_cone_Wsp(I * -1.0));
  const ComplexVector v = ComplexVector::Constant(2, Complex(1.0, 2.0));
  EXPECT_NEAR(hamiltonian(I, v), 0.5 * v.squaredNorm(), 1e-14);
  EXPECT_THROW(hamiltonian(RealLinearMap::identity(2), v), DomainError);
}

TEST(Cone, InvariantUnderSymplecticConjugation) {
  Rng rng(3);
  for (int k = 0; k < 20; ++k) {
    const int d = 1 + k % 3;
    const auto A = random_cone_element(rng, d);
    const auto g = random_symplectic(rng, d);
    EXPECT_TRUE(is_symplectic(g, 1e-9));
    EXPECT_TRUE(in_cone_Wsp(g * A * g.inverse()));
  }
}

TEST(PositiveComplexStructure, Postconditions) {
  Rng rng(4);
  for (int k = 0; k < 20; ++k) {
    const int d = 1 + k % 4;
    const auto A = random_cone_element(rng, d);
    const auto J = positive_complex_structure(A);
    EXPECT_LT((J * J + RealLinearMap::identity(d)).norm(), 1e-9);
    EXPECT_GT(cone_margin(J), 0.0);
    EXPECT_LT(commutator(J, A).norm(), 1e-9);
  }
  const auto I = RealLinearMap::complex_structure(2);
  EXPECT_LT((positive_complex_structure(I * 3.0) - I).norm(), 1e-12);
  EXPECT_THROW(positive_complex_structure(I * -1.0), DomainError);
}

TEST(ConjugateToUnitary, RoundTrip) {
  Rng rng(5);
  for (int k = 0; k < 20; ++k) {
    const int d = 1 + k % 4;
    const auto A = random_cone_element(rng, d);
    const auto result = conjugate_to_unitary(A);
    EXPECT_TRUE(is_symplectic(result.g, 1e-9));
    EXPECT_LT((result.g * RealLinearMap::complex_structure(d) * result.g.inverse() - result.complex_structure).norm(),
              1e-8);
    EXPECT_LT(result.conjugated.antilinear_part().norm(), 1e-8);
    const ComplexMatrix h = Complex(0.0, 1.0) * result.conjugated.linear();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(0.5 * (h + h.adjoint()));
    EXPECT_LT(eig.eigenvalues().maxCoeff(), 0.0);
  }
}

TEST(Jacobi, MinimumAgainstSamplingAndGradient) {
  Rng rng(6);
  for (int k = 0; k < 5; ++k) {
    const int d = 1 + k % 3;
    const QuadraticState q{rng.normal(), random_vector(rng, d), random_cone_element(rng, d)};
    const auto m = jacobi_minimum(q);
    EXPECT_NEAR(jacobi_objective(q, m.argmin), m.value, 1e-12);
    for (int s = 0; s < 500; ++s) {
      const ComplexVector v = m.argmin + rng.uniform(0.0, 3.0) * random_vector(rng, d).normalized();
      EXPECT_GE(jacobi_objective(q, v), m.value - 1e-9);
    }
    const double h = 1e-6;
    for (int i = 0; i < d; ++i) {
      for (Complex dir : {Complex(1.0, 0.0), Complex(0.0, 1.0)}) {
        const ComplexVector e = dir * ComplexVector::Unit(d, i);
        const double grad = (jacobi_objective(q, m.argmin + h * e) - jacobi_objective(q, m.argmin - h * e)) / (2 * h);
        EXPECT_NEAR(grad, 0.0, 1e-6);
      }
    }
    const auto moved = translate(q, random_vector(rng, d));
    EXPECT_NEAR(jacobi_minimum(moved).value, m.value, 1e-9);
  }
  const QuadraticState unit{0.0, ComplexVector::Unit(1, 0), RealLinearMap::complex_structure(1)};
  EXPECT_NEAR(jacobi_minimum(unit).value, -0.5, 1e-15);
}

TEST(Lorentz, FormValuesAndOrbitTypes) {
  const Sl2Element h{1, 0, 0}, u{0, 1, 0}, t{0, 0, 1};
  EXPECT_DOUBLE_EQ(lorentz_form(h, h), -2.0);
  EXPECT_DOUBLE_EQ(lorentz_form(u, u), 2.0);
  EXPECT_DOUBLE_EQ(lorentz_form(t, t), -2.0);
  EXPECT_DOUBLE_EQ(lorentz_form(h, u), 0.0);
  EXPECT_EQ(orbit_type(u), OrbitType::timelike_positive);
  EXPECT_EQ(orbit_type({0, -1, 0}), OrbitType::timelike_negative);
  EXPECT_EQ(orbit_type(h), OrbitType::spacelike);
  EXPECT_EQ(orbit_type({0, 1, 1}), OrbitType::null_positive);
  EXPECT_EQ(orbit_type({0, -1, 1}), OrbitType::null_negative);
  EXPECT_EQ(orbit_type({}), OrbitType::zero);
  EXPECT_EQ(to_string(OrbitType::spacelike), "spacelike");

  Rng rng(7);
  for (int k = 0; k < 20; ++k) {
    const Sl2Element a{rng.normal(), rng.normal(), rng.normal()}, gen{rng.normal(), rng.normal(), rng.normal()};
    const Eigen::Matrix2d g = (0.5 * gen.matrix()).exp();
    const auto b = adjoint_sl2(g, a);
    EXPECT_NEAR(lorentz_form(b, b), lorentz_form(a, a), 1e-9 * (1.0 + std::abs(lorentz_form(a, a))));
    EXPECT_EQ(orbit_type(b), orbit_type(a));
    const auto back = Sl2Element::from_matrix(a.matrix());
    EXPECT_NEAR(back.x, a.x, 1e-15);
    EXPECT_NEAR(back.y, a.y, 1e-15);
    EXPECT_NEAR(back.z, a.z, 1e-15);
  }
}

TEST(Momentum, TraceFormulaEquivarianceAndExample) {
  Rng rng(8);
  for (int k = 0; k < 10; ++k) {
    const int d = 1 + k % 4;
    const ComplexMatrix x = random_anti_hermitian(rng, d);
    const ComplexVector v = random_vector(rng, d);
    const ComplexMatrix g = random_unitary(rng, d);
    EXPECT_NEAR(momentum_map(x, v), momentum_trace(x, v), 1e-12);
    EXPECT_NEAR(momentum_map(x, g * v), momentum_map(g.adjoint() * x * g, v), 1e-12);
  }
  ComplexMatrix x = ComplexMatrix::Zero(2, 2);
  x(0, 0) = Complex(0.0, 1.0);
  x(1, 1) = Complex(0.0, -1.0);
  EXPECT_NEAR(momentum_map(x, ComplexVector::Unit(2, 0)), 1.0, 1e-15);
  EXPECT_NEAR(spectral_support(x), 1.0, 1e-15);
  EXPECT_THROW(momentum_map(ComplexMatrix::Identity(2, 2), ComplexVector::Unit(2, 0)), DomainError);
}

TEST(SpectralSupport, RayleighOracleAndSublinearity) {
  Rng rng(9);
  for (int k = 0; k < 10; ++k) {
    const int d = 1 + k % 4;
    const ComplexMatrix x = random_anti_hermitian(rng, d), y = random_anti_hermitian(rng, d);
    EXPECT_NEAR(spectral_support(x), oracle::rayleigh_max(Complex(0.0, 1.0) * x), 1e-8);
    EXPECT_LE(spectral_support(x + y), spectral_support(x) + spectral_support(y) + 1e-10);
    const ComplexMatrix g = random_unitary(rng, d);
    EXPECT_NEAR(spectral_support(g * x * g.adjoint()), spectral_support(x), 1e-10);
  }
}

TEST(CompatibleComplexStructure, PostconditionsAndStandardForm) {
  Rng rng(10);
  for (int k = 0; k < 20; ++k) {
    const int n = 2 * (1 + k % 4);
    RealMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = rng.normal();
    }
    const RealMatrix A = m - m.transpose();
    const RealMatrix J = compatible_complex_structure(A);
    const RealMatrix id = RealMatrix::Identity(n, n);
    EXPECT_LT((J * J + id).norm(), 1e-9);
    EXPECT_LT((J.transpose() * J - id).norm(), 1e-9);
    EXPECT_LT((J * A - A * J).norm(), 1e-9 * (1.0 + A.norm()));
    const RealMatrix form = A * J;
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(0.5 * (form + form.transpose()));
    EXPECT_GT(eig.eigenvalues().minCoeff(), 0.0);
  }
  const RealMatrix omega = omega_matrix(2);
  EXPECT_LT((compatible_complex_structure(omega) + omega).norm(), 1e-14);
  EXPECT_THROW(compatible_complex_structure(RealMatrix::Zero(2, 2)), DomainError);
  EXPECT_THROW(compatible_complex_structure(RealMatrix::Identity(2, 2)), DomainError);
}
