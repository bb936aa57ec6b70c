#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "semibounded/convex.hpp"
#include "semibounded/errors.hpp"
#include "semibounded/random.hpp"

using namespace semibounded;
using convex::Vector;

namespace {

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return v;
}

Vector gaussian(Rng& rng, int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v(i) = rng.normal();
  return v;
}

std::vector<Vector> all_generators(const convex::ConeGenerators& g) {
  std::vector<Vector> out = g.rays;
  for (const auto& l : g.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  return out;
}

}  // namespace

TEST(SupportFunction, CrossPolytopeValue) {
  convex::SampledSet X;
  for (int i = 0; i < 3; ++i) {
    X.points.push_back(Vector::Unit(3, i));
    X.points.push_back(-Vector::Unit(3, i));
  }
  EXPECT_DOUBLE_EQ(convex::support_function(X, vec({1, 2, 3})), 3.0);
  EXPECT_DOUBLE_EQ(convex::support_function(X, vec({-4, 2, 3})), 4.0);
}

TEST(SupportFunction, RejectsWrongDimension) {
  convex::SampledSet X{{vec({1, 0})}};
  EXPECT_THROW(convex::support_function(X, vec({1, 2, 3})), DimensionMismatch);
}

TEST(DoubleDescription, OrthantGivesUnitRays) {
  std::vector<Vector> normals;
  for (int i = 0; i < 3; ++i) normals.push_back(Vector::Unit(3, i));
  const auto g = convex::generators_from_halfspaces(normals, 3);
  EXPECT_TRUE(g.lineality.empty());
  ASSERT_EQ(g.rays.size(), 3u);
  for (const auto& r : g.rays) {
    EXPECT_NEAR(r.norm(), r.maxCoeff(), 1e-12);
    EXPECT_NEAR(r.minCoeff(), 0.0, 1e-12);
  }
}

TEST(DoubleDescription, HalfspaceHasTwoLinealityDirections) {
  const auto g = convex::generators_from_halfspaces({vec({1, 0, 0})}, 3);
  EXPECT_EQ(g.lineality.size(), 2u);
  EXPECT_EQ(g.rays.size(), 1u);
}

TEST(DoubleDescription, RandomConesMatchMembershipOracle) {
  Rng rng(7);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 2 + trial % 3;
    std::vector<Vector> normals;
    for (int i = 0; i < n + 2; ++i) normals.push_back(gaussian(rng, n));
    const auto gens = all_generators(convex::generators_from_halfspaces(normals, n));
    for (const auto& g : gens) {
      for (const auto& a : normals) EXPECT_GE(a.dot(g), -1e-9);
    }
    // Points of the half-space description are conic combinations of the generators.
    int found = 0;
    for (int k = 0; k < 4000 && found < 10; ++k) {
      const Vector x = gaussian(rng, n);
      bool inside = true;
      for (const auto& a : normals) inside = inside && a.dot(x) >= 0.0;
      if (!inside) continue;
      ++found;
      EXPECT_LT(oracle::cone_distance(gens, x), 1e-6 * (1.0 + x.norm()));
    }
  }
}

TEST(PolyCone, ContainsAgreesAcrossForms) {
  Rng rng(11);
  const auto C = convex::PolyCone::generated({vec({1, 0, 0}), vec({1, 1, 0}), vec({0, 1, 1}), vec({1, 0, 2})}, 3);
  const auto H = C.to_halfspaces();
  for (int k = 0; k < 200; ++k) {
    const Vector x = gaussian(rng, 3);
    const bool by_oracle = oracle::cone_distance(C.vectors(), x) < 1e-7;
    // Skip points too close to the boundary for either test to be decisive.
    double slack = std::numeric_limits<double>::infinity();
    for (const auto& a : H.vectors()) slack = std::min(slack, std::abs(a.dot(x)) / a.norm());
    if (slack < 1e-4) continue;
    EXPECT_EQ(C.contains(x), by_oracle);
    EXPECT_EQ(H.contains(x), by_oracle);
  }
}

TEST(DualCone, OrthantIsSelfDual) {
  std::vector<Vector> e;
  for (int i = 0; i < 4; ++i) e.push_back(Vector::Unit(4, i));
  const auto C = convex::PolyCone::generated(e, 4);
  EXPECT_TRUE(convex::equivalent(convex::dual_cone(C), C));
}

TEST(DualCone, PlanarWedge) {
  const auto C = convex::PolyCone::generated({vec({1, 0}), vec({1, 1})}, 2);
  const auto expected = convex::PolyCone::generated({vec({0, 1}), vec({1, -1})}, 2);
  EXPECT_TRUE(convex::equivalent(convex::dual_cone(C), expected));
}

TEST(DualCone, DoubleDualRecoversCone) {
  Rng rng(3);
  for (int n = 2; n <= 5; ++n) {
    std::vector<Vector> gens;
    for (int i = 0; i < n + 2; ++i) gens.push_back(gaussian(rng, n));
    const auto C = convex::PolyCone::generated(gens, n);
    EXPECT_TRUE(convex::equivalent(convex::dual_cone(convex::dual_cone(C)), C)) << "n = " << n;
  }
}

TEST(Polyhedron, RecessionAndLineality) {
  convex::Polyhedron P{{vec({1, 0}), vec({1, 1})}, {0.0, -3.0}, 2};
  const auto rec = convex::recession_cone(P);
  EXPECT_TRUE(rec.contains(vec({1, 0})));
  EXPECT_TRUE(rec.contains(vec({0, 1})));
  EXPECT_FALSE(rec.contains(vec({-1, 0})));
  EXPECT_TRUE(convex::lineality_space(P).empty());

  convex::Polyhedron slab{{vec({0, 1}), vec({0, -1})}, {-1.0, -1.0}, 2};
  const auto line = convex::lineality_space(slab);
  ASSERT_EQ(line.size(), 1u);
  EXPECT_NEAR(std::abs(line[0](0)), 1.0, 1e-12);
}

TEST(Polyhedron, EmptinessAndErrors) {
  convex::Polyhedron empty{{vec({1}), vec({-1})}, {1.0, 0.0}, 1};
  EXPECT_TRUE(convex::is_empty(empty));
  EXPECT_THROW(convex::recession_cone(empty), DomainError);
  convex::Polyhedron ray{{vec({1})}, {2.0}, 1};
  EXPECT_FALSE(convex::is_empty(ray));
}

TEST(Polyhedron, BoundedBelowFunctionalsAreDualToRecession) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    convex::Polyhedron P;
    P.dimension = 3;
    for (int i = 0; i < 5; ++i) {
      P.normals.push_back(gaussian(rng, 3));
      P.offsets.push_back(rng.uniform(-2.0, 0.0));
    }
    const auto bb = convex::bounded_below_functionals(P);
    EXPECT_TRUE(convex::equivalent(convex::dual_cone(bb), convex::recession_cone(P)));
  }
}

TEST(Pointedness, Examples) {
  EXPECT_TRUE(convex::is_pointed({vec({1, 0}), vec({1, 1})}, 2));
  EXPECT_FALSE(convex::is_pointed({vec({1, 0}), vec({-1, 0})}, 2));
  EXPECT_FALSE(convex::is_pointed({vec({1, 0}), vec({-1, 1}), vec({-1, -1})}, 2));
}

TEST(InteriorSurrogate, BoundedAndUnboundedSamples) {
  convex::SampledSet circle, line;
  for (int k = 0; k < 64; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 64.0;
    circle.points.push_back(vec({std::cos(a), std::sin(a)}));
  }
  for (int k = 0; k <= 100; ++k) {
    line.points.push_back(vec({static_cast<double>(k), 0.0}));
    line.points.push_back(vec({-static_cast<double>(k), 0.0}));
  }
  EXPECT_TRUE(convex::has_interior_B(circle).has_interior);
  const auto result = convex::has_interior_B(line);
  EXPECT_FALSE(result.has_interior);
  EXPECT_FALSE(result.escape_directions.empty());
}

TEST(GroupAverage, FullRotationOrbitAveragesToZero) {
  std::vector<Vector> orbit;
  for (int k = 0; k < 360; ++k) {
    const double a = 2.0 * std::numbers::pi * k / 360.0;
    orbit.push_back(vec({2.0 * std::cos(a) + 0.0, 2.0 * std::sin(a)}));
  }
  EXPECT_LT(convex::group_average(orbit).norm(), 1e-12);
  EXPECT_THROW(convex::group_average({}), DomainError);
}
