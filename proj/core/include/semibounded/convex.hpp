#pragma once

#include <Eigen/Dense>
#include <vector>

namespace semibounded::convex {

using Vector = Eigen::VectorXd;

/// Largest ambient dimension accepted by the double-description routines.
inline constexpr int kMaxConeDimension = 8;
/// Floating tolerance used for tightness and membership tests.
inline constexpr double kConeTolerance = 1e-9;

/// A finite set of functionals X, paired with E = R^n by the dot product.
struct SampledSet {
  std::vector<Vector> points;

  int dimension() const;
};

/// Extreme rays plus a basis of the lineality space of a polyhedral cone.
struct ConeGenerators {
  std::vector<Vector> rays;
  std::vector<Vector> lineality;
};

/// A polyhedral cone held either as the conic hull of generators or as the
/// intersection of half-spaces {x : <a_i, x> >= 0}.
class PolyCone {
 public:
  enum class Form { generated, halfspace };

  static PolyCone generated(std::vector<Vector> generators, int dimension);
  static PolyCone halfspace(std::vector<Vector> normals, int dimension);

  Form form() const { return form_; }
  int dimension() const { return dimension_; }
  /// Generators for Form::generated, inequality normals for Form::halfspace.
  const std::vector<Vector>& vectors() const { return vectors_; }

  /// Equivalent cone in generated form (lineality directions appear as +l and -l).
  PolyCone to_generators() const;
  /// Equivalent cone in half-space form (facet normals, lineality as +-pairs).
  PolyCone to_halfspaces() const;

  bool contains(const Vector& x, double tol = kConeTolerance) const;

 private:
  PolyCone(Form form, std::vector<Vector> vectors, int dimension)
      : form_(form), vectors_(std::move(vectors)), dimension_(dimension) {}

  Form form_;
  std::vector<Vector> vectors_;
  int dimension_;
};

/// {x : <a_i, x> >= b_i for all i}.
struct Polyhedron {
  std::vector<Vector> normals;
  std::vector<double> offsets;
  int dimension = 0;

  bool contains(const Vector& x, double tol = kConeTolerance) const;
  /// Smallest constraint slack <a_i,x> - b_i (positive inside).
  double margin(const Vector& x) const;
};

/// Double-description conversion of {x : <a_i,x> >= 0} to generators.
/// Works in dimension <= kMaxConeDimension + 1 (the extra slot serves
/// homogenized polyhedra).
ConeGenerators generators_from_halfspaces(const std::vector<Vector>& normals, int dimension);

/// s_X(v) = -min_p <p, v>.
double support_function(const SampledSet& X, const Vector& v);

/// {alpha : <alpha, g> >= 0 for every generator g}, in half-space form.
/// A half-space input is converted to generators first.
PolyCone dual_cone(const PolyCone& C);

/// {x : <a_i, x> >= 0}; throws DomainError for an empty polyhedron.
PolyCone recession_cone(const Polyhedron& C);

/// Orthonormal basis of {x : <a_i, x> = 0 for all i}.
std::vector<Vector> lineality_space(const Polyhedron& C);

/// Cone of functionals bounded below on a non-empty polyhedron: the conic
/// hull of its constraint normals.
PolyCone bounded_below_functionals(const Polyhedron& C);

bool is_empty(const Polyhedron& C);

/// Mutual generator membership of two cones.
bool equivalent(const PolyCone& a, const PolyCone& b, double tol = kConeTolerance);

/// True when the cone generated by `directions` contains no line.
bool is_pointed(const std::vector<Vector>& directions, int dimension);

struct InteriorSurrogateOptions {
  /// A point escapes when its norm exceeds `escape_ratio` times the
  /// lower-quartile norm of the sample.
  double escape_ratio = 2.0;
};

struct InteriorSurrogate {
  bool has_interior = true;
  /// Normalized directions of the escaping sample points.
  std::vector<Vector> escape_directions;
};

/// Finite-sample surrogate for "B(X) has interior points".
///
/// A finite X always has B(X) = R^n, so the exact predicate is vacuous on
/// samples. The surrogate treats X as a truncation of a larger family: points
/// whose norm is large compared with the bulk of the sample are read as
/// witnesses of unbounded rays, and their normalized directions generate an
/// estimated recession cone of conv(X). The answer is true iff that cone is
/// pointed. This does not decide semi-equicontinuity; it only reports the
/// finite shadow of it.
InteriorSurrogate has_interior_B(const SampledSet& X, const InteriorSurrogateOptions& options = {});

/// Arithmetic mean of an orbit sample.
Vector group_average(const std::vector<Vector>& orbit);

}  // namespace semibounded::convex
