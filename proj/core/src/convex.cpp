#include "semibounded/convex.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "semibounded/errors.hpp"

namespace semibounded::convex {

namespace {

void require_dimension(const Vector& v, int n, const char* what) {
  if (v.size() != n) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(n) +
                            ", got " + std::to_string(v.size()));
  }
}

void require_budget(int n) {
  if (n > kMaxConeDimension) {
    throw DomainError("cone dimension " + std::to_string(n) + " exceeds the supported maximum of " +
                      std::to_string(kMaxConeDimension));
  }
}

struct Ray {
  Vector v;
  std::vector<bool> tight;  // tight[c]: constraint c is active at v
};

bool contains_set(const std::vector<bool>& big, const std::vector<bool>& small) {
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] && !big[i]) return false;
  }
  return true;
}

std::vector<bool> intersect(const std::vector<bool>& a, const std::vector<bool>& b) {
  std::vector<bool> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

int count(const std::vector<bool>& a) { return static_cast<int>(std::count(a.begin(), a.end(), true)); }

int matrix_rank(const std::vector<Vector>& vs, int n) {
  if (vs.empty()) return 0;
  Eigen::MatrixXd m(n, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kConeTolerance * std::max(1.0, s(0))) ++r;
  }
  return r;
}

}  // namespace

int SampledSet::dimension() const {
  if (points.empty()) throw DomainError("sampled set is empty");
  return static_cast<int>(points.front().size());
}

ConeGenerators generators_from_halfspaces(const std::vector<Vector>& normals, int n) {
  if (n > kMaxConeDimension + 1) {
    throw DomainError("double description limited to dimension " +
                      std::to_string(kMaxConeDimension + 1));
  }
  std::vector<Vector> constraints;
  for (const auto& a : normals) {
    require_dimension(a, n, "generators_from_halfspaces");
    const double norm = a.norm();
    if (norm > kConeTolerance) constraints.push_back(a / norm);
  }
  const std::size_t m = constraints.size();

  std::vector<Vector> lineality;
  for (int i = 0; i < n; ++i) lineality.push_back(Vector::Unit(n, i));
  std::vector<Ray> rays;

  for (std::size_t c = 0; c < m; ++c) {
    const Vector& a = constraints[c];

    // A lineality direction not orthogonal to a becomes a new extreme ray.
    std::size_t pivot = lineality.size();
    double best = kConeTolerance;
    for (std::size_t i = 0; i < lineality.size(); ++i) {
      const double s = std::abs(a.dot(lineality[i]));
      if (s > best) {
        best = s;
        pivot = i;
      }
    }
    if (pivot < lineality.size()) {
      Vector p = lineality[pivot];
      if (a.dot(p) < 0) p = -p;
      const double ap = a.dot(p);
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(pivot));
      for (auto& l : lineality) l -= (a.dot(l) / ap) * p;
      for (auto& r : rays) {
        r.v -= (a.dot(r.v) / ap) * p;
        r.tight[c] = true;
      }
      Ray fresh{p.normalized(), std::vector<bool>(m, false)};
      for (std::size_t k = 0; k < c; ++k) fresh.tight[k] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const double s = a.dot(rays[i].v);
      if (s > kConeTolerance) {
        pos.push_back(i);
        next.push_back(rays[i]);
      } else if (s < -kConeTolerance) {
        neg.push_back(i);
      } else {
        Ray r = rays[i];
        r.tight[c] = true;
        next.push_back(std::move(r));
      }
    }
    const int cone_rank = n - static_cast<int>(lineality.size());
    for (std::size_t ip : pos) {
      for (std::size_t in : neg) {
        const auto common = intersect(rays[ip].tight, rays[in].tight);
        if (count(common) < cone_rank - 2) continue;
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == ip || k == in) continue;
          if (contains_set(rays[k].tight, common)) adjacent = false;
        }
        if (!adjacent) continue;
        const double sp = a.dot(rays[ip].v);
        const double sn = a.dot(rays[in].v);
        Vector v = sp * rays[in].v - sn * rays[ip].v;
        const double norm = v.norm();
        if (norm <= kConeTolerance) continue;
        Ray r{v / norm, common};
        r.tight[c] = true;
        next.push_back(std::move(r));
      }
    }
    rays = std::move(next);
  }

  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(r.v.normalized());
  // Re-orthonormalize the lineality basis.
  if (!lineality.empty()) {
    Eigen::MatrixXd l(n, static_cast<Eigen::Index>(lineality.size()));
    for (std::size_t j = 0; j < lineality.size(); ++j) l.col(static_cast<Eigen::Index>(j)) = lineality[j];
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(l);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, l.cols());
    for (Eigen::Index j = 0; j < q.cols(); ++j) out.lineality.push_back(q.col(j));
  }
  return out;
}

PolyCone PolyCone::generated(std::vector<Vector> generators, int dimension) {
  for (const auto& g : generators) require_dimension(g, dimension, "PolyCone::generated");
  return PolyCone(Form::generated, std::move(generators), dimension);
}

PolyCone PolyCone::halfspace(std::vector<Vector> normals, int dimension) {
  for (const auto& a : normals) require_dimension(a, dimension, "PolyCone::halfspace");
  return PolyCone(Form::halfspace, std::move(normals), dimension);
}

PolyCone PolyCone::to_generators() const {
  if (form_ == Form::generated) return *this;
  require_budget(dimension_);
  const auto gens = generators_from_halfspaces(vectors_, dimension_);
  std::vector<Vector> out = gens.rays;
  for (const auto& l : gens.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  return generated(std::move(out), dimension_);
}

PolyCone PolyCone::to_halfspaces() const {
  if (form_ == Form::halfspace) return *this;
  require_budget(dimension_);
  // Facets of cone(G) are the extreme rays of its dual {b : <b, g> >= 0}.
  const auto gens = generators_from_halfspaces(vectors_, dimension_);
  std::vector<Vector> out = gens.rays;
  for (const auto& l : gens.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  return halfspace(std::move(out), dimension_);
}

bool PolyCone::contains(const Vector& x, double tol) const {
  require_dimension(x, dimension_, "PolyCone::contains");
  const PolyCone h = to_halfspaces();
  for (const auto& a : h.vectors()) {
    const double norm = a.norm();
    if (norm == 0.0) continue;
    if (a.dot(x) / norm < -tol) return false;
  }
  return true;
}

bool Polyhedron::contains(const Vector& x, double tol) const { return margin(x) >= -tol; }

double Polyhedron::margin(const Vector& x) const {
  require_dimension(x, dimension, "Polyhedron::margin");
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < normals.size(); ++i) m = std::min(m, normals[i].dot(x) - offsets[i]);
  return m;
}

double support_function(const SampledSet& X, const Vector& v) {
  const int n = X.dimension();
  require_dimension(v, n, "support_function");
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& p : X.points) {
    require_dimension(p, n, "support_function");
    lo = std::min(lo, p.dot(v));
  }
  return -lo;
}

PolyCone dual_cone(const PolyCone& C) {
  require_budget(C.dimension());
  const PolyCone g = C.to_generators();
  return PolyCone::halfspace(g.vectors(), C.dimension());
}

bool is_empty(const Polyhedron& C) {
  const int n = C.dimension;
  if (C.normals.size() != C.offsets.size()) throw DimensionMismatch("polyhedron normals/offsets size");
  require_budget(n);
  // Homogenize: {(x,t) : <a_i,x> - b_i t >= 0, t >= 0}; C is non-empty iff
  // this cone has a generator with t > 0.
  std::vector<Vector> h;
  for (std::size_t i = 0; i < C.normals.size(); ++i) {
    require_dimension(C.normals[i], n, "Polyhedron");
    Vector a(n + 1);
    a.head(n) = C.normals[i];
    a(n) = -C.offsets[i];
    h.push_back(a);
  }
  h.push_back(Vector::Unit(n + 1, n));
  const auto gens = generators_from_halfspaces(h, n + 1);
  for (const auto& r : gens.rays) {
    if (r(n) > kConeTolerance) return false;
  }
  return true;
}

PolyCone recession_cone(const Polyhedron& C) {
  if (is_empty(C)) throw DomainError("recession_cone: polyhedron is empty");
  return PolyCone::halfspace(C.normals, C.dimension);
}

std::vector<Vector> lineality_space(const Polyhedron& C) {
  const int n = C.dimension;
  if (is_empty(C)) throw DomainError("lineality_space: polyhedron is empty");
  std::vector<Vector> basis;
  if (C.normals.empty()) {
    for (int i = 0; i < n; ++i) basis.push_back(Vector::Unit(n, i));
    return basis;
  }
  Eigen::MatrixXd a(static_cast<Eigen::Index>(C.normals.size()), n);
  for (std::size_t i = 0; i < C.normals.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = C.normals[i].transpose();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) {
    if (s(i) > kConeTolerance * std::max(1.0, s(0))) ++rank;
  }
  for (int j = rank; j < n; ++j) basis.push_back(svd.matrixV().col(j));
  return basis;
}

PolyCone bounded_below_functionals(const Polyhedron& C) {
  if (is_empty(C)) throw DomainError("bounded_below_functionals: polyhedron is empty");
  return PolyCone::generated(C.normals, C.dimension);
}

bool equivalent(const PolyCone& a, const PolyCone& b, double tol) {
  if (a.dimension() != b.dimension()) return false;
  const PolyCone ga = a.to_generators();
  const PolyCone gb = b.to_generators();
  const PolyCone ha = a.to_halfspaces();
  const PolyCone hb = b.to_halfspaces();
  for (const auto& g : ga.vectors()) {
    if (!hb.contains(g, tol)) return false;
  }
  for (const auto& g : gb.vectors()) {
    if (!ha.contains(g, tol)) return false;
  }
  return true;
}

bool is_pointed(const std::vector<Vector>& directions, int n) {
  require_budget(n);
  if (directions.empty()) return true;
  // cone(D) is pointed iff its dual cone is full-dimensional.
  const auto dual = generators_from_halfspaces(directions, n);
  std::vector<Vector> all = dual.rays;
  all.insert(all.end(), dual.lineality.begin(), dual.lineality.end());
  return matrix_rank(all, n) == n;
}

InteriorSurrogate has_interior_B(const SampledSet& X, const InteriorSurrogateOptions& options) {
  const int n = X.dimension();
  require_budget(n);
  std::vector<double> norms;
  norms.reserve(X.points.size());
  for (const auto& p : X.points) {
    require_dimension(p, n, "has_interior_B");
    norms.push_back(p.norm());
  }
  std::vector<double> sorted = norms;
  const auto q = sorted.begin() + static_cast<std::ptrdiff_t>(sorted.size() / 4);
  std::nth_element(sorted.begin(), q, sorted.end());
  const double threshold = options.escape_ratio * *q;

  InteriorSurrogate out;
  for (std::size_t i = 0; i < X.points.size(); ++i) {
    if (norms[i] > threshold && norms[i] > 0.0) out.escape_directions.push_back(X.points[i] / norms[i]);
  }
  out.has_interior = is_pointed(out.escape_directions, n);
  return out;
}

Vector group_average(const std::vector<Vector>& orbit) {
  if (orbit.empty()) throw DomainError("group_average: empty orbit");
  Vector mean = Vector::Zero(orbit.front().size());
  for (const auto& v : orbit) {
    require_dimension(v, static_cast<int>(mean.size()), "group_average");
    mean += v;
  }
  return mean / static_cast<double>(orbit.size());
}

}  // namespace semibounded::convex
