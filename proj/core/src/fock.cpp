#include "semibounded/fock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "semibounded/errors.hpp"

namespace semibounded::fock {

namespace {

void compositions(int modes, int total, int slot, Occupation& current, std::vector<Occupation>& out) {
  if (slot == modes - 1) {
    current[slot] = total;
    out.push_back(current);
    return;
  }
  for (int k = total; k >= 0; --k) {
    current[slot] = k;
    compositions(modes, total - k, slot + 1, current, out);
  }
}

int level_of(const Occupation& occ) {
  int n = 0;
  for (int k : occ) n += k;
  return n;
}

void require_size(const ComplexVector& f, int d, const char* what) {
  if (f.size() != d) {
    throw DimensionMismatch(std::string(what) + ": expected " + std::to_string(d) + " modes, got " +
                            std::to_string(f.size()));
  }
}

void require_bosonic(const FockSpace& space, const char* what) {
  if (space.statistics() != Statistics::bosonic) throw DomainError(std::string(what) + " needs a bosonic space");
}

double scale_of(const ComplexMatrix& m) { return std::max(1.0, m.norm()); }

}  // namespace

FockSpace::FockSpace(int modes, Statistics statistics, int cutoff)
    : modes_(modes), statistics_(statistics), cutoff_(cutoff) {
  if (modes < 1) throw DomainError("Fock space needs at least one mode");
  if (statistics == Statistics::bosonic && cutoff < 1) throw DomainError("bosonic cutoff must be >= 1");
  Occupation current(modes, 0);
  if (statistics == Statistics::bosonic) {
    for (int level = 0; level <= cutoff; ++level) compositions(modes, level, 0, current, basis_);
  } else {
    std::vector<Occupation> all;
    for (int level = 0; level <= modes; ++level) {
      std::vector<Occupation> layer;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << modes); ++mask) {
        Occupation occ(modes, 0);
        for (int i = 0; i < modes; ++i) occ[i] = static_cast<int>((mask >> (modes - 1 - i)) & 1u);
        if (level_of(occ) == level) layer.push_back(occ);
      }
      std::sort(layer.begin(), layer.end(), std::greater<>());
      basis_.insert(basis_.end(), layer.begin(), layer.end());
    }
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    levels_.push_back(level_of(basis_[i]));
    lookup_.emplace(basis_[i], static_cast<int>(i));
  }

  const int dim = dimension();
  for (int mode = 0; mode < modes; ++mode) {
    FockOperator lower = FockOperator::Zero(dim, dim);
    FockOperator raise = FockOperator::Zero(dim, dim);
    for (int col = 0; col < dim; ++col) {
      const Occupation& occ = basis_[col];
      double sign = 1.0;
      if (statistics == Statistics::fermionic) {
        for (int j = 0; j < mode; ++j) {
          if (occ[j] != 0) sign = -sign;
        }
      }
      if (occ[mode] > 0) {
        Occupation target = occ;
        --target[mode];
        const double amp = statistics == Statistics::bosonic ? std::sqrt(static_cast<double>(occ[mode])) : sign;
        lower(index(target), col) = amp;
      }
      if (statistics == Statistics::bosonic || occ[mode] == 0) {
        Occupation target = occ;
        ++target[mode];
        const int row = index(target);
        if (row >= 0) {
          const double amp = statistics == Statistics::bosonic ? std::sqrt(static_cast<double>(target[mode])) : sign;
          raise(row, col) = amp;
        }
      }
    }
    lower_.push_back(std::move(lower));
    raise_.push_back(std::move(raise));
  }
}

FockSpace FockSpace::bosonic(int modes, int cutoff) { return FockSpace(modes, Statistics::bosonic, cutoff); }

FockSpace FockSpace::fermionic(int modes) {
  if (modes > 12) throw DomainError("fermionic space limited to 12 modes");
  return FockSpace(modes, Statistics::fermionic, modes);
}

int FockSpace::index(const Occupation& occ) const {
  const auto it = lookup_.find(occ);
  return it == lookup_.end() ? -1 : it->second;
}

FockVector FockSpace::vacuum() const {
  FockVector v = FockVector::Zero(dimension());
  v(0) = 1.0;
  return v;
}

FockOperator FockSpace::identity() const { return FockOperator::Identity(dimension(), dimension()); }

FockOperator FockSpace::annihilate(const ComplexVector& f) const {
  require_size(f, modes_, "annihilate");
  FockOperator out = FockOperator::Zero(dimension(), dimension());
  for (int i = 0; i < modes_; ++i) {
    if (f(i) != Complex(0.0)) out += std::conj(f(i)) * lower_[i];
  }
  return out;
}

FockOperator FockSpace::create(const ComplexVector& f) const {
  require_size(f, modes_, "create");
  FockOperator out = FockOperator::Zero(dimension(), dimension());
  for (int i = 0; i < modes_; ++i) {
    if (f(i) != Complex(0.0)) out += f(i) * raise_[i];
  }
  return out;
}

FockOperator FockSpace::number_operator() const {
  FockOperator out = FockOperator::Zero(dimension(), dimension());
  for (int i = 0; i < dimension(); ++i) out(i, i) = levels_[i];
  return out;
}

FockOperator FockSpace::bilinear(const ComplexMatrix& m) const {
  if (m.rows() != modes_ || m.cols() != modes_) throw DimensionMismatch("bilinear: matrix size");
  FockOperator out = FockOperator::Zero(dimension(), dimension());
  for (int i = 0; i < modes_; ++i) {
    for (int j = 0; j < modes_; ++j) {
      if (m(i, j) != Complex(0.0)) out += m(i, j) * raise_[i] * lower_[j];
    }
  }
  return out;
}

FockOperator FockSpace::level_projector(int level) const {
  FockOperator out = FockOperator::Zero(dimension(), dimension());
  for (int i = 0; i < dimension(); ++i) {
    if (levels_[i] <= level) out(i, i) = 1.0;
  }
  return out;
}

FockVector FockSpace::level_component(const FockVector& v, int level) const {
  if (v.size() != dimension()) throw DimensionMismatch("level_component: vector size");
  FockVector out = FockVector::Zero(dimension());
  for (int i = 0; i < dimension(); ++i) {
    if (levels_[i] == level) out(i) = v(i);
  }
  return out;
}

FockVector FockSpace::embed_into(const FockSpace& larger, const FockVector& v) const {
  if (v.size() != dimension()) throw DimensionMismatch("embed_into: vector size");
  if (larger.modes() != modes_ || larger.statistics() != statistics_) throw DimensionMismatch("embed_into: spaces differ");
  FockVector out = FockVector::Zero(larger.dimension());
  for (int i = 0; i < dimension(); ++i) {
    const int j = larger.index(basis_[i]);
    if (j < 0) {
      if (v(i) != Complex(0.0)) throw DomainError("embed_into: target space is too small");
      continue;
    }
    out(j) = v(i);
  }
  return out;
}

double creation_leak(const FockSpace& space, const ComplexVector& f, const FockVector& v) {
  if (space.statistics() != Statistics::bosonic) return 0.0;
  const FockSpace larger = FockSpace::bosonic(space.modes(), space.cutoff() + 1);
  const FockVector moved = larger.create(f) * space.embed_into(larger, v);
  return larger.level_component(moved, space.cutoff() + 1).norm();
}

FockOperator weyl(const FockSpace& space, double t, const ComplexVector& f) {
  require_bosonic(space, "weyl");
  const FockOperator generator =
      Complex(0.0, 1.0 / std::sqrt(2.0)) * (space.annihilate(f) + space.create(f));
  return std::polar(1.0, t) * FockOperator(generator.exp());
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b) {
  if (a.v.size() != b.v.size()) throw DimensionMismatch("heisenberg_mul: sizes differ");
  return {a.t + b.t + 0.5 * symplectic_form(a.v, b.v), a.v + b.v};
}

std::pair<ComplexVector, ComplexVector> bogoliubov_transform(const RealLinearMap& g, const ComplexVector& f) {
  require_size(f, g.dimension(), "bogoliubov_transform");
  return {g.linear() * f, g.antilinear_part() * f};
}

FockOperator transformed_annihilator(const FockSpace& space, const RealLinearMap& g, const ComplexVector& f) {
  const auto [lin, anti] = bogoliubov_transform(g, f);
  return space.annihilate(lin) + space.create(anti);
}

FockVector hat_element(const FockSpace& space, const ComplexMatrix& A) {
  const int d = space.modes();
  if (A.rows() != d || A.cols() != d) throw DimensionMismatch("hat_element: matrix size");
  const bool bosonic = space.statistics() == Statistics::bosonic;
  if (bosonic && (A - A.transpose()).norm() > 1e-10 * scale_of(A)) {
    throw DomainError("hat_element: bosonic input must be symmetric");
  }
  if (!bosonic && (A + A.transpose()).norm() > 1e-10 * scale_of(A)) {
    throw DomainError("hat_element: fermionic input must be antisymmetric");
  }
  if (space.cutoff() < 2) throw DomainError("hat_element: space has no two-particle level");

  std::vector<int> level_two;
  for (int i = 0; i < space.dimension(); ++i) {
    if (space.particle_number(i) == 2) level_two.push_back(i);
  }
  const FockVector omega = space.vacuum();
  std::vector<FockVector> pairs;
  std::vector<Complex> targets;
  for (int j = 0; j < d; ++j) {
    for (int k = bosonic ? j : j + 1; k < d; ++k) {
      pairs.push_back(space.create(ComplexVector::Unit(d, j)) * (space.create(ComplexVector::Unit(d, k)) * omega));
      // <A e_j, e_k> = (A conj(e_j))_k.
      targets.push_back(A(k, j));
    }
  }
  const auto rows = static_cast<Eigen::Index>(pairs.size());
  const auto cols = static_cast<Eigen::Index>(level_two.size());
  FockVector out = FockVector::Zero(space.dimension());
  if (rows == 0 || cols == 0) return out;
  // <x, p> = sum_s x_s conj(p_s).
  ComplexMatrix m(rows, cols);
  ComplexVector rhs(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = std::conj(pairs[r](level_two[c]));
    rhs(r) = targets[r];
  }
  const ComplexVector x = m.completeOrthogonalDecomposition().solve(rhs);
  if ((m * x - rhs).norm() > 1e-10 * std::max(1.0, rhs.norm())) {
    throw NumericalFailure("hat_element: pairing equations are inconsistent");
  }
  for (Eigen::Index c = 0; c < cols; ++c) out(level_two[c]) = x(c);
  return out;
}

ComplexMatrix vacuum_parameter(const RealLinearMap& g) {
  Eigen::FullPivLU<ComplexMatrix> lu(g.linear());
  if (!lu.isInvertible()) throw DomainError("vacuum_parameter: linear part is singular");
  // T v = g2 conj(g1^{-1} v) = G2 conj(G1^{-1}) conj(v).
  return g.antilinear_part() * ComplexMatrix(lu.inverse()).conjugate();
}

double VacuumImplementer::max_residual() const {
  double m = 0.0;
  for (double r : residuals) m = std::max(m, r);
  return m;
}

VacuumImplementer vacuum_implementer(const FockSpace& space, const RealLinearMap& g) {
  require_bosonic(space, "vacuum_implementer");
  const int d = space.modes();
  if (g.dimension() != d) throw DimensionMismatch("vacuum_implementer: map size");
  VacuumImplementer out;
  out.T = vacuum_parameter(g);
  Eigen::JacobiSVD<ComplexMatrix> svd(out.T);
  if (svd.singularValues()(0) >= 1.0) throw DomainError("vacuum_implementer: ||T|| must be below 1");

  FockOperator pair_creation = FockOperator::Zero(space.dimension(), space.dimension());
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      if (out.T(j, k) != Complex(0.0)) {
        pair_creation += out.T(j, k) * space.creation_mode(j) * space.creation_mode(k);
      }
    }
  }
  pair_creation *= -0.5;
  FockVector term = space.vacuum();
  FockVector sum = term;
  for (int n = 1; 2 * n <= space.cutoff(); ++n) {
    term = pair_creation * term / static_cast<double>(n);
    sum += term;
  }
  const double norm = sum.norm();
  out.c = 1.0 / norm;
  out.state = sum * out.c;

  const FockSpace larger = FockSpace::bosonic(d, space.cutoff() + 1);
  const FockVector lifted = space.embed_into(larger, out.state);
  for (int i = 0; i < d; ++i) {
    const ComplexVector e = ComplexVector::Unit(d, i);
    const ComplexVector te = out.T * e;
    out.residuals.push_back(((larger.annihilate(e) + larger.create(te)) * lifted).norm());
  }
  return out;
}

FockOperator second_quantize(const FockSpace& space, const RealLinearMap& x) {
  const int d = space.modes();
  if (x.dimension() != d) throw DimensionMismatch("second_quantize: map size");
  const bool bosonic = space.statistics() == Statistics::bosonic;
  if (bosonic && !in_symplectic_algebra(x)) throw DomainError("second_quantize: x is not in the symplectic algebra");
  if (!bosonic && !in_orthogonal_algebra(x)) throw DomainError("second_quantize: x is not in the orthogonal algebra");
  FockOperator out = space.bilinear(x.linear());
  const ComplexMatrix& b = x.antilinear_part();
  const double sign = bosonic ? -1.0 : 1.0;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      if (b(i, j) == Complex(0.0)) continue;
      out += 0.5 * sign * b(i, j) * space.creation_mode(i) * space.creation_mode(j);
      if (bosonic) {
        out += 0.5 * std::conj(b(i, j)) * space.annihilation_mode(i) * space.annihilation_mode(j);
      } else {
        out -= 0.5 * std::conj(b(i, j)) * space.annihilation_mode(j) * space.annihilation_mode(i);
      }
    }
  }
  return out;
}

Complex central_term(const FockSpace& space, const RealLinearMap& x, const RealLinearMap& y) {
  const FockOperator dx = second_quantize(space, x);
  const FockOperator dy = second_quantize(space, y);
  const FockOperator dxy = second_quantize(space, commutator(x, y));
  const FockVector omega = space.vacuum();
  const FockVector defect = dx * (dy * omega) - dy * (dx * omega) - dxy * omega;
  return omega.dot(defect) / Complex(0.0, 1.0);
}

double expected_central_term(Statistics statistics, const RealLinearMap& x, const RealLinearMap& y) {
  const double value = (x.antilinear_part() * y.antilinear_part().conjugate()).trace().imag();
  return statistics == Statistics::bosonic ? value : -value;
}

ComplexMatrix rank_two_generator(const ComplexVector& v, const ComplexVector& w) {
  if (v.size() != w.size()) throw DimensionMismatch("rank_two_generator: sizes differ");
  return v * w.adjoint() - w * v.adjoint();
}

bool valid_quasifree_data(const ComplexMatrix& P, const ComplexMatrix& gamma, double tol) {
  const auto d = P.rows();
  if (P.cols() != d || gamma.rows() != d || gamma.cols() != d) return false;
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  return (P * P - P).norm() <= tol && (P - P.adjoint()).norm() <= tol &&
         (gamma * gamma.conjugate() - id).norm() <= tol && (gamma.adjoint() * gamma - id).norm() <= tol &&
         (gamma * P.conjugate() - P * gamma).norm() <= tol;
}

FockOperator quasifree_annihilator(const FockSpace& space, const ComplexMatrix& P, const ComplexMatrix& gamma,
                                   const ComplexVector& f) {
  if (space.statistics() != Statistics::fermionic) throw DomainError("quasifree_annihilator needs a fermionic space");
  const int d = space.modes();
  if (P.rows() != d) throw DimensionMismatch("quasifree_annihilator: matrix size");
  require_size(f, d, "quasifree_annihilator");
  if (!valid_quasifree_data(P, gamma)) throw DomainError("quasifree_annihilator: invalid projection/conjugation");
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const ComplexVector pf = P * f;
  return space.annihilate((id - P) * f) + space.create(gamma * pf.conjugate());
}

FockOperator quasifree_charge(const FockSpace& space, const ComplexMatrix& P) {
  const int d = space.modes();
  return space.bilinear(ComplexMatrix::Identity(d, d) - 2.0 * P);
}

int homogeneous_degree(const FockSpace& space, const FockVector& v, double tol) {
  if (v.size() != space.dimension()) throw DimensionMismatch("homogeneous_degree: vector size");
  int degree = -1;
  for (int i = 0; i < space.dimension(); ++i) {
    if (std::abs(v(i)) <= tol) continue;
    if (degree < 0) {
      degree = space.particle_number(i);
    } else if (degree != space.particle_number(i)) {
      return -1;
    }
  }
  return degree;
}

FockVector symmetric_product(const FockSpace& space, const FockVector& t, const FockVector& s) {
  const int n = homogeneous_degree(space, t);
  const int m = homogeneous_degree(space, s);
  FockVector out = FockVector::Zero(space.dimension());
  if (n < 0 || m < 0) {
    if (t.norm() == 0.0 || s.norm() == 0.0) return out;
    throw DomainError("symmetric_product: inputs must be homogeneous");
  }
  if (n + m > space.cutoff()) throw DomainError("symmetric_product: degree exceeds the cutoff");
  const bool bosonic = space.statistics() == Statistics::bosonic;
  for (int a = 0; a < space.dimension(); ++a) {
    if (t(a) == Complex(0.0)) continue;
    const Occupation& sa = space.occupation(a);
    for (int b = 0; b < space.dimension(); ++b) {
      if (s(b) == Complex(0.0)) continue;
      const Occupation& rb = space.occupation(b);
      Occupation q(sa.size());
      double factor = 1.0;
      bool vanishes = false;
      for (std::size_t i = 0; i < sa.size(); ++i) {
        q[i] = sa[i] + rb[i];
        if (bosonic) {
          // sqrt(q! / (s! r!)) per mode.
          factor *= std::sqrt(std::tgamma(q[i] + 1.0) / (std::tgamma(sa[i] + 1.0) * std::tgamma(rb[i] + 1.0)));
        } else if (q[i] > 1) {
          vanishes = true;
        }
      }
      if (vanishes) continue;
      if (!bosonic) {
        // Sorting a^*_S a^*_R: one transposition per pair (i in S, j in R, i > j).
        int swaps = 0;
        for (std::size_t i = 0; i < sa.size(); ++i) {
          if (sa[i] == 0) continue;
          for (std::size_t j = 0; j < i; ++j) swaps += rb[j];
        }
        if (swaps % 2 != 0) factor = -factor;
      }
      out(space.index(q)) += factor * t(a) * s(b);
    }
  }
  return out;
}

}  // namespace semibounded::fock
