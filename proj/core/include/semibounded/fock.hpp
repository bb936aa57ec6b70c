#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "semibounded/real_linear_map.hpp"

namespace semibounded::fock {

using Complex = std::complex<double>;
/// Amplitudes over the enumerated occupation basis of a FockSpace.
using FockVector = ComplexVector;
/// Dense matrix over the enumerated occupation basis.
using FockOperator = ComplexMatrix;

enum class Statistics { bosonic, fermionic };

/// Occupation numbers per mode; entries are 0/1 in the fermionic case.
using Occupation = std::vector<int>;

/// Truncated symmetric (total number <= cutoff) or full exterior Fock space
/// over C^d. Basis vectors are orthonormal: bosonic |n> = prod (a_i^*)^{n_i} /
/// sqrt(n_i!) Omega; fermionic |S> = a_{i1}^* ... a_{ik}^* Omega with i1 < ... < ik.
/// The basis is ordered by particle number, then lexicographically.
class FockSpace {
 public:
  static FockSpace bosonic(int modes, int cutoff);
  static FockSpace fermionic(int modes);

  int modes() const { return modes_; }
  Statistics statistics() const { return statistics_; }
  /// Max particle number (modes for fermions).
  int cutoff() const { return cutoff_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  const Occupation& occupation(int index) const { return basis_.at(index); }
  /// -1 when the occupation lies outside the space.
  int index(const Occupation& occ) const;
  int particle_number(int index) const { return levels_.at(index); }

  FockVector vacuum() const;
  FockOperator identity() const;
  /// a_i and a_i^*; creation beyond the cutoff is dropped.
  const FockOperator& annihilation_mode(int i) const { return lower_.at(i); }
  const FockOperator& creation_mode(int i) const { return raise_.at(i); }

  /// a(f) = sum conj(f_i) a_i (antilinear in f).
  FockOperator annihilate(const ComplexVector& f) const;
  /// a^*(f) = sum f_i a_i^*.
  FockOperator create(const ComplexVector& f) const;
  FockOperator number_operator() const;
  /// sum M_ij a_i^* a_j.
  FockOperator bilinear(const ComplexMatrix& m) const;
  /// Diagonal projector onto states with at most `level` particles.
  FockOperator level_projector(int level) const;
  /// Components with exactly `level` particles kept, others zeroed.
  FockVector level_component(const FockVector& v, int level) const;

  /// Same amplitudes in a space with a larger cutoff.
  FockVector embed_into(const FockSpace& larger, const FockVector& v) const;

 private:
  FockSpace(int modes, Statistics statistics, int cutoff);

  int modes_;
  Statistics statistics_;
  int cutoff_;
  std::vector<Occupation> basis_;
  std::vector<int> levels_;
  std::map<Occupation, int> lookup_;
  std::vector<FockOperator> lower_, raise_;
};

/// Norm lost when a^*(f) pushes the cutoff level of v out of the space.
double creation_leak(const FockSpace& space, const ComplexVector& f, const FockVector& v);

/// W(t, f) = e^{it} exp((i/sqrt 2)(a(f) + a^*(f))) on a bosonic space.
FockOperator weyl(const FockSpace& space, double t, const ComplexVector& f);

struct HeisenbergElement {
  double t = 0.0;
  ComplexVector v;
};

/// (t + t' + Im<v, v'>/2, v + v').
HeisenbergElement heisenberg_mul(const HeisenbergElement& a, const HeisenbergElement& b);

/// Components (g1 f, g2 f) of a_g(f) = a(g1 f) + a^*(g2 f).
std::pair<ComplexVector, ComplexVector> bogoliubov_transform(const RealLinearMap& g, const ComplexVector& f);
FockOperator transformed_annihilator(const FockSpace& space, const RealLinearMap& g, const ComplexVector& f);

/// Degree-two vector A^ with <A^, f1 v f2> = <A f1, f2> for the antilinear
/// map f -> A conj(f). Needs A symmetric (bosonic) or antisymmetric
/// (fermionic). The coefficients are obtained by solving the pairing
/// equations against all basis pairs.
FockVector hat_element(const FockSpace& space, const ComplexMatrix& antilinear);

/// Matrix of T = g2 g1^{-1} as an antilinear map.
ComplexMatrix vacuum_parameter(const RealLinearMap& g);

struct VacuumImplementer {
  /// 1 / ||exp(-T^) Omega||.
  double c = 1.0;
  /// c exp(-T^) Omega.
  FockVector state;
  ComplexMatrix T;
  /// ||(a(e_i) + a^*(T e_i)) F|| per basis vector, measured with one extra
  /// particle level so that the truncation leak is included.
  std::vector<double> residuals;
  double max_residual() const;
};

/// Vacuum of the transformed annihilators. Needs g1 invertible and ||T|| < 1.
VacuumImplementer vacuum_implementer(const FockSpace& space, const RealLinearMap& g);

/// Normal-ordered second quantization of x in the symplectic (bosonic) or
/// orthogonal (fermionic) Lie algebra. Bosonic:
///   sum X1_ij a_i^* a_j - 1/2 sum B_ij a_i^* a_j^* + 1/2 sum conj(B_ij) a_i a_j,
/// fermionic:
///   sum X1_ij a_i^* a_j + 1/2 sum B_ij a_i^* a_j^* - 1/2 sum conj(B_ij) a_j a_i.
FockOperator second_quantize(const FockSpace& space, const RealLinearMap& x);

/// <([dpi(x), dpi(y)] - dpi([x, y])) Omega, Omega> / i.
Complex central_term(const FockSpace& space, const RealLinearMap& x, const RealLinearMap& y);

/// (1/2i) tr [x2, y2] = Im tr(X2 conj(Y2)); bosonic sign. Fermionic is the negative.
double expected_central_term(Statistics statistics, const RealLinearMap& x, const RealLinearMap& y);

/// Q_{v,w} = v w^* - w v^*, an element of u(d).
ComplexMatrix rank_two_generator(const ComplexVector& v, const ComplexVector& w);

/// a_P(f) = a((1-P) f) + a^*(Gamma P f), Gamma = G conj.
FockOperator quasifree_annihilator(const FockSpace& space, const ComplexMatrix& P, const ComplexMatrix& gamma,
                                   const ComplexVector& f);
/// sum (1 - 2P)_ij a_i^* a_j.
FockOperator quasifree_charge(const FockSpace& space, const ComplexMatrix& P);
/// P^2 = P = P^*, G conj(G) = 1, G unitary, G conj(P) = P G.
bool valid_quasifree_data(const ComplexMatrix& P, const ComplexMatrix& gamma, double tol = 1e-10);

/// Symmetric (bosonic) or exterior (fermionic) product of homogeneous vectors.
FockVector symmetric_product(const FockSpace& space, const FockVector& t, const FockVector& s);

/// Total particle number of a homogeneous vector; -1 if mixed or zero.
int homogeneous_degree(const FockSpace& space, const FockVector& v, double tol = 1e-14);

}  // namespace semibounded::fock
