#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "semibounded/circle.hpp"

namespace semibounded::virasoro {

using circle::CircleDiffeo;
using circle::Complex;
using circle::Density;
using circle::FourierFunction;
using circle::VectorField;

/// (z, f d/dtheta) in R + V(S^1). The central coordinate is complex so that
/// the complexified Witt generators can be bracketed; group actions and orbit
/// invariants read its real part.
struct VirasoroElement {
  Complex z = 0.0;
  VectorField x;
};

/// (a, u (dtheta)^2), paired with elements by a z + integral of u f.
struct VirasoroFunctional {
  double a = 0.0;
  Density u;
};

/// beta c + alpha d/dtheta.
struct CartanCoords {
  double beta = 0.0;
  double alpha = 0.0;
};

/// [(z,f),(z',g)] = (omega(f,g), [f,g]).
VirasoroElement vir_bracket(const VirasoroElement& x, const VirasoroElement& y, int degree = -1);

/// Ad_phi(z, f) = (z - integral f S~(phi^{-1}), (f o phi)/phi').
/// Satisfies Ad_{psi o phi} = Ad_phi Ad_psi.
VirasoroElement adjoint_action(const CircleDiffeo& phi, const VirasoroElement& x, int grid = 0);

/// Ad*_phi(a, u) = (a, (u o phi) phi'^2 - a S~(phi)); preserves the pairing
/// with adjoint_action under the same phi.
VirasoroFunctional coadjoint_action(const CircleDiffeo& phi, const VirasoroFunctional& lambda, int grid = 0);

/// a z + integral u f (real parts).
double pairing(const VirasoroFunctional& lambda, const VirasoroElement& x);

/// Integral of f S~(phi^{-1}), evaluated through the substitution
/// theta = phi(y), which needs no inverse.
double schwarzian_inverse_integral(const CircleDiffeo& phi, const FourierFunction& f);

/// (1/2pi) integral 1/f, adaptive trapezoid. DomainError unless f > 0.
double chi(const VectorField& X);

/// (beta, alpha) of the unique point of the adjoint orbit in the Cartan plane.
CartanCoords orbit_invariants(const VirasoroElement& x);

/// (z, mean of f).
CartanCoords cartan_projection(const VirasoroElement& x);

VirasoroElement from_cartan(const CartanCoords& x, int degree = circle::kDefaultDegree);

struct ConvexityReport {
  int trials = 0;
  double worst_beta_margin = 0.0;
  double worst_alpha_margin = 0.0;
  double worst_margin() const { return std::min(worst_beta_margin, worst_alpha_margin); }
};

/// Samples p(Ad_phi x) - x over random phi and records the smallest
/// coordinates of the difference (both must be >= 0 for membership in C+).
ConvexityReport convexity_check(const CartanCoords& x, int trials, std::uint64_t seed,
                                const circle::RandomDiffeoOptions& options = {});

/// -integral h'^2 + integral h^2 - (integral h)^2 / 2pi.
double beta_hessian_form(const FourierFunction& h);

/// Real field d_n - d_{-n} = -2 sin(n theta) d/dtheta.
VectorField root_field(int n, int degree = circle::kDefaultDegree);

/// s -> p(Ad_{exp(s X_n)} x) with X_n = root_field(n).
std::vector<CartanCoords> projection_curve(const CartanCoords& x, int n, const std::vector<double>& s_values,
                                           int degree = circle::kDefaultDegree);

/// Mean of a smooth 2pi-periodic function by trapezoid rule on doubling
/// grids, starting at `min_points` and stopping at relative change 1e-14.
double periodic_mean(const std::function<double(double)>& fn, int min_points = 64);

}  // namespace semibounded::virasoro
