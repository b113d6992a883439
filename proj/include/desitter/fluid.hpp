#pragma once

#include <array>
#include <functional>
#include <numbers>

#include "desitter/geometry.hpp"

namespace desitter {

/// Perfect-fluid state at a point. v is the coordinate velocity
/// v = c u^1 / ((1 - Lambda r^2) u^0).
struct FluidPoint {
  double rho = 0.0;
  double p = 0.0;
  double v = 0.0;
};

/// Radial four-velocity; the angular components vanish identically.
struct FourVelocity {
  double u0 = 0.0;
  double u1 = 0.0;
};

/// Nonzero components of T^{alpha beta}. t10 equals t01.
struct StressEnergy {
  double t00 = 0.0;
  double t01 = 0.0;
  double t11 = 0.0;
  double t22 = 0.0;
  double t33 = 0.0;

  /// Full symmetric 4x4 contravariant tensor.
  std::array<std::array<double, 4>, 4> matrix() const;
};

/// u0 > 0 and sign(u1) = sign(v). Throws DomainError for |v| >= c or outside the horizon.
FourVelocity four_velocity(const SpacetimeParams& p, double r, double v);

/// u^alpha u_alpha using the diagonal metric at r; equals -1 for a normalized velocity.
double four_velocity_norm(const SpacetimeParams& p, double r, const FourVelocity& u);

StressEnergy stress_energy(const SpacetimeParams& p, double r, double theta,
                           const FluidPoint& fp);

/// (rho, p, v) as functions of (t, r).
using FluidField = std::function<FluidPoint(double t, double r)>;

struct DivergenceResidual {
  double res0 = 0.0;
  double res1 = 0.0;
};

/// beta = 0 and beta = 1 components of
///   d_alpha T^{alpha beta} + Gamma^alpha_{alpha gamma} T^{gamma beta}
///                          + Gamma^beta_{alpha gamma} T^{alpha gamma}
/// on the equatorial plane, with x^0 = t. Partial derivatives in t and r are
/// second-order central differences of stress_energy sampled from the field;
/// the Christoffel contraction uses christoffel_closed at the centre point.
/// Zero (up to O(h^2)) for exact solutions of the covariant Euler system.
DivergenceResidual divergence_residual(const SpacetimeParams& p, const FluidField& field,
                                       double t, double r, double h = 1e-4);

inline constexpr double equatorial_theta = std::numbers::pi / 2.0;

}  // namespace desitter
