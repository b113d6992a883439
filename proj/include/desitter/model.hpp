#pragma once

#include "desitter/geometry.hpp"

namespace desitter {

/// How the source term is written; selects the matching flux differencing in
/// the solver.
enum class SourceForm {
  conservative,     // Lambda r (c^2 - 2 v^2), paired with d_r((1 - Lambda r^2) v^2 / 2)
  nonconservative,  // Lambda r (c^2 - v^2), paired with (1 - Lambda r^2) d_r(v^2 / 2)
  paper_literal     // Lambda r (c^2 - v^2), paired with the conservative flux difference
};

/// Branch of the static family v = sign * sqrt(c^2 - K (1 - Lambda r^2)).
struct StaticSolution {
  double k = 0.5;
  int sign = +1;
};

/// Scalar relativistic Burgers equation on de Sitter,
///   d_t v + d_r((1 - Lambda r^2) v^2 / 2) = Lambda r (c^2 - 2 v^2).
class BurgersModel {
 public:
  explicit BurgersModel(SpacetimeParams params);

  /// Validates that every r in [r_min, r_max] satisfies 1 - Lambda r^2 >= 0
  /// (the closed faces may touch the horizon).
  BurgersModel(SpacetimeParams params, double r_min, double r_max);

  const SpacetimeParams& params() const noexcept { return params_; }
  double lambda() const noexcept { return params_.lambda; }
  double c() const noexcept { return params_.c; }

  double flux_coefficient(double r) const { return horizon_factor(params_, r); }
  double conservative_flux(double v, double r) const;
  double source(double v, double r, SourceForm form) const;
  double characteristic_speed(double v, double r) const;

  double static_solution(const StaticSolution& sol, double r) const;

  /// Largest r >= 0 on which the branch is real and outside the horizon,
  /// +inf when unbounded. At the returned radius itself v may be 0.
  double static_reach(const StaticSolution& sol) const;

  /// Residual d_r((1 - Lambda r^2) v^2 / 2) - Lambda r (c^2 - 2 v^2) for a profile
  /// with value v and slope dv_dr at r, product rule evaluated exactly.
  double balance_residual(double v, double dv_dr, double r) const;

  /// balance_residual of the static branch, with its analytic slope
  /// dv/dr = Lambda r K / v. Round-off level for every admissible branch.
  double static_residual(const StaticSolution& sol, double r) const;

 private:
  SpacetimeParams params_;
};

/// Validates K in (0, c^2] and sign in {-1, +1}; throws DomainError otherwise.
void validate_static(const SpacetimeParams& p, const StaticSolution& sol);

/// Entropy solution of d_t v + d_r(v^2 / 2) = 0 for a single jump (vL, vR),
/// as a function of xi = (r - r_split) / t.
double classical_riemann_exact(double v_left, double v_right, double xi);

}  // namespace desitter
