#include "desitter/model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "desitter/errors.hpp"

namespace desitter {

BurgersModel::BurgersModel(SpacetimeParams params) : params_(params) {
  if (!(params_.c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
}

BurgersModel::BurgersModel(SpacetimeParams params, double r_min, double r_max)
    : BurgersModel(params) {
  const double r_far = std::max(std::abs(r_min), std::abs(r_max));
  if (horizon_factor(params_, r_far) < 0.0) {
    throw DomainError("domain extends beyond the cosmological horizon");
  }
}

double BurgersModel::conservative_flux(double v, double r) const {
  return flux_coefficient(r) * (v * v) * 0.5;
}

double BurgersModel::source(double v, double r, SourceForm form) const {
  const double c2 = params_.c * params_.c;
  const double lam_r = params_.lambda * r;
  switch (form) {
    case SourceForm::conservative:
      return lam_r * (c2 - 2.0 * (v * v));
    case SourceForm::nonconservative:
    case SourceForm::paper_literal:
      return lam_r * (c2 - v * v);
  }
  return 0.0;
}

double BurgersModel::characteristic_speed(double v, double r) const {
  return flux_coefficient(r) * v;
}

void validate_static(const SpacetimeParams& p, const StaticSolution& sol) {
  if (!(sol.k > 0.0) || sol.k > p.c * p.c) {
    throw DomainError("static constant K must lie in (0, c^2]");
  }
  if (sol.sign != 1 && sol.sign != -1) {
    throw DomainError("static branch sign must be +1 or -1");
  }
}

double BurgersModel::static_solution(const StaticSolution& sol, double r) const {
  validate_static(params_, sol);
  const double radicand = params_.c * params_.c - sol.k * flux_coefficient(r);
  if (radicand < 0.0) {
    throw DomainError("static solution is imaginary at this r (c^2 - K(1 - Lambda r^2) < 0)");
  }
  return sol.sign * std::sqrt(radicand);
}

double BurgersModel::static_reach(const StaticSolution& sol) const {
  validate_static(params_, sol);
  const double lam = params_.lambda;
  const double c2 = params_.c * params_.c;
  if (lam > 0.0) return 1.0 / std::sqrt(lam);
  if (lam == 0.0) return std::numeric_limits<double>::infinity();
  // c^2 - K (1 + |Lambda| r^2) >= 0
  return std::sqrt((c2 / sol.k - 1.0) / -lam);
}

double BurgersModel::balance_residual(double v, double dv_dr, double r) const {
  const double lam = params_.lambda;
  const double c2 = params_.c * params_.c;
  // d/dr (X v^2 / 2) = X' v^2 / 2 + X v v',  X' = -2 Lambda r
  const double lhs = -lam * r * (v * v) + flux_coefficient(r) * v * dv_dr;
  const double rhs = lam * r * (c2 - 2.0 * (v * v));
  return lhs - rhs;
}

double BurgersModel::static_residual(const StaticSolution& sol, double r) const {
  const double v = static_solution(sol, r);
  if (v == 0.0) {
    throw DomainError("static residual needs a strictly positive radicand");
  }
  const double slope = params_.lambda * r * sol.k / v;
  return balance_residual(v, slope, r);
}

double classical_riemann_exact(double v_left, double v_right, double xi) {
  if (v_left > v_right) {
    return xi < 0.5 * (v_left + v_right) ? v_left : v_right;
  }
  if (xi <= v_left) return v_left;
  if (xi >= v_right) return v_right;
  return xi;
}

}  // namespace desitter
