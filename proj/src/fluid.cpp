#include "desitter/fluid.hpp"

#include <cmath>

#include "desitter/errors.hpp"

namespace desitter {

std::array<std::array<double, 4>, 4> StressEnergy::matrix() const {
  std::array<std::array<double, 4>, 4> m{};
  m[0][0] = t00;
  m[0][1] = m[1][0] = t01;
  m[1][1] = t11;
  m[2][2] = t22;
  m[3][3] = t33;
  return m;
}

namespace {

void require_subluminal(const SpacetimeParams& p, double v) {
  if (!(std::abs(v) < p.c)) {
    throw DomainError("fluid velocity must satisfy |v| < c");
  }
}

}  // namespace

FourVelocity four_velocity(const SpacetimeParams& p, double r, double v) {
  require_admissible(p, r);
  require_subluminal(p, v);
  const double x = horizon_factor(p, r);
  const double d = p.c * p.c - v * v;
  return {p.c / std::sqrt(x * d), v * std::sqrt(x) / std::sqrt(d)};
}

double four_velocity_norm(const SpacetimeParams& p, double r, const FourVelocity& u) {
  const auto g = metric_components(p, r, equatorial_theta, AngularInverse::not_required);
  return g.cov[0] * u.u0 * u.u0 + g.cov[1] * u.u1 * u.u1;
}

StressEnergy stress_energy(const SpacetimeParams& p, double r, double theta,
                           const FluidPoint& fp) {
  require_admissible(p, r);
  require_subluminal(p, fp.v);
  const double s = std::sin(theta);
  if (!(r > 0.0) || s == 0.0) {
    throw DomainError("stress-energy angular components are singular at r = 0 or on the axis");
  }
  const double c = p.c;
  const double c2 = c * c;
  const double v = fp.v;
  const double x = horizon_factor(p, r);
  const double d = c2 - v * v;

  StressEnergy t;
  t.t00 = (fp.rho * c2 * c2 + fp.p * v * v) / (d * x);
  t.t01 = c * v * (fp.rho * c2 + fp.p) / d;
  t.t11 = c2 * x * (v * v * fp.rho + fp.p) / d;
  t.t22 = fp.p / (r * r);
  t.t33 = fp.p / (r * r * s * s);
  return t;
}

DivergenceResidual divergence_residual(const SpacetimeParams& p, const FluidField& field,
                                       double t, double r, double h) {
  if (!(h > 0.0)) {
    throw DomainError("finite-difference step must be positive");
  }
  const double theta = equatorial_theta;
  const auto tensor_at = [&](double tt, double rr) {
    return stress_energy(p, rr, theta, field(tt, rr)).matrix();
  };

  const auto centre = tensor_at(t, r);
  const auto t_plus = tensor_at(t + h, r);
  const auto t_minus = tensor_at(t - h, r);
  const auto r_plus = tensor_at(t, r + h);
  const auto r_minus = tensor_at(t, r - h);
  const auto gamma = christoffel_closed(p, r, theta);

  std::array<double, 2> res{};
  for (int beta = 0; beta < 2; ++beta) {
    // Angular partials vanish: nothing depends on theta or phi.
    double sum = (t_plus[0][beta] - t_minus[0][beta]) / (2.0 * h) +
                 (r_plus[1][beta] - r_minus[1][beta]) / (2.0 * h);
    for (int a = 0; a < 4; ++a) {
      for (int g = 0; g < 4; ++g) {
        sum += gamma(a, a, g) * centre[g][beta];
        sum += gamma(beta, a, g) * centre[a][g];
      }
    }
    res[beta] = sum;
  }
  return {res[0], res[1]};
}

}  // namespace desitter
