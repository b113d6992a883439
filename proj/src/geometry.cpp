#include "desitter/geometry.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "desitter/errors.hpp"

namespace desitter {

void require_admissible(const SpacetimeParams& p, double r) {
  if (!(p.c > 0.0)) {
    throw DomainError("light speed must be positive");
  }
  if (!(horizon_factor(p, r) > 0.0)) {
    throw DomainError("r = " + std::to_string(r) + " is not inside the horizon (1 - Lambda r^2 <= 0)");
  }
}

MetricDiagonal metric_components(const SpacetimeParams& p, double r, double theta,
                                 AngularInverse angular) {
  require_admissible(p, r);
  const double x = horizon_factor(p, r);
  const double s = std::sin(theta);

  MetricDiagonal m;
  m.cov = {-x, 1.0 / x, r * r, r * r * s * s};
  m.con[0] = 1.0 / (-x);
  m.con[1] = x;
  if (angular == AngularInverse::required) {
    if (r == 0.0 || s == 0.0) {
      throw DomainError("angular inverse metric is singular at r = 0 or on the axis");
    }
    m.con[2] = 1.0 / (r * r);
    m.con[3] = 1.0 / (r * r * s * s);
  } else {
    m.con[2] = std::numeric_limits<double>::quiet_NaN();
    m.con[3] = std::numeric_limits<double>::quiet_NaN();
  }
  return m;
}

namespace {

void require_off_axis(double r, double theta) {
  if (!(r > 0.0)) {
    throw DomainError("connection requires r > 0");
  }
  if (std::sin(theta) == 0.0 || !std::isfinite(theta)) {
    throw DomainError("connection is singular on the polar axis");
  }
}

}  // namespace

ChristoffelTable christoffel_closed(const SpacetimeParams& p, double r, double theta) {
  require_admissible(p, r);
  require_off_axis(r, theta);

  const double lam = p.lambda;
  const double x = horizon_factor(p, r);  // 1 - Lambda r^2
  const double s = std::sin(theta);
  const double co = std::cos(theta);

  ChristoffelTable t;
  auto& g = t.gamma;
  g[0][0][1] = g[0][1][0] = lam * r / (-x);
  g[1][1][1] = lam * r / x;
  g[1][0][0] = lam * r * (-x);
  g[1][2][2] = r * (-x);
  g[1][3][3] = r * (-x) * s * s;
  g[2][1][2] = g[2][2][1] = 1.0 / r;
  g[3][1][3] = g[3][3][1] = 1.0 / r;
  g[2][3][3] = -s * co;
  g[3][2][3] = g[3][3][2] = co / s;
  return t;
}

bool christoffel_slot_nonzero(int mu, int alpha, int beta) {
  const auto is = [&](int m, int a, int b) {
    return mu == m && ((alpha == a && beta == b) || (alpha == b && beta == a));
  };
  return is(0, 0, 1) || is(1, 1, 1) || is(1, 0, 0) || is(1, 2, 2) || is(1, 3, 3) ||
         is(2, 1, 2) || is(3, 1, 3) || is(2, 3, 3) || is(3, 2, 3);
}

ChristoffelTable christoffel_numeric(const SpacetimeParams& p, double r, double theta,
                                     double h) {
  if (!(h > 0.0)) {
    throw DomainError("finite-difference step must be positive");
  }
  require_off_axis(r, theta);
  if (!(r - h > 0.0) || !(theta - h > 0.0) || !(theta + h < std::numbers::pi)) {
    throw DomainError("finite-difference stencil crosses r = 0 or the polar axis");
  }

  // dg[k][i] = d g_ii / d x^k. The metric is static and axisymmetric, so
  // k = 0 (t) and k = 3 (phi) rows stay zero.
  std::array<std::array<double, 4>, 4> dg{};
  const auto cov = [&](double rr, double th) {
    return metric_components(p, rr, th, AngularInverse::not_required).cov;
  };
  const auto r_plus = cov(r + h, theta);
  const auto r_minus = cov(r - h, theta);
  const auto th_plus = cov(r, theta + h);
  const auto th_minus = cov(r, theta - h);
  for (int i = 0; i < 4; ++i) {
    dg[1][i] = (r_plus[i] - r_minus[i]) / (2.0 * h);
    dg[2][i] = (th_plus[i] - th_minus[i]) / (2.0 * h);
  }

  const auto inv = metric_components(p, r, theta).con;

  ChristoffelTable t;
  for (int mu = 0; mu < 4; ++mu) {
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        // Diagonal metric: only g_{mu mu} contributes to the contraction.
        const double d_a = (mu == b) ? dg[a][mu] : 0.0;
        const double d_b = (mu == a) ? dg[b][mu] : 0.0;
        const double d_mu = (a == b) ? dg[mu][a] : 0.0;
        t.gamma[mu][a][b] = 0.5 * inv[mu] * (d_a + d_b - d_mu);
      }
    }
  }
  return t;
}

}  // namespace desitter
