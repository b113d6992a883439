#include "desitter/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "desitter/fluid.hpp"
#include "desitter/fvsolver.hpp"
#include "desitter/geometry.hpp"
#include "desitter/model.hpp"

namespace desitter {

namespace {

constexpr double pi = std::numbers::pi;
const double lambdas[] = {-1.0, -0.5, 0.0, 0.5, 1.0};

// Admissible radius in (0, r_max) with r_max = 0.95 / sqrt(max(Lambda, 0) ...).
double sample_r(double lambda, int i, int n) {
  const double r_max = lambda > 0.0 ? 0.95 / std::sqrt(lambda) : 0.95;
  return r_max * (i + 0.5) / n;
}

double sample_theta(int i, int n) { return pi * (i + 0.5) / n; }

CheckResult check(std::string name, double worst, double tol, std::string detail) {
  return {std::move(name), worst <= tol, worst, tol, std::move(detail)};
}

CheckResult metric_inverse() {
  double worst = 0.0;
  for (double lam : lambdas) {
    for (int i = 0; i < 50; ++i) {
      const auto m = metric_components({lam, 1.0}, sample_r(lam, i, 50), sample_theta((i * 7) % 50, 50));
      for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(m.cov[k] * m.con[k] - 1.0));
    }
  }
  return check("metric_inverse", worst, 1e-14, "max |g_ii g^ii - 1|, 5 Lambda x 50 points");
}

CheckResult christoffel_oracle(double fault) {
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double lam = lambdas[i % 5];
    const double r = sample_r(lam, i / 5, 20);
    const double th = sample_theta(i % 10, 10) * 0.9 + 0.05 * pi;
    auto closed = christoffel_closed({lam, 1.0}, r, th);
    closed.gamma[0][0][1] += fault;
    const auto numeric = christoffel_numeric({lam, 1.0}, r, th, 1e-5);
    for (int m = 0; m < 4; ++m)
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          worst = std::max(worst, std::abs(closed(m, a, b) - numeric(m, a, b)));
  }
  return check("christoffel_oracle", worst, 1e-6, "closed vs central-difference table, h = 1e-5, 100 points");
}

CheckResult christoffel_structure() {
  double worst = 0.0;
  for (double lam : lambdas) {
    for (int i = 0; i < 20; ++i) {
      const auto t = christoffel_closed({lam, 1.0}, sample_r(lam, i, 20), sample_theta(i, 20));
      for (int m = 0; m < 4; ++m)
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b) {
            worst = std::max(worst, std::abs(t(m, a, b) - t(m, b, a)));
            if (!christoffel_slot_nonzero(m, a, b) && t(m, a, b) != 0.0) worst = std::max(worst, 1.0);
          }
    }
  }
  return check("christoffel_structure", worst, 0.0, "lower-index symmetry and exact zeros");
}

CheckResult normalization() {
  double worst = 0.0;
  for (double lam : lambdas) {
    for (int i = 0; i < 50; ++i) {
      for (int k = 0; k < 50; ++k) {
        const double v = -0.99 + 1.98 * k / 49.0;
        const double r = sample_r(lam, i, 50);
        worst = std::max(worst, std::abs(four_velocity_norm({lam, 1.0}, r, four_velocity({lam, 1.0}, r, v)) + 1.0));
      }
    }
  }
  return check("four_velocity_normalization", worst, 1e-12, "|u.u + 1| on 50 x 50 (v, r) per Lambda");
}

CheckResult static_residual() {
  double worst = 0.0;
  for (double lam : {-1.0, -0.5, 0.5, 1.0}) {
    const BurgersModel model({lam, 1.0});
    for (double k : {0.1, 0.3, 0.5, 0.9}) {
      const double reach = std::min(0.95, 0.95 * model.static_reach({k, +1}));
      for (int i = 0; i < 50; ++i) {
        const double r = reach * (i + 0.5) / 50;
        worst = std::max(worst, std::abs(model.static_residual({k, +1}, r)));
      }
    }
  }
  return check("static_residual", worst, 1e-12, "static branch in the steady balance law");
}

CheckResult dust_divergence() {
  // Static velocity with the density that solves the continuity equation,
  // rho = 1 / (r^2 u^1); the covariant divergence must vanish to O(h^2).
  const SpacetimeParams p{-1.0, 1.0};
  const BurgersModel model(p);
  const StaticSolution sol{0.5, +1};
  const FluidField field = [&](double, double r) {
    const double v = model.static_solution(sol, r);
    return FluidPoint{1.0 / (r * r * four_velocity(p, r, v).u1), 0.0, v};
  };
  double worst = 0.0;
  for (double r : {0.3, 0.5, 0.7}) {
    const auto res = divergence_residual(p, field, 0.0, r, 1e-5);
    worst = std::max({worst, std::abs(res.res0), std::abs(res.res1)});
  }
  return check("dust_divergence", worst, 1e-6, "covariant Euler residual of the static dust field");
}

CheckResult flat_reduction() {
  const BurgersModel model({0.0, 1.0});
  double worst = 0.0;
  for (int i = 0; i < 41; ++i) {
    const double v = -1.0 + 0.05 * i;
    const double r = 0.025 * i;
    worst = std::max(worst, std::abs(model.conservative_flux(v, r) - v * v / 2.0));
    worst = std::max(worst, std::abs(model.characteristic_speed(v, r) - v));
    for (auto f : {SourceForm::conservative, SourceForm::nonconservative, SourceForm::paper_literal}) {
      worst = std::max(worst, std::abs(model.source(v, r, f)));
    }
  }
  return check("lambda0_reduction", worst, 0.0, "flux = v^2/2, speed = v, source = 0 exactly");
}

CheckResult riemann_oracle() {
  const BurgersModel model({0.0, 1.0});
  const Grid grid = make_grid(400, 0.0, 1.0);
  SolverConfig cfg;
  cfg.t_end = 0.5;
  const auto result = run(grid, model, cfg, initial_data(grid, init::Riemann{1.0, 0.0, 0.25}, model));
  const auto& v = result.snapshots.back().v;
  double front = grid.r_min;
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    if (v[j] >= 0.5 && v[j + 1] < 0.5) {
      front = grid.centers[j] + (v[j] - 0.5) / (v[j] - v[j + 1]) * grid.dr;
      break;
    }
  }
  return check("riemann_oracle", std::abs(front - 0.5), 2.0 * grid.dr,
               "flat shock (1, 0) midpoint vs Rankine-Hugoniot position at t = 0.5");
}

}  // namespace

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  return {metric_inverse(),  christoffel_oracle(options.christoffel_fault),
          christoffel_structure(), normalization(),
          static_residual(), dust_divergence(),
          flat_reduction(),  riemann_oracle()};
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string format_report(const std::vector<CheckResult>& checks) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-30s %-6s %-12s %-12s\n", "check", "status", "worst", "tolerance");
  out += line;
  for (const auto& c : checks) {
    std::snprintf(line, sizeof line, "%-30s %-6s %-12.3e %-12.3e  %s\n", c.name.c_str(),
                  c.passed ? "PASS" : "FAIL", c.worst, c.tolerance, c.detail.c_str());
    out += line;
  }
  return out;
}

nlohmann::json report_json(const std::vector<CheckResult>& checks) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& c : checks) {
    records.push_back({{"name", c.name},
                       {"passed", c.passed},
                       {"worst", c.worst},
                       {"tolerance", c.tolerance},
                       {"detail", c.detail}});
  }
  return {{"passed", all_passed(checks)}, {"checks", records}};
}

}  // namespace desitter
