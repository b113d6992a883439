#include <cmath>
#include <random>
#include <vector>

#include "desitter/errors.hpp"
#include "desitter/model.hpp"
#include "doctest.h"

using namespace desitter;

namespace {
const SourceForm all_forms[] = {SourceForm::conservative, SourceForm::nonconservative,
                                SourceForm::paper_literal};
}

TEST_CASE("flux coefficient") {
  CHECK(BurgersModel({0.0, 1.0}).flux_coefficient(0.9) == 1.0);
  CHECK(BurgersModel({1.0, 1.0}).flux_coefficient(0.5) == 0.75);
  CHECK(BurgersModel({-1.0, 1.0}).flux_coefficient(1.0) == 2.0);
}

TEST_CASE("conservative flux") {
  CHECK(BurgersModel({1.0, 1.0}).conservative_flux(0.5, 0.5) == 0.09375);
  CHECK(BurgersModel({0.0, 1.0}).conservative_flux(0.37, 0.2) == 0.37 * 0.37 / 2.0);
  CHECK(BurgersModel({0.8, 1.0}).conservative_flux(0.0, 0.3) == 0.0);
}

TEST_CASE("source forms") {
  const BurgersModel m({1.0, 1.0});
  CHECK(std::abs(m.source(1.0 / std::sqrt(2.0), 0.5, SourceForm::conservative)) <= 1e-15);
  CHECK(m.source(1.0, 0.5, SourceForm::nonconservative) == 0.0);
  CHECK(m.source(1.0, 0.5, SourceForm::paper_literal) == 0.0);
  CHECK(m.source(0.3, 0.5, SourceForm::nonconservative) == m.source(0.3, 0.5, SourceForm::paper_literal));
  // conservative and nonconservative differ by Lambda r v^2
  CHECK(m.source(0.3, 0.5, SourceForm::nonconservative) - m.source(0.3, 0.5, SourceForm::conservative) ==
        doctest::Approx(0.5 * 0.09).epsilon(1e-14));
}

TEST_CASE("characteristic speed") {
  CHECK(BurgersModel({0.0, 1.0}).characteristic_speed(0.8, 0.4) == 0.8);
  CHECK(BurgersModel({1.0, 1.0}).characteristic_speed(0.8, 0.5) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(BurgersModel({-0.4, 1.0}).characteristic_speed(0.0, 0.5) == 0.0);
}

TEST_CASE("Lambda = 0 reduces to classical Burgers exactly") {
  const BurgersModel m({0.0, 1.0});
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double v = d(rng);
    const double r = 3.0 * d(rng);
    REQUIRE(m.conservative_flux(v, r) == v * v / 2.0);
    REQUIRE(m.characteristic_speed(v, r) == v);
    for (auto f : all_forms) REQUIRE(m.source(v, r, f) == 0.0);
  }
}

TEST_CASE("static solution values") {
  CHECK(BurgersModel({0.0, 1.0}).static_solution({0.9, +1}, 0.3) == doctest::Approx(0.3162).epsilon(1e-4));
  // 1 - 0.9 rounds to 0.09999999999999998, one ulp away from 0.1.
  CHECK(BurgersModel({0.0, 1.0}).static_solution({0.9, +1}, 0.3) == doctest::Approx(std::sqrt(0.1)).epsilon(1e-15));
  CHECK(BurgersModel({0.7, 1.0}).static_solution({1.0, +1}, 0.0) == 0.0);
  CHECK(BurgersModel({-1.0, 1.0}).static_solution({0.5, +1}, 0.5) ==
        doctest::Approx(0.612372).epsilon(1e-6));
  CHECK(BurgersModel({-1.0, 1.0}).static_solution({0.5, -1}, 0.5) ==
        -BurgersModel({-1.0, 1.0}).static_solution({0.5, +1}, 0.5));
}

TEST_CASE("static solution rejects bad branches") {
  const BurgersModel m({-1.0, 1.0});
  CHECK_THROWS_AS(m.static_solution({1.0, +1}, 0.5), DomainError);  // radicand 1 - 1.25 < 0
  CHECK_THROWS_AS(m.static_solution({0.0, +1}, 0.5), DomainError);
  CHECK_THROWS_AS(m.static_solution({1.5, +1}, 0.1), DomainError);
  CHECK_THROWS_AS(m.static_solution({0.5, 0}, 0.1), DomainError);
}

TEST_CASE("static solutions stay below light speed") {
  for (double lam : {-1.0, -0.5, 0.5, 1.0}) {
    const BurgersModel m({lam, 1.0});
    for (double k : {0.1, 0.3, 0.5, 0.9, 1.0}) {
      for (int i = 0; i <= 50; ++i) {
        const double r = i / 50.0;
        if (k * m.flux_coefficient(r) < 0.0) continue;
        double v = 0.0;
        try {
          v = m.static_solution({k, +1}, r);
        } catch (const DomainError&) {
          continue;
        }
        REQUIRE(std::abs(v) <= 1.0);
      }
    }
  }
}

TEST_CASE("static reach") {
  CHECK(BurgersModel({-1.0, 1.0}).static_reach({0.5, +1}) == 1.0);
  CHECK(BurgersModel({-1.0, 1.0}).static_reach({0.9, +1}) == doctest::Approx(1.0 / 3.0));
  CHECK(BurgersModel({0.25, 1.0}).static_reach({0.9, +1}) == 2.0);
  CHECK(std::isinf(BurgersModel({0.0, 1.0}).static_reach({0.9, +1})));
}

TEST_CASE("static residual vanishes on every branch") {
  double worst = 0.0;
  for (double lam : {-1.0, -0.5, 0.5, 1.0}) {
    const BurgersModel m({lam, 1.0});
    for (double k : {0.1, 0.3, 0.5, 0.9}) {
      for (int sign : {+1, -1}) {
        const double reach = std::min(0.98, 0.98 * m.static_reach({k, sign}));
        for (int i = 0; i < 50; ++i) {
          const double r = reach * (i + 0.5) / 50.0;
          worst = std::max(worst, std::abs(m.static_residual({k, sign}, r)));
        }
      }
    }
  }
  CHECK(worst <= 1e-12);
  CHECK(std::abs(BurgersModel({-1.0, 1.0}).static_residual({0.5, +1}, 0.5)) <= 1e-12);
  CHECK(std::abs(BurgersModel({1.0, 1.0}).static_residual({0.3, +1}, 0.25)) <= 1e-12);
}

TEST_CASE("static residual is sensitive to the wrong K") {
  const BurgersModel m({-1.0, 1.0});
  const double k = 0.5;
  for (double r : {0.2, 0.5, 0.8}) {
    // Values from K + 1e-3, slope of the K branch.
    const double v_pert = m.static_solution({k + 1e-3, +1}, r);
    const double slope = m.lambda() * r * k / m.static_solution({k, +1}, r);
    CHECK(std::abs(m.balance_residual(v_pert, slope, r)) > 1e-6);
  }
}

TEST_CASE("conservative and nonconservative forms agree on smooth profiles") {
  // d_r(b v^2/2) = b d_r(v^2/2) - Lambda r v^2, checked with central differences
  // on random cubic polynomials.
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> coef(-0.5, 0.5);
  const double h = 1e-5;
  for (double lam : {-1.0, 0.5, 1.0}) {
    const BurgersModel m({lam, 1.0});
    for (int trial = 0; trial < 20; ++trial) {
      const double a0 = coef(rng), a1 = coef(rng), a2 = coef(rng), a3 = coef(rng);
      const auto v = [&](double r) { return a0 + r * (a1 + r * (a2 + r * a3)); };
      for (double r : {0.1, 0.4, 0.7, 0.9}) {
        const auto flux = [&](double rr) { return m.conservative_flux(v(rr), rr); };
        const auto half_sq = [&](double rr) { return v(rr) * v(rr) / 2.0; };
        const double lhs = (flux(r + h) - flux(r - h)) / (2.0 * h);
        const double rhs = m.flux_coefficient(r) * (half_sq(r + h) - half_sq(r - h)) / (2.0 * h) -
                           lam * r * v(r) * v(r);
        REQUIRE(std::abs(lhs - rhs) <= 1e-8);
      }
    }
  }
}

TEST_CASE("no spatially homogeneous solutions when Lambda != 0") {
  for (double lam : {-1.0, 0.5, 1.0}) {
    const BurgersModel m({lam, 1.0});
    for (double v : {0.0, 0.2, 0.5, -0.9}) {
      for (double r : {0.1, 0.5, 0.9}) {
        CHECK(m.source(v, r, SourceForm::conservative) != 0.0);
      }
    }
  }
}

TEST_CASE("classical Riemann oracle") {
  CHECK(classical_riemann_exact(1.0, 0.0, 0.4) == 1.0);
  CHECK(classical_riemann_exact(1.0, 0.0, 0.6) == 0.0);
  CHECK(classical_riemann_exact(0.0, 1.0, 0.5) == 0.5);
  CHECK(classical_riemann_exact(0.0, 1.0, -0.2) == 0.0);
  CHECK(classical_riemann_exact(0.0, 1.0, 1.2) == 1.0);
  for (double xi : {-3.0, 0.0, 0.3, 7.0}) CHECK(classical_riemann_exact(0.4, 0.4, xi) == 0.4);
}

TEST_CASE("model construction validates the domain") {
  CHECK_NOTHROW(BurgersModel({1.0, 1.0}, 0.0, 1.0));
  CHECK_THROWS_AS(BurgersModel({1.0, 1.0}, 0.0, 1.1), DomainError);
  CHECK_THROWS_AS(BurgersModel({0.0, -1.0}), DomainError);
}
