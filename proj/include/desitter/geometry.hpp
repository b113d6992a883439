#pragma once

#include <array>

namespace desitter {

/// Cosmological constant and light speed. Every formula in the library is
/// parameterized by these two numbers; Lambda = 0 is Minkowski space.
struct SpacetimeParams {
  double lambda = 0.0;
  double c = 1.0;
};

/// 1 - Lambda r^2. Positive strictly inside the cosmological horizon.
inline double horizon_factor(const SpacetimeParams& p, double r) {
  return 1.0 - p.lambda * (r * r);
}

/// Throws DomainError unless c > 0 and 1 - Lambda r^2 > 0.
void require_admissible(const SpacetimeParams& p, double r);

/// Diagonal of the static-coordinate metric and its inverse at (r, theta).
/// Index order is (t, r, theta, phi).
struct MetricDiagonal {
  std::array<double, 4> cov{};
  std::array<double, 4> con{};
};

enum class AngularInverse {
  required,     // con[2], con[3] are computed; r = 0 or sin(theta) = 0 is rejected
  not_required  // con[2], con[3] are left as NaN
};

MetricDiagonal metric_components(const SpacetimeParams& p, double r, double theta,
                                 AngularInverse angular = AngularInverse::required);

/// Gamma^mu_{alpha beta}, indexed gamma[mu][alpha][beta].
struct ChristoffelTable {
  std::array<std::array<std::array<double, 4>, 4>, 4> gamma{};

  double operator()(int mu, int alpha, int beta) const { return gamma[mu][alpha][beta]; }
};

/// Closed-form connection of the de Sitter static metric. Only the 13 entries
/// (counting lower-index duplicates) of the table are written; all others stay 0.0.
ChristoffelTable christoffel_closed(const SpacetimeParams& p, double r, double theta);

/// Connection from the general Levi-Civita formula, with the metric derivatives
/// taken by central differences of metric_components in r and theta.
/// Truncation error is O(h^2).
ChristoffelTable christoffel_numeric(const SpacetimeParams& p, double r, double theta,
                                     double h = 1e-5);

/// True for the (mu, alpha, beta) slots that christoffel_closed may populate.
bool christoffel_slot_nonzero(int mu, int alpha, int beta);

}  // namespace desitter
