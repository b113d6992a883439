#include <cstring>
#include <random>
#include <vector>

#include "desitter/fvsolver.hpp"
#include "desitter/kernels.hpp"
#include "doctest.h"

using namespace desitter;

namespace {

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

}  // namespace

TEST_CASE("scalar backend is always available") {
  CHECK(kernels::backend_available(kernels::Backend::scalar));
  CHECK(kernels::available_backends().front() == kernels::Backend::scalar);
  CHECK(kernels::kernels_for(kernels::Backend::scalar).backend == kernels::Backend::scalar);
  MESSAGE("active kernel backend: " << kernels::backend_name(kernels::active().backend));
}

TEST_CASE("every backend matches the scalar reference bit for bit") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> vel(-1.0, 1.0);
  std::uniform_real_distribution<double> coef(-0.5, 1.5);
  const auto reference = kernels::kernels_for(kernels::Backend::scalar);

  for (auto backend : kernels::available_backends()) {
    const auto table = kernels::kernels_for(backend);
    for (std::size_t n : {1u, 3u, 4u, 5u, 7u, 8u, 13u, 64u, 401u}) {
      std::vector<double> v(n + 2), b(n + 2), lr(n);
      for (auto& x : v) x = vel(rng);
      for (auto& x : b) x = coef(rng);
      for (auto& x : lr) x = vel(rng);
      for (auto form : {SourceForm::conservative, SourceForm::nonconservative, SourceForm::paper_literal}) {
        const kernels::LfStencil s{v, b, lr, 1.0, 0.0017, 0.0025, form};
        std::vector<double> out_ref(n), out(n);
        reference.lf_update(s, out_ref);
        table.lf_update(s, out);
        REQUIRE(bitwise_equal(out_ref, out));
      }
      std::vector<double> vi(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
      std::vector<double> bi(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(n));
      REQUIRE(table.max_char_speed(vi, bi) == reference.max_char_speed(vi, bi));
    }
  }
}

TEST_CASE("full runs are bitwise identical across backends") {
  const BurgersModel model({1.0, 1.0});
  const Grid g = make_grid(397, 0.0, 1.0);
  const auto init = initial_data(g, init::Riemann{0.2, 0.6, 0.5}, model);
  SolverConfig cfg;
  cfg.t_end = 0.5;
  cfg.snapshot_times = {0.1, 0.3, 0.5};

  cfg.backend = kernels::Backend::scalar;
  const auto ref = run(g, model, cfg, init);
  for (auto backend : kernels::available_backends()) {
    cfg.backend = backend;
    const auto r = run(g, model, cfg, init);
    REQUIRE(r.steps == ref.steps);
    for (std::size_t s = 0; s < ref.snapshots.size(); ++s) {
      CHECK(bitwise_equal(r.snapshots[s].v, ref.snapshots[s].v));
    }
  }
}
