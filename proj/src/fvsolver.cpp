#include "desitter/fvsolver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <string>

#include "desitter/errors.hpp"

namespace desitter {

namespace {

constexpr double speed_floor = 1e-8;
constexpr double runaway_margin = 0.1;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

// Static branch at the ghost centre. When the branch terminates inside the
// ghost cell (radicand < 0 at the centre, >= 0 at the domain face) the face
// value, the endpoint of the branch, is used instead.
double static_ghost(const BurgersModel& model, const StaticSolution& sol, double r_ghost,
                    double r_face) {
  const double c2 = model.c() * model.c();
  if (c2 - sol.k * model.flux_coefficient(r_ghost) >= 0.0) {
    return model.static_solution(sol, r_ghost);
  }
  if (c2 - sol.k * model.flux_coefficient(r_face) >= 0.0) {
    return model.static_solution(sol, r_face);
  }
  throw DomainError("static boundary branch is imaginary at the domain face");
}

}  // namespace

Grid make_grid(std::size_t n_cells, double r_min, double r_max) {
  if (n_cells < 3) {
    throw ArgumentError("grid needs at least 3 cells for the 3-point stencil");
  }
  if (!(r_max > r_min) || !std::isfinite(r_min) || !std::isfinite(r_max)) {
    throw ArgumentError("grid requires finite r_min < r_max");
  }
  Grid g;
  g.n_cells = n_cells;
  g.r_min = r_min;
  g.r_max = r_max;
  g.dr = (r_max - r_min) / static_cast<double>(n_cells);
  g.centers.resize(n_cells);
  for (std::size_t j = 0; j < n_cells; ++j) {
    g.centers[j] = r_min + (static_cast<double>(j) + 0.5) * g.dr;
  }
  return g;
}

void validate_grid(const Grid& grid, const BurgersModel& model) {
  for (double r : {grid.r_min, grid.r_max}) {
    if (model.flux_coefficient(r) < 0.0) {
      throw DomainError("grid face lies beyond the cosmological horizon");
    }
  }
  for (double r : grid.centers) {
    if (!(model.flux_coefficient(r) > 0.0)) {
      throw DomainError("grid cell centre is not strictly inside the horizon");
    }
  }
}

void validate_config(const SolverConfig& config) {
  if (!(config.cfl > 0.0 && config.cfl <= 1.0)) {
    throw ArgumentError("cfl must lie in (0, 1]");
  }
  if (!(config.t_end >= 0.0) || !std::isfinite(config.t_end)) {
    throw ArgumentError("t_end must be finite and non-negative");
  }
  const auto& ts = config.snapshot_times;
  if (!std::is_sorted(ts.begin(), ts.end())) {
    throw ArgumentError("snapshot_times must be sorted");
  }
  for (double t : ts) {
    if (!(t >= 0.0 && t <= config.t_end)) {
      throw ArgumentError("snapshot time outside [0, t_end]");
    }
  }
}

double cfl_dt(const State& state, const Grid& grid, const BurgersModel& model, double cfl,
              double t_next) {
  double speed = 0.0;
  for (std::size_t j = 0; j < state.v.size(); ++j) {
    speed = std::max(speed, std::abs(model.characteristic_speed(state.v[j], grid.centers[j])));
  }
  const double dt = cfl * grid.dr / std::max(speed, speed_floor);
  return std::min(dt, t_next - state.t);
}

State initial_data(const Grid& grid, const InitialSpec& spec, const BurgersModel& model) {
  State s;
  s.t = 0.0;
  s.v.resize(grid.n_cells);
  std::visit(overloaded{
                 [&](const init::Riemann& r) {
                   for (std::size_t j = 0; j < grid.n_cells; ++j) {
                     s.v[j] = grid.centers[j] < r.r_split ? r.v_left : r.v_right;
                   }
                 },
                 [&](const init::Static& st) {
                   for (std::size_t j = 0; j < grid.n_cells; ++j) {
                     s.v[j] = model.static_solution(st.solution, grid.centers[j]);
                   }
                 },
                 [&](const init::Constant& k) { std::fill(s.v.begin(), s.v.end(), k.v0); },
             },
             spec);
  for (double v : s.v) {
    if (!std::isfinite(v) || std::abs(v) > model.c()) {
      throw DomainError("initial data violates |v| <= c");
    }
  }
  return s;
}

GhostPair apply_boundary(const State& state, const Grid& grid, const SolverConfig& config,
                         const BurgersModel& model) {
  return std::visit(
      overloaded{
          [&](const boundary::Transmissive&) {
            return GhostPair{state.v.front(), state.v.back()};
          },
          [&](const boundary::StaticDirichlet& b) {
            return GhostPair{static_ghost(model, b.solution, grid.ghost_left(), grid.r_min),
                             static_ghost(model, b.solution, grid.ghost_right(), grid.r_max)};
          },
          [&](const boundary::Fixed& b) { return GhostPair{b.v_left, b.v_right}; },
      },
      config.boundary);
}

SnapshotMetrics snapshot_metrics(const State& s) {
  SnapshotMetrics m;
  m.t = s.t;
  if (s.v.empty()) return m;
  m.min_v = s.v.front();
  for (std::size_t j = 0; j < s.v.size(); ++j) {
    m.max_abs_v = std::max(m.max_abs_v, std::abs(s.v[j]));
    m.min_v = std::min(m.min_v, s.v[j]);
    if (j > 0) m.total_variation += std::abs(s.v[j] - s.v[j - 1]);
  }
  return m;
}

LaxFriedrichsSolver::LaxFriedrichsSolver(Grid grid, BurgersModel model, SolverConfig config)
    : grid_(std::move(grid)),
      model_(std::move(model)),
      config_(std::move(config)),
      kernels_(config_.backend ? kernels::kernels_for(*config_.backend) : kernels::active()) {
  validate_config(config_);
  validate_grid(grid_, model_);

  const std::size_t n = grid_.n_cells;
  b_ext_.resize(n + 2);
  b_interior_.resize(n);
  lambda_r_.resize(n);
  v_ext_.resize(n + 2);
  b_ext_[0] = model_.flux_coefficient(grid_.ghost_left());
  b_ext_[n + 1] = model_.flux_coefficient(grid_.ghost_right());
  for (std::size_t j = 0; j < n; ++j) {
    b_interior_[j] = model_.flux_coefficient(grid_.centers[j]);
    b_ext_[j + 1] = b_interior_[j];
    lambda_r_[j] = model_.lambda() * grid_.centers[j];
  }
  if (std::holds_alternative<boundary::StaticDirichlet>(config_.boundary)) {
    static_ghosts_ = apply_boundary(State{0.0, std::vector<double>(n, 0.0)}, grid_, config_, model_);
  }
}

double LaxFriedrichsSolver::stable_dt(const State& s, double t_next) const {
  const double speed = kernels_.max_char_speed(s.v, b_interior_);
  const double dt = config_.cfl * grid_.dr / std::max(speed, speed_floor);
  return std::min(dt, t_next - s.t);
}

State LaxFriedrichsSolver::step(const State& s, double dt, std::size_t step_index) {
  const std::size_t n = grid_.n_cells;
  if (s.v.size() != n) {
    throw ArgumentError("state size does not match the grid");
  }
  const GhostPair ghosts =
      static_ghosts_ ? *static_ghosts_ : apply_boundary(s, grid_, config_, model_);
  v_ext_[0] = ghosts.left;
  std::copy(s.v.begin(), s.v.end(), v_ext_.begin() + 1);
  v_ext_[n + 1] = ghosts.right;

  State next;
  next.t = s.t + dt;
  next.v.resize(n);
  const kernels::LfStencil stencil{v_ext_, b_ext_, lambda_r_, model_.c() * model_.c(), dt,
                                   grid_.dr, config_.mode};
  kernels_.lf_update(stencil, next.v);

  const double limit = model_.c() + runaway_margin;
  for (std::size_t j = 0; j < n; ++j) {
    const double v = next.v[j];
    if (!std::isfinite(v) || std::abs(v) > limit) {
      std::ostringstream msg;
      msg << "instability at step " << step_index << " (t = " << next.t << "): cell " << j
          << " at r = " << grid_.centers[j] << " has v = " << v;
      throw InstabilityError(msg.str(), step_index, next.t);
    }
  }
  return next;
}

RunResult LaxFriedrichsSolver::run(const State& init) {
  const auto wall_start = std::chrono::steady_clock::now();
  if (init.v.size() != grid_.n_cells) {
    throw ArgumentError("initial state size does not match the grid");
  }

  std::vector<double> outputs = config_.snapshot_times;
  if (outputs.empty()) outputs.push_back(config_.t_end);
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());

  RunResult result;
  const auto emit = [&](const State& s) {
    result.snapshots.push_back(s);
    result.metrics.push_back(snapshot_metrics(s));
  };
  const auto track = [&](const State& s) {
    for (double v : s.v) result.max_abs_v_all_steps = std::max(result.max_abs_v_all_steps, std::abs(v));
  };

  State current = init;
  track(current);
  std::size_t next_out = 0;
  while (next_out < outputs.size() && outputs[next_out] <= current.t) {
    emit(current);
    ++next_out;
  }

  while (current.t < config_.t_end) {
    const double t_next = next_out < outputs.size() ? outputs[next_out] : config_.t_end;
    const double dt = stable_dt(current, t_next);
    const bool lands = current.t + dt >= t_next;
    current = step(current, dt, result.steps);
    ++result.steps;
    if (lands) current.t = t_next;
    track(current);
    while (next_out < outputs.size() && outputs[next_out] <= current.t) {
      emit(current);
      ++next_out;
    }
  }

  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - wall_start).count();
  return result;
}

State lf_step(const State& state, const Grid& grid, const BurgersModel& model,
              const SolverConfig& config, double dt) {
  LaxFriedrichsSolver solver(grid, model, config);
  return solver.step(state, dt);
}

RunResult run(const Grid& grid, const BurgersModel& model, const SolverConfig& config,
              const State& init) {
  LaxFriedrichsSolver solver(grid, model, config);
  return solver.run(init);
}

double l1_distance(const std::vector<double>& a, const std::vector<double>& b, double dr) {
  if (a.size() != b.size()) throw ArgumentError("l1_distance: size mismatch");
  double sum = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) sum += std::abs(a[j] - b[j]);
  return sum * dr;
}

double linf_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ArgumentError("linf_distance: size mismatch");
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace desitter
