#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <variant>
#include <vector>

#include "desitter/kernels.hpp"
#include "desitter/model.hpp"

namespace desitter {

/// Uniform cell-centred radial mesh, r_j = r_min + (j + 1/2) dr.
struct Grid {
  std::size_t n_cells = 0;
  double r_min = 0.0;
  double r_max = 1.0;
  double dr = 0.0;
  std::vector<double> centers;

  double ghost_left() const { return r_min - 0.5 * dr; }
  double ghost_right() const { return r_max + 0.5 * dr; }
};

/// Throws ArgumentError for n_cells < 3 or r_max <= r_min.
Grid make_grid(std::size_t n_cells, double r_min, double r_max);

/// Cell centres strictly inside the horizon, faces not beyond it.
void validate_grid(const Grid& grid, const BurgersModel& model);

struct State {
  double t = 0.0;
  std::vector<double> v;
};

namespace boundary {
struct Transmissive {};
struct StaticDirichlet {
  StaticSolution solution;
};
struct Fixed {
  double v_left = 0.0;
  double v_right = 0.0;
};
}  // namespace boundary

using BoundarySpec =
    std::variant<boundary::Transmissive, boundary::StaticDirichlet, boundary::Fixed>;

namespace init {
struct Riemann {
  double v_left = 0.0;
  double v_right = 0.0;
  double r_split = 0.5;
};
struct Static {
  StaticSolution solution;
};
struct Constant {
  double v0 = 0.0;
};
}  // namespace init

using InitialSpec = std::variant<init::Riemann, init::Static, init::Constant>;

struct SolverConfig {
  SourceForm mode = SourceForm::conservative;
  double cfl = 0.5;
  BoundarySpec boundary = boundary::Transmissive{};
  double t_end = 0.0;
  /// Sorted output times in [0, t_end]. Empty means {t_end}.
  std::vector<double> snapshot_times;
  /// Kernel override; the process-wide dispatch choice when empty.
  std::optional<kernels::Backend> backend;
};

/// Throws ArgumentError on cfl outside (0, 1], negative t_end, or unsorted /
/// out-of-range snapshot times.
void validate_config(const SolverConfig& config);

/// Divides cfl * dr by max|b_j v_j| (floored at 1e-8) and clips the result so
/// that t + dt never passes t_next.
double cfl_dt(const State& state, const Grid& grid, const BurgersModel& model, double cfl,
              double t_next = std::numeric_limits<double>::infinity());

State initial_data(const Grid& grid, const InitialSpec& spec, const BurgersModel& model);

struct GhostPair {
  double left = 0.0;
  double right = 0.0;
};

GhostPair apply_boundary(const State& state, const Grid& grid, const SolverConfig& config,
                         const BurgersModel& model);

struct SnapshotMetrics {
  double t = 0.0;
  double max_abs_v = 0.0;
  double min_v = 0.0;
  double total_variation = 0.0;
};

SnapshotMetrics snapshot_metrics(const State& s);

struct RunResult {
  std::vector<State> snapshots;
  std::vector<SnapshotMetrics> metrics;
  /// max_j |v_j| over every time level visited, not just snapshots.
  double max_abs_v_all_steps = 0.0;
  std::size_t steps = 0;
  double wall_seconds = 0.0;
};

/// Explicit Lax-Friedrichs stepping for the relativistic Burgers model.
/// Holds the time-independent per-cell coefficients and scratch buffers so a
/// run does not allocate per step. One instance per run; not thread-safe.
class LaxFriedrichsSolver {
 public:
  LaxFriedrichsSolver(Grid grid, BurgersModel model, SolverConfig config);

  const Grid& grid() const noexcept { return grid_; }
  const BurgersModel& model() const noexcept { return model_; }
  const SolverConfig& config() const noexcept { return config_; }
  kernels::Backend backend() const noexcept { return kernels_.backend; }

  double stable_dt(const State& s, double t_next) const;

  /// One step of size dt. Throws InstabilityError tagged with step_index if
  /// any value is non-finite or exceeds c by more than 0.1.
  State step(const State& s, double dt, std::size_t step_index = 0);

  RunResult run(const State& init);

 private:
  Grid grid_;
  BurgersModel model_;
  SolverConfig config_;
  kernels::KernelTable kernels_;
  std::vector<double> b_ext_;
  std::vector<double> b_interior_;
  std::vector<double> lambda_r_;
  std::vector<double> v_ext_;
  std::optional<GhostPair> static_ghosts_;
};

State lf_step(const State& state, const Grid& grid, const BurgersModel& model,
              const SolverConfig& config, double dt);

RunResult run(const Grid& grid, const BurgersModel& model, const SolverConfig& config,
              const State& init);

/// sum_j |a_j - b_j| dr
double l1_distance(const std::vector<double>& a, const std::vector<double>& b, double dr);
double linf_distance(const std::vector<double>& a, const std::vector<double>& b);

}  // namespace desitter
