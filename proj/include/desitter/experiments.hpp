#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "desitter/config.hpp"
#include "desitter/fvsolver.hpp"
#include "json.hpp"

namespace desitter {

inline constexpr const char* tool_version = "1.0.0";

/// Snapshot CSV: header `r,v`, one row per cell in ascending r, 17 significant
/// digits, LF line endings.
std::string snapshot_csv(const std::vector<double>& r, const std::vector<double>& v);
void write_text_file(const std::filesystem::path& path, const std::string& text);

struct SnapshotTable {
  std::vector<double> r;
  std::vector<double> v;
};
SnapshotTable read_snapshot_csv(const std::filesystem::path& path);

/// meta.json contents: every effective parameter of the run.
nlohmann::ordered_json meta_json(const RunConfig& cfg);

Grid grid_of(const RunConfig& cfg);
BurgersModel model_of(const RunConfig& cfg);

/// Runs the simulation in memory only.
RunResult simulate(const RunConfig& cfg);

/// Runs and writes snap_000.csv, snap_001.csv, ..., summary.csv and meta.json
/// into cfg.out_dir.
RunResult cmd_run(const RunConfig& cfg);

struct SweepRow {
  double t = 0.0;
  double lambda = 0.0;
  double l1_distance_to_lambda0 = 0.0;
  double max_v = 0.0;
  double min_v = 0.0;
};

struct SweepResult {
  std::vector<double> lambdas;
  std::vector<RunResult> runs;  // parallel to lambdas
  std::vector<SweepRow> rows;   // snapshot-major, lambdas in input order
  double max_abs_v_all_steps = 0.0;
};

/// Same initial data for each Lambda; one output directory per value
/// (`lambda_<value>/`) plus metrics.csv. The Lambda = 0 reference is run even
/// when it is not in the list. Runs execute concurrently on `threads`
/// workers (0 = hardware concurrency).
SweepResult sweep(const RunConfig& base, const std::vector<double>& lambdas,
                  unsigned threads = 0);
SweepResult cmd_sweep(const RunConfig& base, const std::vector<double>& lambdas,
                      unsigned threads = 0);
std::string metrics_csv(const std::vector<SweepRow>& rows);
std::string sweep_dir_name(double lambda);

struct DriftRow {
  double t = 0.0;
  double linf = 0.0;
  double l1 = 0.0;
};

struct StaticModeReport {
  SourceForm mode = SourceForm::conservative;
  std::vector<DriftRow> drift;
  RunResult result;
};

struct StaticReport {
  std::vector<double> r;
  std::vector<double> exact;
  std::vector<StaticModeReport> modes;
};

/// Static-preservation experiment: init = static(K, sign) from cfg.init,
/// static_dirichlet boundaries with the same branch.
StaticReport static_experiment(const RunConfig& cfg, bool all_modes);

/// As static_experiment, writing static.csv, drift.csv, snapshots and meta.json
/// (into out_dir, or out_dir/<mode>/ when all_modes is set).
StaticReport cmd_static(const RunConfig& cfg, bool all_modes);

}  // namespace desitter
