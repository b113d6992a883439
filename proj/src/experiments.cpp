#include "desitter/experiments.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include "desitter/errors.hpp"

namespace desitter {

namespace fs = std::filesystem;

namespace {

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string snap_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snap_%03zu.csv", i);
  return buf;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    throw std::ios_base::failure("cannot create output directory '" + dir.string() + "'");
  }
}

void write_snapshots(const fs::path& dir, const Grid& grid, const RunResult& result) {
  for (std::size_t i = 0; i < result.snapshots.size(); ++i) {
    write_text_file(dir / snap_name(i), snapshot_csv(grid.centers, result.snapshots[i].v));
  }
  std::string summary = "t,max_abs_v,min_v,total_variation\n";
  for (const auto& m : result.metrics) {
    summary += fmt17(m.t) + "," + fmt17(m.max_abs_v) + "," + fmt17(m.min_v) + "," +
               fmt17(m.total_variation) + "\n";
  }
  write_text_file(dir / "summary.csv", summary);
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double min_of(const std::vector<double>& v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

std::string snapshot_csv(const std::vector<double>& r, const std::vector<double>& v) {
  std::string out = "r,v\n";
  out.reserve(r.size() * 48);
  for (std::size_t j = 0; j < r.size(); ++j) {
    out += fmt17(r[j]);
    out += ',';
    out += fmt17(v[j]);
    out += '\n';
  }
  return out;
}

void write_text_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::ios_base::failure("cannot open '" + path.string() + "' for writing");
  out << text;
  if (!out) throw std::ios_base::failure("write failed for '" + path.string() + "'");
}

SnapshotTable read_snapshot_csv(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != "r,v") {
    throw ConfigError("'" + path.string() + "' does not start with the header r,v");
  }
  SnapshotTable t;
  while (std::getline(in, line)) {
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ConfigError("malformed snapshot row: " + line);
    t.r.push_back(std::stod(line.substr(0, comma)));
    t.v.push_back(std::stod(line.substr(comma + 1)));
  }
  return t;
}

nlohmann::ordered_json meta_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["lambda"] = cfg.params.lambda;
  j["c"] = cfg.params.c;
  j["n_cells"] = cfg.n_cells;
  j["r_min"] = cfg.r_min;
  j["r_max"] = cfg.r_max;
  j["cfl"] = cfg.solver.cfl;
  j["mode"] = to_string(cfg.solver.mode);
  j["boundary"] = to_string(cfg.solver.boundary);
  j["init"] = to_string(cfg.init);
  j["t_end"] = cfg.solver.t_end;
  j["snapshot_times"] = cfg.solver.snapshot_times;
  j["tool_version"] = tool_version;
  return j;
}

Grid grid_of(const RunConfig& cfg) { return make_grid(cfg.n_cells, cfg.r_min, cfg.r_max); }

BurgersModel model_of(const RunConfig& cfg) {
  return BurgersModel(cfg.params, cfg.r_min, cfg.r_max);
}

RunResult simulate(const RunConfig& cfg) {
  const Grid grid = grid_of(cfg);
  const BurgersModel model = model_of(cfg);
  LaxFriedrichsSolver solver(grid, model, cfg.solver);
  return solver.run(initial_data(grid, cfg.init, model));
}

RunResult cmd_run(const RunConfig& cfg) {
  const fs::path dir(cfg.out_dir);
  ensure_dir(dir);
  RunResult result = simulate(cfg);
  write_snapshots(dir, grid_of(cfg), result);
  write_text_file(dir / "meta.json", meta_json(cfg).dump(2) + "\n");
  return result;
}

std::string sweep_dir_name(double lambda) { return "lambda_" + format_number(lambda); }

std::string metrics_csv(const std::vector<SweepRow>& rows) {
  std::string out = "t,lambda,l1_distance_to_lambda0,max_v,min_v\n";
  for (const auto& r : rows) {
    out += fmt17(r.t) + "," + fmt17(r.lambda) + "," + fmt17(r.l1_distance_to_lambda0) + "," +
           fmt17(r.max_v) + "," + fmt17(r.min_v) + "\n";
  }
  return out;
}

SweepResult sweep(const RunConfig& base, const std::vector<double>& lambdas, unsigned threads) {
  if (lambdas.empty()) throw ConfigError("sweep needs at least one lambda");

  std::vector<double> all = lambdas;
  const bool has_reference = std::find(all.begin(), all.end(), 0.0) != all.end();
  if (!has_reference) all.push_back(0.0);

  std::vector<RunConfig> configs;
  for (double lam : all) {
    RunConfig c = base;
    c.params.lambda = lam;
    // Validate up front so one bad lambda fails before any work starts.
    try {
      validate_grid(grid_of(c), model_of(c));
      initial_data(grid_of(c), c.init, model_of(c));
    } catch (const DomainError& e) {
      throw ConfigError("lambda = " + format_number(lam) + ": " + e.what());
    }
    configs.push_back(std::move(c));
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<RunResult> runs(configs.size());
  for (std::size_t start = 0; start < configs.size(); start += threads) {
    std::vector<std::future<RunResult>> batch;
    const std::size_t stop = std::min(configs.size(), start + threads);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, [&cfg = configs[i]] { return simulate(cfg); }));
    }
    for (std::size_t i = start; i < stop; ++i) runs[i] = batch[i - start].get();
  }

  const std::size_t ref_index =
      static_cast<std::size_t>(std::find(all.begin(), all.end(), 0.0) - all.begin());
  const RunResult& ref = runs[ref_index];
  const double dr = grid_of(base).dr;

  SweepResult out;
  out.lambdas = lambdas;
  out.runs.assign(runs.begin(), runs.begin() + static_cast<std::ptrdiff_t>(lambdas.size()));
  for (const auto& r : runs) out.max_abs_v_all_steps = std::max(out.max_abs_v_all_steps, r.max_abs_v_all_steps);
  for (std::size_t s = 0; s < ref.snapshots.size(); ++s) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const State& snap = runs[i].snapshots.at(s);
      out.rows.push_back({snap.t, lambdas[i], l1_distance(snap.v, ref.snapshots[s].v, dr),
                          max_of(snap.v), min_of(snap.v)});
    }
  }
  return out;
}

SweepResult cmd_sweep(const RunConfig& base, const std::vector<double>& lambdas, unsigned threads) {
  const fs::path dir(base.out_dir);
  ensure_dir(dir);
  SweepResult result = sweep(base, lambdas, threads);
  const Grid grid = grid_of(base);
  for (std::size_t i = 0; i < result.lambdas.size(); ++i) {
    RunConfig c = base;
    c.params.lambda = result.lambdas[i];
    c.out_dir = (dir / sweep_dir_name(result.lambdas[i])).string();
    ensure_dir(c.out_dir);
    write_snapshots(c.out_dir, grid, result.runs[i]);
    write_text_file(fs::path(c.out_dir) / "meta.json", meta_json(c).dump(2) + "\n");
  }
  write_text_file(dir / "metrics.csv", metrics_csv(result.rows));
  return result;
}

StaticReport static_experiment(const RunConfig& cfg, bool all_modes) {
  const auto* st = std::get_if<init::Static>(&cfg.init);
  if (!st) throw ConfigError("static experiment needs init=static(K,sign)");

  const Grid grid = grid_of(cfg);
  const BurgersModel model = model_of(cfg);

  StaticReport report;
  report.r = grid.centers;
  report.exact = initial_data(grid, cfg.init, model).v;

  std::vector<SourceForm> modes{cfg.solver.mode};
  if (all_modes) {
    modes = {SourceForm::paper_literal, SourceForm::conservative, SourceForm::nonconservative};
  }
  for (SourceForm mode : modes) {
    RunConfig c = cfg;
    c.solver.mode = mode;
    c.solver.boundary = boundary::StaticDirichlet{st->solution};
    StaticModeReport m;
    m.mode = mode;
    try {
      m.result = simulate(c);
    } catch (const InstabilityError& e) {
      throw InstabilityError(to_string(mode) + " mode: " + e.what(), e.step(), e.time());
    }
    for (const State& s : m.result.snapshots) {
      m.drift.push_back({s.t, linf_distance(s.v, report.exact), l1_distance(s.v, report.exact, grid.dr)});
    }
    report.modes.push_back(std::move(m));
  }
  return report;
}

StaticReport cmd_static(const RunConfig& cfg, bool all_modes) {
  StaticReport report = static_experiment(cfg, all_modes);
  const Grid grid = grid_of(cfg);
  const auto& st = std::get<init::Static>(cfg.init);
  for (const auto& m : report.modes) {
    RunConfig c = cfg;
    c.solver.mode = m.mode;
    c.solver.boundary = boundary::StaticDirichlet{st.solution};
    const fs::path dir = all_modes ? fs::path(cfg.out_dir) / to_string(m.mode) : fs::path(cfg.out_dir);
    ensure_dir(dir);
    write_snapshots(dir, grid, m.result);
    write_text_file(dir / "static.csv", snapshot_csv(report.r, report.exact));
    std::string drift = "t,linf_drift,l1_drift\n";
    for (const auto& d : m.drift) drift += fmt17(d.t) + "," + fmt17(d.linf) + "," + fmt17(d.l1) + "\n";
    write_text_file(dir / "drift.csv", drift);
    write_text_file(dir / "meta.json", meta_json(c).dump(2) + "\n");
  }
  return report;
}

}  // namespace desitter
