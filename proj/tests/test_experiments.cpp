#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "desitter/config.hpp"
#include "desitter/errors.hpp"
#include "desitter/experiments.hpp"
#include "desitter/verify.hpp"
#include "doctest.h"

using namespace desitter;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::path(DESITTER_TEST_TMP) / name;
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int cli(const std::string& args) {
  const std::string cmd = std::string(DESITTER_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

RunConfig small(const std::string& preset, const fs::path& out, std::vector<std::string> extra = {}) {
  extra.push_back("--out_dir=" + out.string());
  return load_config(preset, extra);
}

}  // namespace

TEST_CASE("snapshot CSV format") {
  const std::string csv = snapshot_csv({0.05, 0.15}, {0.1, 1.0 / 3.0});
  CHECK(csv == "r,v\n0.050000000000000003,0.10000000000000001\n"
               "0.14999999999999999,0.33333333333333331\n");
}

TEST_CASE("run writes snapshots and complete metadata") {
  const auto dir = scratch("run");
  const auto cfg = small("fig1", dir, {"--n_cells=50"});
  const auto result = cmd_run(cfg);
  CHECK(result.snapshots.size() == 6);
  for (int i = 0; i < 6; ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "snap_%03d.csv", i);
    CHECK(fs::exists(dir / name));
  }
  const auto meta = nlohmann::json::parse(slurp(dir / "meta.json"));
  for (const char* key : {"lambda", "c", "n_cells", "r_min", "r_max", "cfl", "mode", "boundary",
                          "init", "t_end", "snapshot_times", "tool_version"}) {
    CHECK(meta.contains(key));
  }
  CHECK(meta["lambda"] == 1.0);
  CHECK(meta["init"] == "riemann(0.2,0.6,0.5)");

  // meta.json is enough to reproduce the run.
  KeyValues kv;
  for (const char* key : {"lambda", "c", "r_min", "r_max", "cfl", "t_end"}) {
    kv[key] = format_number(meta[key].get<double>());
  }
  kv["n_cells"] = std::to_string(meta["n_cells"].get<std::size_t>());
  kv["mode"] = meta["mode"];
  kv["boundary"] = meta["boundary"];
  kv["init"] = meta["init"];
  std::string times;
  for (const auto& t : meta["snapshot_times"]) times += format_number(t.get<double>()) + ",";
  kv["snapshot_times"] = times;
  const auto replay = simulate(build_config(kv));
  CHECK(replay.snapshots.back().v == result.snapshots.back().v);
}

TEST_CASE("runs are deterministic to the byte") {
  const auto a = scratch("det_a");
  const auto b = scratch("det_b");
  cmd_run(small("fig4", a, {"--n_cells=80"}));
  cmd_run(small("fig4", b, {"--n_cells=80"}));
  for (const auto& e : fs::directory_iterator(a)) {
    CHECK(slurp(e.path()) == slurp(b / e.path().filename()));
  }
}

TEST_CASE("snapshot at t = 0 equals the initial data") {
  const auto dir = scratch("t0");
  const auto cfg = small("fig2", dir, {"--snapshot_times=0", "--n_cells=40"});
  cmd_run(cfg);
  const auto table = read_snapshot_csv(dir / "snap_000.csv");
  const auto init = initial_data(grid_of(cfg), cfg.init, model_of(cfg));
  CHECK(table.v == init.v);
  CHECK(table.r == grid_of(cfg).centers);
}

TEST_CASE("flat static run stays at sqrt(0.1)") {
  const auto dir = scratch("flat_static");
  const auto result = cmd_run(small("fig7", dir));
  for (const auto& s : result.snapshots)
    for (double v : s.v) CHECK(std::abs(v - 0.31622776601683794) <= 1e-14);
}

TEST_CASE("sweep metrics") {
  SUBCASE("self distance is zero") {
    const auto dir = scratch("sweep0");
    const auto r = cmd_sweep(small("fig1", dir, {"--n_cells=100"}), {0.0}, 1);
    for (const auto& row : r.rows) CHECK(row.l1_distance_to_lambda0 == 0.0);
    CHECK(fs::exists(dir / "metrics.csv"));
    CHECK(fs::exists(dir / "lambda_0" / "meta.json"));
  }
  SUBCASE("rarefaction departs from the flat solution over time") {
    const auto dir = scratch("sweep1");
    const auto r = cmd_sweep(small("fig1", dir), {0.0, 1.0}, 2);
    std::vector<double> d;
    for (const auto& row : r.rows)
      if (row.lambda == 1.0) d.push_back(row.l1_distance_to_lambda0);
    REQUIRE(d.size() == 6);
    for (std::size_t i = 1; i < d.size(); ++i) CHECK(d[i] > d[i - 1]);
    const std::string csv = slurp(dir / "metrics.csv");
    CHECK(csv.rfind("t,lambda,l1_distance_to_lambda0,max_v,min_v\n", 0) == 0);
  }
  SUBCASE("larger |Lambda| departs faster") {
    const auto r = sweep(small("fig2", scratch("sweep2")), {0.0, 0.5, 1.0}, 3);
    const auto& last = r.rows;
    const double d05 = last[last.size() - 2].l1_distance_to_lambda0;
    const double d1 = last[last.size() - 1].l1_distance_to_lambda0;
    CHECK(d1 >= d05);
  }
  SUBCASE("reference run is added when Lambda = 0 is not requested") {
    const auto r = sweep(small("fig3", scratch("sweep3"), {"--n_cells=60"}), {-1.0}, 1);
    CHECK(r.runs.size() == 1);
    CHECK(r.rows.back().l1_distance_to_lambda0 > 0.0);
  }
}

TEST_CASE("static experiment reports drift") {
  SUBCASE("flat case is exact") {
    const auto rep = cmd_static(small("fig7", scratch("static7")), false);
    for (const auto& d : rep.modes[0].drift) CHECK(d.linf <= 1e-13);
  }
  SUBCASE("all modes write one directory each") {
    const auto dir = scratch("static6");
    const auto rep = cmd_static(small("fig5", dir, {"--n_cells=100"}), true);
    CHECK(rep.modes.size() == 3);
    for (const char* m : {"paper_literal", "conservative", "nonconservative"}) {
      CHECK(fs::exists(dir / m / "drift.csv"));
      CHECK(fs::exists(dir / m / "static.csv"));
      CHECK(fs::exists(dir / m / "snap_005.csv"));
    }
  }
  SUBCASE("an unstable mode is named in the error") {
    // The literal source does not balance the static branch for Lambda > 0.
    try {
      static_experiment(small("fig6", scratch("static_unstable")), true);
      FAIL("expected an instability");
    } catch (const InstabilityError& e) {
      CHECK(std::string(e.what()).rfind("paper_literal mode:", 0) == 0);
    }
  }
  SUBCASE("needs static initial data") {
    CHECK_THROWS_AS(static_experiment(small("fig1", scratch("static_bad")), false), ConfigError);
  }
}

TEST_CASE("verification suite") {
  const auto checks = run_verification();
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.passed);
  }
  const auto faulty = run_verification({1e-3});
  CHECK_FALSE(all_passed(faulty));
  const auto j = report_json(checks);
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == checks.size());
}

TEST_CASE("command-line exit codes") {
  const auto dir = scratch("cli");
  CHECK(cli("verify") == 0);
  CHECK(cli("verify --json") == 0);
  CHECK(cli("verify --inject-fault=christoffel") == 1);
  CHECK(cli("run fig1 --n_cells=40 --out_dir=" + (dir / "run").string()) == 0);
  CHECK(fs::exists(dir / "run" / "snap_005.csv"));
  CHECK(cli("run fig1 --bogus=1") == 2);
  CHECK(cli("run does_not_exist.cfg") == 2);
  CHECK(cli("sweep fig1 --lambdas=0,1 --n_cells=40 --out_dir=" + (dir / "sweep").string()) == 0);
  CHECK(fs::exists(dir / "sweep" / "lambda_1" / "snap_000.csv"));
  CHECK(cli("static fig5 --all-modes --n_cells=40 --out_dir=" + (dir / "static").string()) == 0);
  CHECK(fs::exists(dir / "static" / "conservative" / "drift.csv"));
  CHECK(cli("run fig1 '--boundary=fixed(5,0)' --out_dir=" + (dir / "boom").string()) == 3);
  CHECK(cli("") == 2);

  // Config file plus overrides.
  const auto cfg_path = dir / "exp.cfg";
  std::ofstream(cfg_path) << "lambda=0.5\nn_cells=30\nt_end=0.1\ninit=constant(0.2)\nout_dir="
                          << (dir / "from_file").string() << "\n";
  CHECK(cli("run " + cfg_path.string() + " --lambda=-0.5") == 0);
  const auto meta = nlohmann::json::parse(slurp(dir / "from_file" / "meta.json"));
  CHECK(meta["lambda"] == -0.5);
}
