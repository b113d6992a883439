// Command-line front end: verify, run, sweep, static.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "desitter/config.hpp"
#include "desitter/errors.hpp"
#include "desitter/experiments.hpp"
#include "desitter/verify.hpp"

namespace {

enum ExitCode : int { ok = 0, check_failed = 1, config_error = 2, unstable = 3 };

void print_run_summary(const desitter::RunResult& r) {
  std::printf("%zu steps, %zu snapshots, max|v| over run = %.17g, wall %.3f s\n", r.steps,
              r.snapshots.size(), r.max_abs_v_all_steps, r.wall_seconds);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relativistic Burgers equation on de Sitter: Lax-Friedrichs finite volumes"};
  app.require_subcommand(1);
  app.set_version_flag("--version", desitter::tool_version);

  auto* verify = app.add_subcommand("verify", "Run the geometry/fluid/model invariant suite");
  bool as_json = false;
  std::string fault;
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--inject-fault", fault, "Perturb a component to exercise failure reporting")
      ->check(CLI::IsMember({"christoffel"}))
      ->group("");

  std::string config_source;
  auto* run = app.add_subcommand("run", "Run one simulation from a config file or preset");
  run->add_option("config", config_source, "Config file path or preset name (fig1..fig7)")->required();
  run->allow_extras();

  auto* sweep = app.add_subcommand("sweep", "Run the same setup for several values of lambda");
  std::string lambdas_text;
  unsigned threads = 0;
  sweep->add_option("config", config_source, "Config file path or preset name")->required();
  sweep->add_option("--lambdas", lambdas_text, "Comma-separated cosmological constants")->required();
  sweep->add_option("--threads", threads, "Concurrent runs (0 = hardware concurrency)");
  sweep->allow_extras();

  auto* stat = app.add_subcommand("static", "Static-solution preservation experiment");
  bool all_modes = false;
  stat->add_option("config", config_source, "Config file path or preset name")->required();
  stat->add_flag("--all-modes", all_modes, "Run paper_literal, conservative and nonconservative");
  stat->allow_extras();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : config_error;
  }

  try {
    if (*verify) {
      desitter::VerifyOptions opts;
      if (fault == "christoffel") opts.christoffel_fault = 1e-3;
      const auto checks = desitter::run_verification(opts);
      if (as_json) {
        std::cout << desitter::report_json(checks).dump(2) << "\n";
      } else {
        std::cout << desitter::format_report(checks);
      }
      return desitter::all_passed(checks) ? ok : check_failed;
    }

    CLI::App* active = *run ? run : (*sweep ? sweep : stat);
    const auto cfg = desitter::load_config(config_source, active->remaining());

    if (*run) {
      const auto result = desitter::cmd_run(cfg);
      print_run_summary(result);
    } else if (*sweep) {
      const auto lambdas = desitter::parse_number_list(lambdas_text);
      const auto result = desitter::cmd_sweep(cfg, lambdas, threads);
      std::cout << desitter::metrics_csv(result.rows);
    } else {
      const auto report = desitter::cmd_static(cfg, all_modes);
      for (const auto& m : report.modes) {
        std::printf("mode %s\n", desitter::to_string(m.mode).c_str());
        for (const auto& d : m.drift) {
          std::printf("  t = %-8.4g  linf drift = %.6e  l1 drift = %.6e\n", d.t, d.linf, d.l1);
        }
      }
    }
    return ok;
  } catch (const desitter::InstabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return unstable;
  } catch (const desitter::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const desitter::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const desitter::ArgumentError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return config_error;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return config_error;
  }
}
