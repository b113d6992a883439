#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "desitter/fvsolver.hpp"
#include "desitter/geometry.hpp"

namespace desitter {

/// Everything needed to reproduce one simulation: model, grid, scheme,
/// initial data and the output directory.
///
/// Text form is flat `key=value` lines; `#` starts a comment. Recognised keys:
///
///   lambda, c, n_cells, r_min, r_max, cfl, t_end
///   mode            conservative | nonconservative | paper_literal
///   boundary        transmissive | static_dirichlet(K,sign) | fixed(vL,vR)
///   init            riemann(vL,vR,r_split) | static(K,sign) | constant(v0)
///   snapshot_times  comma-separated, ascending
///   out_dir         output directory
///   kernel          auto | scalar | avx2 (does not change results)
struct RunConfig {
  SpacetimeParams params{0.0, 1.0};
  std::size_t n_cells = 400;
  double r_min = 0.0;
  double r_max = 1.0;
  SolverConfig solver{};
  InitialSpec init = init::Constant{0.0};
  std::string out_dir = "out";
};

using KeyValues = std::map<std::string, std::string>;

/// Parses `key=value` lines. Duplicate keys keep the last value.
KeyValues parse_key_values(const std::string& text);

/// Applies `--key=value` (or `key=value`) override arguments on top of kv.
void apply_overrides(KeyValues& kv, const std::vector<std::string>& overrides);

/// Validates every key before building; throws ConfigError on any problem.
RunConfig build_config(const KeyValues& kv);

/// Built-in experiment setups fig1..fig7.
std::optional<std::string> preset_text(const std::string& name);
std::vector<std::string> preset_names();

/// Reads a preset name or a config file path, applies overrides, validates.
RunConfig load_config(const std::string& source, const std::vector<std::string>& overrides);

/// Canonical text forms used in meta.json and for round-tripping.
std::string format_number(double x);
std::string to_string(SourceForm mode);
std::string to_string(const BoundarySpec& b);
std::string to_string(const InitialSpec& i);
std::string to_config_text(const RunConfig& cfg);

SourceForm parse_mode(const std::string& s);
BoundarySpec parse_boundary(const std::string& s);
InitialSpec parse_init(const std::string& s);
std::vector<double> parse_number_list(const std::string& s);

}  // namespace desitter
