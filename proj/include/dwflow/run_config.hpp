#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dwflow/diagnostics.hpp"
#include "dwflow/flux.hpp"
#include "dwflow/problems.hpp"

namespace dwflow {

struct RunConfig {
  Problem problem = Problem::config2;
  FluxFamily family = FluxFamily::ldcu;
  int order = 1;
  int n = 256;  // cells per direction
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::vector<double> snapshots;
  std::filesystem::path out_dir = "out";
  std::vector<Rect> subdomains;  // empty: the problem's defaults
  int samples = 11;              // uniform functional sample times in [0, T] for family runs

  double resolved_cfl() const;
  double resolved_t_final() const;
  // Explicit subdomains, or the problem's defaults that hold at least one
  // cell center at this resolution (coarse meshes can miss a 0.01 box).
  std::vector<Rect> resolved_subdomains() const;
};

/// Density-histogram subdomains used when none are configured.
std::vector<Rect> default_subdomains(Problem p);

/// Throws ConfigError describing the first violated constraint.
void validate(const RunConfig& cfg);

/// Sets one key (problem, flux, order, n, cfl, tfinal, snapshots, out,
/// subdomain, samples). "subdomain" appends; "snapshots" takes a comma list.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Reads key=value lines ('#' comments) on top of `base`.
RunConfig load_config_file(const std::filesystem::path& path, RunConfig base = {});

/// "x0,x1,y0,y1".
Rect parse_rect(std::string_view text);
std::vector<double> parse_list(std::string_view text);

}  // namespace dwflow
