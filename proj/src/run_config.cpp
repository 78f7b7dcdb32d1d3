#include "dwflow/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <string>

#include "dwflow/errors.hpp"
#include "dwflow/grid.hpp"
#include "dwflow/timestep.hpp"

namespace dwflow {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view text, std::string_view key) {
  const std::string s(trim(text));
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw ConfigError("'" + s + "' is not a number for " + std::string(key));
  }
  return v;
}

int to_int(std::string_view text, std::string_view key) {
  const double v = to_double(text, key);
  if (v != static_cast<int>(v)) throw ConfigError(std::string(key) + " must be an integer");
  return static_cast<int>(v);
}

}  // namespace

std::vector<Rect> default_subdomains(Problem p) {
  switch (p) {
    case Problem::config3: return {{0.42, 0.43, 0.63, 0.64}, {0.60, 0.61, 0.37, 0.38}};
    case Problem::kh: return {{0.50, 0.51, 0.25, 0.26}, {0.15, 0.16, 0.75, 0.76}};
    default: return {};
  }
}

double RunConfig::resolved_cfl() const { return cfl ? *cfl : default_cfl(family); }
double RunConfig::resolved_t_final() const { return t_final ? *t_final : problem_final_time(problem); }
std::vector<Rect> RunConfig::resolved_subdomains() const {
  if (!subdomains.empty()) return subdomains;
  const Grid g = Grid::unit_square(n, n, 0);
  std::vector<Rect> out;
  for (const Rect& r : default_subdomains(problem))
    if (holds_cell_center(g, r)) out.push_back(r);
  return out;
}

void validate(const RunConfig& cfg) {
  if (cfg.n < 16) throw ConfigError("resolution must be at least 16");
  halo_width(cfg.order);
  const double c = cfg.resolved_cfl();
  if (!(c > 0.0 && c <= 1.0)) throw ConfigError("CFL number must lie in (0, 1]");
  const double T = cfg.resolved_t_final();
  if (!(T > 0.0)) throw ConfigError("final time must be positive");
  for (double s : cfg.snapshots)
    if (!(s >= 0.0 && s <= T)) throw ConfigError("snapshot time " + std::to_string(s) + " lies outside [0, T]");
  if (cfg.samples < 2) throw ConfigError("at least two functional samples are needed");
  for (const Rect& r : cfg.subdomains)
  {
    if (!(r.x1 >= r.x0 && r.y1 >= r.y0)) throw ConfigError("subdomain rectangle is reversed");
    if (!holds_cell_center(Grid::unit_square(cfg.n, cfg.n, 0), r))
      throw ConfigError("subdomain holds no cell center at n=" + std::to_string(cfg.n));
  }
  if (cfg.out_dir.empty()) throw ConfigError("output directory is empty");
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto piece = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    out.push_back(to_double(piece, "list"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Rect parse_rect(std::string_view text) {
  const std::vector<double> v = parse_list(text);
  if (v.size() != 4) throw ConfigError("subdomain needs four numbers x0,x1,y0,y1");
  return {v[0], v[1], v[2], v[3]};
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "problem") {
    cfg.problem = parse_problem(value);
  } else if (key == "flux" || key == "family") {
    cfg.family = parse_flux_family(value);
  } else if (key == "order") {
    cfg.order = to_int(value, key);
  } else if (key == "n") {
    cfg.n = to_int(value, key);
  } else if (key == "cfl") {
    cfg.cfl = to_double(value, key);
  } else if (key == "tfinal") {
    cfg.t_final = to_double(value, key);
  } else if (key == "snapshots") {
    cfg.snapshots = parse_list(value);
    std::sort(cfg.snapshots.begin(), cfg.snapshots.end());
  } else if (key == "out") {
    cfg.out_dir = std::string(value);
  } else if (key == "subdomain") {
    cfg.subdomains.push_back(parse_rect(value));
  } else if (key == "samples") {
    cfg.samples = to_int(value, key);
  } else {
    throw ConfigError("unknown setting '" + std::string(key) + "'");
  }
}

RunConfig load_config_file(const std::filesystem::path& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(number) + ": expected key=value");
    }
    apply_setting(base, std::string_view(line).substr(0, eq), std::string_view(line).substr(eq + 1));
  }
  return base;
}

}  // namespace dwflow
