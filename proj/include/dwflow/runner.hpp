#pragma once

// Run orchestration: single runs, six-order families, diagnostics of saved
// fields, and the run manifest.

#include <array>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dwflow/diagnostics.hpp"
#include "dwflow/errors.hpp"
#include "dwflow/run_config.hpp"

namespace dwflow {

struct MonitorSample {
  double t = 0.0;
  Vec4 totals{};             // integrals of rho, mx, my, E
  double min_entropy = 0.0;  // min specific entropy
  FunctionalSample functional;  // single-run functionals (n = 1)
};

struct FailureRecord {
  std::string message;
  double time = 0.0;
  int stage = 0;
  CellIndex cell{};
};

struct RunResult {
  bool ok = true;
  std::optional<FailureRecord> failure;
  double t = 0.0;
  long steps = 0;
  Field final_field;    // last admissible state, ghost width 0
  Field time_average;   // dt-weighted over the run (empty on failure)
  std::vector<MonitorSample> monitor;  // t = 0 and every accepted step
  std::vector<double> sample_times;
  std::vector<Field> samples;  // states at sample_times, ghost width 0
  std::vector<std::filesystem::path> files;
};

struct RunOptions {
  bool write_files = true;
  bool write_manifest = true;
  std::vector<double> sample_times;  // kept in memory, not written
};

/// Name stem shared by a run's files, e.g. "kh_ldcu_r3_n128".
std::string run_stem(const RunConfig& cfg);

/// Validates, integrates, writes the configured outputs. Blow-ups are
/// reported in the result (and the manifest), not thrown.
RunResult run(const RunConfig& cfg, const RunOptions& opts = {});

/// Uniform sample times 0, T/(m-1), ..., T.
std::vector<double> uniform_times(double T, int m);

struct SubdomainPdfs {
  Rect rect;
  std::vector<YoungPDF> members;  // sigma_l on the shared range
  std::vector<YoungPDF> averages; // sigma~_n, n = 1..members
};

/// Aggregates of a complete family (members in family order).
struct FamilyAggregate {
  std::vector<double> errors;  // ||rho~_n - rho~_m||, n = 1..m-1 (m members)
  std::optional<PowerLaw> fit;
  std::vector<FunctionalSample> functionals;  // n = 1..6 at the members' time
  std::vector<SubdomainPdfs> pdfs;
  std::vector<OrderAverage> averages;         // n = 1..6
};

FamilyAggregate aggregate(std::span<const Field> members, std::span<const Rect> subdomains, const GasModel& gas);

struct FamilyResult {
  std::array<RunResult, 6> members;  // family order, whatever the execution order
  bool complete = false;
  int usable = 0;  // leading members that reached T; aggregates use these
  std::optional<FamilyAggregate> final_aggregate;  // set when usable >= 2
  std::vector<double> sample_times;
  std::array<std::vector<FunctionalSample>, 6> series;  // per n, at sample_times
  std::array<double, 6> time_averaged_DE{};             // per n, trapezoid over sample_times
  std::vector<std::filesystem::path> files;
};

struct FamilyOptions {
  std::array<int, 6> execution_order{0, 1, 2, 3, 4, 5};
  bool write_files = true;
};

/// Runs all six orders of cfg.family (cfg.order is ignored).
FamilyResult run_family(const RunConfig& cfg, const FamilyOptions& opts = {});

/// Recomputes family aggregates from saved field files listed in family
/// order and writes them into out_dir. Throws IoError / ConfigError.
FamilyAggregate diag(std::span<const std::filesystem::path> fields, const std::filesystem::path& out_dir,
                     std::span<const Rect> subdomains);

/// Lower-case hex SHA-256 of a file. Throws IoError.
std::string sha256_file(const std::filesystem::path& path);

/// Writes manifest.json listing every file (relative to dir) with checksums.
void write_manifest(const std::filesystem::path& dir, const std::string& kind, const RunConfig& cfg,
                    std::span<const std::filesystem::path> files, const std::optional<FailureRecord>& failure);

/// Applies DW_THREADS (if set) to the OpenMP runtime. Returns the thread
/// count in effect.
int configure_threads();

}  // namespace dwflow
