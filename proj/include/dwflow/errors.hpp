#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace dwflow {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Interior cell coordinates attached to state errors.
struct CellIndex {
  int j = 0;
  int k = 0;
};

/// A conserved state with non-positive density or pressure.
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& what, std::optional<CellIndex> cell = std::nullopt);

  const std::optional<CellIndex>& cell() const noexcept { return cell_; }

 private:
  std::optional<CellIndex> cell_;
};

/// A Runge-Kutta stage produced an inadmissible field.
class BlowUp : public Error {
 public:
  BlowUp(double time, int stage, CellIndex worst, double worst_density, double worst_pressure);

  double time() const noexcept { return time_; }
  int stage() const noexcept { return stage_; }
  CellIndex worst_cell() const noexcept { return worst_; }
  double worst_density() const noexcept { return rho_; }
  double worst_pressure() const noexcept { return p_; }

 private:
  double time_;
  int stage_;
  CellIndex worst_;
  double rho_;
  double p_;
};

/// Rejected configuration or argument outside the supported domain.
class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  enum class Kind { open_failed, corrupt_header, version_mismatch, length_mismatch, write_failed };

  IoError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

}  // namespace dwflow
