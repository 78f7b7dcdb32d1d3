#pragma once

// Field files: one text header line, then the interior as little-endian
// float64 (k outer, j inner, four components per cell).
//
//   DWFIELD 1 problem=kh family=ldcu order=3 nx=128 ny=128 gamma=1.4 time=0.5

#include <filesystem>
#include <string>
#include <string_view>

#include "dwflow/grid.hpp"

namespace dwflow {

inline constexpr int kFieldFormatVersion = 1;

struct FieldHeader {
  int version = kFieldFormatVersion;
  std::string problem = "none";
  std::string family = "none";
  int order = 0;
  int nx = 0;
  int ny = 0;
  double gamma = 1.4;
  double time = 0.0;

  friend bool operator==(const FieldHeader&, const FieldHeader&) = default;
};

std::string format_header(const FieldHeader& h);

/// Throws IoError(corrupt_header) for malformed lines and
/// IoError(version_mismatch) for an unknown version.
FieldHeader parse_header(std::string_view line);

/// Writes the interior of f; nx and ny in the header are taken from the grid.
void write_field(const std::filesystem::path& path, const Field& f, FieldHeader header);

struct FieldFile {
  FieldHeader header;
  Field field;  // ghost width 0; periodic for problem "kh", free otherwise
};

/// Throws IoError: open_failed, corrupt_header, version_mismatch, or
/// length_mismatch when the payload does not hold nx*ny*4 values.
FieldFile read_field(const std::filesystem::path& path);
FieldHeader read_header(const std::filesystem::path& path);

}  // namespace dwflow
