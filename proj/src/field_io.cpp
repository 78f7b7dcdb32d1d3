#include "dwflow/field_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "dwflow/errors.hpp"

namespace dwflow {

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t to_little(std::uint64_t v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::uint64_t r = 0;
    for (int i = 0; i < 8; ++i) r |= ((v >> (8 * i)) & 0xffu) << (8 * (7 - i));
    return r;
  }
}

[[noreturn]] void corrupt(const std::string& why) { throw IoError(IoError::Kind::corrupt_header, "corrupt header: " + why); }

int parse_int(const std::string& s, const char* key) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) corrupt(std::string("bad ") + key);
  return v;
}

double parse_double(const std::string& s, const char* key) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) corrupt(std::string("bad ") + key);
  return v;
}

}  // namespace

std::string format_header(const FieldHeader& h) {
  std::ostringstream os;
  os << "DWFIELD " << h.version << " problem=" << h.problem << " family=" << h.family << " order=" << h.order
     << " nx=" << h.nx << " ny=" << h.ny << " gamma=" << format_double(h.gamma) << " time=" << format_double(h.time);
  return os.str();
}

FieldHeader parse_header(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::string magic, version;
  if (!(in >> magic >> version) || magic != "DWFIELD") corrupt("missing DWFIELD tag");
  FieldHeader h;
  h.version = parse_int(version, "version");
  if (h.version != kFieldFormatVersion) {
    throw IoError(IoError::Kind::version_mismatch, "unsupported field format version " + version);
  }
  std::map<std::string, std::string> kv;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0) corrupt("token '" + token + "'");
    kv[token.substr(0, eq)] = token.substr(eq + 1);
  }
  for (const char* key : {"problem", "family", "order", "nx", "ny", "gamma", "time"})
    if (!kv.count(key)) corrupt(std::string("missing ") + key);
  h.problem = kv["problem"];
  h.family = kv["family"];
  h.order = parse_int(kv["order"], "order");
  h.nx = parse_int(kv["nx"], "nx");
  h.ny = parse_int(kv["ny"], "ny");
  h.gamma = parse_double(kv["gamma"], "gamma");
  h.time = parse_double(kv["time"], "time");
  if (h.nx < 1 || h.ny < 1) corrupt("non-positive extent");
  return h;
}

void write_field(const std::filesystem::path& path, const Field& f, FieldHeader header) {
  const Grid& g = f.grid();
  header.nx = g.nx;
  header.ny = g.ny;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(IoError::Kind::open_failed, "cannot write " + path.string());
  out << format_header(header) << '\n';

  std::vector<std::uint64_t> row(static_cast<std::size_t>(g.nx) * 4);
  for (int k = 0; k < g.ny; ++k) {
    for (int j = 0; j < g.nx; ++j)
      for (int c = 0; c < 4; ++c) row[4 * j + c] = to_little(std::bit_cast<std::uint64_t>(f(j, k)[c]));
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size() * 8));
  }
  out.flush();
  if (!out) throw IoError(IoError::Kind::write_failed, "write failed for " + path.string());
}

namespace {

FieldHeader header_from(std::istream& in, const std::filesystem::path& path) {
  std::string line;
  if (!std::getline(in, line)) throw IoError(IoError::Kind::corrupt_header, "empty field file " + path.string());
  return parse_header(line);
}

}  // namespace

FieldHeader read_header(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::open_failed, "cannot open " + path.string());
  return header_from(in, path);
}

FieldFile read_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoError::Kind::open_failed, "cannot open " + path.string());
  FieldFile file;
  file.header = header_from(in, path);
  const FieldHeader& h = file.header;

  const std::streampos start = in.tellg();
  in.seekg(0, std::ios::end);
  const std::streamoff bytes = in.tellg() - start;
  in.seekg(start);
  const std::streamoff expected = static_cast<std::streamoff>(h.nx) * h.ny * 4 * 8;
  if (bytes != expected) {
    throw IoError(IoError::Kind::length_mismatch, "payload holds " + std::to_string(bytes) + " bytes, header implies " +
                                                      std::to_string(expected));
  }

  const Grid g = Grid::unit_square(h.nx, h.ny, 0);
  file.field = Field(g, h.problem == "kh" ? Boundary::periodic : Boundary::free);
  std::vector<std::uint64_t> row(static_cast<std::size_t>(h.nx) * 4);
  for (int k = 0; k < h.ny; ++k) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size() * 8));
    if (!in) throw IoError(IoError::Kind::length_mismatch, "truncated payload in " + path.string());
    for (int j = 0; j < h.nx; ++j)
      for (int c = 0; c < 4; ++c) file.field(j, k)[c] = std::bit_cast<double>(to_little(row[4 * j + c]));
  }
  return file;
}

}  // namespace dwflow
