#include <gtest/gtest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "dwflow/errors.hpp"
#include "dwflow/field_io.hpp"
#include "dwflow/runner.hpp"

using namespace dwflow;
namespace fs = std::filesystem;

namespace {

class FieldIo : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dwflow_io_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

IoError::Kind kind_of(const fs::path& p) {
  try {
    read_field(p);
  } catch (const IoError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << p;
  return IoError::Kind::write_failed;
}

void write_text(const fs::path& p, const std::string& s) { std::ofstream(p, std::ios::binary) << s; }

}  // namespace

TEST(FieldHeader, RoundTrip) {
  FieldHeader h;
  h.problem = "kh";
  h.family = "ldcu";
  h.order = 7;
  h.nx = 128;
  h.ny = 64;
  h.gamma = 1.4;
  h.time = 0.1 + 0.2;
  const std::string line = format_header(h);
  EXPECT_EQ(line.rfind("DWFIELD 1 problem=kh family=ldcu order=7 nx=128 ny=64 gamma=", 0), 0u);
  EXPECT_EQ(parse_header(line), h);
}

TEST(FieldHeader, Errors) {
  auto kind = [](std::string_view s) {
    try {
      parse_header(s);
    } catch (const IoError& e) {
      return e.kind();
    }
    return IoError::Kind::write_failed;
  };
  EXPECT_EQ(kind("DWFIELD 2 problem=kh family=ldcu order=1 nx=4 ny=4 gamma=1.4 time=0"), IoError::Kind::version_mismatch);
  EXPECT_EQ(kind("FIELD 1 problem=kh"), IoError::Kind::corrupt_header);
  EXPECT_EQ(kind("DWFIELD 1 problem=kh family=ldcu order=1 nx=4 gamma=1.4 time=0"), IoError::Kind::corrupt_header);
  EXPECT_EQ(kind("DWFIELD 1 problem=kh family=ldcu order=x nx=4 ny=4 gamma=1.4 time=0"), IoError::Kind::corrupt_header);
  EXPECT_EQ(kind("DWFIELD 1 problem=kh family=ldcu order=1 nx=0 ny=4 gamma=1.4 time=0"), IoError::Kind::corrupt_header);
  EXPECT_EQ(kind("DWFIELD 1 problem=kh family=ldcu order=1 nx=4 ny=4 gamma=1.4 time=0 junk"),
            IoError::Kind::corrupt_header);
}

TEST_F(FieldIo, RandomFieldsBitExact) {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> size(1, 24);
  std::uniform_int_distribution<std::uint64_t> bits;
  for (int t = 0; t < 100; ++t) {
    Field f(Grid::unit_square(size(rng), size(rng), t % 3), t % 2 ? Boundary::periodic : Boundary::free);
    for (int k = 0; k < f.grid().ny; ++k)
      for (int j = 0; j < f.grid().nx; ++j)
        for (int c = 0; c < 4; ++c) {
          // Arbitrary bit patterns, NaN payloads and subnormals included.
          const std::uint64_t b = bits(rng);
          double v;
          std::memcpy(&v, &b, sizeof v);
          f(j, k)[c] = v;
        }
    FieldHeader h;
    h.problem = t % 2 ? "kh" : "config3";
    h.time = 0.001 * t;
    const fs::path p = dir_ / "f.dwf";
    write_field(p, f, h);
    const FieldFile back = read_field(p);
    EXPECT_EQ(back.header.nx, f.grid().nx);
    EXPECT_EQ(back.header.time, h.time);
    EXPECT_EQ(back.field.bc(), t % 2 ? Boundary::periodic : Boundary::free);
    for (int k = 0; k < f.grid().ny; ++k)
      for (int j = 0; j < f.grid().nx; ++j)
        ASSERT_EQ(std::memcmp(&back.field(j, k), &f(j, k), sizeof(Conserved)), 0) << t;
  }
}

TEST_F(FieldIo, ErrorKinds) {
  Field f(Grid::unit_square(4, 3, 0), Boundary::free);
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j < 4; ++j) f(j, k).q = {1, 2, 3, 4};
  const fs::path good = dir_ / "good.dwf";
  write_field(good, f, FieldHeader{});

  EXPECT_EQ(kind_of(dir_ / "missing.dwf"), IoError::Kind::open_failed);

  const auto size = fs::file_size(good);
  fs::copy_file(good, dir_ / "trunc.dwf");
  fs::resize_file(dir_ / "trunc.dwf", size - 8);
  EXPECT_EQ(kind_of(dir_ / "trunc.dwf"), IoError::Kind::length_mismatch);

  // Header claims a larger grid than the payload holds.
  std::ifstream in(good, std::ios::binary);
  std::string header;
  std::getline(in, header);
  const std::string payload((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  FieldHeader h = parse_header(header);
  h.nx = 5;
  write_text(dir_ / "wide.dwf", format_header(h) + "\n" + payload);
  EXPECT_EQ(kind_of(dir_ / "wide.dwf"), IoError::Kind::length_mismatch);

  h = parse_header(header);
  write_text(dir_ / "v9.dwf", "DWFIELD 9" + format_header(h).substr(9) + "\n" + payload);
  EXPECT_EQ(kind_of(dir_ / "v9.dwf"), IoError::Kind::version_mismatch);

  write_text(dir_ / "garbage.dwf", "hello\n" + payload);
  EXPECT_EQ(kind_of(dir_ / "garbage.dwf"), IoError::Kind::corrupt_header);
  write_text(dir_ / "empty.dwf", "");
  EXPECT_EQ(kind_of(dir_ / "empty.dwf"), IoError::Kind::corrupt_header);

  EXPECT_THROW(write_field(dir_ / "no_such_dir" / "x.dwf", f, FieldHeader{}), IoError);
}

TEST_F(FieldIo, Sha256KnownVectors) {
  write_text(dir_ / "abc.txt", "abc");
  EXPECT_EQ(sha256_file(dir_ / "abc.txt"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  write_text(dir_ / "empty.txt", "");
  EXPECT_EQ(sha256_file(dir_ / "empty.txt"), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_THROW(sha256_file(dir_ / "missing"), IoError);
}
