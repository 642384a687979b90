// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <cstring>
#include <filesystem>
#include <numbers>

#include "morrey/grid.hpp"
#include "morrey/grid_io.hpp"
#include "morrey/lattice.hpp"
#include "support/oracle.hpp"

using namespace morrey;

namespace {

// Independent little-endian byte builder for the expected file image.
struct Bytes {
  std::string s;
  void u8(std::uint8_t v) { s.push_back(static_cast<char>(v)); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) u8(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double d) {
    std::uint64_t v;
    std::memcpy(&v, &d, 8);
    u64(v);
  }
};

GridDomain quarter_line() { return GridDomain({4}, 0.25, {0.125}); }

}  // namespace

TEST_CASE("unit ball volume") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(unit_ball_volume(2) == doctest::Approx(std::numbers::pi).epsilon(1e-15));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * std::numbers::pi / 3.0).epsilon(1e-15));
}

TEST_CASE("unit cube layout") {
  auto d = GridDomain::unit_cube(2, 8, 1);
  CHECK(d.shape() == std::vector<std::size_t>{10, 10});
  CHECK(d.spacing() == 0.125);
  CHECK(d.masked_count() == 64);
  CHECK(d.total_points() == 100);
  CHECK_FALSE(d.is_full());
  CHECK(d.measure() == doctest::Approx(1.0));
  auto c = d.coordinate(d.unravel(d.masked_points().front()));
  CHECK(c[0] == doctest::Approx(0.0625));
  CHECK(c[1] == doctest::Approx(0.0625));
  for (std::size_t lin = 0; lin < d.total_points(); ++lin) CHECK(d.ravel(d.unravel(lin)) == lin);
}

TEST_CASE("domain validation") {
  CHECK_THROWS_AS(GridDomain({4}, 0.0, {0.0}), ValidationError);
  CHECK_THROWS_AS(GridDomain({4}, 0.25, {0.0, 0.0}), ValidationError);
  CHECK_THROWS_AS(GridDomain({4}, 0.25, {0.0}, {0, 0, 0, 0}), ValidationError);
  CHECK_THROWS_AS(GridDomain({4}, 0.25, {0.0}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(GridFunction(quarter_line(), {1.0, 2.0}), ValidationError);
}

TEST_CASE("ball membership") {
  auto d = quarter_line();
  auto pts = points_in_ball(d, Ball{{0.5}, 0.2});
  REQUIRE(pts.size() == 2);
  CHECK(d.coordinate(pts[0])[0] == doctest::Approx(0.375));
  CHECK(d.coordinate(pts[1])[0] == doctest::Approx(0.625));
  CHECK(points_in_ball(d, Ball{{0.5}, 0.1}).empty());
  CHECK(points_in_ball(d, Ball{{0.375}, d.diameter() + d.spacing()}).size() == 4);
  // A ball of radius exactly h around a point holds only the point itself.
  CHECK(linear_points_in_ball(d, Ball{{0.375}, 0.25}) == std::vector<std::size_t>{1});
}

TEST_CASE("ball membership agrees with integer distances") {
  auto d = GridDomain::unit_cube(2, 12, 1);
  auto center = d.unravel(d.masked_points()[30]);
  for (std::uint64_t s = 1; s < 200; ++s) {
    if (!oracle::sum_of_squares(s, 2)) continue;
    auto got = linear_points_in_ball(d, Ball{d.coordinate(center), shell_radius(s, d.spacing())});
    std::vector<std::size_t> want;
    for (auto lin : d.masked_points()) {
      if (oracle::squared_distance(d, d.ravel(center), lin) < s) want.push_back(lin);
    }
    CHECK(got == want);
  }
}

TEST_CASE("binary format is bit exact") {
  GridFunction f(quarter_line(), {1.0, -2.5, 0.0, 3.25});
  Bytes b;
  b.s = "MGF1";
  b.u32(1);
  b.u64(4);
  b.f64(0.25);
  b.f64(0.125);
  b.u8(0);
  for (double v : f.values()) b.f64(v);
  CHECK(encode_binary(f) == b.s);
  auto g = decode_binary(b.s);
  CHECK(g.values() == f.values());
  CHECK(g.domain() == f.domain());
}

TEST_CASE("binary format with mask") {
  GridDomain d({2, 3}, 0.5, {0.25, 0.25}, {1, 0, 1, 1, 1, 0});
  GridFunction f(d, {1.0, 2.0, 3.0, 4.0});
  Bytes b;
  b.s = "MGF1";
  b.u32(2);
  b.u64(2);
  b.u64(3);
  b.f64(0.5);
  b.f64(0.25);
  b.f64(0.25);
  b.u8(1);
  for (std::uint8_t m : {1, 0, 1, 1, 1, 0}) b.u8(m);
  for (double v : f.values()) b.f64(v);
  CHECK(encode_binary(f) == b.s);
  CHECK(decode_binary(b.s).values() == f.values());
}

TEST_CASE("binary format errors") {
  GridFunction f(quarter_line(), {1.0, 2.0, 3.0, 4.0});
  auto bytes = encode_binary(f);
  auto bad = bytes;
  bad[0] = 'X';
  CHECK_THROWS_AS(decode_binary(bad), ParseError);
  CHECK_THROWS_AS(decode_binary(bytes.substr(0, bytes.size() - 1)), ParseError);
  CHECK_THROWS_AS(decode_binary(bytes + "x"), ParseError);
  auto nan = bytes;
  double q = std::nan("");
  std::memcpy(nan.data() + nan.size() - 8, &q, 8);
  CHECK_THROWS_AS(decode_binary(nan), ValidationError);
}

TEST_CASE("csv round trip") {
  auto d = GridDomain::unit_cube(2, 4, 1);
  std::vector<double> v;
  for (std::size_t i = 0; i < d.masked_count(); ++i) v.push_back(0.1 * static_cast<double>(i) - 0.7);
  GridFunction f(d, v);
  auto text = encode_csv(f);
  CHECK(text.rfind("index0,index1,value\n", 0) == 0);
  auto g = decode_csv(text, d);
  CHECK(g.values() == f.values());
  auto inferred = decode_csv("index0,value\n0,1\n2,3\n");
  CHECK(inferred.domain().shape() == std::vector<std::size_t>{3});
  CHECK(inferred.domain().masked_count() == 2);
  CHECK(inferred.values() == std::vector<double>{1.0, 3.0});
  CHECK_THROWS_AS(decode_csv("index0,value\n0,abc\n"), ParseError);
}

TEST_CASE("file io") {
  auto dir = std::filesystem::temp_directory_path();
  GridFunction f(quarter_line(), {1.0, 2.0, 3.0, 4.0});
  auto bin = (dir / "morrey_test_grid.mgf").string();
  auto csv = (dir / "morrey_test_grid.csv").string();
  write_function(f, bin, FileFormat::binary);
  write_function(f, csv, FileFormat::csv);
  CHECK(read_function(bin, format_from_path(bin)).values() == f.values());
  CHECK(read_function(csv, format_from_path(csv), f.domain()).values() == f.values());
  CHECK_THROWS_AS(read_file((dir / "morrey_missing_file.mgf").string()), ParseError);
  std::filesystem::remove(bin);
  std::filesystem::remove(csv);
}

TEST_CASE("lattice shells match brute force") {
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK_FALSE(is_shell(0, n));
    for (Shell s = 1; s < 300; ++s) CHECK(is_shell(s, n) == oracle::sum_of_squares(s, n));
  }
  CHECK(next_shell(5, 1) == 9);
  CHECK(prev_shell(9, 1) == 4);
  CHECK(next_shell(6, 2) == 8);
  CHECK(next_shell(6, 3) == 8);
  CHECK(prev_shell(1, 2) == 0);
  CHECK(first_shell_at_or_above(0.3, 0.1, 1) == 9);
  CHECK(last_shell_below(0.3, 0.1, 1) == 4);
  CHECK_THROWS_AS(first_shell_at_or_above(1e9, 1e-9, 1), DomainError);
}
