// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/battery.hpp"

#include <algorithm>
#include <cmath>

namespace morrey {

namespace {

double dist_to_centre(const std::vector<double>& x) {
  double s = 0.0;
  for (double c : x) s += (c - 0.5) * (c - 0.5);
  return std::sqrt(s);
}

}  // namespace

std::string to_string(FixtureKind kind) {
  switch (kind) {
    case FixtureKind::constant: return "constant";
    case FixtureKind::box: return "box";
    case FixtureKind::ball: return "ball";
    case FixtureKind::bump: return "bump";
    case FixtureKind::random: return "random";
    case FixtureKind::singular: return "singular";
    case FixtureKind::zero: return "zero";
  }
  return "?";
}

FixtureKind parse_fixture_kind(std::string_view text) {
  for (auto k : all_fixture_kinds()) {
    if (to_string(k) == text) return k;
  }
  throw ParseError("unknown fixture kind '" + std::string(text) + "'");
}

const std::vector<FixtureKind>& all_fixture_kinds() {
  static const std::vector<FixtureKind> kinds = {
      FixtureKind::constant, FixtureKind::box,      FixtureKind::ball,
      FixtureKind::bump,     FixtureKind::random,   FixtureKind::singular,
      FixtureKind::zero};
  return kinds;
}

GridFunction random_field(const GridDomain& domain, std::uint64_t seed, double lo,
                          double hi) {
  Rng rng(seed);
  std::vector<double> v(domain.masked_count());
  for (auto& x : v) x = rng.uniform(lo, hi);
  return GridFunction(domain, std::move(v));
}

GridFunction make_fixture_on(FixtureKind kind, const GridDomain& d, std::uint64_t seed) {
  const std::size_t n = d.dim();
  const double h = d.spacing();
  std::vector<double> v;
  v.reserve(d.masked_count());

  std::vector<double> block_values;
  constexpr std::size_t kBlocks = 8;
  if (kind == FixtureKind::random) {
    Rng rng(seed);
    std::size_t count = 1;
    for (std::size_t a = 0; a < n; ++a) count *= kBlocks;
    block_values.resize(count);
    for (auto& b : block_values) b = rng.uniform(-1.0, 1.0);
  }

  for (auto lin : d.masked_points()) {
    auto x = d.coordinate(d.unravel(lin));
    double r = dist_to_centre(x);
    double val = 0.0;
    switch (kind) {
      case FixtureKind::constant:
        val = 1.0;
        break;
      case FixtureKind::box: {
        bool in = true;
        for (double c : x) in = in && c >= 0.25 && c < 0.75;
        val = in ? 1.0 : 0.0;
        break;
      }
      case FixtureKind::ball:
        val = r < 0.25 ? 1.0 : 0.0;
        break;
      case FixtureKind::bump: {
        double u = r * r / 0.16;
        val = u < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u)) : 0.0;
        break;
      }
      case FixtureKind::random: {
        std::size_t b = 0;
        for (double c : x) {
          auto cell = static_cast<std::int64_t>(std::floor(c * kBlocks));
          cell = std::clamp<std::int64_t>(cell, 0, kBlocks - 1);
          b = b * kBlocks + static_cast<std::size_t>(cell);
        }
        val = block_values[b];
        break;
      }
      case FixtureKind::singular:
        val = std::pow(std::max(r, h / 2), -static_cast<double>(n) / 4.0);
        break;
      case FixtureKind::zero:
        val = 0.0;
        break;
    }
    v.push_back(val);
  }
  return GridFunction(d, std::move(v));
}

GridFunction make_fixture(FixtureKind kind, std::size_t n, std::size_t size,
                          std::uint64_t seed) {
  return make_fixture_on(kind, GridDomain::unit_cube(n, size, 1), seed);
}

}  // namespace morrey
