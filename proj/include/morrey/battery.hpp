// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Seeded test functions on the cell-centred unit cube.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "morrey/grid.hpp"

namespace morrey {

enum class FixtureKind { constant, box, ball, bump, random, singular, zero };

std::string to_string(FixtureKind kind);
FixtureKind parse_fixture_kind(std::string_view text);
const std::vector<FixtureKind>& all_fixture_kinds();

/// Deterministic uniform doubles in [0, 1) from a 64-bit Mersenne twister.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

 private:
  std::mt19937_64 engine_;
};

/// Fixtures live on GridDomain::unit_cube(n, size, 1).
///   constant  1
///   box       indicator of [1/4, 3/4)^n
///   ball      indicator of |x - c| < 1/4, c the cube centre
///   bump      exp(1 - 1/(1 - |x - c|^2 / 0.16)) inside radius 0.4, peak 1
///   random    piecewise constant on about 8 blocks per axis, values in [-1, 1]
///   singular  |x - c|^{-n/4} with |x - c| clipped below at h/2
///   zero      0
GridFunction make_fixture(FixtureKind kind, std::size_t n, std::size_t size,
                          std::uint64_t seed);

/// Same, on an arbitrary domain (unit-cube geometry is read from
/// coordinates, so any grid covering the cube works).
GridFunction make_fixture_on(FixtureKind kind, const GridDomain& domain,
                             std::uint64_t seed);

/// Independent uniform samples in [lo, hi) at every masked point.
GridFunction random_field(const GridDomain& domain, std::uint64_t seed,
                          double lo = -1.0, double hi = 1.0);

}  // namespace morrey
