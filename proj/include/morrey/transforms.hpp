// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Operators on grid functions: zero extension, restriction, products,
// dilation and lattice translation.
#pragma once

#include <cstdint>
#include <vector>

#include "morrey/grid.hpp"

namespace morrey {

enum class Boundary { periodic, zero_fill };

/// Copies f onto a full-mask target grid with the same spacing whose points
/// include every point of f's grid; zero elsewhere.
GridFunction extend_by_zero(const GridFunction& f, const GridDomain& target);

/// extend_by_zero onto the full-mask version of f's own grid.
GridFunction extend_to_full(const GridFunction& f);

/// f's grid grown by `pad` points on each side, full mask.
GridDomain padded_full_domain(const GridDomain& domain, std::size_t pad);

/// submask must select a nonempty subset of f's masked points.
GridFunction restrict_to(const GridFunction& f, const std::vector<std::uint8_t>& submask);

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g);
GridFunction scale(const GridFunction& f, double c);
GridFunction add(const GridFunction& f, const GridFunction& g);
GridFunction subtract(const GridFunction& f, const GridFunction& g);
GridFunction abs(const GridFunction& f);

/// Positive rational alpha = num/den with num == 1 or den == 1.
struct Dilation {
  std::int64_t num = 1;
  std::int64_t den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// g(y) = f(alpha y): the same samples on the grid with spacing h/alpha and
/// origin origin/alpha.
GridFunction dilate(const GridFunction& f, Dilation alpha);

/// g(x) = f(x - y*h) for an integer lattice vector y, on a full-mask grid.
GridFunction translate(const GridFunction& f, const Index& shift, Boundary boundary);

}  // namespace morrey
