// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Uniform grids with a membership mask, sampled functions, and open balls.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morrey/core.hpp"

namespace morrey {

using Index = std::vector<std::int64_t>;

/// Uniform grid of spacing h. A point with multi-index i sits at
/// origin + i*h; the mask says which points belong to the domain.
class GridDomain {
 public:
  GridDomain() = default;

  /// An empty mask vector means every point is masked.
  GridDomain(std::vector<std::size_t> shape, double h,
             std::vector<double> origin, std::vector<std::uint8_t> mask = {},
             bool allow_empty = false);

  /// Cell-centred grid of the unit cube (0,1)^n with `size` cells per axis,
  /// surrounded by `pad` unmasked layers.
  static GridDomain unit_cube(std::size_t n, std::size_t size,
                              std::size_t pad = 1);

  std::size_t dim() const { return shape_.size(); }
  const std::vector<std::size_t>& shape() const { return shape_; }
  double spacing() const { return h_; }
  const std::vector<double>& origin() const { return origin_; }
  const std::vector<std::uint8_t>& mask() const { return mask_; }
  const std::vector<std::size_t>& strides() const { return strides_; }

  std::size_t total_points() const { return mask_.size(); }
  std::size_t masked_count() const { return masked_.size(); }
  bool is_full() const { return masked_.size() == mask_.size(); }
  bool in_mask(std::size_t linear) const { return mask_[linear] != 0; }

  /// Linear indices of masked points, ascending (row-major, last axis
  /// fastest). Position k in this list holds the k-th function value.
  const std::vector<std::size_t>& masked_points() const { return masked_; }
  /// Rank of a masked point among masked points; -1 if unmasked.
  std::int64_t rank(std::size_t linear) const { return rank_[linear]; }

  std::size_t ravel(const Index& idx) const;
  Index unravel(std::size_t linear) const;
  bool contains_index(const Index& idx) const;

  std::vector<double> coordinate(const Index& idx) const;
  Index nearest_index(const std::vector<double>& x) const;

  /// Diagonal of the bounding box of the masked cells.
  double diameter() const;
  /// count * h^n.
  double measure() const;

  GridDomain with_mask(std::vector<std::uint8_t> mask) const;
  GridDomain full_mask() const;

  friend bool operator==(const GridDomain& a, const GridDomain& b);

 private:
  std::vector<std::size_t> shape_;
  double h_ = 1.0;
  std::vector<double> origin_;
  std::vector<std::uint8_t> mask_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> masked_;
  std::vector<std::int64_t> rank_;
};

/// Real samples on the masked points of a domain.
class GridFunction {
 public:
  GridFunction() = default;
  GridFunction(GridDomain domain, std::vector<double> values);

  static GridFunction zeros(const GridDomain& domain);
  static GridFunction constant(const GridDomain& domain, double c);

  const GridDomain& domain() const { return domain_; }
  const std::vector<double>& values() const { return values_; }

  /// Value at a grid point; 0 for unmasked points.
  double at(std::size_t linear) const;

  /// Values laid out on the whole grid, zero on unmasked points.
  std::vector<double> dense() const;

 private:
  GridDomain domain_;
  std::vector<double> values_;
};

/// Open ball in physical coordinates.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
};

/// omega_n = pi^{n/2} / Gamma(n/2 + 1).
double unit_ball_volume(std::size_t n);

/// Relative width of the band around the sphere treated as the boundary.
inline constexpr double kBallTieBand = 1e-9;

/// Masked points y with |y - c| < r. A point within a relative band of
/// kBallTieBand of the sphere counts as on the boundary and is excluded.
std::vector<Index> points_in_ball(const GridDomain& domain, const Ball& ball);

/// Same, as linear indices in ascending order.
std::vector<std::size_t> linear_points_in_ball(const GridDomain& domain,
                                               const Ball& ball);

}  // namespace morrey
