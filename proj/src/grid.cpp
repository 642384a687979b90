// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace morrey {

GridDomain::GridDomain(std::vector<std::size_t> shape, double h,
                       std::vector<double> origin,
                       std::vector<std::uint8_t> mask, bool allow_empty)
    : shape_(std::move(shape)), h_(h), origin_(std::move(origin)) {
  if (shape_.empty()) throw ValidationError("grid: dimension must be >= 1");
  if (origin_.size() != shape_.size()) {
    throw ValidationError("grid: origin has wrong dimension");
  }
  if (!(h_ > 0.0) || !std::isfinite(h_)) {
    throw ValidationError("grid: spacing must be positive and finite");
  }
  for (double o : origin_) {
    if (!std::isfinite(o)) throw ValidationError("grid: non-finite origin");
  }
  std::size_t total = 1;
  strides_.assign(shape_.size(), 1);
  for (std::size_t a = shape_.size(); a-- > 0;) {
    if (shape_[a] == 0) throw ValidationError("grid: shape entries must be >= 1");
    strides_[a] = total;
    total *= shape_[a];
  }
  if (mask.empty()) {
    mask_.assign(total, 1);
  } else {
    if (mask.size() != total) throw ValidationError("grid: mask size mismatch");
    mask_ = std::move(mask);
    for (auto& m : mask_) m = m ? 1 : 0;
  }
  rank_.assign(total, -1);
  for (std::size_t i = 0; i < total; ++i) {
    if (mask_[i]) {
      rank_[i] = static_cast<std::int64_t>(masked_.size());
      masked_.push_back(i);
    }
  }
  if (masked_.empty() && !allow_empty) {
    throw ValidationError("grid: mask selects no points");
  }
}

GridDomain GridDomain::unit_cube(std::size_t n, std::size_t size,
                                 std::size_t pad) {
  if (n == 0 || size == 0) throw ValidationError("unit_cube: n, size >= 1");
  double h = 1.0 / static_cast<double>(size);
  std::vector<std::size_t> shape(n, size + 2 * pad);
  std::vector<double> origin(n, h / 2 - static_cast<double>(pad) * h);
  GridDomain probe(shape, h, origin);
  std::vector<std::uint8_t> mask(probe.total_points(), 0);
  for (std::size_t i = 0; i < mask.size(); ++i) {
    Index idx = probe.unravel(i);
    bool inside = true;
    for (auto c : idx) {
      if (c < static_cast<std::int64_t>(pad) ||
          c >= static_cast<std::int64_t>(pad + size)) {
        inside = false;
      }
    }
    mask[i] = inside;
  }
  return probe.with_mask(std::move(mask));
}

std::size_t GridDomain::ravel(const Index& idx) const {
  std::size_t lin = 0;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    lin += static_cast<std::size_t>(idx[a]) * strides_[a];
  }
  return lin;
}

Index GridDomain::unravel(std::size_t linear) const {
  Index idx(shape_.size());
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    idx[a] = static_cast<std::int64_t>(linear / strides_[a]);
    linear %= strides_[a];
  }
  return idx;
}

bool GridDomain::contains_index(const Index& idx) const {
  if (idx.size() != shape_.size()) return false;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    if (idx[a] < 0 || idx[a] >= static_cast<std::int64_t>(shape_[a])) {
      return false;
    }
  }
  return true;
}

std::vector<double> GridDomain::coordinate(const Index& idx) const {
  std::vector<double> x(shape_.size());
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    x[a] = origin_[a] + static_cast<double>(idx[a]) * h_;
  }
  return x;
}

Index GridDomain::nearest_index(const std::vector<double>& x) const {
  Index idx(shape_.size());
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    idx[a] = static_cast<std::int64_t>(std::llround((x[a] - origin_[a]) / h_));
  }
  return idx;
}

double GridDomain::diameter() const {
  if (masked_.empty()) return 0.0;
  std::size_t n = shape_.size();
  std::vector<std::int64_t> lo(n, INT64_MAX), hi(n, INT64_MIN);
  for (auto lin : masked_) {
    Index idx = unravel(lin);
    for (std::size_t a = 0; a < n; ++a) {
      lo[a] = std::min(lo[a], idx[a]);
      hi[a] = std::max(hi[a], idx[a]);
    }
  }
  double s = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    double ext = static_cast<double>(hi[a] - lo[a] + 1);
    s += ext * ext;
  }
  return h_ * std::sqrt(s);
}

double GridDomain::measure() const {
  return static_cast<double>(masked_.size()) *
         std::pow(h_, static_cast<double>(shape_.size()));
}

GridDomain GridDomain::with_mask(std::vector<std::uint8_t> mask) const {
  return GridDomain(shape_, h_, origin_, std::move(mask));
}

GridDomain GridDomain::full_mask() const {
  return GridDomain(shape_, h_, origin_);
}

bool operator==(const GridDomain& a, const GridDomain& b) {
  return a.shape_ == b.shape_ && a.h_ == b.h_ && a.origin_ == b.origin_ &&
         a.mask_ == b.mask_;
}

GridFunction::GridFunction(GridDomain domain, std::vector<double> values)
    : domain_(std::move(domain)), values_(std::move(values)) {
  if (values_.size() != domain_.masked_count()) {
    throw ValidationError("function: value count differs from masked count");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw ValidationError("function: non-finite value");
  }
}

GridFunction GridFunction::zeros(const GridDomain& domain) {
  return constant(domain, 0.0);
}

GridFunction GridFunction::constant(const GridDomain& domain, double c) {
  return GridFunction(domain, std::vector<double>(domain.masked_count(), c));
}

double GridFunction::at(std::size_t linear) const {
  auto r = domain_.rank(linear);
  return r < 0 ? 0.0 : values_[static_cast<std::size_t>(r)];
}

std::vector<double> GridFunction::dense() const {
  std::vector<double> out(domain_.total_points(), 0.0);
  const auto& pts = domain_.masked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) out[pts[k]] = values_[k];
  return out;
}

double unit_ball_volume(std::size_t n) {
  if (n == 0) throw DomainError("unit_ball_volume: n must be >= 1");
  double half = static_cast<double>(n) / 2.0;
  return std::pow(std::numbers::pi, half) / std::tgamma(half + 1.0);
}

std::vector<std::size_t> linear_points_in_ball(const GridDomain& domain,
                                               const Ball& ball) {
  if (!(ball.radius > 0.0)) throw DomainError("ball: radius must be positive");
  if (ball.center.size() != domain.dim()) {
    throw DomainError("ball: center has wrong dimension");
  }
  const double h = domain.spacing();
  const std::size_t n = domain.dim();
  const double rr = (ball.radius / h) * (ball.radius / h);
  const double band = kBallTieBand * std::max(1.0, rr);
  std::vector<double> c(n);
  for (std::size_t a = 0; a < n; ++a) {
    c[a] = (ball.center[a] - domain.origin()[a]) / h;
  }
  std::vector<std::size_t> out;
  for (auto lin : domain.masked_points()) {
    Index idx = domain.unravel(lin);
    double d2 = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      double d = static_cast<double>(idx[a]) - c[a];
      d2 += d * d;
    }
    if (rr - d2 > band) out.push_back(lin);
  }
  return out;
}

std::vector<Index> points_in_ball(const GridDomain& domain, const Ball& ball) {
  std::vector<Index> out;
  for (auto lin : linear_points_in_ball(domain, ball)) {
    out.push_back(domain.unravel(lin));
  }
  return out;
}

}  // namespace morrey
