// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/transforms.hpp"

#include <cmath>

namespace morrey {

namespace {

void require_same_domain(const GridFunction& f, const GridFunction& g) {
  if (!(f.domain() == g.domain())) throw DomainError("transform: domains differ");
}

template <class Op>
GridFunction zip(const GridFunction& f, const GridFunction& g, Op op) {
  require_same_domain(f, g);
  std::vector<double> out(f.values().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(f.values()[k], g.values()[k]);
  return GridFunction(f.domain(), std::move(out));
}

}  // namespace

GridFunction extend_by_zero(const GridFunction& f, const GridDomain& target) {
  const auto& src = f.domain();
  if (!target.is_full()) throw DomainError("extend_by_zero: target mask must be full");
  if (target.dim() != src.dim()) throw DomainError("extend_by_zero: dimension mismatch");
  const double h = src.spacing();
  if (target.spacing() != h) throw DomainError("extend_by_zero: spacing differs");
  const std::size_t n = src.dim();
  std::vector<std::int64_t> shift(n);
  for (std::size_t a = 0; a < n; ++a) {
    double steps = (src.origin()[a] - target.origin()[a]) / h;
    double rounded = std::round(steps);
    if (std::fabs(steps - rounded) > 1e-9) {
      throw DomainError("extend_by_zero: origins are not aligned");
    }
    shift[a] = static_cast<std::int64_t>(rounded);
    if (shift[a] < 0 ||
        shift[a] + static_cast<std::int64_t>(src.shape()[a]) >
            static_cast<std::int64_t>(target.shape()[a])) {
      throw DomainError("extend_by_zero: target does not contain the source grid");
    }
  }
  std::vector<double> out(target.total_points(), 0.0);
  const auto& pts = src.masked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    auto idx = src.unravel(pts[k]);
    for (std::size_t a = 0; a < n; ++a) idx[a] += shift[a];
    out[target.ravel(idx)] = f.values()[k];
  }
  return GridFunction(target, std::move(out));
}

GridFunction extend_to_full(const GridFunction& f) {
  return extend_by_zero(f, f.domain().full_mask());
}

GridDomain padded_full_domain(const GridDomain& d, std::size_t pad) {
  auto shape = d.shape();
  auto origin = d.origin();
  for (std::size_t a = 0; a < shape.size(); ++a) {
    shape[a] += 2 * pad;
    origin[a] -= static_cast<double>(pad) * d.spacing();
  }
  return GridDomain(shape, d.spacing(), origin);
}

GridFunction restrict_to(const GridFunction& f, const std::vector<std::uint8_t>& submask) {
  const auto& d = f.domain();
  if (submask.size() != d.total_points()) throw DomainError("restrict: mask size mismatch");
  std::vector<double> out;
  for (std::size_t lin = 0; lin < submask.size(); ++lin) {
    if (!submask[lin]) continue;
    if (!d.in_mask(lin)) throw DomainError("restrict: submask is not contained in the mask");
    out.push_back(f.at(lin));
  }
  if (out.empty()) throw DomainError("restrict: submask is empty");
  return GridFunction(d.with_mask(submask), std::move(out));
}

GridFunction pointwise_product(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double a, double b) { return a * b; });
}

GridFunction add(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double a, double b) { return a + b; });
}

GridFunction subtract(const GridFunction& f, const GridFunction& g) {
  return zip(f, g, [](double a, double b) { return a - b; });
}

GridFunction scale(const GridFunction& f, double c) {
  auto v = f.values();
  for (auto& x : v) x *= c;
  return GridFunction(f.domain(), std::move(v));
}

GridFunction abs(const GridFunction& f) {
  auto v = f.values();
  for (auto& x : v) x = std::fabs(x);
  return GridFunction(f.domain(), std::move(v));
}

GridFunction dilate(const GridFunction& f, Dilation alpha) {
  if (alpha.num <= 0 || alpha.den <= 0 || (alpha.num != 1 && alpha.den != 1)) {
    throw DomainError("dilate: alpha must be a positive integer or 1/integer");
  }
  const auto& d = f.domain();
  const double a = alpha.value();
  auto origin = d.origin();
  for (auto& o : origin) o /= a;
  GridDomain out(d.shape(), d.spacing() / a, origin, d.mask());
  return GridFunction(std::move(out), f.values());
}

GridFunction translate(const GridFunction& f, const Index& shift, Boundary boundary) {
  const auto& d = f.domain();
  if (!d.is_full()) throw DomainError("translate: requires a full-mask grid");
  if (shift.size() != d.dim()) throw DomainError("translate: shift has wrong dimension");
  const std::size_t n = d.dim();
  std::vector<double> out(d.total_points(), 0.0);
  for (std::size_t lin = 0; lin < out.size(); ++lin) {
    auto idx = d.unravel(lin);
    bool inside = true;
    for (std::size_t a = 0; a < n; ++a) {
      auto ext = static_cast<std::int64_t>(d.shape()[a]);
      idx[a] -= shift[a];
      if (boundary == Boundary::periodic) {
        idx[a] = ((idx[a] % ext) + ext) % ext;
      } else if (idx[a] < 0 || idx[a] >= ext) {
        inside = false;
      }
    }
    if (inside) out[lin] = f.values()[d.ravel(idx)];
  }
  return GridFunction(d, std::move(out));
}

}  // namespace morrey
