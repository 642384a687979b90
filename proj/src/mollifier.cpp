// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "morrey/transforms.hpp"

namespace morrey {

namespace {

// Lattice offsets o with |o|^2 < m^2, row-major order.
std::vector<Index> disc_offsets(std::size_t n, std::int64_t m) {
  std::vector<Index> out;
  Index cur(n, -(m - 1));
  const std::int64_t m2 = m * m;
  while (true) {
    std::int64_t d2 = 0;
    for (auto c : cur) d2 += c * c;
    if (d2 < m2) out.push_back(cur);
    std::size_t a = n;
    while (a-- > 0) {
      if (cur[a] < m - 1) {
        ++cur[a];
        break;
      }
      cur[a] = -(m - 1);
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

}  // namespace

std::size_t lattice_steps(double eps, double h) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("mollifier: eps must be positive");
  double m = eps / h;
  double rounded = std::round(m);
  if (std::fabs(m - rounded) > 1e-9 * std::max(1.0, m)) {
    throw DomainError("mollifier: eps must be an integer multiple of h");
  }
  if (rounded < 1.0) throw DomainError("mollifier: eps must be >= h");
  return static_cast<std::size_t>(rounded);
}

double BumpKernel::l1_norm() const {
  double s = 0.0;
  for (double v : values) s += std::fabs(v);
  return std::pow(h, static_cast<double>(dim)) * s;
}

BumpKernel scale_kernel(std::size_t dim, double h, double t) {
  if (dim == 0) throw DomainError("mollifier: dimension must be >= 1");
  const auto m = static_cast<std::int64_t>(lattice_steps(t, h));
  BumpKernel k;
  k.dim = dim;
  k.h = h;
  k.t = t;
  k.offsets = disc_offsets(dim, m);
  const double m2 = static_cast<double>(m * m);
  double sum = 0.0;
  for (const auto& o : k.offsets) {
    std::int64_t d2 = 0;
    for (auto c : o) d2 += c * c;
    double u = static_cast<double>(d2) / m2;
    double v = std::exp(-1.0 / (1.0 - u));
    k.values.push_back(v);
    sum += v;
  }
  const double scale = 1.0 / (std::pow(h, static_cast<double>(dim)) * sum);
  for (auto& v : k.values) v *= scale;
  return k;
}

GridFunction convolve(const GridFunction& f, const BumpKernel& phi) {
  const auto& d = f.domain();
  if (!d.is_full()) throw DomainError("convolve: requires a full-mask grid");
  if (phi.dim != d.dim()) throw DomainError("convolve: kernel dimension mismatch");
  if (std::fabs(phi.h - d.spacing()) > 1e-15 * d.spacing()) {
    throw DomainError("convolve: kernel spacing differs from the grid");
  }
  const std::size_t n = d.dim();
  const double hn = std::pow(d.spacing(), static_cast<double>(n));
  std::vector<double> out(d.total_points(), 0.0);
  for (std::size_t lin = 0; lin < out.size(); ++lin) {
    auto x = d.unravel(lin);
    double acc = 0.0;
    for (std::size_t j = 0; j < phi.offsets.size(); ++j) {
      bool inside = true;
      std::size_t src = 0;
      for (std::size_t a = 0; a < n; ++a) {
        std::int64_t y = x[a] - phi.offsets[j][a];
        if (y < 0 || y >= static_cast<std::int64_t>(d.shape()[a])) {
          inside = false;
          break;
        }
        src += static_cast<std::size_t>(y) * d.strides()[a];
      }
      if (inside) acc += f.values()[src] * phi.values[j];
    }
    out[lin] = hn * acc;
  }
  return GridFunction(d, std::move(out));
}

std::vector<ApproxPoint> approximation_curve(const GridFunction& f,
                                             const MorreyParams& params,
                                             const std::vector<double>& eps_samples,
                                             Engine engine, bool with_zorko) {
  std::vector<ApproxPoint> out;
  if (eps_samples.empty()) return out;
  const auto full = extend_to_full(f);
  const auto& d = full.domain();
  const double h = d.spacing();
  std::vector<std::size_t> steps;
  for (std::size_t i = 0; i < eps_samples.size(); ++i) {
    steps.push_back(lattice_steps(eps_samples[i], h));
    if (i > 0 && !(eps_samples[i] < eps_samples[i - 1])) {
      throw DomainError("mollifier: eps samples must be descending");
    }
  }

  // Translation moduli for every shift inside the widest kernel.
  std::vector<std::pair<std::int64_t, ExtReal>> shift_norms;
  if (with_zorko) {
    for (const auto& y : disc_offsets(d.dim(), static_cast<std::int64_t>(steps.front()))) {
      std::int64_t d2 = 0;
      for (auto c : y) d2 += c * c;
      auto diff = subtract(full, translate(full, y, Boundary::zero_fill));
      shift_norms.emplace_back(d2, morrey_norm(diff, params, CenterPolicy::mask, engine).value);
    }
  }

  for (std::size_t i = 0; i < eps_samples.size(); ++i) {
    auto phi = scale_kernel(d.dim(), h, static_cast<double>(steps[i]) * h);
    auto err = subtract(full, convolve(full, phi));
    ApproxPoint pt;
    pt.eps = eps_samples[i];
    pt.morrey_err = morrey_norm(err, params, CenterPolicy::mask, engine).value;
    pt.lp_err = lp_norm_omega(err, params.p);
    pt.zorko_bound = 0.0;
    if (with_zorko) {
      const auto m2 = static_cast<std::int64_t>(steps[i] * steps[i]);
      ExtReal mod = 0.0;
      for (const auto& [d2, v] : shift_norms) {
        if (d2 < m2) mod = max(mod, v);
      }
      pt.zorko_bound = mod.is_infinite() ? mod : ExtReal(mod.finite() * phi.l1_norm());
    }
    out.push_back(pt);
  }
  return out;
}

}  // namespace morrey
