// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Standard bump mollifier sampled on the lattice, discrete convolution and
// approximation experiments.
#pragma once

#include <cstddef>
#include <vector>

#include "morrey/grid.hpp"
#include "morrey/norm.hpp"

namespace morrey {

/// exp(-1/(1-|x|^2)) on |x| < 1, scaled to support radius t and sampled at
/// the lattice offsets with |o h| < t, renormalized to h^n sum = 1.
struct BumpKernel {
  std::size_t dim = 1;
  double h = 1.0;
  double t = 1.0;
  std::vector<Index> offsets;
  std::vector<double> values;

  /// h^n sum |phi|.
  double l1_norm() const;
};

/// t must be an integer multiple of h with t >= h.
BumpKernel scale_kernel(std::size_t dim, double h, double t);

/// g(x) = h^n sum_y f(x - y) phi(y) with zero fill outside the grid.
GridFunction convolve(const GridFunction& f, const BumpKernel& phi);

struct ApproxPoint {
  double eps = 0.0;
  ExtReal morrey_err;
  double lp_err = 0.0;
  /// sup over lattice |y| < eps of |f - tau_y f| times h^n sum |phi|;
  /// zero when not requested.
  ExtReal zorko_bound;
};

/// f is first extended by zero onto the full-mask version of its grid.
/// eps_samples descending, each a multiple of h and >= h.
std::vector<ApproxPoint> approximation_curve(const GridFunction& f,
                                             const MorreyParams& params,
                                             const std::vector<double>& eps_samples,
                                             Engine engine = Engine::fast,
                                             bool with_zorko = true);

/// Integer m with eps = m h; throws DomainError otherwise.
std::size_t lattice_steps(double eps, double h);

}  // namespace morrey
