// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Discrete generalized Morrey functional
//
//   |f|_{rho,w,p,Omega} = sup_{x, r < rho} w(r) ||f||_{L^p(B(x,r) cap Omega)}
//
// with ||g||_{L^p(S)} = (h^n sum_S |g|^p)^{1/p}. Radii are sampled on the
// lattice shells r = h sqrt(s), balls are strict in index space
// (|y - x|^2 < s), and centers are grid points.
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "morrey/core.hpp"
#include "morrey/grid.hpp"
#include "morrey/lattice.hpp"
#include "morrey/weights.hpp"

namespace morrey {

enum class CenterPolicy { mask, closure };
enum class Engine { fast, oracle };

std::string to_string(CenterPolicy policy);
CenterPolicy parse_center_policy(std::string_view text);

struct MorreyParams {
  Exponent p{2.0};
  Weight weight;
  ExtReal rho = ExtReal::infinity();
};

struct NormResult {
  ExtReal value;
  Index argmax_center;
  double argmax_radius = 0.0;
  std::size_t radii_evaluated = 0;
  CenterPolicy center_policy = CenterPolicy::mask;
  std::string note;
};

/// Linear indices of the centers used under a policy, ascending. The
/// closure policy adds unmasked points with a masked axis neighbour.
std::vector<std::size_t> centers_for(const GridDomain& domain,
                                     CenterPolicy policy);

/// Per-shell maxima of ball sums of |f|^p over all centers; the expensive
/// part of the functional, independent of the weight.
struct BallProfile {
  std::size_t dim = 1;
  double h = 1.0;
  Exponent p{1.0};
  CenterPolicy policy = CenterPolicy::mask;
  /// Shells evaluated directly, ascending.
  std::vector<Shell> shells;
  /// max over centers of sum_{|y-x|^2 < shells[k]} |f(y)|^p.
  std::vector<double> max_sum;
  std::vector<std::size_t> argmax_center;
  /// Every shell above this covers the whole domain from cover_center.
  Shell cover_threshold = 0;
  std::size_t cover_center = 0;
  /// sum over all masked points of |f|^p.
  double total = 0.0;
  /// Shells were evaluated only below this radius.
  ExtReal rho_limit = ExtReal::infinity();
};

/// p must be finite. Shells at or above rho_limit are skipped.
BallProfile build_profile(const GridFunction& f, const Exponent& p,
                          CenterPolicy policy, ExtReal rho_limit,
                          Engine engine = Engine::fast);

/// The functional for one weight and truncation from a profile; rho must
/// not exceed the profile's rho_limit.
NormResult evaluate_profile(const BallProfile& profile, const GridDomain& domain,
                            const Weight& weight, ExtReal rho);

double lp_ball_norm(const GridFunction& f, const Ball& ball, const Exponent& p);
double lp_norm_omega(const GridFunction& f, const Exponent& p);

NormResult morrey_norm(const GridFunction& f, const MorreyParams& params,
                       CenterPolicy policy = CenterPolicy::mask,
                       Engine engine = Engine::fast);

/// rho_samples ascending, each <= params.rho.
std::vector<std::pair<double, ExtReal>> vanishing_modulus(
    const GridFunction& f, const MorreyParams& params,
    const std::vector<double>& rho_samples,
    CenterPolicy policy = CenterPolicy::mask, Engine engine = Engine::fast);

/// The norm for CappedPower(lambda) with rho = inf.
ExtReal capped_norm(const GridFunction& f, double lambda, const Exponent& p,
                    Engine engine = Engine::fast);

/// Worker threads for the fast path: MORREY_THREADS if set, else the
/// hardware concurrency.
std::size_t thread_budget();

}  // namespace morrey
