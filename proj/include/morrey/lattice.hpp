// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Lattice shells: the squared index radii s >= 1 that are sums of n
// squares. The sampled radii of every ball functional are h*sqrt(s).
#pragma once

#include <cstddef>
#include <cstdint>

namespace morrey {

using Shell = std::uint64_t;

bool is_shell(Shell s, std::size_t n);
/// Smallest shell strictly above s.
Shell next_shell(Shell s, std::size_t n);
/// Largest shell strictly below s; 0 if none.
Shell prev_shell(Shell s, std::size_t n);

double shell_radius(Shell s, double h);

/// Smallest shell whose radius is >= r (r >= 0).
Shell first_shell_at_or_above(double r, double h, std::size_t n);
/// Largest shell whose radius is < r; 0 if none. r may be +inf only when
/// the caller never dereferences the result, so it is rejected.
Shell last_shell_below(double r, double h, std::size_t n);

}  // namespace morrey
