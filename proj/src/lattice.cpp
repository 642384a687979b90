// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/lattice.hpp"

#include <cmath>

#include "morrey/core.hpp"

namespace morrey {

namespace {

Shell isqrt(Shell s) {
  auto r = static_cast<Shell>(std::sqrt(static_cast<double>(s)));
  while (r * r > s) --r;
  while ((r + 1) * (r + 1) <= s) ++r;
  return r;
}

bool is_square(Shell s) {
  Shell r = isqrt(s);
  return r * r == s;
}

bool is_two_squares(Shell s) {
  for (Shell a = 0; 2 * a * a <= s; ++a) {
    if (is_square(s - a * a)) return true;
  }
  return false;
}

// Legendre: s is a sum of three squares unless s = 4^a (8b + 7).
bool is_three_squares(Shell s) {
  while (s != 0 && s % 4 == 0) s /= 4;
  return s % 8 != 7;
}

}  // namespace

bool is_shell(Shell s, std::size_t n) {
  if (s == 0) return false;
  switch (n) {
    case 0:
      throw DomainError("lattice: dimension must be >= 1");
    case 1:
      return is_square(s);
    case 2:
      return is_two_squares(s);
    case 3:
      return is_three_squares(s);
    default:
      return true;
  }
}

Shell next_shell(Shell s, std::size_t n) {
  if (n == 1) {
    Shell r = isqrt(s) + 1;
    return r * r;
  }
  Shell t = s + 1;
  while (!is_shell(t, n)) ++t;
  return t;
}

Shell prev_shell(Shell s, std::size_t n) {
  if (s <= 1) return 0;
  if (n == 1) {
    Shell r = isqrt(s - 1);
    return r * r;
  }
  Shell t = s - 1;
  while (t > 0 && !is_shell(t, n)) --t;
  return t;
}

double shell_radius(Shell s, double h) {
  return h * std::sqrt(static_cast<double>(s));
}

Shell first_shell_at_or_above(double r, double h, std::size_t n) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("lattice: radius must be finite and >= 0");
  }
  double q = r / h;
  if (q * q > 1e15) throw DomainError("lattice: radius too large for shells");
  double guess = std::floor(q * q) - 2.0;
  Shell s = guess < 1.0 ? 1 : static_cast<Shell>(guess);
  if (!is_shell(s, n)) s = next_shell(s, n);
  while (s > 1) {
    Shell p = prev_shell(s, n);
    if (p == 0 || shell_radius(p, h) < r) break;
    s = p;
  }
  while (shell_radius(s, h) < r) s = next_shell(s, n);
  return s;
}

Shell last_shell_below(double r, double h, std::size_t n) {
  if (!std::isfinite(r)) throw DomainError("lattice: radius must be finite");
  if (!(r > 0.0)) return 0;
  Shell s = first_shell_at_or_above(r, h, n);
  return prev_shell(s, n);
}

}  // namespace morrey
