// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Weight functions w: (0, inf) -> [0, inf) and their derived constants.
#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "morrey/core.hpp"
#include "morrey/lattice.hpp"

namespace morrey {

/// coeff * r^exponent on [lo, hi).
struct Piece {
  double lo = 0.0;
  double hi = 0.0;
  double coeff = 0.0;
  double exponent = 0.0;

  double eval(double r) const;
};

/// Piecewise monomial on (0, inf); pieces are contiguous, the first starts
/// at 0 and the last ends at +inf.
class PiecewiseMonomial {
 public:
  PiecewiseMonomial() = default;
  explicit PiecewiseMonomial(std::vector<Piece> pieces);

  const std::vector<Piece>& pieces() const { return pieces_; }
  double eval(double r) const;

  PiecewiseMonomial times(const PiecewiseMonomial& other) const;
  /// Throws IotaUndefined if the divisor vanishes on some piece.
  PiecewiseMonomial over(const PiecewiseMonomial& other) const;
  /// Multiplies by r^e.
  PiecewiseMonomial times_power(double e) const;

  /// Continuum sup over r in (a, b) or [a, b) (the endpoint a matters only
  /// through limits, so both read the same). Empty interval gives 0.
  ExtReal sup_between(double a, double b) const;

  struct ShellSup {
    ExtReal value;
    Shell shell = 0;  // 0 when no shell is sampled
  };
  /// sup of eval(h*sqrt(s)) over shells s > s_lo with h*sqrt(s) < rho.
  /// On ties the smallest shell wins.
  ShellSup sup_on_shells(double h, std::size_t n, Shell s_lo,
                         ExtReal rho) const;

 private:
  std::vector<Piece> pieces_;
};

struct Power {
  double lambda = 0.0;
};
struct TruncatedPower {
  double lambda = 0.0;
  double rho_bar = 1.0;
};
struct CappedPower {
  double lambda = 0.0;
};
/// Piecewise constant: values[i] on [breaks[i], breaks[i+1]); values[0]
/// also applies below breaks[0], the last value up to +inf.
struct Table {
  std::vector<double> breaks;
  std::vector<double> values;
};

class Weight {
 public:
  using Variant = std::variant<Power, TruncatedPower, CappedPower, Table>;

  Weight() : Weight(Power{0.0}) {}
  Weight(Variant v);  // NOLINT: families convert

  static Weight power(double lambda) { return Weight(Power{lambda}); }
  static Weight truncated(double lambda, double rho_bar) {
    return Weight(TruncatedPower{lambda, rho_bar});
  }
  static Weight capped(double lambda) { return Weight(CappedPower{lambda}); }
  static Weight table(std::vector<double> breaks, std::vector<double> values) {
    return Weight(Table{std::move(breaks), std::move(values)});
  }

  const Variant& variant() const { return v_; }
  const PiecewiseMonomial& pieces() const { return pieces_; }

  double eval(double r) const;

  /// eta_w = inf over r > 0.
  double inf_over_all() const;
  /// varsigma_w = sup over r > 0.
  ExtReal sup_over_all() const;
  /// sup over r >= a.
  ExtReal tail_sup(double a) const;
  /// sigma_w = sup_r w(r) / w(2r); throws DoublingUndefined if w has zeros.
  ExtReal doubling_constant() const;

  bool strictly_positive() const;

  /// Round-trippable CLI form, e.g. "power:0.5". Tables print inline as
  /// "table[b0=v0;b1=v1]".
  std::string spec() const;

 private:
  Variant v_;
  PiecewiseMonomial pieces_;
};

/// Parses power:L, trunc:L:R, capped:L, table:path.csv.
Weight parse_weight(std::string_view spec);
/// Rows `r_break,value`; a non-numeric first row is a header.
Weight table_from_csv(std::string_view text);

/// Pointwise product of two weights of the same family.
Weight product(const Weight& a, const Weight& b);

/// limsup_{r -> 0} w(r) r^{n/p}.
ExtReal small_r_limsup(const Weight& w, const Exponent& p, std::size_t n);
/// lim_{rho -> 0} sup_{r <= rho} w(r) r^{n/p} = 0.
bool small_r_sup_vanishes(const Weight& w, const Exponent& p, std::size_t n);
/// Finite tail sup somewhere and bounded w(r) r^{n/p} near 0.
bool is_W_p_infinity(const Weight& w, const Exponent& p, std::size_t n);

/// sup_{0 < r < rho} v2(r) r^{n/q} / (v1(r) r^{n/p}); requires p >= q and
/// v1 > 0, else IotaUndefined / DomainError.
ExtReal iota_constant(const Weight& v1, const Weight& v2, const Exponent& p,
                      const Exponent& q, ExtReal rho, std::size_t n);
/// Smallest c with v2 r^{n/q} <= c v1 r^{n/p} on (0, min(1, rho)) and
/// v2 <= c v1 on [1, rho).
ExtReal jay_constant(const Weight& v1, const Weight& v2, const Exponent& p,
                     const Exponent& q, ExtReal rho, std::size_t n);

}  // namespace morrey
