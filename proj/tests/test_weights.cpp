// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "morrey/lattice.hpp"
#include "morrey/weights.hpp"
#include "support/oracle.hpp"

using namespace morrey;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Sup of w over sampled radii by enumeration up to a bound.
double shell_sup_brute(const Weight& w, double h, std::size_t n, Shell s_lo, double rho,
                       Shell* where) {
  double best = 0.0;
  *where = 0;
  for (Shell s = s_lo + 1; h * std::sqrt(static_cast<double>(s)) < rho; ++s) {
    if (!oracle::sum_of_squares(s, n)) continue;
    double v = w.eval(h * std::sqrt(static_cast<double>(s)));
    if (v > best) {
      best = v;
      *where = s;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("family evaluation") {
  CHECK(Weight::capped(2).eval(0.5) == doctest::Approx(4.0));
  CHECK(Weight::capped(2).eval(2.0) == 1.0);
  CHECK(Weight::truncated(1, 0.5).eval(0.7) == 0.0);
  CHECK(Weight::truncated(1, 0.5).eval(0.25) == doctest::Approx(4.0));
  CHECK(Weight::power(0.5).eval(0.25) == doctest::Approx(2.0));
  auto t = Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5});
  CHECK(t.eval(0.05) == 1.0);
  CHECK(t.eval(0.1) == 2.5);
  CHECK(t.eval(0.29) == 2.5);
  CHECK(t.eval(0.3) == 0.5);
  CHECK(t.eval(100.0) == 0.5);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Weight::power(-1), DomainError);
  CHECK_THROWS_AS(Weight::truncated(1, 0.0), DomainError);
  CHECK_THROWS_AS(Weight::table({0.0, 0.2, 0.1}, {1, 1, 1}), DomainError);
  CHECK_THROWS_AS(Weight::table({0.0, 0.1}, {1.0, -1.0}), DomainError);
  CHECK_THROWS_AS(Weight::table({0.0}, {1.0, 2.0}), DomainError);
}

TEST_CASE("inf and sup over all radii") {
  CHECK(Weight::capped(1).inf_over_all() == 1.0);
  CHECK(Weight::capped(1).sup_over_all().is_infinite());
  CHECK(Weight::power(0).inf_over_all() == 1.0);
  CHECK(Weight::power(0).sup_over_all() == ExtReal(1.0));
  CHECK(Weight::truncated(0.5, 0.3).inf_over_all() == 0.0);
  CHECK(Weight::power(1).inf_over_all() == 0.0);
  auto t = Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5});
  CHECK(t.inf_over_all() == 0.5);
  CHECK(t.sup_over_all() == ExtReal(2.5));
}

TEST_CASE("tail sup") {
  CHECK(Weight::power(2).tail_sup(0.5) == ExtReal(4.0));
  CHECK(Weight::truncated(1, 1).tail_sup(2) == ExtReal(0.0));
  CHECK(Weight::capped(1.5).tail_sup(3) == ExtReal(1.0));
}

TEST_CASE("doubling constant") {
  CHECK(Weight::power(3).doubling_constant().value() == doctest::Approx(8.0));
  CHECK(Weight::capped(3).doubling_constant().value() == doctest::Approx(8.0));
  CHECK(Weight::power(0).doubling_constant() == ExtReal(1.0));
  CHECK_THROWS_AS(Weight::truncated(1, 0.5).doubling_constant(), DoublingUndefined);
  // w(r)/w(2r) peaks where r < 0.1 <= 2r: 1 / 2.5 or 2.5 / 0.5.
  auto t = Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5});
  CHECK(t.doubling_constant().value() == doctest::Approx(5.0));
}

TEST_CASE("small radius behaviour") {
  const std::size_t n = 1;
  Exponent p(2);
  CHECK(small_r_limsup(Weight::power(0.5), p, n).value() == doctest::Approx(1.0));
  CHECK(small_r_limsup(Weight::power(0.25), p, n) == ExtReal(0.0));
  CHECK(small_r_sup_vanishes(Weight::power(0.25), p, n));
  CHECK(small_r_limsup(Weight::power(1.0), p, n).is_infinite());
  CHECK(is_W_p_infinity(Weight::power(0.5), p, n));
  CHECK(is_W_p_infinity(Weight::power(0.0), p, n));
  CHECK_FALSE(is_W_p_infinity(Weight::power(0.75), p, n));
  CHECK(is_W_p_infinity(Weight::capped(0), Exponent::infinity(), 3));
}

TEST_CASE("embedding constants") {
  Exponent p(2), q(1);
  auto v1 = Weight::power(0.25);
  CHECK(iota_constant(v1, Weight::power(0.75), p, q, ExtReal::infinity(), 1).value() ==
        doctest::Approx(1.0));
  CHECK(iota_constant(v1, Weight::power(0.25), p, q, 0.5, 1).value() ==
        doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
  CHECK(iota_constant(v1, v1, p, p, 0.5, 1).value() == doctest::Approx(1.0));
  CHECK(jay_constant(v1, Weight::power(0.25), p, q, 0.5, 1) ==
        iota_constant(v1, Weight::power(0.25), p, q, 0.5, 1));
  CHECK(jay_constant(v1, v1, p, p, ExtReal::infinity(), 1).value() == doctest::Approx(1.0));
  CHECK(jay_constant(Weight::power(0.5), Weight::power(1.0), p, q, ExtReal::infinity(), 1)
            .is_finite());
  CHECK_THROWS_AS(iota_constant(v1, v1, q, p, 1.0, 1), DomainError);
  CHECK_THROWS_AS(iota_constant(Weight::truncated(0, 0.2), v1, p, q, 1.0, 1), IotaUndefined);
}

TEST_CASE("parse weight specs") {
  CHECK(parse_weight("power:0.5").eval(0.25) == doctest::Approx(2.0));
  CHECK(parse_weight("trunc:1:0.5").eval(0.6) == 0.0);
  CHECK(parse_weight("capped:2").eval(4.0) == 1.0);
  CHECK(parse_weight("capped:2").spec() == "capped:2");
  CHECK_THROWS_AS(parse_weight("cubic:1"), ParseError);
  CHECK_THROWS_AS(parse_weight("power:"), ParseError);
  CHECK_THROWS_AS(parse_weight("power:-1"), ParseError);
  auto t = table_from_csv("r_break,value\n0,3\n0.5,1\n");
  CHECK(t.eval(0.2) == 3.0);
  CHECK(t.eval(0.7) == 1.0);
}

TEST_CASE("products") {
  auto w = product(Weight::power(0.25), Weight::power(0.5));
  CHECK(w.eval(0.01) == doctest::Approx(std::pow(0.01, -0.75)));
  auto c = product(Weight::capped(1), Weight::capped(0.5));
  CHECK(c.eval(0.25) == doctest::Approx(8.0));
  CHECK(c.eval(2.0) == 1.0);
  auto t = product(Weight::table({0.0, 0.2}, {2.0, 1.0}), Weight::table({0.0, 0.1}, {3.0, 5.0}));
  CHECK(t.eval(0.05) == 6.0);
  CHECK(t.eval(0.15) == 10.0);
  CHECK(t.eval(0.5) == 5.0);
  CHECK_THROWS(product(Weight::power(1), Weight::capped(1)));
}

TEST_CASE("shell sup matches enumeration") {
  const std::vector<Weight> ws = {Weight::power(0.5), Weight::power(0.0), Weight::capped(1.0),
                                  Weight::truncated(0.5, 0.3),
                                  Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5})};
  for (std::size_t n : {1u, 2u, 3u}) {
    for (const auto& w : ws) {
      for (Shell s_lo : {0u, 3u, 50u}) {
        for (double rho : {0.2, 0.45, 1.5}) {
          Shell where = 0;
          double want = shell_sup_brute(w, 1.0 / 32, n, s_lo, rho, &where);
          auto got = w.pieces().sup_on_shells(1.0 / 32, n, s_lo, rho);
          CAPTURE(w.spec());
          CAPTURE(n);
          CHECK(got.value.value() == doctest::Approx(want).epsilon(1e-14));
          if (want > 0.0) CHECK(got.shell == where);
        }
      }
    }
  }
  auto inf_tail = Weight::power(0.0).pieces().sup_on_shells(0.01, 1, 0, ExtReal::infinity());
  CHECK(inf_tail.value == ExtReal(1.0));
  CHECK(inf_tail.shell == 1);
  CHECK(Weight::power(0.0).pieces().times_power(1.0).sup_on_shells(0.01, 1, 0, kInf).value
            .is_infinite());
}
