// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "morrey/battery.hpp"
#include "morrey/norm.hpp"
#include "morrey/transforms.hpp"
#include "support/oracle.hpp"

using namespace morrey;

namespace {

const ExtReal kInfR = ExtReal::infinity();

double fast(const GridFunction& f, const Weight& w, Exponent p, ExtReal rho,
            CenterPolicy policy = CenterPolicy::mask) {
  return morrey_norm(f, {p, w, rho}, policy, Engine::fast).value.value();
}

double slow(const GridFunction& f, const Weight& w, Exponent p, ExtReal rho,
            CenterPolicy policy = CenterPolicy::mask) {
  return morrey_norm(f, {p, w, rho}, policy, Engine::oracle).value.value();
}

double reference(const GridFunction& f, const Weight& w, Exponent p, ExtReal rho) {
  return oracle::morrey_norm(f, w, p.is_infinite() ? 0.0 : p.value(), rho).value();
}

}  // namespace

TEST_CASE("ball norms") {
  auto f = make_fixture(FixtureKind::constant, 1, 64, 1);
  const double h = f.domain().spacing();
  // An interior ball of radius r holds about 2r / h points.
  for (double r : {0.05, 0.1, 0.2}) {
    double v = lp_ball_norm(f, Ball{{0.5 + h / 2}, r}, Exponent(1));
    CHECK(std::fabs(v - 2 * r) <= h);
  }
  CHECK(lp_ball_norm(make_fixture(FixtureKind::zero, 1, 32, 1), Ball{{0.5}, 0.2}, Exponent(2)) == 0.0);
  CHECK(lp_ball_norm(GridFunction::constant(f.domain(), -3.0), Ball{{0.5}, 0.2},
                     Exponent::infinity()) == 3.0);
  CHECK(lp_ball_norm(f, Ball{{5.0}, 0.1}, Exponent::infinity()) == 0.0);
}

TEST_CASE("lp norms over the domain") {
  auto f = make_fixture(FixtureKind::constant, 1, 128, 1);
  CHECK(std::fabs(lp_norm_omega(f, Exponent(2)) - 1.0) <= f.domain().spacing());
  CHECK(lp_norm_omega(make_fixture(FixtureKind::zero, 2, 8, 1), Exponent(1)) == 0.0);
  GridDomain one({3}, 0.1, {0.0}, {0, 1, 0});
  CHECK(lp_norm_omega(GridFunction(one, {-2.0}), Exponent(1)) == doctest::Approx(0.2));
}

TEST_CASE("analytic value for the constant function") {
  auto f = make_fixture(FixtureKind::constant, 1, 512, 1);
  double v = fast(f, Weight::power(0.5), Exponent(1), 0.25);
  CHECK(std::fabs(v - 1.0) <= 0.02);
  CHECK(fast(f, Weight::power(0), Exponent::infinity(), 0.25) == 1.0);
  CHECK(fast(f, Weight::power(0), Exponent::infinity(), kInfR) == 1.0);
  CHECK(fast(make_fixture(FixtureKind::zero, 1, 64, 1), Weight::capped(1), Exponent(2), kInfR) == 0.0);
}

TEST_CASE("absolute homogeneity") {
  auto f = make_fixture(FixtureKind::random, 1, 128, 3);
  for (auto p : {Exponent(1), Exponent(2), Exponent::infinity()}) {
    double a = fast(f, Weight::capped(0.25), p, kInfR);
    double b = fast(scale(f, -2.5), Weight::capped(0.25), p, kInfR);
    CHECK(b == doctest::Approx(2.5 * a).epsilon(1e-13));
  }
}

TEST_CASE("fast path agrees with both oracles") {
  std::vector<Weight> ws = {Weight::power(0.25), Weight::power(1.0), Weight::truncated(0.5, 0.2),
                            Weight::capped(0.5), Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5})};
  std::vector<ExtReal> rhos = {0.1, 0.3, kInfR};
  for (auto kind : {FixtureKind::random, FixtureKind::bump, FixtureKind::singular}) {
    for (std::size_t n : {1u, 2u}) {
      auto f = make_fixture(kind, n, n == 1 ? 40 : 10, 7);
      for (const auto& w : ws) {
        for (auto p : {Exponent(1), Exponent(2), Exponent(3.5), Exponent::infinity()}) {
          for (auto rho : rhos) {
            double a = fast(f, w, p, rho);
            double b = slow(f, w, p, rho);
            double c = reference(f, w, p, rho);
            CAPTURE(w.spec());
            CAPTURE(p.to_string());
            CAPTURE(rho.to_string());
            CHECK(a == doctest::Approx(b).epsilon(1e-12));
            CHECK(a == doctest::Approx(c).epsilon(1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("irregular masks") {
  auto d = GridDomain::unit_cube(2, 9, 1);
  std::vector<std::uint8_t> mask = d.mask();
  Rng rng(5);
  for (auto& m : mask) m = m && rng.uniform() < 0.6;
  mask[d.masked_points()[0]] = 1;
  auto f = random_field(d.with_mask(mask), 11);
  for (auto p : {Exponent(1), Exponent(2), Exponent::infinity()}) {
    double a = fast(f, Weight::power(0.75), p, kInfR);
    CHECK(a == doctest::Approx(reference(f, Weight::power(0.75), p, kInfR)).epsilon(1e-12));
    CHECK(fast(f, Weight::power(0.75), p, 0.2, CenterPolicy::closure) ==
          doctest::Approx(slow(f, Weight::power(0.75), p, 0.2, CenterPolicy::closure)).epsilon(1e-12));
  }
}

TEST_CASE("capped weight with zero exponent is the Lp norm") {
  for (auto kind : {FixtureKind::constant, FixtureKind::random, FixtureKind::singular}) {
    auto f = make_fixture(kind, 1, 128, 2);
    for (auto p : {Exponent(1), Exponent(2), Exponent::infinity()}) {
      CHECK(capped_norm(f, 0.0, p).value() ==
            doctest::Approx(lp_norm_omega(f, p)).epsilon(1e-14));
    }
  }
}

TEST_CASE("capped norm relation to the plain power norm") {
  for (auto kind : {FixtureKind::random, FixtureKind::singular, FixtureKind::box}) {
    auto f = make_fixture(kind, 1, 128, 9);
    for (double lambda : {0.25, 0.5, 1.0}) {
      double c = capped_norm(f, lambda, Exponent(2)).value();
      double pw = fast(f, Weight::power(lambda), Exponent(2), kInfR);
      double k = std::max(1.0, std::pow(f.domain().diameter(), lambda));
      CHECK(c >= pw * (1 - 1e-12));
      CHECK(c <= k * pw * (1 + 1e-12));
    }
  }
}

TEST_CASE("vanishing modulus") {
  auto f = make_fixture(FixtureKind::constant, 1, 512, 1);
  MorreyParams params{Exponent(1), Weight::power(0.5), kInfR};
  std::vector<double> rhos = {1.0 / 16, 1.0 / 8, 1.0 / 4};
  auto curve = vanishing_modulus(f, params, rhos);
  REQUIRE(curve.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(curve[i].first == rhos[i]);
    CHECK(std::fabs(curve[i].second.value() - 2 * std::sqrt(rhos[i])) <= 0.02);
    CHECK(curve[i].second.value() == doctest::Approx(fast(f, params.weight, params.p, rhos[i])).epsilon(1e-15));
  }
  auto zero = vanishing_modulus(make_fixture(FixtureKind::zero, 1, 64, 1), params, rhos);
  for (const auto& [r, v] : zero) CHECK(v == ExtReal(0.0));
  CHECK_THROWS_AS(vanishing_modulus(f, params, {0.25, 0.125}), DomainError);
  CHECK_THROWS_AS(vanishing_modulus(f, {Exponent(1), Weight::power(0.5), 0.1}, {0.2}), DomainError);
}

TEST_CASE("exponent parsing") {
  CHECK(parse_exponent("inf").is_infinite());
  CHECK(parse_exponent("2.5").value() == 2.5);
  CHECK_THROWS(parse_exponent("0.5"));
  CHECK_THROWS(parse_exponent("abc"));
  CHECK(holder_exponent(Exponent(3), Exponent(6)).value() == 2.0);
  CHECK(holder_exponent(Exponent::infinity(), Exponent::infinity()).is_infinite());
  CHECK(parse_center_policy("closure") == CenterPolicy::closure);
  CHECK_THROWS_AS(parse_center_policy("edge"), ParseError);
}
