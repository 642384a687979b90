// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "morrey/battery.hpp"
#include "morrey/lattice.hpp"
#include "morrey/report.hpp"
#include "morrey/verify.hpp"
#include "support/oracle.hpp"

using namespace morrey;

TEST_CASE("accumulator semantics") {
  CaseAccumulator acc("demo", 1e-9);
  acc.add(1.0, 2.0, "a");
  acc.add(3.0, ExtReal::infinity().value(), "b");
  auto r = acc.finish();
  CHECK(r.pass);
  CHECK(r.cases == 2);
  CHECK(r.ratio == 0.5);
  CHECK(r.notes.find("worst: a") != std::string::npos);
  acc.add(2.0 + 1e-6, 2.0, "c");
  r = acc.finish();
  CHECK_FALSE(r.pass);
  CHECK(r.lhs == 2.0 + 1e-6);
  CHECK(r.notes.find("failures=1") != std::string::npos);

  CaseAccumulator edge("edge");
  edge.add(1.0 + 5e-10, 1.0, "inside tolerance");
  edge.add(0.0, 0.0, "zero");
  CHECK(edge.finish().pass);
  CaseAccumulator blowup("blowup");
  blowup.add(ExtReal::infinity(), ExtReal(4.0), "inf lhs");
  CHECK_FALSE(blowup.finish().pass);
  CHECK(CaseAccumulator("empty").finish().notes == "no applicable cases");
}

TEST_CASE("safe ratio") {
  CHECK(safe_ratio(0.0, 0.0) == 0.0);
  CHECK(std::isinf(safe_ratio(1.0, 0.0)));
  CHECK(safe_ratio(1.0, 4.0) == 0.25);
}

TEST_CASE("measure weighted sup against point counts") {
  auto d = GridDomain::unit_cube(2, 7, 1);
  const double h = d.spacing();
  auto g = Weight::power(0.0).pieces();
  for (auto [lo, hi] : {std::pair{0.0, 0.2}, std::pair{0.2, 0.5}, std::pair{0.3, 10.0}}) {
    // Largest point count in any strict ball with a sampled radius in [lo, hi).
    double best = 0.0;
    for (Shell s = 1; s < 400; ++s) {
      if (!oracle::sum_of_squares(s, 2)) continue;
      double r = h * std::sqrt(static_cast<double>(s));
      if (r < lo || r >= hi) continue;
      for (auto x : d.masked_points()) {
        double count = 0;
        for (auto y : d.masked_points()) count += oracle::squared_distance(d, x, y) < s;
        best = std::max(best, count);
      }
    }
    auto got = measure_weighted_sup(d, CenterPolicy::mask, g, 1.0, lo, hi);
    CHECK(got.value() == doctest::Approx(best * h * h).epsilon(1e-14));
  }
}

TEST_CASE("catalogue") {
  CHECK(all_check_ids().size() == 26);
  CHECK(all_check_ids().front() == "moud-equivalence");
  CHECK(parse_suite("mulgm1") == std::vector<std::string>{"mulgm1"});
  CHECK(parse_suite("all").size() == 26);
  CHECK_THROWS_AS(parse_suite("mulgm1,nonsense"), ParseError);
  CHECK_THROWS_AS(run_check("nonsense", Battery{}), ParseError);
  auto empty = run_suite({}, Battery{});
  CHECK(empty.reports.empty());
  CHECK(empty.summary.all_pass());
  auto ordered = run_suite({"molat", "prem"}, Battery{42, 1, 32});
  REQUIRE(ordered.reports.size() == 2);
  CHECK(ordered.reports[0].check_id == "prem");
  CHECK(ordered.reports[1].check_id == "molat");
}

TEST_CASE("multiplication equality case") {
  auto f = make_fixture(FixtureKind::constant, 1, 256, 1);
  CaseAccumulator acc("mulgm1");
  cases::mulgm1(acc, f, f, Weight::power(0.25), Weight::power(0.25), Exponent(2), Exponent(2),
                0.25, Engine::fast);
  auto r = acc.finish();
  CHECK(r.pass);
  CHECK(std::fabs(r.ratio - 1.0) <= 1e-9);
}

TEST_CASE("restriction and extension cases") {
  auto f = make_fixture(FixtureKind::random, 1, 64, 3);
  auto sub = f.domain().mask();
  for (std::size_t i = 0; i < sub.size(); i += 2) sub[i] = 0;
  CaseAccumulator r1("prelprgm-i");
  cases::restriction(r1, f, sub, {Exponent(2), Weight::capped(0.5), ExtReal::infinity()},
                     Engine::fast);
  CHECK(r1.finish().pass);
  CHECK(r1.finish().ratio <= 1.0);

  auto one = make_fixture(FixtureKind::constant, 1, 512, 1);
  CaseAccumulator r2("mrhoext1");
  cases::extension(r2, one, 64, {Exponent(1), Weight::power(1.0), 0.125}, 2.0, Engine::fast);
  auto rep = r2.finish();
  CHECK(rep.pass);
  CHECK(rep.ratio <= 1.0);
}

TEST_CASE("every check passes on a small battery") {
  for (std::size_t n : {1u, 2u}) {
    Battery b{7, n, n == 1 ? 64u : 16u};
    auto res = run_suite(all_check_ids(), b);
    for (const auto& r : res.reports) {
      CAPTURE(r.check_id);
      CAPTURE(r.notes);
      CHECK(r.pass);
      CHECK(r.cases > 0);
      CHECK(r.ratio <= 1.0 + r.tol);
    }
    CHECK(res.summary.total == 26);
  }
}

TEST_CASE("the oracle engine agrees on the verdicts") {
  SuiteOptions slow;
  slow.engine = Engine::oracle;
  auto a = run_suite({"prem", "mulgm1", "homogeneity"}, Battery{1, 1, 32});
  auto b = run_suite({"prem", "mulgm1", "homogeneity"}, Battery{1, 1, 32}, slow);
  for (std::size_t i = 0; i < a.reports.size(); ++i) {
    CHECK(a.reports[i].pass == b.reports[i].pass);
    CHECK(a.reports[i].ratio == doctest::Approx(b.reports[i].ratio).epsilon(1e-12));
  }
}

TEST_CASE("corrupted right-hand sides are caught") {
  SuiteOptions bad;
  bad.rhs_scale = 0.5;
  auto res = run_suite(all_check_ids(), Battery{42, 1, 64}, bad);
  for (const auto& r : res.reports) {
    // Sharp or exact checks must notice a halved bound.
    if (r.check_id == "mocls" || r.check_id == "motri" || r.check_id == "zorko") continue;
    CAPTURE(r.check_id);
    CHECK_FALSE(r.pass);
  }
  CHECK(res.summary.failed >= 23);
}

TEST_CASE("reports are deterministic") {
  Battery b{42, 1, 64};
  auto a = run_suite(parse_suite("prem,minint,molat"), b);
  auto c = run_suite(parse_suite("prem,minint,molat"), b);
  CHECK(reports_json(a.reports) == reports_json(c.reports));
  auto other = run_suite(parse_suite("prem,minint,molat"), Battery{43, 1, 64});
  CHECK(a.reports[0].inputs_digest != other.reports[0].inputs_digest);
  auto csv = reports_csv(a.reports);
  CHECK(csv.rfind("check_id,lhs,rhs,ratio,pass,tol,inputs_digest\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("json writer") {
  JsonWriter w;
  w.begin_object().field("a", 0.1).field("b", std::numeric_limits<double>::infinity());
  w.key("c").begin_array().value(true).value("x\"y").end_array();
  w.key("d").begin_object().end_object();
  w.end_object();
  CHECK(w.str() ==
        "{\n  \"a\": 0.10000000000000001,\n  \"b\": \"inf\",\n  \"c\": [\n    true,\n"
        "    \"x\\\"y\"\n  ],\n  \"d\": {}\n}\n");
}
