// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "morrey/battery.hpp"
#include "morrey/cli.hpp"
#include "morrey/mollifier.hpp"
#include "morrey/norm.hpp"
#include "morrey/verify.hpp"
#include "support/oracle.hpp"

using namespace morrey;

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = true;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

double rel_diff(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::max(std::fabs(a), std::fabs(b));
}

double norm(const GridFunction& f, const Weight& w, Exponent p, ExtReal rho,
            Engine engine = Engine::fast) {
  return morrey_norm(f, {p, w, rho}, CenterPolicy::mask, engine).value.value();
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

Verdict suite_verdict(const std::vector<std::string>& ids, const Battery& b) {
  Verdict v;
  auto res = run_suite(ids, b);
  std::size_t cases = 0;
  for (const auto& r : res.reports) {
    cases += r.cases;
    if (!r.pass) {
      v.pass = false;
      v.detail += " " + r.check_id + " failed (" + r.notes + ");";
    }
  }
  v.detail += " checks=" + std::to_string(res.reports.size()) +
              " cases=" + std::to_string(cases);
  return v;
}

// 1. Fast path against the library brute force and the test-side oracle.
Verdict oracle_equivalence() {
  Verdict v;
  auto t0 = Clock::now();
  Rng rng(20260601);
  double worst = 0.0;
  std::size_t compared = 0;
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = i % 2 == 0 ? 1 : 2;
    const std::size_t size = n == 1 ? 8 + rng.below(121) : 4 + rng.below(13);
    auto d = GridDomain::unit_cube(n, size, 1);
    if (rng.below(3) == 0) {
      auto mask = d.mask();
      for (auto& m : mask) m = m && rng.uniform() < 0.7;
      mask[d.masked_points()[rng.below(d.masked_count())]] = 1;
      d = d.with_mask(mask);
    }
    auto f = random_field(d, 1000 + i, -1.0, 1.0);
    const double nd = static_cast<double>(n);
    const double lambda = rng.uniform(0.0, 1.5 * nd);
    Weight w;
    switch (i % 4) {
      case 0: w = Weight::power(lambda); break;
      case 1: w = Weight::truncated(lambda, rng.uniform(0.05, 0.8)); break;
      case 2: w = Weight::capped(lambda); break;
      default: {
        double b1 = rng.uniform(0.02, 0.2), b2 = b1 + rng.uniform(0.05, 0.4);
        w = Weight::table({0.0, b1, b2},
                          {rng.uniform(0.1, 3), rng.uniform(0.1, 3), rng.uniform(0.1, 3)});
      }
    }
    ExtReal rho = rng.below(2) == 0 ? ExtReal::infinity()
                                    : ExtReal(rng.uniform(2.0 / size, 0.7));
    for (auto p : {Exponent(1), Exponent(2), Exponent::infinity()}) {
      double a = norm(f, w, p, rho, Engine::fast);
      double b = norm(f, w, p, rho, Engine::oracle);
      double c = oracle::morrey_norm(f, w, p.is_infinite() ? 0.0 : p.value(), rho).value();
      double e = std::max(rel_diff(a, b), rel_diff(a, c));
      worst = std::max(worst, e);
      ++compared;
      if (!(e <= 1e-12)) {
        v.pass = false;
        v.detail += " mismatch f#" + std::to_string(i) + " " + w.spec() + " p=" + p.to_string() + ";";
      }
    }
  }
  double secs = seconds_since(t0);
  if (secs > 60.0) v.pass = false;
  v.detail += " comparisons=" + std::to_string(compared) + fmt(" max_rel=%.3g", worst) +
              fmt(" time=%.1fs", secs);
  return v;
}

// 2. Checks that are exact in the discrete setting, on two batteries.
Verdict exact_suite() {
  const std::vector<std::string> ids = {"prelprgm-i", "molat",  "rho-monotone", "mulgm1",
                                        "mrhoext1",   "apgm1",  "minint",       "mo=lp"};
  auto a = suite_verdict(ids, Battery{42, 1, 512});
  auto b = suite_verdict(ids, Battery{42, 2, 24});
  return {a.pass && b.pass, " n=1:" + a.detail + " | n=2:" + b.detail};
}

// 3. The constant function on (0,1) with r^{-1/2}, p = 1, rho = 1/4.
Verdict analytic_value() {
  Verdict v;
  auto w = Weight::power(0.5);
  auto f512 = make_fixture(FixtureKind::constant, 1, 512, 1);
  auto f2048 = make_fixture(FixtureKind::constant, 1, 2048, 1);
  double a = norm(f512, w, Exponent(1), 0.25);
  double b = norm(f2048, w, Exponent(1), 0.25);
  double brute = norm(f512, w, Exponent(1), 0.25, Engine::oracle);
  double ref = oracle::morrey_norm(f512, w, 1.0, 0.25).value();
  v.pass = std::fabs(a - 1.0) <= 0.02 && std::fabs(b - 1.0) <= 0.005 &&
           rel_diff(a, brute) <= 1e-12 && rel_diff(a, ref) <= 1e-12;
  v.detail = fmt(" h=1/512: %.17g", a) + fmt(" h=1/2048: %.17g", b) +
             fmt(" oracle@512: %.17g", ref);
  return v;
}

// 4. Dilation identity.
Verdict dilation_identity() {
  CaseAccumulator acc("homogeneity");
  for (auto kind : all_fixture_kinds()) {
    auto f = make_fixture(kind, 1, 256, 42);
    for (auto [num, den] : {std::pair<std::int64_t, std::int64_t>{2, 1}, {4, 1}}) {
      for (double lambda : {0.0, 0.5, 1.0}) {
        for (auto p : {Exponent(1), Exponent(2)}) {
          cases::homogeneity(acc, f, lambda, p, num, den, Engine::fast);
        }
      }
    }
  }
  auto r = acc.finish();
  return {r.pass, " cases=" + std::to_string(r.cases) + fmt(" worst_ratio=%.17g", r.ratio)};
}

// 5. Closure against mask centers for the bump.
Verdict closure_convergence() {
  CaseAccumulator acc("mocls");
  for (std::size_t size : {128u, 256u, 512u}) {
    auto f = make_fixture(FixtureKind::bump, 1, size, 42);
    for (auto p : {Exponent(1), Exponent(2), Exponent::infinity()}) {
      for (const auto& w : {Weight::power(0.25), Weight::capped(0.5), Weight::power(1.0)}) {
        for (double rho : {0.125, 0.25}) cases::mocls(acc, f, {p, w, rho}, Engine::fast);
      }
    }
  }
  auto r = acc.finish();
  double gap = 0.0;
  for (const auto& [k, val] : r.info) {
    if (k == "relative_gap") gap = val;
  }
  return {r.pass, " cases=" + std::to_string(r.cases) + fmt(" max_relative_gap=%.3g", gap)};
}

// 6. Blow-up slope for lambda above n/p.
Verdict triviality_slope() {
  Verdict v;
  const std::vector<std::size_t> sizes = {64, 128, 256, 512, 1024};
  for (auto kind : {FixtureKind::constant, FixtureKind::bump, FixtureKind::box}) {
    for (auto p : {Exponent(1), Exponent(2)}) {
      const double lambda = p.dim_ratio(1) + 0.5;
      std::vector<double> x, y;
      for (auto s : sizes) {
        auto f = make_fixture(kind, 1, s, 42);
        x.push_back(std::log(f.domain().spacing()));
        y.push_back(std::log(norm(f, Weight::power(lambda), p, 4.0 / 64)));
      }
      double slope = ls_slope(x, y);
      bool ok = std::fabs(slope + 0.5) <= 0.05;
      v.pass = v.pass && ok;
      v.detail += " " + to_string(kind) + "/p=" + p.to_string() + fmt(":%.4f", slope);
    }
  }
  return v;
}

// 7. Decay of the modulus for lambda below n/p.
Verdict vanishing_decay() {
  Verdict v;
  const std::vector<double> rhos = {0.02, 0.04, 0.08, 0.16, 0.2};
  for (auto kind : {FixtureKind::constant, FixtureKind::box}) {
    auto f = make_fixture(kind, 1, 2048, 42);
    for (auto p : {Exponent(1), Exponent(2)}) {
      const double lambda = 0.5 * p.dim_ratio(1);
      auto w = Weight::power(lambda);
      auto curve = vanishing_modulus(f, {p, w, ExtReal::infinity()}, rhos);
      std::vector<double> x, y;
      bool bounded = true;
      for (const auto& [rho, val] : curve) {
        double bound = std::pow(unit_ball_volume(1), p.reciprocal()) *
                       std::pow(rho, p.dim_ratio(1) - lambda) * lp_norm_omega(f, Exponent::infinity());
        bounded = bounded && val.value() <= bound * (1 + 1e-9);
        x.push_back(std::log(rho));
        y.push_back(std::log(val.value()));
      }
      double slope = ls_slope(x, y);
      double target = p.dim_ratio(1) - lambda;
      bool ok = bounded && std::fabs(slope - target) <= 0.1 * target;
      v.pass = v.pass && ok;
      v.detail += " " + to_string(kind) + "/p=" + p.to_string() + fmt(":slope %.4f", slope) +
                  fmt(" target %.4f", target) + (bounded ? "" : " BOUND-VIOLATED");
    }
  }
  auto check = run_check("bgm1", Battery{42, 1, 512});
  v.pass = v.pass && check.pass;
  v.detail += check.pass ? " bgm1=pass" : " bgm1=FAIL";
  return v;
}

double info_of(const CheckReport& r, const std::string& key) {
  for (const auto& [k, val] : r.info) {
    if (k == key) return val;
  }
  return 0.0;
}

// 8. Embedding checks, and the continuum constant under refinement.
Verdict embedding_refinement() {
  Verdict v;
  for (const char* id : {"emgm1a", "emgmf"}) {
    auto coarse = run_check(id, Battery{42, 1, 128});
    auto fine = run_check(id, Battery{42, 1, 512});
    double rc = info_of(coarse, "omega_ratio");
    double rf = info_of(fine, "omega_ratio");
    bool ok = coarse.pass && fine.pass && rf <= 1.05;
    v.pass = v.pass && ok;
    v.detail += std::string(" ") + id + (fine.pass ? " pass" : " FAIL") +
                fmt(" ratio h=1/128: %.6f", rc) + fmt(" h=1/512: %.6f", rf) + ";";
  }
  return v;
}

// 9. Mollifier convergence for the bump.
Verdict mollifier_convergence() {
  Verdict v;
  auto f = make_fixture(FixtureKind::bump, 1, 1024, 42);
  MorreyParams params{Exponent(2), Weight::capped(0.25), ExtReal::infinity()};
  auto curve = approximation_curve(f, params, {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64});
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const auto& pt = curve[i];
    if (i > 0 && !(pt.lp_err < curve[i - 1].lp_err)) v.pass = false;
    if (!(pt.morrey_err.value() <= pt.zorko_bound.value() * (1 + 1e-9))) v.pass = false;
    v.detail += fmt(" eps=%.6g:", pt.eps) + fmt(" lp %.4g", pt.lp_err) +
                fmt(" morrey %.4g", pt.morrey_err.value()) + fmt(" <= %.4g;", pt.zorko_bound.value());
  }
  return v;
}

// 10. Equivalent definitions of the space.
Verdict space_definitions() {
  auto a = suite_verdict({"prem", "mlpwp-iii"}, Battery{42, 1, 512});
  auto b = suite_verdict({"prem", "mlpwp-iii"}, Battery{42, 2, 32});
  return {a.pass && b.pass, " n=1:" + a.detail + " | n=2:" + b.detail};
}

// 11. Byte-identical reruns of the full suite through the CLI.
Verdict reproducibility() {
  Verdict v;
  std::vector<std::string> args = {"verify", "--suite", "all", "--seed", "42"};
  std::string first;
  double slowest = 0.0;
  for (int run = 0; run < 2; ++run) {
    std::ostringstream out, err;
    auto t0 = Clock::now();
    int code = cli::run(args, out, err);
    slowest = std::max(slowest, seconds_since(t0));
    if (code != 0) {
      v.pass = false;
      v.detail += " exit=" + std::to_string(code);
    }
    if (run == 0) {
      first = out.str();
    } else if (out.str() != first) {
      v.pass = false;
      v.detail += " outputs differ;";
    }
  }
  if (slowest > 300.0) v.pass = false;
  v.detail += " bytes=" + std::to_string(first.size()) + fmt(" slowest_run=%.1fs", slowest);
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"A1 oracle-equivalence", oracle_equivalence},
      {"A2 exact-inequality-suite", exact_suite},
      {"A3 analytic-value", analytic_value},
      {"A4 homogeneity", dilation_identity},
      {"A5 closure-convergence", closure_convergence},
      {"A6 triviality-slope", triviality_slope},
      {"A7 vanishing-decay", vanishing_decay},
      {"A8 embedding-constants", embedding_refinement},
      {"A9 mollifier-convergence", mollifier_convergence},
      {"A10 space-definitions", space_definitions},
      {"A11 reproducibility", reproducibility},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v = {false, std::string(" error: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::printf("%s: %s%s\n", name.c_str(), v.pass ? "PASS" : "FAIL", v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("acceptance: %d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
