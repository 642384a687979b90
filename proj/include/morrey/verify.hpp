// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Named inequality checks. Every check aggregates many cases into one
// CheckReport carrying the worst case; it passes only if every case does.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morrey/grid.hpp"
#include "morrey/norm.hpp"
#include "morrey/weights.hpp"

namespace morrey {

struct CheckReport {
  std::string check_id;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = true;
  double tol = 1e-9;
  std::string inputs_digest;
  std::string notes;
  std::size_t cases = 0;
  /// Informational maxima, sorted by key.
  std::vector<std::pair<std::string, double>> info;
};

/// lhs / rhs with 0/0 = 0 and x/0 = inf for x > 0.
double safe_ratio(double lhs, double rhs);

/// FNV-1a 64-bit content hash.
class Digest {
 public:
  void add_bytes(const void* data, std::size_t size);
  void add(double v);
  void add(std::uint64_t v);
  void add(std::string_view s);
  void add(const GridFunction& f);
  std::string hex() const;

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

/// Collects cases of one check.
class CaseAccumulator {
 public:
  explicit CaseAccumulator(std::string check_id, double tol = 1e-9,
                           double rhs_scale = 1.0);

  /// One-sided case lhs <= rhs (1 + tol). An infinite rhs always passes.
  void add(double lhs, double rhs, std::string_view label);
  void add(ExtReal lhs, ExtReal rhs, std::string_view label);
  /// Two one-sided cases a <= b and b <= a.
  void add_equal(double a, double b, std::string_view label);
  /// Keeps the maximum value seen under a key.
  void info(const std::string& key, double value);

  Digest& digest() { return digest_; }
  CheckReport finish() const;

 private:
  std::string id_;
  double tol_;
  double rhs_scale_;
  Digest digest_;
  std::size_t cases_ = 0;
  std::size_t failures_ = 0;
  bool have_worst_ = false;
  double worst_lhs_ = 0.0, worst_rhs_ = 0.0, worst_ratio_ = 0.0;
  std::string worst_label_;
  std::vector<std::pair<std::string, double>> info_;
};

struct EmbeddingConstants {
  Exponent p{1.0};
  Exponent q{1.0};
  ExtReal rho;
  ExtReal iota;
  ExtReal jay;
  double omega_factor = 1.0;
};

EmbeddingConstants embedding_constants(const Weight& v1, const Weight& v2,
                                       const Exponent& p, const Exponent& q,
                                       ExtReal rho, std::size_t n);

/// sup over sampled radii r in [r_lo, r_hi) of g(r) (h^n maxcount(r))^e,
/// where maxcount(r) is the largest number of domain points in a ball of
/// radius r around a center of the policy.
ExtReal measure_weighted_sup(const GridDomain& domain, CenterPolicy policy,
                             const PiecewiseMonomial& g, double e, double r_lo,
                             ExtReal r_hi);

/// Single-case building blocks; each adds one or more cases to `acc`.
namespace cases {

void moud_equivalence(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
                      const Exponent& p, double rho1, ExtReal rho2, Engine engine);
void mocls(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           Engine engine);
void prem(CaseAccumulator& acc, const GridFunction& f, double lambda, const Exponent& p,
          Engine engine);
/// Slope of log |f_h| against log h for fixtures sampled at several h.
void motri(CaseAccumulator& acc, const std::vector<GridFunction>& fs, double lambda,
           const Exponent& p, ExtReal rho, Engine engine);
void molp(CaseAccumulator& acc, const GridFunction& f, const Weight& w, const Exponent& p,
          Engine engine);
void mocolp(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
            const Exponent& p, ExtReal rho, Engine engine);
void mo_eq_lp(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
              const Exponent& p, Engine engine);
void vmo_p_infinity(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
                    const std::vector<double>& rho_samples, Engine engine);
void mobd(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
          const Exponent& p, ExtReal rho, Engine engine);
void bdmo(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
          const Exponent& p, ExtReal rho, Engine engine);
void bdMo(CaseAccumulator& acc, const GridFunction& f, double lambda, const Exponent& p,
          Engine engine);
void bgm1(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
          const Exponent& p, const std::vector<double>& rho_samples, Engine engine);
void restriction(CaseAccumulator& acc, const GridFunction& f,
                 const std::vector<std::uint8_t>& submask, const MorreyParams& params,
                 Engine engine);
/// |E f|_{rho} <= constant |f|_{2 rho} on f's grid padded by `pad` points.
void extension(CaseAccumulator& acc, const GridFunction& f, std::size_t pad,
               const MorreyParams& params, double constant, Engine engine);
void mulgm1(CaseAccumulator& acc, const GridFunction& f, const GridFunction& g,
            const Weight& v1, const Weight& v2, const Exponent& p1, const Exponent& p2,
            ExtReal rho, Engine engine);
void emgm1a(CaseAccumulator& acc, const GridFunction& f, const Weight& v1,
            const Weight& v2, const Exponent& p, const Exponent& q, ExtReal rho,
            Engine engine);
void emgmf(CaseAccumulator& acc, const GridFunction& f, const Weight& v1,
           const Weight& v2, const Exponent& p, const Exponent& q, ExtReal rho,
           Engine engine);
void mlpwp_ii(CaseAccumulator& acc, const GridFunction& f, double lambda,
              const Exponent& p, Engine engine);
void mlpwp_iii(CaseAccumulator& acc, const GridFunction& f, double lambda,
               const Exponent& p, Engine engine);
void apgm1(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           double eps, Engine engine);
void zorko(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           const std::vector<double>& eps, Engine engine);
void minint(CaseAccumulator& acc, const GridFunction& f, const Exponent& p,
            std::uint64_t seed, std::size_t balls);
void homogeneity(CaseAccumulator& acc, const GridFunction& f, double lambda,
                 const Exponent& p, std::int64_t num, std::int64_t den, Engine engine);
/// Requires |f| <= |g| pointwise.
void molat(CaseAccumulator& acc, const GridFunction& f, const GridFunction& g,
           const MorreyParams& params, Engine engine);
void rho_monotone(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
                  const std::vector<double>& rho_samples, Engine engine);

}  // namespace cases

struct Battery {
  std::uint64_t seed = 42;
  std::size_t n = 1;
  std::size_t size = 512;
};

struct SuiteOptions {
  double tol = 1e-9;
  /// Test hook: every right-hand side is multiplied by this factor.
  double rhs_scale = 1.0;
  Engine engine = Engine::fast;
};

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  bool all_pass() const { return failed == 0; }
};

struct SuiteResult {
  std::vector<CheckReport> reports;
  SuiteSummary summary;
};

const std::vector<std::string>& all_check_ids();
bool is_check_id(std::string_view id);

/// "all", or a comma-separated list of check ids; throws ParseError on
/// unknown names.
std::vector<std::string> parse_suite(std::string_view text);

/// Runs one check over the battery.
CheckReport run_check(const std::string& check_id, const Battery& battery,
                      const SuiteOptions& options = {});

/// Reports in catalogue order regardless of the order requested.
SuiteResult run_suite(const std::vector<std::string>& check_ids,
                      const Battery& battery, const SuiteOptions& options = {});

}  // namespace morrey
