// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>

#include "morrey/battery.hpp"
#include "morrey/mollifier.hpp"
#include "morrey/transforms.hpp"

namespace morrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double inv_dim_pow(const GridDomain& d, const Exponent& p) {
  return std::pow(d.spacing(), p.dim_ratio(d.dim()));
}

ExtReal norm_of(const GridFunction& f, const Weight& w, const Exponent& p, ExtReal rho,
                Engine engine, CenterPolicy policy = CenterPolicy::mask) {
  return morrey_norm(f, MorreyParams{p, w, rho}, policy, engine).value;
}

std::string label_of(std::string_view what, const Weight& w, const Exponent& p,
                     ExtReal rho) {
  return std::string(what) + " w=" + w.spec() + " p=" + p.to_string() +
         " rho=" + rho.to_string();
}

void hash_case(CaseAccumulator& acc, const GridFunction& f, std::string_view label) {
  acc.digest().add(f);
  acc.digest().add(label);
}

ExtReal times(ExtReal a, ExtReal b) {
  if (a == ExtReal(0.0) || b == ExtReal(0.0)) return 0.0;
  if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
  return a.finite() * b.finite();
}

}  // namespace

double safe_ratio(double lhs, double rhs) {
  if (lhs == 0.0) return 0.0;
  if (std::isinf(rhs)) return 0.0;
  if (rhs == 0.0) return kInf;
  return lhs / rhs;
}

void Digest::add_bytes(const void* data, std::size_t size) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < size; ++i) {
    state_ ^= p[i];
    state_ *= 0x100000001b3ull;
  }
}

void Digest::add(double v) {
  auto bits = std::bit_cast<std::uint64_t>(v);
  add(bits);
}

void Digest::add(std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xffu);
  add_bytes(b, 8);
}

void Digest::add(std::string_view s) {
  add(static_cast<std::uint64_t>(s.size()));
  add_bytes(s.data(), s.size());
}

void Digest::add(const GridFunction& f) {
  const auto& d = f.domain();
  add(static_cast<std::uint64_t>(d.dim()));
  for (auto s : d.shape()) add(static_cast<std::uint64_t>(s));
  add(d.spacing());
  for (double o : d.origin()) add(o);
  add_bytes(d.mask().data(), d.mask().size());
  for (double v : f.values()) add(v);
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

CaseAccumulator::CaseAccumulator(std::string check_id, double tol, double rhs_scale)
    : id_(std::move(check_id)), tol_(tol), rhs_scale_(rhs_scale) {}

void CaseAccumulator::add(double lhs, double rhs, std::string_view label) {
  rhs *= rhs_scale_;
  ++cases_;
  bool ok = std::isinf(rhs) || (!std::isinf(lhs) && lhs <= rhs * (1.0 + tol_));
  double ratio = safe_ratio(lhs, rhs);
  if (!ok) ++failures_;
  if (!have_worst_ || ratio > worst_ratio_) {
    have_worst_ = true;
    worst_lhs_ = lhs;
    worst_rhs_ = rhs;
    worst_ratio_ = ratio;
    worst_label_ = label;
  }
}

void CaseAccumulator::add(ExtReal lhs, ExtReal rhs, std::string_view label) {
  add(lhs.value(), rhs.value(), label);
}

void CaseAccumulator::add_equal(double a, double b, std::string_view label) {
  add(a, b, std::string(label) + " [<=]");
  add(b, a, std::string(label) + " [>=]");
}

void CaseAccumulator::info(const std::string& key, double value) {
  for (auto& [k, v] : info_) {
    if (k == key) {
      v = std::max(v, value);
      return;
    }
  }
  info_.emplace_back(key, value);
  std::sort(info_.begin(), info_.end());
}

CheckReport CaseAccumulator::finish() const {
  CheckReport r;
  r.check_id = id_;
  r.tol = tol_;
  r.cases = cases_;
  r.pass = failures_ == 0;
  r.inputs_digest = digest_.hex();
  r.info = info_;
  if (have_worst_) {
    r.lhs = worst_lhs_;
    r.rhs = worst_rhs_;
    r.ratio = worst_ratio_;
    r.notes = "cases=" + std::to_string(cases_) + "; worst: " + worst_label_;
    if (failures_ > 0) r.notes += "; failures=" + std::to_string(failures_);
  } else {
    r.notes = "no applicable cases";
  }
  return r;
}

EmbeddingConstants embedding_constants(const Weight& v1, const Weight& v2,
                                       const Exponent& p, const Exponent& q, ExtReal rho,
                                       std::size_t n) {
  EmbeddingConstants c;
  c.p = p;
  c.q = q;
  c.rho = rho;
  c.iota = iota_constant(v1, v2, p, q, rho, n);
  c.jay = jay_constant(v1, v2, p, q, rho, n);
  c.omega_factor = std::pow(unit_ball_volume(n), q.reciprocal() - p.reciprocal());
  return c;
}

ExtReal measure_weighted_sup(const GridDomain& domain, CenterPolicy policy,
                             const PiecewiseMonomial& g, double e, double r_lo,
                             ExtReal r_hi) {
  if (!(ExtReal(r_lo) < r_hi)) return 0.0;
  auto indicator = GridFunction::constant(domain, 1.0);
  auto prof = build_profile(indicator, Exponent(1.0), policy, r_hi);
  const double h = domain.spacing();
  const std::size_t n = domain.dim();
  const double hn = std::pow(h, static_cast<double>(n));
  ExtReal best = 0.0;
  for (std::size_t k = 0; k < prof.shells.size(); ++k) {
    double r = shell_radius(prof.shells[k], h);
    if (r < r_lo) continue;
    if (!(r < r_hi.value())) break;
    double gv = g.eval(r);
    if (gv == 0.0) continue;
    best = max(best, ExtReal(gv * std::pow(hn * prof.max_sum[k], e)));
  }
  Shell s_lo = prof.cover_threshold;
  if (r_lo > 0.0 && r_lo / h < 3e7) {
    s_lo = std::max(s_lo, prev_shell(first_shell_at_or_above(r_lo, h, n), n));
  }
  auto t = g.sup_on_shells(h, n, s_lo, r_hi);
  if (t.shell != 0) {
    best = max(best, times(t.value, ExtReal(std::pow(hn * prof.total, e))));
  }
  return best;
}

namespace cases {

void moud_equivalence(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
                      const Exponent& p, double rho1, ExtReal rho2, Engine engine) {
  const auto& d = f.domain();
  const double h = d.spacing();
  if (!(rho1 > h) || !(ExtReal(rho1) < rho2) || !(w.eval(h) > 0.0)) {
    throw DomainError("moud-equivalence: needs h < rho1 < rho2 and w(h) > 0");
  }
  auto label = label_of("moud", w, p, rho2) + " rho1=" + format_double(rho1);
  hash_case(acc, f, label);
  ExtReal n1 = norm_of(f, w, p, rho1, engine);
  ExtReal n2 = norm_of(f, w, p, rho2, engine);
  ExtReal a = measure_weighted_sup(d, CenterPolicy::mask, w.pieces(), p.reciprocal(),
                                   rho1, rho2);
  double b = w.eval(h) * inv_dim_pow(d, p);
  ExtReal k = a.is_infinite() ? a : ExtReal(std::max(1.0, a.finite() / b));
  acc.add(n2, times(k, n1), label);
  if (n1.is_finite() && n1.finite() > 0.0 && n2.is_finite()) {
    acc.info("measured_ratio", n2.finite() / n1.finite());
  }
}

void mocls(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           Engine engine) {
  if (params.rho.is_infinite()) throw DomainError("mocls: rho must be finite");
  auto label = label_of("mocls h=" + format_double(f.domain().spacing()), params.weight,
                        params.p, params.rho);
  hash_case(acc, f, label);
  double m = morrey_norm(f, params, CenterPolicy::mask, engine).value.value();
  double c = morrey_norm(f, params, CenterPolicy::closure, engine).value.value();
  double gap = m == 0.0 ? (c == 0.0 ? 0.0 : kInf) : std::fabs(c - m) / m;
  acc.add(gap, 5.0 * f.domain().spacing() / params.rho.finite(), label);
  acc.info("relative_gap", gap);
}

void prem(CaseAccumulator& acc, const GridFunction& f, double lambda, const Exponent& p,
          Engine engine) {
  auto label = "prem lambda=" + format_double(lambda) + " p=" + p.to_string();
  hash_case(acc, f, label);
  double capped = norm_of(f, Weight::capped(lambda), p, ExtReal::infinity(), engine).value();
  double part = norm_of(f, Weight::power(lambda), p, 1.0, engine).value();
  acc.add_equal(capped, std::max(part, lp_norm_omega(f, p)), label);
}

void motri(CaseAccumulator& acc, const std::vector<GridFunction>& fs, double lambda,
           const Exponent& p, ExtReal rho, Engine engine) {
  if (fs.size() < 2) throw DomainError("motri: need at least two grids");
  const std::size_t n = fs.front().domain().dim();
  std::vector<double> xs, ys;
  auto label = "motri lambda=" + format_double(lambda) + " p=" + p.to_string() +
               " rho=" + rho.to_string();
  for (const auto& f : fs) {
    hash_case(acc, f, label);
    double v = norm_of(f, Weight::power(lambda), p, rho, engine).value();
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("motri: needs nonzero finite norms");
    xs.push_back(std::log(f.domain().spacing()));
    ys.push_back(std::log(v));
  }
  const double m = static_cast<double>(xs.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sx += xs[i];
    sy += ys[i];
    sxx += xs[i] * xs[i];
    sxy += xs[i] * ys[i];
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  double target = p.dim_ratio(n) - lambda;
  acc.add(std::fabs(slope - target), 0.1 * std::fabs(target),
          label + " slope=" + format_double(slope));
  acc.info("relative_slope_error", std::fabs(slope - target) / std::fabs(target));
}

void molp(CaseAccumulator& acc, const GridFunction& f, const Weight& w, const Exponent& p,
          Engine engine) {
  double eta = w.inf_over_all();
  if (!(eta > 0.0)) throw DomainError("molp: needs inf w > 0");
  auto label = label_of("molp", w, p, ExtReal::infinity());
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, w, p, ExtReal::infinity(), engine);
  acc.add(ExtReal(lp_norm_omega(f, p)), times(nv, ExtReal(1.0 / eta)), label);
}

void mocolp(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
            const Exponent& p, ExtReal rho, Engine engine) {
  ExtReal sigma = w.sup_over_all();
  if (sigma.is_infinite()) throw DomainError("mocolp: needs sup w < inf");
  auto label = label_of("mocolp", w, p, rho);
  hash_case(acc, f, label);
  acc.add(norm_of(f, w, p, rho, engine), ExtReal(sigma.finite() * lp_norm_omega(f, p)),
          label);
}

void mo_eq_lp(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
              const Exponent& p, Engine engine) {
  auto label = label_of("mo=lp", w, p, ExtReal::infinity());
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, w, p, ExtReal::infinity(), engine);
  double l = lp_norm_omega(f, p);
  double eta = w.inf_over_all();
  ExtReal sigma = w.sup_over_all();
  if (eta > 0.0) acc.add(ExtReal(eta * l), nv, label + " lower");
  if (sigma.is_finite()) acc.add(nv, ExtReal(sigma.finite() * l), label + " upper");
}

void vmo_p_infinity(CaseAccumulator& acc, const GridFunction& f, const Weight& w,
                    const std::vector<double>& rho_samples, Engine engine) {
  double eta = w.inf_over_all();
  if (!(eta > 0.0)) throw DomainError("vmo-p-infinity: needs inf w > 0");
  const Exponent p = Exponent::infinity();
  auto label = label_of("vmo", w, p, ExtReal::infinity());
  hash_case(acc, f, label);
  MorreyParams params{p, w, ExtReal::infinity()};
  double sup = lp_norm_omega(f, p);
  for (const auto& [rho, v] : vanishing_modulus(f, params, rho_samples, CenterPolicy::mask,
                                                engine)) {
    if (!(rho > f.domain().spacing())) throw DomainError("vmo-p-infinity: rho must exceed h");
    acc.add(ExtReal(eta * sup), v, label + " at rho=" + format_double(rho));
  }
}

void mobd(CaseAccumulator& acc, const GridFunction& f, const Weight& w, const Exponent& p,
          ExtReal rho, Engine engine) {
  const auto& d = f.domain();
  const double h = d.spacing();
  if (!(rho > ExtReal(h)) || !(w.eval(h) > 0.0)) {
    throw DomainError("mobd: needs rho > h and w(h) > 0");
  }
  auto label = label_of("mobd", w, p, rho);
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, w, p, rho, engine);
  double sup = lp_norm_omega(f, Exponent::infinity());
  acc.add(ExtReal(sup), times(nv, ExtReal(1.0 / (w.eval(h) * inv_dim_pow(d, p)))), label);
  ExtReal lim = small_r_limsup(w, p, d.dim());
  if (lim.is_finite() && lim.finite() > 0.0 && nv.is_finite() && nv.finite() > 0.0) {
    double c = 1.0 / (std::pow(unit_ball_volume(d.dim()), p.reciprocal()) * lim.finite());
    acc.info("omega_ratio", sup / (c * nv.finite()));
  }
}

void bdmo(CaseAccumulator& acc, const GridFunction& f, const Weight& w, const Exponent& p,
          ExtReal rho, Engine engine) {
  const auto& d = f.domain();
  auto label = label_of("bdmo", w, p, rho);
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, w, p, rho, engine);
  double sup = lp_norm_omega(f, Exponent::infinity());
  ExtReal c = measure_weighted_sup(d, CenterPolicy::mask, w.pieces(), p.reciprocal(), 0.0, rho);
  acc.add(nv, times(c, ExtReal(sup)), label);
  ExtReal cont = w.pieces().times_power(p.dim_ratio(d.dim())).sup_between(0.0, rho.value());
  if (cont.is_finite() && nv.is_finite()) {
    double bound = std::pow(unit_ball_volume(d.dim()), p.reciprocal()) * cont.finite() * sup;
    acc.info("omega_ratio", safe_ratio(nv.finite(), bound));
  }
}

void bdMo(CaseAccumulator& acc, const GridFunction& f, double lambda, const Exponent& p,
          Engine engine) {
  const auto& d = f.domain();
  auto w = Weight::capped(lambda);
  auto label = label_of("bdMo", w, p, ExtReal::infinity());
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, w, p, ExtReal::infinity(), engine);
  double sup = lp_norm_omega(f, Exponent::infinity());
  ExtReal c = measure_weighted_sup(d, CenterPolicy::mask, w.pieces(), p.reciprocal(), 0.0,
                                   ExtReal::infinity());
  acc.add(nv, times(c, ExtReal(sup)), label);
  if (lambda <= p.dim_ratio(d.dim()) && nv.is_finite()) {
    double k = std::max(std::pow(unit_ball_volume(d.dim()), p.reciprocal()),
                        std::pow(d.measure(), p.reciprocal()));
    acc.info("omega_ratio", safe_ratio(nv.finite(), k * sup));
  }
}

void bgm1(CaseAccumulator& acc, const GridFunction& f, const Weight& w, const Exponent& p,
          const std::vector<double>& rho_samples, Engine engine) {
  const auto& d = f.domain();
  auto label = label_of("bgm1", w, p, ExtReal::infinity());
  hash_case(acc, f, label);
  double sup = lp_norm_omega(f, Exponent::infinity());
  auto scaled = w.pieces().times_power(p.dim_ratio(d.dim()));
  MorreyParams params{p, w, ExtReal::infinity()};
  for (const auto& [rho, v] : vanishing_modulus(f, params, rho_samples, CenterPolicy::mask,
                                                engine)) {
    ExtReal c = measure_weighted_sup(d, CenterPolicy::mask, w.pieces(), p.reciprocal(), 0.0, rho);
    acc.add(v, times(c, ExtReal(sup)), label + " at rho=" + format_double(rho));
    ExtReal cont = scaled.sup_between(0.0, rho);
    if (cont.is_finite() && v.is_finite()) {
      double bound = std::pow(unit_ball_volume(d.dim()), p.reciprocal()) * cont.finite() * sup;
      acc.info("omega_ratio", safe_ratio(v.finite(), bound));
    }
  }
}

void restriction(CaseAccumulator& acc, const GridFunction& f,
                 const std::vector<std::uint8_t>& submask, const MorreyParams& params,
                 Engine engine) {
  auto label = label_of("restrict", params.weight, params.p, params.rho);
  hash_case(acc, f, label);
  acc.digest().add_bytes(submask.data(), submask.size());
  auto fv = restrict_to(f, submask);
  acc.add(morrey_norm(fv, params, CenterPolicy::mask, engine).value,
          morrey_norm(f, params, CenterPolicy::mask, engine).value, label);
}

void extension(CaseAccumulator& acc, const GridFunction& f, std::size_t pad,
               const MorreyParams& params, double constant, Engine engine) {
  auto label = label_of("extend pad=" + std::to_string(pad), params.weight, params.p,
                        params.rho) + " C=" + format_double(constant);
  hash_case(acc, f, label);
  auto ef = extend_by_zero(f, padded_full_domain(f.domain(), pad));
  MorreyParams twice = params;
  twice.rho = params.rho.is_infinite() ? params.rho : ExtReal(2.0 * params.rho.finite());
  acc.add(morrey_norm(ef, params, CenterPolicy::mask, engine).value,
          times(ExtReal(constant), morrey_norm(f, twice, CenterPolicy::mask, engine).value),
          label);
}

void mulgm1(CaseAccumulator& acc, const GridFunction& f, const GridFunction& g,
            const Weight& v1, const Weight& v2, const Exponent& p1, const Exponent& p2,
            ExtReal rho, Engine engine) {
  Exponent p = holder_exponent(p1, p2);
  auto label = "mulgm1 v1=" + v1.spec() + " v2=" + v2.spec() + " p1=" + p1.to_string() +
               " p2=" + p2.to_string() + " rho=" + rho.to_string();
  hash_case(acc, f, label);
  acc.digest().add(g);
  ExtReal lhs = norm_of(pointwise_product(f, g), product(v1, v2), p, rho, engine);
  ExtReal rhs = times(norm_of(f, v1, p1, rho, engine), norm_of(g, v2, p2, rho, engine));
  acc.add(lhs, rhs, label);
}

namespace {

void embedding_case(CaseAccumulator& acc, const GridFunction& f, const Weight& v1,
                    const Weight& v2, const Exponent& p, const Exponent& q, ExtReal rho,
                    Engine engine, bool finite_volume) {
  const auto& d = f.domain();
  const std::size_t n = d.dim();
  auto label = std::string(finite_volume ? "emgmf" : "emgm1a") + " v1=" + v1.spec() +
               " v2=" + v2.spec() + " p=" + p.to_string() + " q=" + q.to_string() +
               " rho=" + rho.to_string();
  hash_case(acc, f, label);
  const double e = q.reciprocal() - p.reciprocal();
  auto ratio = v2.pieces().over(v1.pieces());
  ExtReal c;
  if (finite_volume) {
    // Ball measure is bounded by the per-radius maximum below 1 and by the
    // whole domain from 1 on.
    const double h = d.spacing();
    ExtReal unit_cut = rho < ExtReal(1.0) ? rho : ExtReal(1.0);
    ExtReal near = measure_weighted_sup(d, CenterPolicy::mask, ratio, e, 0.0, unit_cut);
    ExtReal far = 0.0;
    if (rho > ExtReal(1.0)) {
      Shell below_one = prev_shell(first_shell_at_or_above(1.0, h, n), n);
      far = times(ratio.sup_on_shells(h, n, below_one, rho).value,
                  ExtReal(std::pow(d.measure(), e)));
    }
    c = max(near, far);
  } else {
    c = measure_weighted_sup(d, CenterPolicy::mask, ratio, e, 0.0, rho);
  }
  ExtReal n1 = norm_of(f, v1, p, rho, engine);
  ExtReal n2 = norm_of(f, v2, q, rho, engine);
  acc.add(n2, times(c, n1), label);
  const double omega = unit_ball_volume(n);
  ExtReal k;
  if (finite_volume) {
    k = jay_constant(v1, v2, p, q, rho, n);
    if (k.is_finite()) k = k.finite() * std::max(std::pow(omega, e), std::pow(d.measure(), e));
  } else {
    k = iota_constant(v1, v2, p, q, rho, n);
    if (k.is_finite()) k = k.finite() * std::pow(omega, e);
  }
  if (k.is_finite() && n1.is_finite() && n2.is_finite()) {
    acc.info("omega_ratio", safe_ratio(n2.finite(), k.finite() * n1.finite()));
  }
}

}  // namespace

void emgm1a(CaseAccumulator& acc, const GridFunction& f, const Weight& v1,
            const Weight& v2, const Exponent& p, const Exponent& q, ExtReal rho,
            Engine engine) {
  embedding_case(acc, f, v1, v2, p, q, rho, engine, false);
}

void emgmf(CaseAccumulator& acc, const GridFunction& f, const Weight& v1,
           const Weight& v2, const Exponent& p, const Exponent& q, ExtReal rho,
           Engine engine) {
  embedding_case(acc, f, v1, v2, p, q, rho, engine, true);
}

void mlpwp_ii(CaseAccumulator& acc, const GridFunction& f, double lambda,
              const Exponent& p, Engine engine) {
  auto label = "mlpwp-ii lambda=" + format_double(lambda) + " p=" + p.to_string();
  hash_case(acc, f, label);
  ExtReal nv = norm_of(f, Weight::power(lambda), p, ExtReal::infinity(), engine);
  acc.add(ExtReal(lp_norm_omega(f, p)),
          times(ExtReal(std::pow(f.domain().diameter(), lambda)), nv), label);
}

void mlpwp_iii(CaseAccumulator& acc, const GridFunction& f, double lambda,
               const Exponent& p, Engine engine) {
  auto label = "mlpwp-iii lambda=" + format_double(lambda) + " p=" + p.to_string();
  hash_case(acc, f, label);
  double np = norm_of(f, Weight::power(lambda), p, ExtReal::infinity(), engine).value();
  double nc = norm_of(f, Weight::capped(lambda), p, ExtReal::infinity(), engine).value();
  double k = std::max(1.0, std::pow(f.domain().diameter(), lambda));
  acc.add(np, nc, label + " lower");
  acc.add(nc, k * np, label + " upper");
  if (np > 0.0) acc.info("capped_over_power", nc / np);
}

void apgm1(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           double eps, Engine engine) {
  auto label = label_of("apgm1 eps=" + format_double(eps), params.weight, params.p,
                        params.rho);
  hash_case(acc, f, label);
  auto full = extend_to_full(f);
  auto phi = scale_kernel(full.domain().dim(), full.domain().spacing(), eps);
  auto smooth = convolve(full, phi);
  acc.add(morrey_norm(smooth, params, CenterPolicy::mask, engine).value,
          times(ExtReal(phi.l1_norm()), morrey_norm(full, params, CenterPolicy::mask, engine).value),
          label);
}

void zorko(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
           const std::vector<double>& eps, Engine engine) {
  auto label = label_of("zorko", params.weight, params.p, params.rho);
  hash_case(acc, f, label);
  for (const auto& pt : approximation_curve(f, params, eps, engine, true)) {
    acc.add(pt.morrey_err, pt.zorko_bound, label + " eps=" + format_double(pt.eps));
  }
}

void minint(CaseAccumulator& acc, const GridFunction& f, const Exponent& p,
            std::uint64_t seed, std::size_t balls) {
  auto full = extend_to_full(f);
  const auto& d = full.domain();
  const std::size_t n = d.dim();
  const double hn = std::pow(d.spacing(), static_cast<double>(n));
  auto label = "minint p=" + p.to_string() + " seed=" + std::to_string(seed);
  hash_case(acc, f, label);
  Rng rng(seed);
  std::vector<GridFunction> shifted;
  std::vector<double> psi;
  Index y(n, -2);
  while (true) {
    shifted.push_back(translate(full, y, Boundary::zero_fill));
    psi.push_back(rng.uniform(-1.0, 1.0));
    std::size_t a = n;
    while (a-- > 0) {
      if (y[a] < 2) {
        ++y[a];
        break;
      }
      y[a] = -2;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  std::vector<double> mixed(d.total_points(), 0.0);
  for (std::size_t j = 0; j < shifted.size(); ++j) {
    for (std::size_t i = 0; i < mixed.size(); ++i) {
      mixed[i] += psi[j] * hn * shifted[j].values()[i];
    }
  }
  GridFunction big(d, std::move(mixed));
  Shell max_shell = 0;
  for (auto s : d.shape()) max_shell += static_cast<Shell>(s * s) / 4;
  for (std::size_t b = 0; b < balls; ++b) {
    auto center = d.unravel(static_cast<std::size_t>(rng.below(d.total_points())));
    Shell s = next_shell(static_cast<Shell>(rng.below(std::max<Shell>(1, max_shell))), n);
    Ball ball{d.coordinate(center), shell_radius(s, d.spacing())};
    double lhs = lp_ball_norm(big, ball, p);
    double rhs = 0.0;
    for (std::size_t j = 0; j < shifted.size(); ++j) {
      rhs += std::fabs(psi[j]) * hn * lp_ball_norm(shifted[j], ball, p);
    }
    acc.add(lhs, rhs, label + " ball=" + std::to_string(b));
  }
}

void homogeneity(CaseAccumulator& acc, const GridFunction& f, double lambda,
                 const Exponent& p, std::int64_t num, std::int64_t den, Engine engine) {
  Dilation alpha{num, den};
  auto label = "homogeneity lambda=" + format_double(lambda) + " p=" + p.to_string() +
               " alpha=" + std::to_string(num) + "/" + std::to_string(den);
  hash_case(acc, f, label);
  auto w = Weight::power(lambda);
  double lhs = norm_of(dilate(f, alpha), w, p, ExtReal::infinity(), engine).value();
  double base = norm_of(f, w, p, ExtReal::infinity(), engine).value();
  double factor = std::pow(alpha.value(), lambda - p.dim_ratio(f.domain().dim()));
  acc.add_equal(lhs, factor * base, label);
}

void molat(CaseAccumulator& acc, const GridFunction& f, const GridFunction& g,
           const MorreyParams& params, Engine engine) {
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    if (std::fabs(f.values()[k]) > std::fabs(g.values()[k])) {
      throw DomainError("molat: needs |f| <= |g| pointwise");
    }
  }
  auto label = label_of("molat", params.weight, params.p, params.rho);
  hash_case(acc, f, label);
  acc.digest().add(g);
  acc.add(morrey_norm(f, params, CenterPolicy::mask, engine).value,
          morrey_norm(g, params, CenterPolicy::mask, engine).value, label);
}

void rho_monotone(CaseAccumulator& acc, const GridFunction& f, const MorreyParams& params,
                  const std::vector<double>& rho_samples, Engine engine) {
  auto label = label_of("rho-monotone", params.weight, params.p, params.rho);
  hash_case(acc, f, label);
  auto curve = vanishing_modulus(f, params, rho_samples, CenterPolicy::mask, engine);
  for (std::size_t i = 1; i < curve.size(); ++i) {
    acc.add(curve[i - 1].second, curve[i].second,
            label + " rho " + format_double(curve[i - 1].first) + "<=" +
                format_double(curve[i].first));
  }
}

}  // namespace cases

// ---------------------------------------------------------------------------
// Suite
// ---------------------------------------------------------------------------

namespace {

struct Named {
  std::string name;
  GridFunction f;
};

struct Context {
  Battery battery;
  SuiteOptions options;
  std::size_t n = 1;
  double nd = 1.0;
  double h = 1.0;
  std::vector<Named> fixtures;

  Engine engine() const { return options.engine; }
};

Context make_context(const Battery& b, const SuiteOptions& o) {
  if (b.n == 0 || b.size < 4) throw DomainError("battery: need n >= 1 and size >= 4");
  Context c;
  c.battery = b;
  c.options = o;
  c.n = b.n;
  c.nd = static_cast<double>(b.n);
  c.h = 1.0 / static_cast<double>(b.size);
  for (auto k : all_fixture_kinds()) {
    c.fixtures.push_back({to_string(k), make_fixture(k, b.n, b.size, b.seed)});
  }
  c.fixtures.push_back({"random2", make_fixture(FixtureKind::random, b.n, b.size, b.seed + 1)});
  return c;
}

const Weight& table_a() {
  static const Weight w = Weight::table({0.0, 0.05, 0.2, 0.5}, {3.0, 2.0, 1.5, 1.0});
  return w;
}

const Weight& table_b() {
  static const Weight w = Weight::table({0.0, 0.1, 0.3}, {1.0, 2.5, 0.5});
  return w;
}

std::vector<Exponent> all_p() { return {Exponent(1.0), Exponent(2.0), Exponent::infinity()}; }
std::vector<Exponent> finite_p() { return {Exponent(1.0), Exponent(2.0)}; }

std::vector<ExtReal> rhos(const Context& c, std::vector<ExtReal> list) {
  std::vector<ExtReal> out;
  for (auto r : list) {
    if (r > ExtReal(2.0 * c.h)) out.push_back(r);
  }
  return out;
}

std::vector<double> grid_samples(const Context& c, std::vector<double> list) {
  std::vector<double> out;
  for (double r : list) {
    if (r > c.h && (out.empty() || r > out.back())) out.push_back(r);
  }
  return out;
}

std::vector<double> lattice_eps(const Context& c, std::vector<double> list) {
  std::vector<double> out;
  for (double e : list) {
    double m = e / c.h;
    if (m >= 1.0 && std::fabs(m - std::round(m)) < 1e-9) out.push_back(e);
  }
  return out;
}

void drive_moud(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.25 * c.nd), Weight::capped(0.5 * c.nd),
                                  Weight::truncated(0.25 * c.nd, 0.3), table_a()};
  const std::vector<std::pair<double, ExtReal>> pairs = {
      {0.125, 0.5}, {0.125, ExtReal::infinity()}, {0.25, ExtReal::infinity()}};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : ws) {
        for (const auto& [r1, r2] : pairs) {
          if (r1 > c.h) cases::moud_equivalence(acc, fx.f, w, p, r1, r2, c.engine());
        }
      }
    }
  }
}

std::vector<std::size_t> refinement_sizes(const Context& c) {
  std::vector<std::size_t> out;
  for (std::size_t s : {c.battery.size / 4, c.battery.size / 2, c.battery.size}) {
    if (s >= 8) out.push_back(s);
  }
  return out;
}

void drive_mocls(CaseAccumulator& acc, const Context& c) {
  for (auto kind : {FixtureKind::bump, FixtureKind::constant, FixtureKind::ball}) {
    for (auto size : refinement_sizes(c)) {
      auto f = make_fixture(kind, c.n, size, c.battery.seed);
      for (const auto& p : finite_p()) {
        for (const auto& w : {Weight::power(0.25 * c.nd), Weight::capped(0.25 * c.nd)}) {
          cases::mocls(acc, f, MorreyParams{p, w, 0.25}, c.engine());
        }
      }
    }
  }
}

void drive_prem(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (double lambda : {0.0, 0.25 * c.nd, 0.5 * c.nd, c.nd}) {
        cases::prem(acc, fx.f, lambda, p, c.engine());
      }
    }
  }
}

void drive_motri(CaseAccumulator& acc, const Context& c) {
  std::vector<std::size_t> sizes;
  std::vector<FixtureKind> kinds = {FixtureKind::constant};
  if (c.n == 1) {
    sizes = {64, 128, 256, 512, 1024};
    kinds = {FixtureKind::constant, FixtureKind::bump, FixtureKind::box};
  } else if (c.n == 2) {
    sizes = {16, 32, 64, 128};
  } else {
    sizes = {8, 16, 32};
  }
  const ExtReal rho = 4.0 / static_cast<double>(sizes.front());
  for (auto kind : kinds) {
    std::vector<GridFunction> fs;
    for (auto s : sizes) fs.push_back(make_fixture(kind, c.n, s, c.battery.seed));
    for (const auto& p : finite_p()) {
      cases::motri(acc, fs, p.dim_ratio(c.n) + 0.5, p, rho, c.engine());
    }
  }
}

std::vector<Weight> positive_floor_weights(const Context& c) {
  return {Weight::power(0.0), Weight::capped(0.25 * c.nd), Weight::capped(0.5 * c.nd),
          table_a(), table_b()};
}

void drive_molp(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : positive_floor_weights(c)) cases::molp(acc, fx.f, w, p, c.engine());
    }
  }
}

void drive_mocolp(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.0), Weight::capped(0.0),
                                  Weight::truncated(0.0, 0.3), table_a(), table_b()};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : ws) {
        for (auto rho : rhos(c, {0.25, ExtReal::infinity()})) {
          cases::mocolp(acc, fx.f, w, p, rho, c.engine());
        }
      }
    }
  }
}

void drive_mo_eq_lp(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.0), Weight::capped(0.0), table_a(),
                                  table_b(), Weight::capped(0.5 * c.nd)};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : ws) cases::mo_eq_lp(acc, fx.f, w, p, c.engine());
    }
  }
}

void drive_vmo(CaseAccumulator& acc, const Context& c) {
  auto samples = grid_samples(c, {2 * c.h, 4 * c.h, 0.125, 0.25});
  std::sort(samples.begin(), samples.end());
  samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
  for (const auto& fx : c.fixtures) {
    for (const auto& w : positive_floor_weights(c)) {
      cases::vmo_p_infinity(acc, fx.f, w, samples, c.engine());
    }
  }
}

void drive_mobd(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      const double np = p.dim_ratio(c.n);
      const std::vector<Weight> ws = {Weight::power(np), Weight::capped(np), Weight::power(0.0),
                                      Weight::truncated(0.5 * np, 0.3)};
      for (const auto& w : ws) {
        for (auto rho : rhos(c, {0.125, 0.25, ExtReal::infinity()})) {
          cases::mobd(acc, fx.f, w, p, rho, c.engine());
        }
      }
    }
  }
}

void drive_bdmo(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      const double np = p.dim_ratio(c.n);
      const std::vector<Weight> ws = {Weight::power(0.0),      Weight::power(0.5 * np),
                                      Weight::power(np),       Weight::capped(np),
                                      Weight::truncated(0.5 * np, 0.3), table_a()};
      for (const auto& w : ws) {
        for (auto rho : rhos(c, {0.125, 0.25, ExtReal::infinity()})) {
          cases::bdmo(acc, fx.f, w, p, rho, c.engine());
        }
      }
    }
  }
}

void drive_bdMo(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      const double np = p.dim_ratio(c.n);
      for (double lambda : {0.0, 0.5 * np, np}) cases::bdMo(acc, fx.f, lambda, p, c.engine());
    }
  }
}

void drive_bgm1(CaseAccumulator& acc, const Context& c) {
  auto samples = grid_samples(c, {1.0 / 64, 1.0 / 32, 1.0 / 16, 0.125, 0.25});
  for (const auto& fx : c.fixtures) {
    for (const auto& p : finite_p()) {
      const double np = p.dim_ratio(c.n);
      const std::vector<Weight> ws = {Weight::power(0.5 * np), Weight::capped(0.5 * np),
                                      Weight::truncated(0.25 * np, 0.3)};
      for (const auto& w : ws) cases::bgm1(acc, fx.f, w, p, samples, c.engine());
    }
  }
}

std::vector<std::vector<std::uint8_t>> submasks(const Context& c, const GridDomain& d) {
  std::vector<std::vector<std::uint8_t>> out;
  std::vector<std::uint8_t> half(d.total_points(), 0), box(d.total_points(), 0),
      sparse(d.total_points(), 0);
  Rng rng(c.battery.seed ^ 0x5bd1e995u);
  for (auto lin : d.masked_points()) {
    auto x = d.coordinate(d.unravel(lin));
    half[lin] = x[0] < 0.5;
    bool in = true;
    for (double v : x) in = in && v >= 0.25 && v < 0.75;
    box[lin] = in;
    sparse[lin] = rng.uniform() < 0.5;
  }
  sparse[d.masked_points().front()] = 1;
  out.push_back(half);
  out.push_back(box);
  out.push_back(sparse);
  return out;
}

void drive_restriction(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.25 * c.nd), Weight::truncated(0.25 * c.nd, 0.3),
                                  Weight::capped(0.5 * c.nd), table_b()};
  for (const auto& fx : c.fixtures) {
    auto masks = submasks(c, fx.f.domain());
    for (const auto& m : masks) {
      for (const auto& p : all_p()) {
        for (const auto& w : ws) {
          for (auto rho : rhos(c, {0.25, ExtReal::infinity()})) {
            cases::restriction(acc, fx.f, m, MorreyParams{p, w, rho}, c.engine());
          }
        }
      }
    }
  }
}

std::size_t pad_of(const Context& c) { return std::max<std::size_t>(2, c.battery.size / 8); }

void drive_prelprgm_ii(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.0), Weight::power(0.5 * c.nd),
                                  Weight::capped(0.5 * c.nd), table_a(), table_b()};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : ws) {
        double sigma = w.doubling_constant().finite();
        for (auto rho : rhos(c, {0.125, 0.25, ExtReal::infinity()})) {
          cases::extension(acc, fx.f, pad_of(c), MorreyParams{p, w, rho}, sigma, c.engine());
        }
      }
    }
  }
}

void drive_mrhoext1(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : finite_p()) {
      for (double lambda : {0.0, 0.5, 1.0}) {
        for (auto rho : rhos(c, {0.125, 0.25})) {
          cases::extension(acc, fx.f, pad_of(c), MorreyParams{p, Weight::power(lambda), rho},
                           std::pow(2.0, lambda), c.engine());
        }
      }
    }
  }
}

void drive_mulgm1(CaseAccumulator& acc, const Context& c) {
  const std::vector<std::pair<Exponent, Exponent>> combos = {
      {Exponent(2.0), Exponent(2.0)},
      {Exponent(4.0), Exponent(4.0)},
      {Exponent::infinity(), Exponent::infinity()},
      {Exponent(3.0), Exponent(6.0)}};
  const std::vector<std::pair<Weight, Weight>> wpairs = {
      {Weight::power(0.125 * c.nd), Weight::power(0.25 * c.nd)},
      {Weight::capped(0.25 * c.nd), Weight::capped(0.25 * c.nd)},
      {Weight::truncated(0.25 * c.nd, 0.3), Weight::truncated(0.0, 0.3)},
      {table_a(), table_b()}};
  const std::size_t k = c.fixtures.size();
  for (std::size_t i = 0; i < k; ++i) {
    const auto& f = c.fixtures[i].f;
    const auto& g = c.fixtures[(i + 1) % k].f;
    for (const auto& [p1, p2] : combos) {
      for (const auto& [v1, v2] : wpairs) {
        for (auto rho : rhos(c, {0.25, ExtReal::infinity()})) {
          cases::mulgm1(acc, f, g, v1, v2, p1, p2, rho, c.engine());
        }
      }
    }
  }
}

std::vector<std::pair<Exponent, Exponent>> embedding_pairs() {
  return {{Exponent(2.0), Exponent(1.0)},
          {Exponent(4.0), Exponent(2.0)},
          {Exponent::infinity(), Exponent(1.0)},
          {Exponent::infinity(), Exponent(2.0)}};
}

void drive_emgm1a(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& [p, q] : embedding_pairs()) {
      const double gap = q.dim_ratio(c.n) - p.dim_ratio(c.n);
      for (double lambda : {0.0, 0.25 * p.dim_ratio(c.n)}) {
        const std::vector<std::pair<Weight, Weight>> wpairs = {
            {Weight::power(lambda), Weight::power(lambda + gap)},
            {Weight::power(lambda), Weight::power(lambda)},
            {Weight::capped(lambda), Weight::capped(lambda)}};
        for (const auto& [v1, v2] : wpairs) {
          for (auto rho : rhos(c, {0.25, 0.5, ExtReal::infinity()})) {
            cases::emgm1a(acc, fx.f, v1, v2, p, q, rho, c.engine());
          }
        }
      }
    }
  }
}

void drive_emgmf(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& [p, q] : embedding_pairs()) {
      const double gap = q.dim_ratio(c.n) - p.dim_ratio(c.n);
      for (double lambda : {0.0, 0.25 * p.dim_ratio(c.n)}) {
        const std::vector<std::pair<Weight, Weight>> wpairs = {
            {Weight::capped(lambda), Weight::capped(lambda)},
            {Weight::capped(lambda), Weight::capped(lambda + gap)},
            {Weight::power(lambda), Weight::power(lambda)}};
        for (const auto& [v1, v2] : wpairs) {
          for (auto rho : rhos(c, {0.5, ExtReal::infinity()})) {
            cases::emgmf(acc, fx.f, v1, v2, p, q, rho, c.engine());
          }
        }
      }
    }
  }
}

void drive_mlpwp_ii(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (double lambda : {0.25 * c.nd, 0.5 * c.nd, c.nd}) {
        cases::mlpwp_ii(acc, fx.f, lambda, p, c.engine());
      }
    }
  }
}

void drive_mlpwp_iii(CaseAccumulator& acc, const Context& c) {
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (double lambda : {0.0, 0.25 * c.nd, 0.5 * c.nd, c.nd}) {
        cases::mlpwp_iii(acc, fx.f, lambda, p, c.engine());
      }
    }
  }
}

void drive_apgm1(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.25 * c.nd), Weight::capped(0.5 * c.nd), table_a()};
  auto eps = c.n == 1 ? lattice_eps(c, {0.125, 0.0625, 0.03125})
                      : lattice_eps(c, {4 * c.h, 2 * c.h});
  for (const auto& fx : c.fixtures) {
    for (double e : eps) {
      for (const auto& p : all_p()) {
        for (const auto& w : ws) {
          for (auto rho : rhos(c, {0.25, ExtReal::infinity()})) {
            cases::apgm1(acc, fx.f, MorreyParams{p, w, rho}, e, c.engine());
          }
        }
      }
    }
  }
}

void drive_zorko(CaseAccumulator& acc, const Context& c) {
  std::vector<FixtureKind> kinds = {FixtureKind::bump};
  std::vector<double> eps;
  if (c.n == 1) {
    kinds.push_back(FixtureKind::random);
    eps = lattice_eps(c, {0.125, 0.0625, 0.03125});
  } else {
    eps = lattice_eps(c, {4 * c.h, 2 * c.h});
  }
  const std::vector<MorreyParams> params = {
      {Exponent(2.0), Weight::capped(0.25 * c.nd), ExtReal::infinity()},
      {Exponent(1.0), Weight::power(0.25 * c.nd), 0.25}};
  for (auto kind : kinds) {
    auto f = make_fixture(kind, c.n, c.battery.size, c.battery.seed);
    for (const auto& pr : params) cases::zorko(acc, f, pr, eps, c.engine());
  }
}

void drive_minint(CaseAccumulator& acc, const Context& c) {
  std::uint64_t salt = 0;
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      cases::minint(acc, fx.f, p, c.battery.seed + 1000 + salt++, 16);
    }
  }
}

void drive_homogeneity(CaseAccumulator& acc, const Context& c) {
  const std::vector<std::pair<std::int64_t, std::int64_t>> alphas = {{2, 1}, {4, 1}, {1, 2}};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : finite_p()) {
      for (double lambda : {0.0, 0.5, 1.0}) {
        for (const auto& [num, den] : alphas) {
          cases::homogeneity(acc, fx.f, lambda, p, num, den, c.engine());
        }
      }
    }
  }
}

void drive_molat(CaseAccumulator& acc, const Context& c) {
  const std::vector<Weight> ws = {Weight::power(0.25 * c.nd), Weight::truncated(0.25 * c.nd, 0.3),
                                  Weight::capped(0.5 * c.nd), table_b()};
  std::uint64_t salt = 0;
  for (const auto& fx : c.fixtures) {
    auto u = random_field(fx.f.domain(), c.battery.seed + 2000 + salt++, 0.0, 1.0);
    auto smaller = pointwise_product(fx.f, u);
    for (const auto& p : all_p()) {
      for (const auto& w : ws) {
        for (auto rho : rhos(c, {0.25, ExtReal::infinity()})) {
          cases::molat(acc, smaller, fx.f, MorreyParams{p, w, rho}, c.engine());
        }
      }
    }
  }
}

void drive_rho_monotone(CaseAccumulator& acc, const Context& c) {
  auto samples = grid_samples(c, {1.0 / 64, 1.0 / 32, 1.0 / 16, 0.125, 0.25, 0.5, 1.0, 2.0});
  const std::vector<Weight> ws = {Weight::power(0.25 * c.nd), Weight::power(c.nd),
                                  Weight::capped(0.5 * c.nd), Weight::truncated(0.25 * c.nd, 0.3),
                                  table_b()};
  for (const auto& fx : c.fixtures) {
    for (const auto& p : all_p()) {
      for (const auto& w : ws) {
        cases::rho_monotone(acc, fx.f, MorreyParams{p, w, ExtReal::infinity()}, samples,
                            c.engine());
      }
    }
  }
}

using Driver = std::function<void(CaseAccumulator&, const Context&)>;

const std::vector<std::pair<std::string, Driver>>& catalogue() {
  static const std::vector<std::pair<std::string, Driver>> table = {
      {"moud-equivalence", drive_moud},
      {"mocls", drive_mocls},
      {"prem", drive_prem},
      {"motri", drive_motri},
      {"molp", drive_molp},
      {"mocolp", drive_mocolp},
      {"mo=lp", drive_mo_eq_lp},
      {"vmo-p-infinity", drive_vmo},
      {"mobd", drive_mobd},
      {"bdmo", drive_bdmo},
      {"bdMo", drive_bdMo},
      {"bgm1", drive_bgm1},
      {"prelprgm-i", drive_restriction},
      {"prelprgm-ii", drive_prelprgm_ii},
      {"mrhoext1", drive_mrhoext1},
      {"mulgm1", drive_mulgm1},
      {"emgm1a", drive_emgm1a},
      {"emgmf", drive_emgmf},
      {"mlpwp-ii", drive_mlpwp_ii},
      {"mlpwp-iii", drive_mlpwp_iii},
      {"apgm1", drive_apgm1},
      {"zorko", drive_zorko},
      {"minint", drive_minint},
      {"homogeneity", drive_homogeneity},
      {"molat", drive_molat},
      {"rho-monotone", drive_rho_monotone},
  };
  return table;
}

CheckReport run_with_context(const std::string& id, const Context& ctx) {
  for (const auto& [name, drive] : catalogue()) {
    if (name != id) continue;
    CaseAccumulator acc(id, ctx.options.tol, ctx.options.rhs_scale);
    acc.digest().add(std::string_view(id));
    acc.digest().add(static_cast<std::uint64_t>(ctx.battery.seed));
    acc.digest().add(static_cast<std::uint64_t>(ctx.battery.n));
    acc.digest().add(static_cast<std::uint64_t>(ctx.battery.size));
    try {
      drive(acc, ctx);
    } catch (const Error& e) {
      auto r = acc.finish();
      r.pass = false;
      r.notes = std::string("error: ") + e.what();
      return r;
    }
    return acc.finish();
  }
  throw ParseError("unknown check id '" + id + "'");
}

}  // namespace

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& [name, drive] : catalogue()) out.push_back(name);
    return out;
  }();
  return ids;
}

bool is_check_id(std::string_view id) {
  const auto& ids = all_check_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::vector<std::string> parse_suite(std::string_view text) {
  if (text == "all") return all_check_ids();
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    std::string id(text.substr(start, pos - start));
    if (!is_check_id(id)) throw ParseError("unknown check id '" + id + "'");
    out.push_back(id);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

CheckReport run_check(const std::string& check_id, const Battery& battery,
                      const SuiteOptions& options) {
  if (!is_check_id(check_id)) throw ParseError("unknown check id '" + check_id + "'");
  return run_with_context(check_id, make_context(battery, options));
}

SuiteResult run_suite(const std::vector<std::string>& check_ids, const Battery& battery,
                      const SuiteOptions& options) {
  SuiteResult result;
  for (const auto& id : check_ids) {
    if (!is_check_id(id)) throw ParseError("unknown check id '" + id + "'");
  }
  if (check_ids.empty()) return result;
  auto ctx = make_context(battery, options);
  for (const auto& id : all_check_ids()) {
    if (std::find(check_ids.begin(), check_ids.end(), id) == check_ids.end()) continue;
    result.reports.push_back(run_with_context(id, ctx));
  }
  for (const auto& r : result.reports) {
    ++result.summary.total;
    if (r.pass) {
      ++result.summary.passed;
    } else {
      ++result.summary.failed;
    }
  }
  return result;
}

}  // namespace morrey
