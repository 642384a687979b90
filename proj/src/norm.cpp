// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/norm.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <thread>

namespace morrey {

namespace {

// Neumaier-compensated running sum of nonnegative terms.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double v) {
    double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + comp; }
};

double abs_pow(double v, const Exponent& p) {
  double a = std::fabs(v);
  double e = p.value();
  if (e == 1.0) return a;
  if (e == 2.0) return a * a;
  return std::pow(a, e);
}

double root(double s, const Exponent& p) {
  double e = p.value();
  if (e == 1.0) return s;
  return std::pow(s, 1.0 / e);
}

double cell_volume(const GridDomain& d) {
  return std::pow(d.spacing(), static_cast<double>(d.dim()));
}

bool better(double v, std::size_t c, double best, std::size_t best_c) {
  return v > best || (v == best && c < best_c);
}

std::int64_t sq(std::int64_t v) { return v * v; }

struct Stencil {
  std::vector<std::int64_t> d2;
  std::vector<std::int32_t> coords;  // dim entries per offset
  std::vector<std::int64_t> delta;   // linear index offset
};

Stencil make_stencil(const GridDomain& domain, Shell top) {
  const std::size_t n = domain.dim();
  Stencil st;
  if (top == 0) return st;
  const auto reach = static_cast<std::int64_t>(std::sqrt(static_cast<double>(top - 1)) + 1);
  std::vector<std::int64_t> lim(n);
  for (std::size_t a = 0; a < n; ++a) {
    lim[a] = std::min<std::int64_t>(reach, static_cast<std::int64_t>(domain.shape()[a]) - 1);
  }
  struct Off {
    std::int64_t d2;
    std::vector<std::int32_t> c;
  };
  std::vector<Off> offs;
  std::vector<std::int32_t> cur(n);
  for (std::size_t a = 0; a < n; ++a) cur[a] = static_cast<std::int32_t>(-lim[a]);
  while (true) {
    std::int64_t d2 = 0;
    for (auto c : cur) d2 += sq(c);
    if (d2 < static_cast<std::int64_t>(top)) offs.push_back({d2, cur});
    std::size_t a = n;
    while (a-- > 0) {
      if (cur[a] < lim[a]) {
        ++cur[a];
        break;
      }
      cur[a] = static_cast<std::int32_t>(-lim[a]);
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  std::sort(offs.begin(), offs.end(), [](const Off& x, const Off& y) {
    return x.d2 != y.d2 ? x.d2 < y.d2 : x.c < y.c;
  });
  for (const auto& o : offs) {
    st.d2.push_back(o.d2);
    std::int64_t delta = 0;
    for (std::size_t a = 0; a < n; ++a) {
      st.coords.push_back(o.c[a]);
      delta += static_cast<std::int64_t>(o.c[a]) *
               static_cast<std::int64_t>(domain.strides()[a]);
    }
    st.delta.push_back(delta);
  }
  return st;
}

struct CoverBound {
  Shell threshold = 0;
  std::size_t center = 0;
};

// Per-center cover radius bounded by the farthest corner of the masked
// bounding box; the minimum over centers is an upper bound of the exact
// threshold, which is all the fast path needs.
CoverBound bbox_cover(const GridDomain& d, const std::vector<std::size_t>& centers) {
  const std::size_t n = d.dim();
  std::vector<std::int64_t> lo(n, std::numeric_limits<std::int64_t>::max());
  std::vector<std::int64_t> hi(n, std::numeric_limits<std::int64_t>::min());
  for (auto lin : d.masked_points()) {
    auto idx = d.unravel(lin);
    for (std::size_t a = 0; a < n; ++a) {
      lo[a] = std::min(lo[a], idx[a]);
      hi[a] = std::max(hi[a], idx[a]);
    }
  }
  CoverBound best{std::numeric_limits<Shell>::max(), 0};
  for (auto c : centers) {
    auto idx = d.unravel(c);
    Shell t = 0;
    for (std::size_t a = 0; a < n; ++a) {
      t += static_cast<Shell>(std::max(sq(idx[a] - lo[a]), sq(hi[a] - idx[a])));
    }
    if (t < best.threshold) best = {t, c};
  }
  return best;
}

CoverBound exact_cover(const GridDomain& d, const std::vector<std::size_t>& centers) {
  const std::size_t n = d.dim();
  std::vector<Index> pts;
  for (auto lin : d.masked_points()) pts.push_back(d.unravel(lin));
  CoverBound best{std::numeric_limits<Shell>::max(), 0};
  for (auto c : centers) {
    auto x = d.unravel(c);
    Shell far = 0;
    for (const auto& y : pts) {
      Shell d2 = 0;
      for (std::size_t a = 0; a < n; ++a) d2 += static_cast<Shell>(sq(y[a] - x[a]));
      far = std::max(far, d2);
    }
    if (far < best.threshold) best = {far, c};
  }
  return best;
}

std::vector<Shell> shells_up_to(Shell top, double h, std::size_t n, ExtReal rho) {
  std::vector<Shell> out;
  for (Shell s = next_shell(0, n); s <= top; s = next_shell(s, n)) {
    if (!(shell_radius(s, h) < rho.value())) break;
    out.push_back(s);
  }
  return out;
}

struct Partial {
  std::vector<double> best;
  std::vector<std::size_t> arg;
  std::vector<double> cover_best;
  std::vector<std::size_t> cover_arg;
  std::vector<char> cover_set;
  std::vector<char> best_set;

  explicit Partial(std::size_t k)
      : best(k, 0.0), arg(k, 0), cover_best(k, 0.0), cover_arg(k, 0),
        cover_set(k, 0), best_set(k, 0) {}

  void offer(std::size_t k, double v, std::size_t c) {
    if (!best_set[k] || better(v, c, best[k], arg[k])) {
      best[k] = v;
      arg[k] = c;
      best_set[k] = 1;
    }
  }
  void offer_cover(std::size_t k, double v, std::size_t c) {
    if (!cover_set[k] || better(v, c, cover_best[k], cover_arg[k])) {
      cover_best[k] = v;
      cover_arg[k] = c;
      cover_set[k] = 1;
    }
  }
};

void fast_chunk(const GridDomain& d, const std::vector<double>& a,
                const std::vector<std::size_t>& centers, std::size_t begin,
                std::size_t end, const Stencil& st,
                const std::vector<std::size_t>& group_end, Partial& out) {
  const std::size_t n = d.dim();
  const std::size_t total = d.masked_count();
  const std::size_t k_count = group_end.size();
  std::vector<std::int64_t> x(n);
  std::vector<std::int64_t> ext(n);
  for (std::size_t ax = 0; ax < n; ++ax) ext[ax] = static_cast<std::int64_t>(d.shape()[ax]);
  const auto& mask = d.mask();
  for (std::size_t ci = begin; ci < end; ++ci) {
    const std::size_t c = centers[ci];
    std::size_t rem = c;
    for (std::size_t ax = 0; ax < n; ++ax) {
      x[ax] = static_cast<std::int64_t>(rem / d.strides()[ax]);
      rem %= d.strides()[ax];
    }
    CompensatedSum acc;
    std::size_t hits = 0;
    std::size_t pos = 0;
    for (std::size_t k = 0; k < k_count; ++k) {
      const std::size_t stop = group_end[k];
      for (; pos < stop; ++pos) {
        const std::int32_t* oc = &st.coords[pos * n];
        bool inside = true;
        for (std::size_t ax = 0; ax < n; ++ax) {
          std::int64_t y = x[ax] + oc[ax];
          if (y < 0 || y >= ext[ax]) {
            inside = false;
            break;
          }
        }
        if (!inside) continue;
        auto t = static_cast<std::size_t>(static_cast<std::int64_t>(c) + st.delta[pos]);
        if (mask[t]) {
          acc.add(a[t]);
          ++hits;
        }
      }
      double v = acc.value();
      if (hits == total) {
        out.offer_cover(k, v, c);
        break;
      }
      out.offer(k, v, c);
    }
  }
}

BallProfile fast_profile(const GridFunction& f, const Exponent& p,
                         CenterPolicy policy, ExtReal rho_limit) {
  const auto& d = f.domain();
  BallProfile prof;
  prof.dim = d.dim();
  prof.h = d.spacing();
  prof.p = p;
  prof.policy = policy;
  prof.rho_limit = rho_limit;

  std::vector<double> a(d.total_points(), 0.0);
  CompensatedSum total;
  const auto& pts = d.masked_points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    a[pts[k]] = abs_pow(f.values()[k], p);
    total.add(a[pts[k]]);
  }
  prof.total = total.value();

  auto centers = centers_for(d, policy);
  auto cover = bbox_cover(d, centers);
  prof.cover_threshold = cover.threshold;
  prof.cover_center = cover.center;
  prof.shells = shells_up_to(cover.threshold, prof.h, prof.dim, rho_limit);
  const std::size_t k_count = prof.shells.size();
  prof.max_sum.assign(k_count, 0.0);
  prof.argmax_center.assign(k_count, 0);
  if (k_count == 0) return prof;

  Stencil st = make_stencil(d, prof.shells.back());
  std::vector<std::size_t> group_end(k_count);
  for (std::size_t k = 0; k < k_count; ++k) {
    group_end[k] = static_cast<std::size_t>(
        std::lower_bound(st.d2.begin(), st.d2.end(),
                         static_cast<std::int64_t>(prof.shells[k])) -
        st.d2.begin());
  }

  const std::size_t workers =
      std::max<std::size_t>(1, std::min(thread_budget(), centers.size() / 64 + 1));
  std::vector<Partial> parts(workers, Partial(k_count));
  if (workers == 1) {
    fast_chunk(d, a, centers, 0, centers.size(), st, group_end, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (centers.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      std::size_t b = std::min(centers.size(), w * chunk);
      std::size_t e = std::min(centers.size(), b + chunk);
      pool.emplace_back([&, b, e, w] {
        fast_chunk(d, a, centers, b, e, st, group_end, parts[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  Partial merged(k_count);
  for (const auto& part : parts) {
    for (std::size_t k = 0; k < k_count; ++k) {
      if (part.best_set[k]) merged.offer(k, part.best[k], part.arg[k]);
      if (part.cover_set[k]) merged.offer_cover(k, part.cover_best[k], part.cover_arg[k]);
    }
  }
  // A center whose ball covered the domain at shell k keeps that sum for
  // every later shell.
  bool have_cover = false;
  double cov = 0.0;
  std::size_t cov_arg = 0;
  for (std::size_t k = 0; k < k_count; ++k) {
    if (merged.cover_set[k] && (!have_cover || better(merged.cover_best[k],
                                                      merged.cover_arg[k], cov, cov_arg))) {
      cov = merged.cover_best[k];
      cov_arg = merged.cover_arg[k];
      have_cover = true;
    }
    if (have_cover) merged.offer(k, cov, cov_arg);
    prof.max_sum[k] = merged.best[k];
    prof.argmax_center[k] = merged.arg[k];
  }
  return prof;
}

BallProfile oracle_profile(const GridFunction& f, const Exponent& p,
                           CenterPolicy policy, ExtReal rho_limit) {
  const auto& d = f.domain();
  const std::size_t n = d.dim();
  BallProfile prof;
  prof.dim = n;
  prof.h = d.spacing();
  prof.p = p;
  prof.policy = policy;
  prof.rho_limit = rho_limit;

  std::vector<Index> pts;
  std::vector<long double> vals;
  long double total = 0.0L;
  for (std::size_t k = 0; k < d.masked_count(); ++k) {
    pts.push_back(d.unravel(d.masked_points()[k]));
    vals.push_back(static_cast<long double>(abs_pow(f.values()[k], p)));
    total += vals.back();
  }
  prof.total = static_cast<double>(total);

  auto centers = centers_for(d, policy);
  auto cover = exact_cover(d, centers);
  prof.cover_threshold = cover.threshold;
  prof.cover_center = cover.center;
  prof.shells = shells_up_to(cover.threshold, prof.h, n, rho_limit);
  prof.max_sum.assign(prof.shells.size(), -1.0);
  prof.argmax_center.assign(prof.shells.size(), 0);

  for (auto c : centers) {
    auto x = d.unravel(c);
    for (std::size_t k = 0; k < prof.shells.size(); ++k) {
      const Shell s = prof.shells[k];
      long double acc = 0.0L;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Shell d2 = 0;
        for (std::size_t a = 0; a < n; ++a) d2 += static_cast<Shell>(sq(pts[i][a] - x[a]));
        if (d2 < s) acc += vals[i];
      }
      double v = static_cast<double>(acc);
      if (v > prof.max_sum[k]) {
        prof.max_sum[k] = v;
        prof.argmax_center[k] = c;
      }
    }
  }
  return prof;
}

NormResult sup_norm_closed_form(const GridFunction& f, const MorreyParams& params,
                                CenterPolicy policy) {
  const auto& d = f.domain();
  NormResult res;
  res.center_policy = policy;
  double m = 0.0;
  std::size_t arg = d.masked_points().front();
  for (std::size_t k = 0; k < f.values().size(); ++k) {
    double v = std::fabs(f.values()[k]);
    if (v > m) {
      m = v;
      arg = d.masked_points()[k];
    }
  }
  auto t = params.weight.pieces().sup_on_shells(d.spacing(), d.dim(), 0, params.rho);
  res.argmax_center = d.unravel(arg);
  if (t.shell == 0) {
    res.value = 0.0;
    return res;
  }
  res.argmax_radius = shell_radius(t.shell, d.spacing());
  res.radii_evaluated = 1;
  if (m == 0.0) {
    res.value = 0.0;
  } else if (t.value.is_infinite()) {
    res.value = ExtReal::infinity();
    res.note = "triviality witness: weight unbounded on sampled radii";
  } else {
    res.value = t.value.finite() * m;
  }
  return res;
}

NormResult sup_norm_oracle(const GridFunction& f, const MorreyParams& params,
                           CenterPolicy policy) {
  const auto& d = f.domain();
  const std::size_t n = d.dim();
  const double h = d.spacing();
  NormResult res;
  res.center_policy = policy;
  auto centers = centers_for(d, policy);
  auto cover = exact_cover(d, centers);
  auto shells = shells_up_to(cover.threshold, h, n, params.rho);
  std::vector<Index> pts;
  for (auto lin : d.masked_points()) pts.push_back(d.unravel(lin));
  double best = -1.0;
  for (auto c : centers) {
    auto x = d.unravel(c);
    for (auto s : shells) {
      double m = 0.0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        Shell d2 = 0;
        for (std::size_t a = 0; a < n; ++a) d2 += static_cast<Shell>(sq(pts[i][a] - x[a]));
        if (d2 < s) m = std::max(m, std::fabs(f.values()[i]));
      }
      double r = shell_radius(s, h);
      double v = params.weight.eval(r) * m;
      if (v > best) {
        best = v;
        res.argmax_center = x;
        res.argmax_radius = r;
      }
    }
  }
  res.radii_evaluated = shells.size();
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::fabs(v));
  auto t = params.weight.pieces().sup_on_shells(h, n, cover.threshold, params.rho);
  if (t.shell != 0) {
    ++res.radii_evaluated;
    if (t.value.is_infinite() && m > 0.0) {
      res.value = ExtReal::infinity();
      res.note = "triviality witness: weight unbounded on sampled radii";
      res.argmax_center = d.unravel(cover.center);
      res.argmax_radius = shell_radius(t.shell, h);
      return res;
    }
    double v = t.value.is_infinite() ? 0.0 : t.value.finite() * m;
    if (v > best) {
      best = v;
      res.argmax_center = d.unravel(cover.center);
      res.argmax_radius = shell_radius(t.shell, h);
    }
  }
  if (best < 0.0) {
    res.argmax_center = d.unravel(d.masked_points().front());
    best = 0.0;
  }
  res.value = best;
  return res;
}

}  // namespace

std::string to_string(CenterPolicy policy) {
  return policy == CenterPolicy::mask ? "mask" : "closure";
}

CenterPolicy parse_center_policy(std::string_view text) {
  if (text == "mask") return CenterPolicy::mask;
  if (text == "closure") return CenterPolicy::closure;
  throw ParseError("center policy must be mask or closure");
}

std::size_t thread_budget() {
  if (const char* env = std::getenv("MORREY_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::size_t> centers_for(const GridDomain& d, CenterPolicy policy) {
  if (policy == CenterPolicy::mask) return d.masked_points();
  std::vector<std::size_t> out;
  const std::size_t n = d.dim();
  for (std::size_t lin = 0; lin < d.total_points(); ++lin) {
    if (d.in_mask(lin)) {
      out.push_back(lin);
      continue;
    }
    auto idx = d.unravel(lin);
    bool adjacent = false;
    for (std::size_t a = 0; a < n && !adjacent; ++a) {
      for (int step : {-1, 1}) {
        auto y = idx;
        y[a] += step;
        if (d.contains_index(y) && d.in_mask(d.ravel(y))) adjacent = true;
      }
    }
    if (adjacent) out.push_back(lin);
  }
  return out;
}

BallProfile build_profile(const GridFunction& f, const Exponent& p,
                          CenterPolicy policy, ExtReal rho_limit, Engine engine) {
  if (p.is_infinite()) throw DomainError("ball profile: p must be finite");
  if (!(rho_limit > ExtReal(0.0))) throw DomainError("ball profile: rho must be positive");
  return engine == Engine::fast ? fast_profile(f, p, policy, rho_limit)
                                : oracle_profile(f, p, policy, rho_limit);
}

NormResult evaluate_profile(const BallProfile& prof, const GridDomain& domain,
                            const Weight& weight, ExtReal rho) {
  if (rho > prof.rho_limit) throw DomainError("profile evaluated beyond its rho limit");
  if (!(rho > ExtReal(0.0))) throw DomainError("rho must be positive");
  const double hn = cell_volume(domain);
  NormResult res;
  res.center_policy = prof.policy;
  double best = -1.0;
  std::size_t best_center = domain.masked_points().front();
  double best_radius = 0.0;
  for (std::size_t k = 0; k < prof.shells.size(); ++k) {
    double r = shell_radius(prof.shells[k], prof.h);
    if (!(r < rho.value())) break;
    ++res.radii_evaluated;
    double w = weight.eval(r);
    double v = w == 0.0 ? 0.0 : w * root(hn * prof.max_sum[k], prof.p);
    if (v > best) {
      best = v;
      best_center = prof.argmax_center[k];
      best_radius = r;
    }
  }
  auto t = weight.pieces().sup_on_shells(prof.h, prof.dim, prof.cover_threshold, rho);
  if (t.shell != 0) {
    ++res.radii_evaluated;
    double norm = root(hn * prof.total, prof.p);
    if (t.value.is_infinite() && norm > 0.0) {
      res.value = ExtReal::infinity();
      res.argmax_center = domain.unravel(prof.cover_center);
      res.argmax_radius = shell_radius(t.shell, prof.h);
      res.note = "triviality witness: weight unbounded on sampled radii";
      return res;
    }
    double v = t.value.is_infinite() ? 0.0 : t.value.finite() * norm;
    if (v > best) {
      best = v;
      best_center = prof.cover_center;
      best_radius = shell_radius(t.shell, prof.h);
    }
  }
  res.value = std::max(best, 0.0);
  res.argmax_center = domain.unravel(best_center);
  res.argmax_radius = best_radius;
  return res;
}

double lp_ball_norm(const GridFunction& f, const Ball& ball, const Exponent& p) {
  const auto& d = f.domain();
  auto pts = linear_points_in_ball(d, ball);
  if (p.is_infinite()) {
    double m = 0.0;
    for (auto lin : pts) m = std::max(m, std::fabs(f.at(lin)));
    return m;
  }
  CompensatedSum acc;
  for (auto lin : pts) acc.add(abs_pow(f.at(lin), p));
  return root(cell_volume(d) * acc.value(), p);
}

double lp_norm_omega(const GridFunction& f, const Exponent& p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::fabs(v));
    return m;
  }
  CompensatedSum acc;
  for (double v : f.values()) acc.add(abs_pow(v, p));
  return root(cell_volume(f.domain()) * acc.value(), p);
}

NormResult morrey_norm(const GridFunction& f, const MorreyParams& params,
                       CenterPolicy policy, Engine engine) {
  if (!(params.rho > ExtReal(0.0))) throw DomainError("rho must be positive");
  if (params.p.is_infinite()) {
    return engine == Engine::fast ? sup_norm_closed_form(f, params, policy)
                                  : sup_norm_oracle(f, params, policy);
  }
  auto prof = build_profile(f, params.p, policy, params.rho, engine);
  return evaluate_profile(prof, f.domain(), params.weight, params.rho);
}

std::vector<std::pair<double, ExtReal>> vanishing_modulus(
    const GridFunction& f, const MorreyParams& params,
    const std::vector<double>& rho_samples, CenterPolicy policy, Engine engine) {
  std::vector<std::pair<double, ExtReal>> out;
  if (rho_samples.empty()) return out;
  for (std::size_t i = 0; i < rho_samples.size(); ++i) {
    if (!(rho_samples[i] > 0.0) || !std::isfinite(rho_samples[i])) {
      throw DomainError("rho samples must be positive and finite");
    }
    if (i > 0 && !(rho_samples[i] >= rho_samples[i - 1])) {
      throw DomainError("rho samples must be ascending");
    }
    if (ExtReal(rho_samples[i]) > params.rho) {
      throw DomainError("rho samples must not exceed rho");
    }
  }
  if (params.p.is_infinite() || engine == Engine::oracle) {
    for (double r : rho_samples) {
      MorreyParams q = params;
      q.rho = r;
      out.emplace_back(r, morrey_norm(f, q, policy, engine).value);
    }
    return out;
  }
  auto prof = build_profile(f, params.p, policy, rho_samples.back(), engine);
  for (double r : rho_samples) {
    out.emplace_back(r, evaluate_profile(prof, f.domain(), params.weight, r).value);
  }
  return out;
}

ExtReal capped_norm(const GridFunction& f, double lambda, const Exponent& p,
                    Engine engine) {
  MorreyParams params{p, Weight::capped(lambda), ExtReal::infinity()};
  return morrey_norm(f, params, CenterPolicy::mask, engine).value;
}

}  // namespace morrey
