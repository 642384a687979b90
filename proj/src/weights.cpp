// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/weights.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <set>
#include <sstream>

#include "morrey/grid_io.hpp"

namespace morrey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exponents produced by arithmetic on weights snap to 0 when they are
// rounding noise; a spurious tiny negative power would turn a bounded
// ratio into an infinite one at r -> 0.
double snap(double e) { return std::fabs(e) < 1e-12 ? 0.0 : e; }

// Shell radii beyond this ratio to h are not enumerated.
constexpr double kShellRatioLimit = 3e7;

void check_lambda(double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("weight: lambda must be finite and >= 0");
  }
}

std::vector<Piece> build_pieces(const Weight::Variant& v) {
  return std::visit(
      [](const auto& w) -> std::vector<Piece> {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Power>) {
          return {{0.0, kInf, 1.0, -w.lambda}};
        } else if constexpr (std::is_same_v<T, TruncatedPower>) {
          return {{0.0, w.rho_bar, 1.0, -w.lambda}, {w.rho_bar, kInf, 0.0, 0.0}};
        } else if constexpr (std::is_same_v<T, CappedPower>) {
          return {{0.0, 1.0, 1.0, -w.lambda}, {1.0, kInf, 1.0, 0.0}};
        } else {
          std::vector<Piece> out;
          const auto m = w.values.size();
          for (std::size_t i = 0; i < m; ++i) {
            double lo = i == 0 ? 0.0 : w.breaks[i];
            double hi = i + 1 < m ? w.breaks[i + 1] : kInf;
            out.push_back({lo, hi, w.values[i], 0.0});
          }
          return out;
        }
      },
      v);
}

double parse_number(std::string_view s, const char* what) {
  std::string t(s);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(t.c_str(), &end);
  if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE ||
      !std::isfinite(v)) {
    throw ParseError(std::string("weight spec: bad ") + what + " '" + t + "'");
  }
  return v;
}

// Sup of a single monomial piece over the radius interval [a, b).
ExtReal piece_sup(const Piece& pc, double a, double b) {
  double lo = std::max(a, pc.lo);
  double hi = std::min(b, pc.hi);
  if (!(lo < hi) || pc.coeff == 0.0) return 0.0;
  if (pc.exponent < 0.0) {
    if (lo == 0.0) return ExtReal::infinity();
    return pc.coeff * std::pow(lo, pc.exponent);
  }
  if (pc.exponent == 0.0) return pc.coeff;
  if (std::isinf(hi)) return ExtReal::infinity();
  return pc.coeff * std::pow(hi, pc.exponent);
}

}  // namespace

double Piece::eval(double r) const {
  if (coeff == 0.0) return 0.0;
  return coeff * std::pow(r, exponent);
}

PiecewiseMonomial::PiecewiseMonomial(std::vector<Piece> pieces)
    : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw DomainError("piecewise monomial: no pieces");
  if (pieces_.front().lo != 0.0 || !std::isinf(pieces_.back().hi)) {
    throw DomainError("piecewise monomial: must cover (0, inf)");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const auto& p = pieces_[i];
    if (!(p.lo < p.hi)) throw DomainError("piecewise monomial: empty piece");
    if (i + 1 < pieces_.size() && p.hi != pieces_[i + 1].lo) {
      throw DomainError("piecewise monomial: pieces not contiguous");
    }
    if (!(p.coeff >= 0.0) || !std::isfinite(p.coeff) ||
        !std::isfinite(p.exponent)) {
      throw DomainError("piecewise monomial: bad coefficient");
    }
  }
}

double PiecewiseMonomial::eval(double r) const {
  if (!(r > 0.0)) throw DomainError("weight: r must be positive");
  auto it = std::upper_bound(pieces_.begin(), pieces_.end(), r,
                             [](double x, const Piece& p) { return x < p.hi; });
  if (it == pieces_.end()) --it;
  return it->eval(r);
}

namespace {

template <class Op>
PiecewiseMonomial combine(const PiecewiseMonomial& a, const PiecewiseMonomial& b,
                          Op op) {
  std::set<double> cuts;
  for (const auto& p : a.pieces()) cuts.insert(p.lo);
  for (const auto& p : b.pieces()) cuts.insert(p.lo);
  std::vector<double> lo(cuts.begin(), cuts.end());
  std::vector<Piece> out;
  auto locate = [](const PiecewiseMonomial& m, double x) -> const Piece& {
    for (const auto& p : m.pieces()) {
      if (x >= p.lo && x < p.hi) return p;
    }
    return m.pieces().back();
  };
  for (std::size_t i = 0; i < lo.size(); ++i) {
    double hi = i + 1 < lo.size() ? lo[i + 1] : kInf;
    out.push_back(op(lo[i], hi, locate(a, lo[i]), locate(b, lo[i])));
  }
  return PiecewiseMonomial(std::move(out));
}

}  // namespace

PiecewiseMonomial PiecewiseMonomial::times(const PiecewiseMonomial& other) const {
  return combine(*this, other, [](double lo, double hi, const Piece& x, const Piece& y) {
    double c = x.coeff * y.coeff;
    return Piece{lo, hi, c, c == 0.0 ? 0.0 : snap(x.exponent + y.exponent)};
  });
}

PiecewiseMonomial PiecewiseMonomial::over(const PiecewiseMonomial& other) const {
  return combine(*this, other, [](double lo, double hi, const Piece& x, const Piece& y) {
    if (y.coeff == 0.0) throw IotaUndefined("weight ratio: divisor vanishes");
    double c = x.coeff / y.coeff;
    return Piece{lo, hi, c, c == 0.0 ? 0.0 : snap(x.exponent - y.exponent)};
  });
}

PiecewiseMonomial PiecewiseMonomial::times_power(double e) const {
  auto out = pieces_;
  for (auto& p : out) {
    if (p.coeff != 0.0) p.exponent = snap(p.exponent + e);
  }
  return PiecewiseMonomial(std::move(out));
}

ExtReal PiecewiseMonomial::sup_between(double a, double b) const {
  ExtReal best = 0.0;
  for (const auto& p : pieces_) best = max(best, piece_sup(p, a, b));
  return best;
}

PiecewiseMonomial::ShellSup PiecewiseMonomial::sup_on_shells(
    double h, std::size_t n, Shell s_lo, ExtReal rho) const {
  ShellSup best;
  const Shell s_min = next_shell(s_lo, n);
  for (const auto& p : pieces_) {
    double upper = std::min(p.hi, rho.value());
    if (!(p.lo < upper)) continue;
    if (p.lo / h > kShellRatioLimit) continue;
    Shell first = std::max(s_min, first_shell_at_or_above(p.lo, h, n));
    if (!(shell_radius(first, h) < upper)) continue;
    ExtReal v;
    Shell at = first;
    if (p.coeff == 0.0) {
      v = 0.0;
    } else if (p.exponent <= 0.0) {
      v = p.eval(shell_radius(first, h));
    } else if (std::isinf(upper)) {
      v = ExtReal::infinity();
    } else if (upper / h > kShellRatioLimit) {
      v = p.coeff * std::pow(upper, p.exponent);
    } else {
      at = last_shell_below(upper, h, n);
      v = p.eval(shell_radius(at, h));
    }
    if (best.shell == 0 || v > best.value) {
      best.value = v;
      best.shell = at;
    }
  }
  return best;
}

Weight::Weight(Variant v) : v_(std::move(v)) {
  std::visit(
      [](const auto& w) {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Table>) {
          if (w.values.empty() || w.values.size() != w.breaks.size()) {
            throw DomainError("table weight: need one value per breakpoint");
          }
          bool positive = false;
          for (std::size_t i = 0; i < w.values.size(); ++i) {
            if (!(w.values[i] >= 0.0) || !std::isfinite(w.values[i])) {
              throw DomainError("table weight: values must be finite and >= 0");
            }
            if (!(w.breaks[i] >= 0.0) || !std::isfinite(w.breaks[i])) {
              throw DomainError("table weight: breakpoints must be finite and >= 0");
            }
            if (i > 0 && !(w.breaks[i] > w.breaks[i - 1])) {
              throw DomainError("table weight: breakpoints must increase");
            }
            positive = positive || w.values[i] > 0.0;
          }
          if (!positive) throw DomainError("table weight: all values are zero");
        } else {
          check_lambda(w.lambda);
          if constexpr (std::is_same_v<T, TruncatedPower>) {
            if (!(w.rho_bar > 0.0) || !std::isfinite(w.rho_bar)) {
              throw DomainError("truncated weight: cutoff must be positive");
            }
          }
        }
      },
      v_);
  pieces_ = PiecewiseMonomial(build_pieces(v_));
}

double Weight::eval(double r) const { return pieces_.eval(r); }

double Weight::inf_over_all() const {
  return std::visit(
      [](const auto& w) -> double {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Power>) {
          return w.lambda == 0.0 ? 1.0 : 0.0;
        } else if constexpr (std::is_same_v<T, TruncatedPower>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, CappedPower>) {
          return 1.0;
        } else {
          return *std::min_element(w.values.begin(), w.values.end());
        }
      },
      v_);
}

ExtReal Weight::sup_over_all() const {
  return std::visit(
      [](const auto& w) -> ExtReal {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Table>) {
          return *std::max_element(w.values.begin(), w.values.end());
        } else {
          return w.lambda > 0.0 ? ExtReal::infinity() : ExtReal(1.0);
        }
      },
      v_);
}

ExtReal Weight::tail_sup(double a) const {
  if (!(a > 0.0)) throw DomainError("tail_sup: a must be positive");
  return std::visit(
      [a, this](const auto& w) -> ExtReal {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Power>) {
          return std::pow(a, -w.lambda);
        } else if constexpr (std::is_same_v<T, TruncatedPower>) {
          return a < w.rho_bar ? std::pow(a, -w.lambda) : 0.0;
        } else if constexpr (std::is_same_v<T, CappedPower>) {
          return a <= 1.0 ? std::pow(a, -w.lambda) : 1.0;
        } else {
          return pieces_.sup_between(a, kInf);
        }
      },
      v_);
}

ExtReal Weight::doubling_constant() const {
  return std::visit(
      [](const auto& w) -> ExtReal {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Power> || std::is_same_v<T, CappedPower>) {
          return std::pow(2.0, w.lambda);
        } else if constexpr (std::is_same_v<T, TruncatedPower>) {
          throw DoublingUndefined("doubling constant: truncated weight vanishes");
        } else {
          const auto m = w.values.size();
          for (double v : w.values) {
            if (v == 0.0) throw DoublingUndefined("doubling constant: table has zeros");
          }
          double best = 0.0;
          for (std::size_t i = 0; i < m; ++i) {
            double ai = i == 0 ? 0.0 : w.breaks[i];
            double bi = i + 1 < m ? w.breaks[i + 1] : kInf;
            for (std::size_t j = 0; j < m; ++j) {
              double aj = j == 0 ? 0.0 : w.breaks[j];
              double bj = j + 1 < m ? w.breaks[j + 1] : kInf;
              if (std::max(ai, aj / 2) < std::min(bi, bj / 2)) {
                best = std::max(best, w.values[i] / w.values[j]);
              }
            }
          }
          return best;
        }
      },
      v_);
}

bool Weight::strictly_positive() const {
  for (const auto& p : pieces_.pieces()) {
    if (p.coeff == 0.0) return false;
  }
  return true;
}

std::string Weight::spec() const {
  return std::visit(
      [](const auto& w) -> std::string {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Power>) {
          return "power:" + format_double(w.lambda);
        } else if constexpr (std::is_same_v<T, TruncatedPower>) {
          return "trunc:" + format_double(w.lambda) + ":" + format_double(w.rho_bar);
        } else if constexpr (std::is_same_v<T, CappedPower>) {
          return "capped:" + format_double(w.lambda);
        } else {
          std::string s = "table[";
          for (std::size_t i = 0; i < w.values.size(); ++i) {
            if (i) s += ";";
            s += format_double(w.breaks[i]) + "=" + format_double(w.values[i]);
          }
          return s + "]";
        }
      },
      v_);
}

Weight table_from_csv(std::string_view text) {
  std::vector<double> breaks, values;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("table weight: expected r_break,value");
    std::string a = line.substr(0, comma), b = line.substr(comma + 1);
    char* end = nullptr;
    std::strtod(a.c_str(), &end);
    if (first && (a.empty() || end != a.c_str() + a.size())) {
      first = false;
      continue;
    }
    first = false;
    breaks.push_back(parse_number(a, "breakpoint"));
    values.push_back(parse_number(b, "value"));
  }
  if (values.empty()) throw ParseError("table weight: no rows");
  try {
    return Weight::table(std::move(breaks), std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Weight parse_weight(std::string_view spec) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw ParseError("weight spec: missing ':'");
  std::string_view kind = spec.substr(0, colon);
  std::string_view rest = spec.substr(colon + 1);
  if (kind == "table") return table_from_csv(read_file(std::string(rest)));
  while (true) {
    auto pos = rest.find(':', start);
    parts.push_back(rest.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  try {
    if (kind == "power" && parts.size() == 1) {
      return Weight::power(parse_number(parts[0], "lambda"));
    }
    if (kind == "capped" && parts.size() == 1) {
      return Weight::capped(parse_number(parts[0], "lambda"));
    }
    if (kind == "trunc" && parts.size() == 2) {
      return Weight::truncated(parse_number(parts[0], "lambda"),
                               parse_number(parts[1], "cutoff"));
    }
  } catch (const DomainError& e) {
    throw ParseError(std::string("weight spec: ") + e.what());
  }
  throw ParseError("weight spec: unknown form '" + std::string(spec) + "'");
}

Weight product(const Weight& a, const Weight& b) {
  const auto& va = a.variant();
  const auto& vb = b.variant();
  if (va.index() != vb.index()) {
    throw DomainError("weight product: families differ");
  }
  if (auto* x = std::get_if<Power>(&va)) {
    return Weight::power(x->lambda + std::get<Power>(vb).lambda);
  }
  if (auto* x = std::get_if<CappedPower>(&va)) {
    return Weight::capped(x->lambda + std::get<CappedPower>(vb).lambda);
  }
  if (auto* x = std::get_if<TruncatedPower>(&va)) {
    const auto& y = std::get<TruncatedPower>(vb);
    if (x->rho_bar != y.rho_bar) throw DomainError("weight product: cutoffs differ");
    return Weight::truncated(x->lambda + y.lambda, x->rho_bar);
  }
  auto pm = a.pieces().times(b.pieces());
  std::vector<double> breaks, values;
  const auto& ta = std::get<Table>(va);
  const auto& tb = std::get<Table>(vb);
  for (const auto& p : pm.pieces()) {
    breaks.push_back(p.lo);
    values.push_back(p.coeff);
  }
  breaks.front() = std::min(ta.breaks.front(), tb.breaks.front());
  return Weight::table(std::move(breaks), std::move(values));
}

ExtReal small_r_limsup(const Weight& w, const Exponent& p, std::size_t n) {
  const auto& first = w.pieces().pieces().front();
  if (first.coeff == 0.0) return 0.0;
  double e = snap(first.exponent + p.dim_ratio(n));
  if (e > 0.0) return 0.0;
  if (e == 0.0) return first.coeff;
  return ExtReal::infinity();
}

bool small_r_sup_vanishes(const Weight& w, const Exponent& p, std::size_t n) {
  return small_r_limsup(w, p, n) == ExtReal(0.0);
}

bool is_W_p_infinity(const Weight& w, const Exponent& p, std::size_t n) {
  const auto& last = w.pieces().pieces().back();
  bool tail_finite = last.coeff == 0.0 || last.exponent <= 0.0;
  return tail_finite && small_r_limsup(w, p, n).is_finite();
}

namespace {

PiecewiseMonomial embedding_ratio(const Weight& v1, const Weight& v2,
                                  const Exponent& p, const Exponent& q) {
  if (p.value() < q.value()) throw DomainError("embedding: requires p >= q");
  if (!v1.strictly_positive()) throw IotaUndefined("embedding: v1 has zeros");
  return v2.pieces().over(v1.pieces());
}

}  // namespace

ExtReal iota_constant(const Weight& v1, const Weight& v2, const Exponent& p,
                      const Exponent& q, ExtReal rho, std::size_t n) {
  auto g = embedding_ratio(v1, v2, p, q)
               .times_power(q.dim_ratio(n) - p.dim_ratio(n));
  return g.sup_between(0.0, rho.value());
}

ExtReal jay_constant(const Weight& v1, const Weight& v2, const Exponent& p,
                     const Exponent& q, ExtReal rho, std::size_t n) {
  auto ratio = embedding_ratio(v1, v2, p, q);
  auto g = ratio.times_power(q.dim_ratio(n) - p.dim_ratio(n));
  ExtReal near = g.sup_between(0.0, std::min(1.0, rho.value()));
  ExtReal far = ratio.sup_between(1.0, rho.value());
  return max(near, far);
}

}  // namespace morrey
