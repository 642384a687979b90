// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/core.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace morrey {

namespace {

bool is_inf_token(std::string_view t) {
  return t == "inf" || t == "+inf" || t == "infinity" || t == "Inf" ||
         t == "INF" || t == "oo";
}

double parse_finite(std::string_view text, const char* what) {
  std::string s(text);
  if (s.empty()) throw ParseError(std::string(what) + ": empty value");
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v)) {
    throw ParseError(std::string(what) + ": cannot parse '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string ExtReal::to_string() const {
  return infinite_ ? "inf" : format_double(value_);
}

ExtReal parse_ext_real(std::string_view text) {
  if (is_inf_token(text)) return ExtReal::infinity();
  return ExtReal(parse_finite(text, "real"));
}

Exponent::Exponent(double p) : p_(p) {
  if (std::isinf(p) && p > 0) {
    p_ = 1.0;
    infinite_ = true;
    return;
  }
  if (!(p >= 1.0)) {
    throw DomainError("exponent p must lie in [1, inf], got " +
                      format_double(p));
  }
}

std::string Exponent::to_string() const {
  return infinite_ ? "inf" : format_double(p_);
}

Exponent parse_exponent(std::string_view text) {
  if (is_inf_token(text)) return Exponent::infinity();
  double v = parse_finite(text, "exponent");
  if (!(v >= 1.0)) throw ParseError("exponent p must be >= 1");
  return Exponent(v);
}

Exponent holder_exponent(const Exponent& p1, const Exponent& p2) {
  double r = p1.reciprocal() + p2.reciprocal();
  if (r == 0.0) return Exponent::infinity();
  if (r > 1.0 + 1e-15) {
    throw DomainError("1/p1 + 1/p2 exceeds 1");
  }
  if (r >= 1.0) return Exponent(1.0);
  double p = 1.0 / r;
  double nearest = std::round(p);
  if (std::fabs(p - nearest) <= 1e-12 * nearest) p = nearest;
  return Exponent(p);
}

}  // namespace morrey
