// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Scalar vocabulary shared by every module: extended reals, Lebesgue
// exponents and the error hierarchy.
#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace morrey {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad magic, truncated payload, inconsistent header, bad
/// spec strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an invariant (non-finite samples, empty
/// shapes, masks that are not subsets, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DoublingUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

class IotaUndefined : public DomainError {
 public:
  using DomainError::DomainError;
};

// ---------------------------------------------------------------------------
// ExtReal: a nonnegative real or the distinguished value +inf
// ---------------------------------------------------------------------------

class ExtReal {
 public:
  constexpr ExtReal() = default;
  constexpr ExtReal(double v) : value_(v) {}  // NOLINT: finite reals convert

  static constexpr ExtReal infinity() {
    ExtReal e;
    e.infinite_ = true;
    return e;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }

  /// Finite value, or IEEE +inf for the distinguished infinity.
  constexpr double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : value_;
  }

  /// Finite value; throws on infinity.
  double finite() const {
    if (infinite_) throw DomainError("ExtReal: value is +inf");
    return value_;
  }

  friend constexpr bool operator==(const ExtReal& a, const ExtReal& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::partial_ordering operator<=>(const ExtReal& a,
                                                     const ExtReal& b) {
    if (a.infinite_ || b.infinite_) {
      return a.infinite_ == b.infinite_ ? std::partial_ordering::equivalent
             : a.infinite_             ? std::partial_ordering::greater
                                       : std::partial_ordering::less;
    }
    return a.value_ <=> b.value_;
  }

  friend ExtReal max(const ExtReal& a, const ExtReal& b) { return a < b ? b : a; }

  std::string to_string() const;

 private:
  double value_ = 0.0;
  bool infinite_ = false;
};

/// Parses "inf", "infinity", "+inf" or a finite decimal.
ExtReal parse_ext_real(std::string_view text);

// ---------------------------------------------------------------------------
// Exponent: p in [1, +inf]
// ---------------------------------------------------------------------------

class Exponent {
 public:
  explicit Exponent(double p);

  static Exponent infinity() {
    Exponent e(1.0);
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  double value() const {
    return infinite_ ? std::numeric_limits<double>::infinity() : p_;
  }
  /// 1/p, with 1/inf = 0.
  double reciprocal() const { return infinite_ ? 0.0 : 1.0 / p_; }
  /// n/p, read as 0 for p = inf.
  double dim_ratio(std::size_t n) const {
    return static_cast<double>(n) * reciprocal();
  }

  std::string to_string() const;

  friend bool operator==(const Exponent& a, const Exponent& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.p_ == b.p_);
  }

 private:
  double p_ = 1.0;
  bool infinite_ = false;
};

Exponent parse_exponent(std::string_view text);

/// The exponent p with 1/p = 1/p1 + 1/p2; throws if 1/p > 1.
Exponent holder_exponent(const Exponent& p1, const Exponent& p2);

/// printf("%.17g"), with "inf" for infinities.
std::string format_double(double v);

}  // namespace morrey
