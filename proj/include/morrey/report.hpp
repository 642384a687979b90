// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic JSON and CSV serialization. Doubles are written with 17
// significant digits; non-finite values become the strings "inf", "-inf"
// and "nan" so that every document stays valid JSON.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "morrey/core.hpp"
#include "morrey/norm.hpp"
#include "morrey/verify.hpp"

namespace morrey {

/// Streaming pretty-printer with two-space indentation.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);

  JsonWriter& value(double v);
  JsonWriter& value(ExtReal v) { return value(v.value()); }
  JsonWriter& value(std::uint64_t v);
  JsonWriter& value(std::int64_t v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();

  template <class T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    return value(v);
  }

  /// The document so far, newline-terminated once the root is closed.
  const std::string& str() const { return out_; }

 private:
  void before_value();
  void newline();

  std::string out_;
  struct Level {
    bool is_object;
    bool empty = true;
  };
  std::vector<Level> stack_;
  bool after_key_ = false;
};

std::string json_escape(std::string_view s);

void write_report(JsonWriter& w, const CheckReport& r);
void write_norm_result(JsonWriter& w, const NormResult& r);

/// JSON array of reports.
std::string reports_json(const std::vector<CheckReport>& reports);
/// Header check_id,lhs,rhs,ratio,pass,tol,inputs_digest and one row per report.
std::string reports_csv(const std::vector<CheckReport>& reports);

}  // namespace morrey
