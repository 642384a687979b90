// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/report.hpp"

#include <cmath>
#include <cstdio>

namespace morrey {

std::string json_escape(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", static_cast<unsigned>(c));
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
  return out;
}

void JsonWriter::newline() {
  out_ += '\n';
  out_.append(2 * stack_.size(), ' ');
}

void JsonWriter::before_value() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (stack_.empty()) return;
  if (!stack_.back().empty) out_ += ',';
  stack_.back().empty = false;
  newline();
}

JsonWriter& JsonWriter::begin_object() {
  before_value();
  out_ += '{';
  stack_.push_back({true});
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  before_value();
  out_ += '[';
  stack_.push_back({false});
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  bool empty = stack_.back().empty;
  stack_.pop_back();
  if (!empty) newline();
  out_ += '}';
  if (stack_.empty()) out_ += '\n';
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  bool empty = stack_.back().empty;
  stack_.pop_back();
  if (!empty) newline();
  out_ += ']';
  if (stack_.empty()) out_ += '\n';
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  before_value();
  out_ += json_escape(k);
  out_ += ": ";
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  before_value();
  if (std::isfinite(v)) {
    out_ += format_double(v);
  } else {
    out_ += json_escape(format_double(v));
  }
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t v) {
  before_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t v) {
  before_value();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  before_value();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  before_value();
  out_ += json_escape(s);
  return *this;
}

JsonWriter& JsonWriter::null() {
  before_value();
  out_ += "null";
  return *this;
}

void write_report(JsonWriter& w, const CheckReport& r) {
  w.begin_object();
  w.field("check_id", r.check_id);
  w.field("lhs", r.lhs);
  w.field("rhs", r.rhs);
  w.field("ratio", r.ratio);
  w.field("pass", r.pass);
  w.field("tol", r.tol);
  w.field("inputs_digest", r.inputs_digest);
  w.field("cases", static_cast<std::uint64_t>(r.cases));
  w.field("notes", r.notes);
  w.key("info").begin_object();
  for (const auto& [k, v] : r.info) w.field(k, v);
  w.end_object();
  w.end_object();
}

void write_norm_result(JsonWriter& w, const NormResult& r) {
  w.begin_object();
  w.field("value", r.value);
  w.key("argmax_center").begin_array();
  for (auto i : r.argmax_center) w.value(static_cast<std::int64_t>(i));
  w.end_array();
  w.field("argmax_radius", r.argmax_radius);
  w.field("radii_evaluated", static_cast<std::uint64_t>(r.radii_evaluated));
  w.field("center_policy", to_string(r.center_policy));
  w.field("note", r.note);
  w.end_object();
}

std::string reports_json(const std::vector<CheckReport>& reports) {
  JsonWriter w;
  w.begin_array();
  for (const auto& r : reports) write_report(w, r);
  w.end_array();
  return w.str();
}

std::string reports_csv(const std::vector<CheckReport>& reports) {
  std::string out = "check_id,lhs,rhs,ratio,pass,tol,inputs_digest\n";
  for (const auto& r : reports) {
    out += r.check_id + "," + format_double(r.lhs) + "," + format_double(r.rhs) + "," +
           format_double(r.ratio) + "," + (r.pass ? "true" : "false") + "," +
           format_double(r.tol) + "," + r.inputs_digest + "\n";
  }
  return out;
}

}  // namespace morrey
