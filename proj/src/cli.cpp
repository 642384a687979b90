// Copyright 2026 The morrey-grid Authors
// SPDX-License-Identifier: Apache-2.0

#include "morrey/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "morrey/battery.hpp"
#include "morrey/grid_io.hpp"
#include "morrey/mollifier.hpp"
#include "morrey/norm.hpp"
#include "morrey/report.hpp"
#include "morrey/verify.hpp"

namespace morrey::cli {

namespace {

// Raised for problems with the input data rather than with the flags.
struct DataError : Error {
  using Error::Error;
};

struct RunConfig {
  std::string command;
  bool oracle = false;
  std::string in;
  std::string weight = "power:0";
  std::string p = "2";
  std::string rho = "inf";
  std::vector<std::string> rho_samples;
  std::vector<std::string> eps;
  std::string policy = "mask";
  std::uint64_t seed = 42;
  std::size_t n = 1;
  std::size_t size = 512;
  std::string kind;
  std::string suite = "all";
  std::string out;
  std::string format;

  Engine engine() const { return oracle ? Engine::oracle : Engine::fast; }
};

std::string joined(const std::vector<std::string>& items) {
  std::string s;
  for (const auto& x : items) s += (s.empty() ? "" : ",") + x;
  return s;
}

void write_config(JsonWriter& w, const RunConfig& c) {
  w.key("config").begin_object();
  w.field("command", c.command);
  w.field("engine", c.oracle ? "oracle" : "fast");
  if (c.command == "verify" || c.command == "gen") {
    if (c.command == "verify") w.field("suite", c.suite);
    if (c.command == "gen") w.field("kind", c.kind);
    w.field("seed", c.seed);
    w.field("n", static_cast<std::uint64_t>(c.n));
    w.field("size", static_cast<std::uint64_t>(c.size));
  } else {
    w.field("in", c.in);
    w.field("weight", c.weight);
    w.field("p", c.p);
    if (c.command == "modulus") {
      w.field("rho_samples", joined(c.rho_samples));
    } else {
      w.field("rho", c.rho);
    }
    if (c.command == "mollify") w.field("eps", joined(c.eps));
    w.field("center_policy", c.policy);
  }
  w.field("out", c.out);
  w.field("format", c.format);
  w.end_object();
}

GridFunction load(const RunConfig& c) {
  try {
    return read_function(c.in, format_from_path(c.in));
  } catch (const Error& e) {
    throw DataError(e.what());
  }
}

std::vector<double> parse_list(const std::vector<std::string>& items, const char* what) {
  std::vector<double> out;
  for (const auto& s : items) {
    ExtReal v = parse_ext_real(s);
    if (v.is_infinite()) throw ParseError(std::string(what) + ": entries must be finite");
    out.push_back(v.finite());
  }
  if (out.empty()) throw ParseError(std::string(what) + ": need at least one value");
  return out;
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (c.format == a) return;
  }
  throw ParseError("unsupported --format '" + c.format + "' for " + c.command);
}

int cmd_norm(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json"});
  MorreyParams params{parse_exponent(c.p), parse_weight(c.weight), parse_ext_real(c.rho)};
  auto policy = parse_center_policy(c.policy);
  auto f = load(c);
  auto result = morrey_norm(f, params, policy, c.engine());
  JsonWriter w;
  w.begin_object();
  write_config(w, c);
  w.key("result");
  write_norm_result(w, result);
  w.end_object();
  emit(c, w.str(), out);
  return kExitOk;
}

int cmd_modulus(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "csv";
  require_format(c, {"csv", "json"});
  MorreyParams params{parse_exponent(c.p), parse_weight(c.weight), ExtReal::infinity()};
  auto samples = parse_list(c.rho_samples, "--rho-samples");
  auto policy = parse_center_policy(c.policy);
  auto f = load(c);
  auto curve = vanishing_modulus(f, params, samples, policy, c.engine());
  if (c.format == "csv") {
    std::string text = "rho,value\n";
    for (const auto& [r, v] : curve) text += format_double(r) + "," + v.to_string() + "\n";
    emit(c, text, out);
  } else {
    JsonWriter w;
    w.begin_object();
    write_config(w, c);
    w.key("curve").begin_array();
    for (const auto& [r, v] : curve) {
      w.begin_object().field("rho", r).field("value", v).end_object();
    }
    w.end_array();
    w.end_object();
    emit(c, w.str(), out);
  }
  return kExitOk;
}

int cmd_verify(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "json";
  require_format(c, {"json", "csv"});
  auto ids = parse_suite(c.suite);
  Battery battery{c.seed, c.n, c.size};
  SuiteOptions options;
  options.engine = c.engine();
  auto result = run_suite(ids, battery, options);
  if (c.format == "csv") {
    emit(c, reports_csv(result.reports), out);
  } else {
    JsonWriter w;
    w.begin_object();
    write_config(w, c);
    w.key("reports").begin_array();
    for (const auto& r : result.reports) write_report(w, r);
    w.end_array();
    w.key("summary").begin_object();
    w.field("total", static_cast<std::uint64_t>(result.summary.total));
    w.field("passed", static_cast<std::uint64_t>(result.summary.passed));
    w.field("failed", static_cast<std::uint64_t>(result.summary.failed));
    w.field("all_pass", result.summary.all_pass());
    w.end_object();
    w.end_object();
    emit(c, w.str(), out);
  }
  return result.summary.all_pass() ? kExitOk : kExitCheckFailed;
}

int cmd_mollify(RunConfig& c, std::ostream& out) {
  if (c.format.empty()) c.format = "csv";
  require_format(c, {"csv", "json"});
  MorreyParams params{parse_exponent(c.p), parse_weight(c.weight), parse_ext_real(c.rho)};
  auto eps = parse_list(c.eps, "--eps");
  auto f = load(c);
  for (double e : eps) lattice_steps(e, f.domain().spacing());
  if (!std::is_sorted(eps.rbegin(), eps.rend()) ||
      std::adjacent_find(eps.begin(), eps.end()) != eps.end()) {
    throw ParseError("--eps must be strictly descending");
  }
  auto curve = approximation_curve(f, params, eps, c.engine(), false);
  if (c.format == "csv") {
    std::string text = "eps,morrey_err,lp_err\n";
    for (const auto& pt : curve) {
      text += format_double(pt.eps) + "," + pt.morrey_err.to_string() + "," +
              format_double(pt.lp_err) + "\n";
    }
    emit(c, text, out);
  } else {
    JsonWriter w;
    w.begin_object();
    write_config(w, c);
    w.key("curve").begin_array();
    for (const auto& pt : curve) {
      w.begin_object()
          .field("eps", pt.eps)
          .field("morrey_err", pt.morrey_err)
          .field("lp_err", pt.lp_err)
          .end_object();
    }
    w.end_array();
    w.end_object();
    emit(c, w.str(), out);
  }
  return kExitOk;
}

int cmd_gen(RunConfig& c, std::ostream& out) {
  auto kind = parse_fixture_kind(c.kind);
  if (c.n == 0 || c.size == 0) throw ParseError("gen: --n and --size must be positive");
  if (c.out.empty()) throw ParseError("gen: --out is required");
  FileFormat fmt = format_from_path(c.out);
  if (!c.format.empty()) {
    require_format(c, {"binary", "csv"});
    fmt = c.format == "csv" ? FileFormat::csv : FileFormat::binary;
  } else {
    c.format = fmt == FileFormat::csv ? "csv" : "binary";
  }
  auto f = make_fixture(kind, c.n, c.size, c.seed);
  write_function(f, c.out, fmt);
  JsonWriter w;
  w.begin_object();
  write_config(w, c);
  w.field("points", static_cast<std::uint64_t>(f.domain().masked_count()));
  w.end_object();
  out << w.str();
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Discrete generalized Morrey norms on uniform grids", "morrey"};
  app.require_subcommand(1);
  app.add_flag("--oracle", c.oracle, "Use the brute-force norm path");

  auto add_field_opts = [&](CLI::App* sub, bool with_rho) {
    sub->add_option("--in", c.in, "Input function (.mgf binary or .csv)")->required();
    sub->add_option("--weight", c.weight, "power:L | trunc:L:R | capped:L | table:path");
    sub->add_option("--p", c.p, "Integrability exponent >= 1 or inf");
    if (with_rho) sub->add_option("--rho", c.rho, "Radius cutoff, inf allowed");
    sub->add_option("--policy", c.policy, "Center policy: mask | closure");
  };
  auto add_output_opts = [&](CLI::App* sub) {
    sub->add_option("--out", c.out, "Write output here instead of stdout");
    sub->add_option("--format", c.format, "Output format");
  };

  auto* norm = app.add_subcommand("norm", "Evaluate the discrete norm");
  add_field_opts(norm, true);
  add_output_opts(norm);

  auto* modulus = app.add_subcommand("modulus", "Norm as a function of the cutoff radius");
  add_field_opts(modulus, false);
  modulus->add_option("--rho-samples", c.rho_samples, "Ascending radii")
      ->required()
      ->delimiter(',');
  add_output_opts(modulus);

  auto* verify = app.add_subcommand("verify", "Run the inequality checks");
  verify->add_option("--suite", c.suite, "all, or comma-separated check ids");
  verify->add_option("--seed", c.seed, "Battery seed");
  verify->add_option("--n", c.n, "Dimension");
  verify->add_option("--size", c.size, "Points per axis");
  add_output_opts(verify);

  auto* mollify = app.add_subcommand("mollify", "Mollifier approximation curve");
  add_field_opts(mollify, true);
  mollify->add_option("--eps", c.eps, "Descending mollifier radii, multiples of h")
      ->required()
      ->delimiter(',');
  add_output_opts(mollify);

  auto* gen = app.add_subcommand("gen", "Write a battery fixture");
  gen->add_option("--kind", c.kind, "constant | box | ball | bump | random | singular | zero")
      ->required();
  gen->add_option("--n", c.n, "Dimension");
  gen->add_option("--size", c.size, "Points per axis");
  gen->add_option("--seed", c.seed, "Seed");
  add_output_opts(gen);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (norm->parsed()) {
      c.command = "norm";
      return cmd_norm(c, out);
    }
    if (modulus->parsed()) {
      c.command = "modulus";
      return cmd_modulus(c, out);
    }
    if (verify->parsed()) {
      c.command = "verify";
      return cmd_verify(c, out);
    }
    if (mollify->parsed()) {
      c.command = "mollify";
      return cmd_mollify(c, out);
    }
    c.command = "gen";
    return cmd_gen(c, out);
  } catch (const DataError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace morrey::cli
