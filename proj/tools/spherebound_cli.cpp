// Copyright 2026 The spherebound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// spherebound: command-line front end over the C interface.
//
// Exit status: 0 certified (or truncation-only with --allow-uncertified),
// 1 uncertified, 2 invalid input or out-of-range parameters, 3 numerical
// failure.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spherebound/spherebound.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitUncertified = 1;
constexpr int kExitInput = 2;
constexpr int kExitFailure = 3;

// Thrown on a failing C call; carries the exit status to use.
struct CliError {
  int exit_code;
  std::string message;
};

void Check(sb_status status) {
  if (status == SB_OK) return;
  const bool input = status == SB_INVALID_ARGUMENT ||
                     status == SB_OUT_OF_RANGE || status == SB_NOT_RATIONAL ||
                     status == SB_INCREASE_DEGREE;
  throw CliError{input ? kExitInput : kExitFailure,
                 std::string(sb_status_name(status)) + ": " + sb_last_error()};
}

// Shortest representation that reads back to the same double.
std::string FormatDouble(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

struct Common {
  std::string format;
  bool allow_uncertified = false;
  bool timing = false;
};

struct Record {
  Json json = Json::object();
  bool certified = true;
};

int Emit(Record& record, const Common& common, double seconds) {
  if (common.timing) record.json["wall_time_s"] = seconds;
  std::cout << record.json.dump(2) << "\n";
  if (record.certified || common.allow_uncertified) return 0;
  return kExitUncertified;
}

Json Header(const std::string& command) {
  Json j;
  j["command"] = command;
  j["version"] = sb_version();
  return j;
}

double ParseDouble(const std::string& text, const char* flag) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
    throw CliError{kExitInput, std::string(flag) + ": not a number: " + text};
  }
  return v;
}

std::vector<double> ParseList(const std::string& text, const char* flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(ParseDouble(item, flag));
  if (out.empty()) throw CliError{kExitInput, std::string(flag) + ": empty"};
  return out;
}

std::pair<int, int> ParseRange(const std::string& text) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int n = std::stoi(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {n, n};
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int a = std::stoi(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(text);
    const int b = std::stoi(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(text);
    if (b < a) throw std::invalid_argument(text);
    return {a, b};
  } catch (const std::exception&) {
    throw CliError{kExitInput, "--n: expected N or FIRST..LAST, got " + text};
  }
}

Json BracketJson(const sb_bracket& b) {
  Json j;
  j["degree"] = b.degree;
  j["left"] = b.left;
  j["right"] = b.right;
  j["lo"] = b.lo;
  j["hi"] = b.hi;
  return j;
}

// ---------------------------------------------------------------------------

struct ThetaArgs {
  int n = 0;
  std::string t;
  std::string backend = "float";
  int max_degree = 0;
  double ceil_guard = 1e-9;
};

Record RunTheta(const ThetaArgs& a) {
  sb_theta_options options;
  sb_theta_options_init(&options);
  options.max_degree = a.max_degree;
  options.ceil_guard = a.ceil_guard;
  sb_theta* handle = nullptr;
  if (a.backend == "rational") {
    options.backend = SB_BACKEND_RATIONAL;
    Check(sb_theta_compute_exact(a.n, a.t.c_str(), &options, &handle));
  } else {
    Check(sb_theta_compute(a.n, ParseDouble(a.t, "--t"), &options, &handle));
  }
  std::unique_ptr<sb_theta, decltype(&sb_theta_destroy)> guard(
      handle, sb_theta_destroy);
  sb_theta_summary s;
  Check(sb_theta_get_summary(handle, &s));

  Record rec;
  rec.json = Header("theta");
  rec.json["parameters"] = {{"n", a.n},
                            {"t", a.t},
                            {"backend", a.backend},
                            {"max_degree", a.max_degree},
                            {"ceil_guard", a.ceil_guard}};
  Json r;
  r["alpha"] = s.alpha;
  r["omega"] = s.omega;
  r["m"] = s.m_value;
  r["k_star"] = s.k_star;
  r["theta"] = s.theta;
  r["theta_bar"] = s.theta_bar;
  r["chi_lower"] = s.chi_lower;
  r["scanned_degree"] = s.scanned_degree;
  r["tie"] = s.tie != 0;
  r["bracket"] = s.has_bracket ? BracketJson(s.bracket) : Json(nullptr);
  if (s.has_exact) {
    std::size_t need = 0;
    sb_theta_get_exact_m(handle, nullptr, 0, &need);
    std::string text(need, '\0');
    Check(sb_theta_get_exact_m(handle, text.data(), text.size(), &need));
    text.resize(need - 1);
    r["exact_m"] = text;
    r["exact_chi_lower"] = s.exact_chi_lower;
  }
  rec.json["results"] = r;
  rec.json["certified"] = s.certified != 0;
  rec.json["backend"] = a.backend;
  rec.certified = s.certified != 0;
  return rec;
}

struct TableArgs {
  std::string range;
  bool annotate_shift = false;
  double ceil_guard = 1e-9;
  double table_t = 0.9999;
};

int RunTable(const TableArgs& a, const Common& common) {
  const auto started = std::chrono::steady_clock::now();
  const auto [first, last] = ParseRange(a.range);
  std::vector<sb_bound_row> rows(static_cast<std::size_t>(last - first + 1));
  std::size_t count = 0;
  Check(sb_bound_table(first, last, a.ceil_guard, a.table_t, rows.data(),
                       rows.size(), &count));
  bool certified = true;
  for (const auto& r : rows) {
    if (r.table_t > 0.0 && !r.at_t_certified) certified = false;
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - started)
                             .count();
  // With --annotate-shift the same numbers are read as bounds for one
  // dimension lower; only labels change.
  const std::string chi_label =
      a.annotate_shift ? "chi_int_for_dimension_minus_1" : "chi_int";
  const std::string t_label =
      a.annotate_shift ? "chi_at_t_int_for_dimension_minus_1" : "chi_at_t_int";

  if (common.format == "csv") {
    std::cout << "n";
    if (a.annotate_shift) std::cout << ",shifted_dimension";
    std::cout << ",j_alpha_plus_1,limit_m,chi_real," << chi_label
              << ",table_t,m_at_t,chi_at_t_real," << t_label
              << ",at_t_certified\n";
    for (const auto& r : rows) {
      std::cout << r.n;
      if (a.annotate_shift) std::cout << "," << r.n - 1;
      std::cout << "," << FormatDouble(r.j_alpha_plus_1) << ","
                << FormatDouble(r.limit_m) << ","
                << FormatDouble(r.chi_bound_real) << "," << r.chi_bound_int
                << "," << FormatDouble(r.table_t) << ","
                << FormatDouble(r.m_at_t) << ","
                << FormatDouble(r.chi_at_t_real) << "," << r.chi_at_t_int
                << "," << (r.at_t_certified ? "true" : "false") << "\n";
    }
    if (common.timing) std::cerr << "wall_time_s " << seconds << "\n";
    return certified || common.allow_uncertified ? 0 : kExitUncertified;
  }

  Record rec;
  rec.json = Header("table");
  rec.json["parameters"] = {{"n", a.range},
                            {"first", first},
                            {"last", last},
                            {"ceil_guard", a.ceil_guard},
                            {"table_t", a.table_t},
                            {"annotate_shift", a.annotate_shift}};
  Json list = Json::array();
  for (const auto& r : rows) {
    Json j;
    j["n"] = r.n;
    if (a.annotate_shift) j["shifted_dimension"] = r.n - 1;
    j["alpha"] = r.alpha;
    j["j_alpha_plus_1"] = r.j_alpha_plus_1;
    j["limit_m"] = r.limit_m;
    j["chi_real"] = r.chi_bound_real;
    j[chi_label] = r.chi_bound_int;
    j["high_precision_checked"] = r.high_precision_checked != 0;
    j["table_t"] = r.table_t;
    j["m_at_t"] = r.m_at_t;
    j["chi_at_t_real"] = r.chi_at_t_real;
    j[t_label] = r.chi_at_t_int;
    j["at_t_certified"] = r.at_t_certified != 0;
    list.push_back(j);
  }
  rec.json["results"] = {{"rows", list}};
  rec.json["certified"] = certified;
  rec.json["backend"] = "float";
  rec.certified = certified;
  return Emit(rec, common, seconds);
}

struct DelsarteArgs {
  int n = 0;
  std::string t;
  int degree = 0;
  int grid = 0;
};

Record RunDelsarte(const DelsarteArgs& a) {
  sb_delsarte* handle = nullptr;
  Check(sb_delsarte_compute(a.n, ParseDouble(a.t, "--t"), a.degree, a.grid,
                            &handle));
  std::unique_ptr<sb_delsarte, decltype(&sb_delsarte_destroy)> guard(
      handle, sb_delsarte_destroy);
  sb_delsarte_summary s;
  Check(sb_delsarte_get_summary(handle, &s));
  std::vector<double> f(static_cast<std::size_t>(s.degree));
  std::size_t count = 0;
  Check(sb_delsarte_get_coefficients(handle, f.data(), f.size(), &count));

  Record rec;
  rec.json = Header("delsarte");
  rec.json["parameters"] = {
      {"n", a.n}, {"t", a.t}, {"degree", a.degree}, {"grid", a.grid}};
  Json r;
  r["f"] = f;
  r["bound"] = s.bound;
  r["certified_bound"] = s.certified_bound;
  r["max_violation"] = s.max_violation;
  r["grid_points"] = s.grid_points;
  r["margin_rounds"] = s.margin_rounds;
  rec.json["results"] = r;
  rec.json["certified"] = s.certified != 0;
  rec.json["backend"] = "float";
  rec.certified = s.certified != 0;
  return rec;
}

struct DualArgs {
  int n = 0;
  std::string t;
  int degree = 0;
  double ceil_guard = 1e-9;
};

Record RunDual(const DualArgs& a) {
  const std::vector<double> ts = ParseList(a.t, "--t");
  sb_dual_lp* handle = nullptr;
  Check(sb_dual_lp_compute(a.n, ts.data(), ts.size(), a.degree, a.ceil_guard,
                           &handle));
  std::unique_ptr<sb_dual_lp, decltype(&sb_dual_lp_destroy)> guard(
      handle, sb_dual_lp_destroy);
  sb_dual_lp_summary s;
  Check(sb_dual_lp_get_summary(handle, &s));
  std::vector<double> z(ts.size() + 1);
  std::size_t count = 0;
  Check(sb_dual_lp_get_z(handle, z.data(), z.size(), &count));

  Record rec;
  rec.json = Header("dual-lp");
  rec.json["parameters"] = {
      {"n", a.n}, {"t", ts}, {"degree", a.degree}, {"ceil_guard", a.ceil_guard}};
  Json r;
  r["omega"] = s.omega;
  r["bound_on_theta"] = s.bound;
  r["z"] = z;
  r["chi_lower"] = s.chi_lower;
  r["tail_min"] = s.tail_min;
  r["tail_envelope"] = s.tail_envelope;
  r["certification"] = s.certified ? "certified" : "truncation-only";
  rec.json["results"] = r;
  rec.json["certified"] = s.certified != 0;
  rec.json["backend"] = "float";
  rec.certified = s.certified != 0;
  return rec;
}

struct ZerosArgs {
  double alpha = 0.0;
  double beta = 0.0;
  int k = 1;
};

Record RunZeros(const ZerosArgs& a) {
  sb_jacobi* family = nullptr;
  Check(sb_jacobi_create(a.alpha, a.beta, &family));
  std::unique_ptr<sb_jacobi, decltype(&sb_jacobi_destroy)> guard(
      family, sb_jacobi_destroy);
  std::vector<double> zeros(static_cast<std::size_t>(std::max(a.k, 0)));
  std::size_t count = 0;
  Check(sb_jacobi_zeros(family, a.k, zeros.data(), zeros.size(), &count));
  Record rec;
  rec.json = Header("zeros");
  rec.json["parameters"] = {{"alpha", a.alpha}, {"beta", a.beta}, {"k", a.k}};
  rec.json["results"] = {{"zeros", zeros}};
  rec.json["certified"] = true;
  rec.json["backend"] = "float";
  return rec;
}

Record RunBesselZero(double nu) {
  double zero = 0.0;
  double residual = 0.0;
  Check(sb_bessel_first_zero(nu, &zero, &residual));
  Record rec;
  rec.json = Header("bessel-zero");
  rec.json["parameters"] = {{"nu", nu}};
  rec.json["results"] = {{"j", zero}, {"residual", residual}};
  rec.json["certified"] = true;
  rec.json["backend"] = "float";
  return rec;
}

Record RunConvergence(int n, const std::string& ks) {
  std::vector<int> degrees;
  for (double v : ParseList(ks, "--k")) {
    if (v != std::floor(v)) throw CliError{kExitInput, "--k: not an integer"};
    degrees.push_back(static_cast<int>(v));
  }
  std::vector<sb_convergence_entry> entries(degrees.size());
  Check(sb_convergence_check(n, degrees.data(), degrees.size(),
                             entries.data()));
  double limit = 0.0;
  Check(sb_limit_minimum(n, &limit));
  bool decreasing = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i > 0 && !(entries[i].gap < entries[i - 1].gap)) decreasing = false;
    list.push_back({{"k", entries[i].k},
                    {"t", entries[i].t},
                    {"m", entries[i].m},
                    {"gap", entries[i].gap}});
  }
  Record rec;
  rec.json = Header("convergence");
  rec.json["parameters"] = {{"n", n}, {"k", degrees}};
  rec.json["results"] = {
      {"limit_m", limit}, {"entries", list}, {"gaps_decreasing", decreasing}};
  rec.json["certified"] = decreasing;
  rec.json["backend"] = "float";
  rec.certified = decreasing;
  return rec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "spherebound: theta bounds for sphere graphs, chromatic lower bounds "
      "for R^n and LP bounds for spherical codes.\n\n"
      "Environment (flags always win):\n"
      "  SPHEREBOUND_CEIL_GUARD   default --ceil-guard (1e-9)\n"
      "  SPHEREBOUND_MAX_DEGREE   default --max-degree for theta (0 = auto)\n"
      "  SPHEREBOUND_TABLE_T      default --table-t for table (0.9999)\n"
      "  SPHEREBOUND_GRID         default --grid for delsarte (0 = auto)\n"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sb_version()));

  Common common;
  auto add_common = [&](CLI::App* sub, const char* format_help) {
    sub->add_option("--format", common.format, format_help)
        ->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--allow-uncertified", common.allow_uncertified,
                  "Exit 0 for uncertified or truncation-only results");
    sub->add_flag("--timing", common.timing,
                  "Add wall-clock time (breaks byte-for-byte reproducibility)");
  };

  ThetaArgs theta;
  auto* theta_cmd = app.add_subcommand("theta", "theta(G(n, t)) and m(t)");
  theta_cmd->add_option("--n", theta.n, "Dimension of R^n")->required();
  theta_cmd->add_option("--t", theta.t, "Inner product in (-1, 1)")
      ->required();
  theta_cmd->add_option("--backend", theta.backend, "float or rational")
      ->check(CLI::IsMember({"float", "rational"}))
      ->capture_default_str();
  theta_cmd
      ->add_option("--max-degree", theta.max_degree,
                   "Degree cap for the scan, 0 = automatic")
      ->envname("SPHEREBOUND_MAX_DEGREE")
      ->capture_default_str();
  theta_cmd->add_option("--ceil-guard", theta.ceil_guard)
      ->envname("SPHEREBOUND_CEIL_GUARD")
      ->capture_default_str();
  add_common(theta_cmd, "json (default)");

  TableArgs table;
  auto* table_cmd =
      app.add_subcommand("table", "Chromatic lower bounds for R^n");
  table_cmd->add_option("--n", table.range, "N or FIRST..LAST")->required();
  table_cmd->add_flag("--annotate-shift", table.annotate_shift,
                      "Label bounds as bounds for dimension n - 1");
  table_cmd->add_option("--ceil-guard", table.ceil_guard)
      ->envname("SPHEREBOUND_CEIL_GUARD")
      ->capture_default_str();
  table_cmd
      ->add_option("--table-t", table.table_t,
                   "Inner product of the fixed-t columns; 0 disables them")
      ->envname("SPHEREBOUND_TABLE_T")
      ->capture_default_str();
  add_common(table_cmd, "csv (default) or json");

  DelsarteArgs delsarte;
  auto* delsarte_cmd = app.add_subcommand(
      "delsarte", "LP upper bound for spherical codes with inner products "
                  "in [-1, t]");
  delsarte_cmd->add_option("--n", delsarte.n)->required();
  delsarte_cmd->add_option("--t", delsarte.t)->required();
  delsarte_cmd->add_option("--degree", delsarte.degree)->required();
  delsarte_cmd->add_option("--grid", delsarte.grid, "0 = 20 (degree + 1)")
      ->envname("SPHEREBOUND_GRID")
      ->capture_default_str();
  add_common(delsarte_cmd, "json (default)");

  DualArgs dual;
  auto* dual_cmd = app.add_subcommand(
      "dual-lp", "Dual LP bound on theta for several inner products");
  dual_cmd->add_option("--n", dual.n)->required();
  dual_cmd->add_option("--t", dual.t, "Comma-separated, ascending")
      ->required();
  dual_cmd->add_option("--degree", dual.degree)->required();
  dual_cmd->add_option("--ceil-guard", dual.ceil_guard)
      ->envname("SPHEREBOUND_CEIL_GUARD")
      ->capture_default_str();
  add_common(dual_cmd, "json (default)");

  ZerosArgs zeros;
  auto* zeros_cmd =
      app.add_subcommand("zeros", "Zeros of the normalized Jacobi R_k");
  zeros_cmd->add_option("--alpha", zeros.alpha)->required();
  zeros_cmd->add_option("--beta", zeros.beta)->required();
  zeros_cmd->add_option("--k", zeros.k)->required();
  add_common(zeros_cmd, "json (default)");

  double nu = 0.0;
  auto* bessel_cmd =
      app.add_subcommand("bessel-zero", "First positive zero of J_nu");
  bessel_cmd->add_option("--nu", nu)->required();
  add_common(bessel_cmd, "json (default)");

  int conv_n = 0;
  std::string conv_k = "50,100,200,400";
  auto* conv_cmd = app.add_subcommand(
      "convergence", "Gaps between closed-form minima and the t -> 1 limit");
  conv_cmd->add_option("--n", conv_n)->required();
  conv_cmd->add_option("--k", conv_k, "Comma-separated degrees")
      ->capture_default_str();
  add_common(conv_cmd, "json (default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*table_cmd) {
      if (common.format.empty()) common.format = "csv";
      return RunTable(table, common);
    }
    if (common.format == "csv") {
      throw CliError{kExitInput, "--format csv is only available for table"};
    }
    const auto started = std::chrono::steady_clock::now();
    Record rec;
    if (*theta_cmd) {
      rec = RunTheta(theta);
    } else if (*delsarte_cmd) {
      rec = RunDelsarte(delsarte);
    } else if (*dual_cmd) {
      rec = RunDual(dual);
    } else if (*zeros_cmd) {
      rec = RunZeros(zeros);
    } else if (*bessel_cmd) {
      rec = RunBesselZero(nu);
    } else {
      rec = RunConvergence(conv_n, conv_k);
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    return Emit(rec, common, seconds);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.exit_code;
  }
}
