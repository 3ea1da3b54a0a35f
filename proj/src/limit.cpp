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

#include "spherebound/limit.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "limit_highprec.hpp"
#include "spherebound/bessel.hpp"
#include "spherebound/error.hpp"
#include "spherebound/special.hpp"

namespace spherebound {
namespace {

constexpr double kNearIntegerWindow = 1e-6;

void CheckLimitDimension(int n, int min_n) {
  if (n < min_n) {
    Fail(ErrorCode::kInvalidArgument,
         "limit bound needs n >= " + std::to_string(min_n) + ", got " +
             std::to_string(n));
  }
}

struct LimitParts {
  double alpha;
  double j;
  double log_abs_m;  // log |lim m(t)|
  double sign;
};

LimitParts ComputeParts(int n) {
  CheckLimitDimension(n, 3);
  LimitParts p{};
  p.alpha = 0.5 * (n - 3);
  p.j = BesselFirstZero(p.alpha + 1.0).value;
  const double bessel = BesselJ(p.alpha, p.j);
  p.sign = bessel < 0.0 ? -1.0 : 1.0;
  p.log_abs_m = p.alpha * std::numbers::ln2 + LogGamma(p.alpha + 1.0) +
                std::log(std::fabs(bessel)) - p.alpha * std::log(p.j);
  return p;
}

}  // namespace

double LimitMinimum(int n) {
  const LimitParts p = ComputeParts(n);
  return p.sign * std::exp(p.log_abs_m);
}

BoundTableRow ChiLimitLower(int n, double ceil_guard) {
  const LimitParts p = ComputeParts(n);
  if (p.sign > 0.0) {
    Fail(ErrorCode::kInternal, "limit of m(t) came out non-negative");
  }
  BoundTableRow row;
  row.n = n;
  row.alpha = p.alpha;
  row.j_alpha_plus_1 = p.j;
  row.limit_m = -std::exp(p.log_abs_m);
  row.chi_bound_real = 1.0 + std::exp(-p.log_abs_m);
  row.chi_bound_int = GuardedCeil(row.chi_bound_real, ceil_guard);
  const double frac = row.chi_bound_real - std::round(row.chi_bound_real);
  if (std::fabs(frac) < kNearIntegerWindow) {
    row.chi_bound_int = detail::HighPrecisionChiCeil(n);
    row.high_precision_checked = true;
  }
  return row;
}

BoundTableRow BoundRow(int n, double ceil_guard, double table_t) {
  BoundTableRow row = ChiLimitLower(n, ceil_guard);
  if (table_t > 0.0 && table_t < 1.0) {
    ThetaOptions options;
    options.ceil_guard = ceil_guard;
    const ThetaResult r = ComputeTheta(n, table_t, options);
    row.table_t = table_t;
    row.m_at_t = r.m_value;
    row.chi_at_t_real = r.theta_bar;
    row.chi_at_t_int = r.chi_lower;
    row.at_t_certified = r.certified;
  }
  return row;
}

std::vector<BoundTableRow> BoundTable(int first, int last, double ceil_guard,
                                      double table_t) {
  CheckLimitDimension(first, 3);
  if (last < first) {
    Fail(ErrorCode::kInvalidArgument, "table range is empty");
  }
  std::vector<std::future<BoundTableRow>> pending;
  pending.reserve(static_cast<std::size_t>(last - first + 1));
  for (int n = first; n <= last; ++n) {
    pending.push_back(std::async(std::launch::async, [=] {
      return BoundRow(n, ceil_guard, table_t);
    }));
  }
  std::vector<BoundTableRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

std::vector<ConvergenceEntry> ConvergenceCheck(int n,
                                               std::span<const int> degrees) {
  const double limit = LimitMinimum(n);
  std::vector<ConvergenceEntry> out;
  out.reserve(degrees.size());
  for (int k : degrees) {
    const AnalyticPoint point = AnalyticMinimum(n, k);
    out.push_back({k, point.t, point.m_value, std::fabs(point.m_value - limit)});
  }
  return out;
}

double GrowthFloor(int n) {
  CheckLimitDimension(n, 4);
  const double a = 0.5 * (n - 3);
  return std::exp(0.5 * std::numbers::ln2 + a * std::log(a) -
                  a * std::numbers::ln2 - LogGamma(a + 1.0));
}

}  // namespace spherebound
