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

// The t -> 1 limit of m(t) and the resulting bounds for R^n.
//
//   lim_{t->1} m(t) = 2^a Gamma(a+1) J_a(j_{a+1}) / j_{a+1}^a,  a = (n-3)/2
//   chi_m(R^n) >= 1 + j_{a+1}^a / (2^a Gamma(a+1) |J_a(j_{a+1})|)
//
// Everything is assembled in log space and exponentiated last.

#ifndef SPHEREBOUND_LIMIT_HPP_
#define SPHEREBOUND_LIMIT_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "spherebound/theta.hpp"

namespace spherebound {

struct BoundTableRow {
  int n = 0;
  double alpha = 0.0;
  double j_alpha_plus_1 = 0.0;
  double limit_m = 0.0;
  double chi_bound_real = 0.0;
  std::int64_t chi_bound_int = 0;
  /// The fractional part of chi_bound_real lies within 1e-6 of an integer,
  /// so the ceiling was taken from a 50-digit evaluation instead.
  bool high_precision_checked = false;

  /// The same bound at a fixed inner product t < 1 instead of the limit:
  /// ceil(1 - 1/m(t)) from the certified degree scan.
  double table_t = 0.0;
  double m_at_t = 0.0;
  double chi_at_t_real = 0.0;
  std::int64_t chi_at_t_int = 0;
  bool at_t_certified = false;
};

inline constexpr double kTableInnerProduct = 0.9999;

double LimitMinimum(int n);

BoundTableRow ChiLimitLower(int n, double ceil_guard = kCeilGuard);

/// Limit bound for n, plus the fixed-t columns when table_t lies in (0, 1).
BoundTableRow BoundRow(int n, double ceil_guard = kCeilGuard,
                       double table_t = kTableInnerProduct);

/// BoundRow for n in [first, last], computed concurrently, returned in
/// order.
std::vector<BoundTableRow> BoundTable(int first, int last,
                                      double ceil_guard = kCeilGuard,
                                      double table_t = kTableInnerProduct);

struct ConvergenceEntry {
  int k = 0;
  double t = 0.0;
  double m = 0.0;
  double gap = 0.0;  // |m - LimitMinimum(n)|
};

std::vector<ConvergenceEntry> ConvergenceCheck(int n,
                                               std::span<const int> degrees);

/// sqrt(2) a^a / (2^a Gamma(a+1)), the elementary floor under the limit
/// bound that exhibits its exponential growth. Requires n >= 4.
double GrowthFloor(int n);

}  // namespace spherebound

#endif  // SPHEREBOUND_LIMIT_HPP_
