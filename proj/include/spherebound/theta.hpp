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

// Theta function of the sphere graph G(n, t), whose vertices are the points
// of S^{n-1} and whose edges join points with inner product exactly t.
//
// With a = (n-3)/2 and R_k the normalized Jacobi family with parameters
// (a, a), let m(t) = min_k R_k(t). Then
//
//   theta(G(n,t))     = omega_n m / (m - 1)
//   theta_bar(G(n,t)) = omega_n / theta = (m - 1) / m
//
// and ceil(omega_n / theta) = ceil(1 + 1/|m|) lower-bounds the measurable
// chromatic number of G(n, t).

#ifndef SPHEREBOUND_THETA_HPP_
#define SPHEREBOUND_THETA_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace spherebound {

enum class Backend { kFloat, kRational };

inline constexpr double kCeilGuard = 1e-9;

/// Sphere S^{n-1} with edges at the listed inner products.
struct SphereGraph {
  int n = 3;
  std::vector<double> inner_products;

  /// Throws unless n >= 2 and the inner products are sorted, distinct and
  /// strictly inside (-1, 1).
  void Validate() const;
  double alpha() const { return 0.5 * (n - 3); }
};

/// Surface area omega_n = 2 pi^{n/2} / Gamma(n/2) of S^{n-1}.
double SphereArea(int n);

/// ceil(x - guard), the conversion from real bounds to integer bounds.
std::int64_t GuardedCeil(double x, double guard = kCeilGuard);

struct ThetaOptions {
  /// Highest degree scanned. 0 selects max(256, ceil(8 j_{a+1} / arccos|t|))
  /// and lets the t >= 0 certificate search grow past it.
  int max_degree = 0;
  Backend backend = Backend::kFloat;
  double ceil_guard = kCeilGuard;
};

struct MinimumResult {
  int k_star = 0;
  double m_value = 0.0;
  bool certified = false;
  /// Highest degree that was needed (certified) or examined (uncertified).
  int scanned_degree = 0;
  /// Another degree attains the minimum to within rounding; k_star is the
  /// smallest such degree.
  bool tie = false;
  std::optional<mpq_class> exact_m;
};

/// m(t) = min_k R_k(t) with a = (n-3)/2.
///
/// For t >= 0 the scan stops once, at some degree K, the largest zero z of
/// the (a+1, a+1) family at degree K-1 exceeds t and R_K(z) is at least the
/// running minimum. R_K(z) is the minimum of R_K on [0, 1], and these
/// minima increase with K, so no higher degree can go lower. For t < 0 the
/// scan is capped and the result is uncertified. n = 2 is accepted but
/// never certified.
MinimumResult MinimumOverDegrees(int n, double t,
                                 const ThetaOptions& options = {});

/// Same scan, with the minimum re-evaluated exactly in rational arithmetic
/// over every scanned degree. Requires n >= 3.
MinimumResult MinimumOverDegreesExact(int n, const mpq_class& t,
                                      const ThetaOptions& options = {});

struct AnalyticPoint {
  int degree = 0;
  double t = 0.0;       // largest zero of the (a+1, a+1) family, degree k-1
  double m_value = 0.0;  // R_k(t), which equals m(t) there
};

/// The closed-form point for degree k >= 2.
AnalyticPoint AnalyticMinimum(int n, int k);

struct MinimumBracket {
  int degree = 0;  // k with t in [left, right]
  double left = 0.0;   // largest zero of (a+1, a+1) family at degree k-1
  double right = 0.0;  // same at degree k
  double lo = 0.0;     // R_k(left)
  double hi = 0.0;     // R_{k+1}(largest zero of (a+1, a) family, degree k)
};

/// Interval [lo, hi] containing m(t) for t >= 0. Throws kOutOfRange below
/// the first applicable zero.
MinimumBracket BracketMinimum(int n, double t);

struct ThetaResult {
  SphereGraph graph;
  double alpha = 0.0;
  double omega = 0.0;
  double m_value = 0.0;
  int k_star = 0;
  double theta = 0.0;
  double theta_bar = 0.0;
  std::int64_t chi_lower = 0;
  bool certified = false;
  bool tie = false;
  int scanned_degree = 0;
  Backend backend = Backend::kFloat;
  std::optional<MinimumBracket> bracket;
  std::optional<mpq_class> exact_m;
  std::optional<std::int64_t> exact_chi_lower;
};

ThetaResult ComputeTheta(int n, double t, const ThetaOptions& options = {});
ThetaResult ComputeThetaExact(int n, const mpq_class& t,
                              const ThetaOptions& options = {});

/// Exact ceil(1 - 1/m) for a negative rational m.
std::int64_t ExactChiLower(const mpq_class& m);

}  // namespace spherebound

#endif  // SPHEREBOUND_THETA_HPP_
