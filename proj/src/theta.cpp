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

#include "spherebound/theta.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spherebound/bessel.hpp"
#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"
#include "spherebound/special.hpp"

namespace spherebound {
namespace {

// Absolute slack required between the envelope value and the running
// minimum before a scan is declared complete.
constexpr double kEnvelopeMargin = 1e-13;
constexpr int kHardDegreeLimit = 1 << 22;

void CheckDimension(int n, int min_n) {
  if (n < min_n) {
    Fail(ErrorCode::kInvalidArgument,
         "dimension n must be >= " + std::to_string(min_n) + ", got " +
             std::to_string(n));
  }
}

void CheckInnerProduct(double t) {
  if (!(t > -1.0 && t < 1.0)) {
    Fail(ErrorCode::kOutOfRange,
         "inner product t must lie strictly inside (-1, 1), got " +
             std::to_string(t));
  }
}

int DefaultDegreeCap(double alpha, double t) {
  const double j = BesselZeroGuess(alpha + 1.0);
  const double cap = std::ceil(8.0 * j / std::acos(std::fabs(t)));
  if (!(cap < kHardDegreeLimit)) return kHardDegreeLimit;
  return std::max(256, static_cast<int>(cap));
}

struct ScanPick {
  int k_star = 0;
  double m_value = 1.0;
  bool tie = false;
};

ScanPick PickMinimum(const std::vector<double>& values, int upto) {
  ScanPick pick;
  for (int k = 0; k <= upto; ++k) {
    if (values[static_cast<std::size_t>(k)] < pick.m_value) {
      pick.m_value = values[static_cast<std::size_t>(k)];
      pick.k_star = k;
    }
  }
  const double tol = 4e-15 + 1e-12 * std::fabs(pick.m_value);
  for (int k = 0; k <= upto; ++k) {
    if (k != pick.k_star &&
        std::fabs(values[static_cast<std::size_t>(k)] - pick.m_value) <= tol) {
      pick.tie = true;
    }
  }
  return pick;
}

}  // namespace

void SphereGraph::Validate() const {
  CheckDimension(n, 2);
  if (inner_products.empty()) {
    Fail(ErrorCode::kInvalidArgument, "graph needs at least one inner product");
  }
  for (std::size_t i = 0; i < inner_products.size(); ++i) {
    CheckInnerProduct(inner_products[i]);
    if (i > 0 && !(inner_products[i - 1] < inner_products[i])) {
      Fail(ErrorCode::kInvalidArgument,
           "inner products must be sorted ascending without duplicates");
    }
  }
}

double SphereArea(int n) {
  CheckDimension(n, 2);
  const double half = 0.5 * n;
  if (n <= 300) {
    return 2.0 * std::pow(std::numbers::pi, half) / Gamma(half);
  }
  return 2.0 * std::exp(half * std::log(std::numbers::pi) - LogGamma(half));
}

std::int64_t GuardedCeil(double x, double guard) {
  if (!std::isfinite(x) || std::fabs(x) > 9e18) {
    Fail(ErrorCode::kOverflow, "bound does not fit a 64-bit integer");
  }
  return static_cast<std::int64_t>(std::ceil(x - guard));
}

MinimumResult MinimumOverDegrees(int n, double t,
                                 const ThetaOptions& options) {
  CheckDimension(n, 2);
  CheckInnerProduct(t);
  const double alpha = 0.5 * (n - 3);
  const JacobiFamily family = JacobiFamily::Symmetric(alpha);

  int cap = options.max_degree > 0 ? options.max_degree
                                   : DefaultDegreeCap(alpha, t);
  cap = std::max(cap, 2);
  const int hard_cap =
      options.max_degree > 0
          ? cap
          : static_cast<int>(std::min<long long>(16LL * cap, kHardDegreeLimit));

  std::vector<double> values;
  auto scan = [&](int upto) {
    values.assign(static_cast<std::size_t>(upto) + 1, 0.0);
    family.EvalAll(upto, t, values);
  };

  MinimumResult result;
  if (t < 0.0 || n == 2) {
    scan(cap);
    const ScanPick pick = PickMinimum(values, cap);
    result.k_star = pick.k_star;
    result.m_value = pick.m_value;
    result.tie = pick.tie;
    result.scanned_degree = cap;
    return result;
  }

  const JacobiFamily shifted = family.Shifted(1.0, 1.0);
  std::vector<double> prefix_min;
  auto certifies = [&](int k) {
    if (k < 2) return false;
    const double z = shifted.LargestZero(k - 1).value;
    if (!(z > t)) return false;
    const double envelope = family.Eval(k, z);
    return envelope >= prefix_min[static_cast<std::size_t>(k)] + kEnvelopeMargin;
  };

  for (;;) {
    scan(cap);
    prefix_min.assign(values.size(), 0.0);
    double running = values[0];
    for (std::size_t k = 0; k < values.size(); ++k) {
      running = std::min(running, values[k]);
      prefix_min[k] = running;
    }
    if (certifies(cap)) break;
    if (cap >= hard_cap) {
      const ScanPick pick = PickMinimum(values, cap);
      result.k_star = pick.k_star;
      result.m_value = pick.m_value;
      result.tie = pick.tie;
      result.scanned_degree = cap;
      return result;
    }
    cap = std::min(2 * cap, hard_cap);
  }

  // The certificate is monotone in the degree; find where it first holds.
  int lo = 1;
  int hi = cap;
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (certifies(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  const ScanPick pick = PickMinimum(values, hi);
  result.k_star = pick.k_star;
  result.m_value = pick.m_value;
  result.tie = pick.tie;
  result.certified = true;
  result.scanned_degree = hi;
  return result;
}

MinimumResult MinimumOverDegreesExact(int n, const mpq_class& t,
                                      const ThetaOptions& options) {
  CheckDimension(n, 3);
  if (!(t > -1 && t < 1)) {
    Fail(ErrorCode::kOutOfRange,
         "inner product t must lie strictly inside (-1, 1)");
  }
  MinimumResult result = MinimumOverDegrees(n, t.get_d(), options);
  const mpq_class alpha(n - 3, 2);
  const RationalJacobiFamily family(alpha, alpha);
  const std::vector<mpq_class> values =
      family.EvalAll(result.scanned_degree, t);
  int best = 0;
  for (int k = 1; k <= result.scanned_degree; ++k) {
    if (values[static_cast<std::size_t>(k)] <
        values[static_cast<std::size_t>(best)]) {
      best = k;
    }
  }
  bool tie = false;
  for (int k = 0; k <= result.scanned_degree; ++k) {
    if (k != best &&
        values[static_cast<std::size_t>(k)] ==
            values[static_cast<std::size_t>(best)]) {
      tie = true;
    }
  }
  result.k_star = best;
  result.exact_m = values[static_cast<std::size_t>(best)];
  result.m_value = result.exact_m->get_d();
  result.tie = tie;
  return result;
}

AnalyticPoint AnalyticMinimum(int n, int k) {
  CheckDimension(n, 2);
  if (k < 2) {
    Fail(ErrorCode::kInvalidArgument,
         "analytic point needs k >= 2 (the degree-0 polynomial has no zero)");
  }
  const double alpha = 0.5 * (n - 3);
  const JacobiFamily family = JacobiFamily::Symmetric(alpha);
  const JacobiFamily shifted = family.Shifted(1.0, 1.0);
  AnalyticPoint point;
  point.degree = k;
  point.t = shifted.LargestZero(k - 1).value;
  point.m_value = family.Eval(k, point.t);
  return point;
}

MinimumBracket BracketMinimum(int n, double t) {
  CheckDimension(n, 3);
  CheckInnerProduct(t);
  if (t < 0.0) {
    Fail(ErrorCode::kOutOfRange,
         "bracket unavailable: t lies below the first applicable zero (0)");
  }
  const double alpha = 0.5 * (n - 3);
  const JacobiFamily family = JacobiFamily::Symmetric(alpha);
  const JacobiFamily shifted = family.Shifted(1.0, 1.0);
  auto zero = [&](int j) { return shifted.LargestZero(j).value; };

  // Largest j >= 1 with zero(j) <= t; zero(1) = 0.
  int lo = 1;
  const double j_guess = BesselZeroGuess(alpha + 1.0);
  int hi = std::max(
      2, static_cast<int>(std::ceil(j_guess / std::acos(t) - alpha - 1.5)));
  if (zero(hi) <= t) {
    lo = hi;
    hi *= 2;
    while (zero(hi) <= t) {
      lo = hi;
      if (hi > kHardDegreeLimit / 2) {
        Fail(ErrorCode::kOutOfRange, "bracket: t too close to 1");
      }
      hi *= 2;
    }
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (zero(mid) <= t) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  MinimumBracket bracket;
  bracket.degree = lo + 1;
  bracket.left = zero(lo);
  bracket.right = zero(hi);
  bracket.lo = family.Eval(bracket.degree, bracket.left);
  const JacobiFamily mixed({alpha + 1.0, alpha});
  const double crossing = mixed.LargestZero(bracket.degree).value;
  bracket.hi = family.Eval(bracket.degree + 1, crossing);
  return bracket;
}

std::int64_t ExactChiLower(const mpq_class& m) {
  if (!(m < 0)) {
    Fail(ErrorCode::kInvalidArgument, "exact chi bound needs m < 0");
  }
  mpq_class q = 1 - 1 / m;
  q.canonicalize();
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  if (!c.fits_slong_p()) {
    Fail(ErrorCode::kOverflow, "exact chi bound does not fit 64 bits");
  }
  return c.get_si();
}

namespace {

ThetaResult Assemble(int n, double t, const MinimumResult& minimum,
                     const ThetaOptions& options) {
  if (!(minimum.m_value < 0.0)) {
    Fail(ErrorCode::kInternal,
         "minimum over degrees is not negative; scan too short");
  }
  ThetaResult r;
  r.graph = {n, {t}};
  r.alpha = 0.5 * (n - 3);
  r.omega = SphereArea(n);
  r.m_value = minimum.m_value;
  r.k_star = minimum.k_star;
  r.theta = r.omega * r.m_value / (r.m_value - 1.0);
  r.theta_bar = r.omega / r.theta;
  r.chi_lower = GuardedCeil(1.0 - 1.0 / r.m_value, options.ceil_guard);
  r.certified = minimum.certified;
  r.tie = minimum.tie;
  r.scanned_degree = minimum.scanned_degree;
  r.backend = options.backend;
  r.exact_m = minimum.exact_m;
  if (r.exact_m) r.exact_chi_lower = ExactChiLower(*r.exact_m);
  if (t >= 0.0 && n >= 3) {
    try {
      r.bracket = BracketMinimum(n, t);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kOutOfRange) throw;
    }
  }
  if (r.certified && r.bracket) {
    const double slack = 1e-12;
    if (r.m_value < r.bracket->lo - slack || r.m_value > r.bracket->hi + slack) {
      r.certified = false;
    }
  }
  return r;
}

}  // namespace

ThetaResult ComputeTheta(int n, double t, const ThetaOptions& options) {
  if (options.backend == Backend::kRational) {
    return ComputeThetaExact(n, mpq_class(t), options);
  }
  return Assemble(n, t, MinimumOverDegrees(n, t, options), options);
}

ThetaResult ComputeThetaExact(int n, const mpq_class& t,
                              const ThetaOptions& options) {
  ThetaOptions exact = options;
  exact.backend = Backend::kRational;
  return Assemble(n, t.get_d(), MinimumOverDegreesExact(n, t, exact), exact);
}

}  // namespace spherebound
