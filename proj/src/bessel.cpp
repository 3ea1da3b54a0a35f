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

#include "spherebound/bessel.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include <mpfr.h>

#include "spherebound/compensated.hpp"
#include "spherebound/error.hpp"
#include "spherebound/special.hpp"

namespace spherebound {
namespace {

constexpr double kEnvelopeWidth = 60.0;
constexpr double kCompensatedMagnitudeLimit = 1e13;
constexpr double kResidualTolerance = 1e-12;
constexpr double kGridStep = 0.01;
constexpr int kMaxNewtonIterations = 100;

// Plain double pass: cheap, and its magnitude sum sizes the cancellation.
struct DoubleSeries {
  double lead = 0.0;       // (x/2)^nu / Gamma(nu + 1)
  double sum = 0.0;        // series relative to lead
  double magnitude = 0.0;  // sum of |terms| relative to lead
  int terms = 0;
};

double LeadingFactor(double nu, double x) {
  if (nu == 0.0) return 1.0;
  return std::exp(nu * std::log(0.5 * x) - LogGamma(nu + 1.0));
}

DoubleSeries SumInDouble(double nu, double x) {
  DoubleSeries s;
  s.lead = LeadingFactor(nu, x);
  const double q = 0.25 * x * x;
  double term = 1.0;
  NeumaierSum sum;
  sum.Add(1.0);
  s.magnitude = 1.0;
  int m = 0;
  for (; m < 10000; ++m) {
    term *= -q / ((m + 1.0) * (nu + m + 1.0));
    sum.Add(term);
    s.magnitude += std::fabs(term);
    if (m + 1.0 > q && std::fabs(term) <= 1e-18 * s.magnitude) break;
  }
  s.sum = sum.Result();
  s.terms = m + 1;
  return s;
}

// Every ratio is formed in double-double, so the absolute error is about
// lead * magnitude * 1e-31.
double SumCompensated(double nu, double x, double lead) {
  const double half = 0.5 * x;
  const TwoTerm q2 = TwoProd(half, half);
  const Compensated q(q2.hi, q2.lo);
  Compensated term(1.0);
  Compensated sum(1.0);
  double magnitude = 1.0;
  for (int m = 0; m < 10000; ++m) {
    const Compensated denom =
        Compensated(m + 1.0) * (Compensated(nu) + (m + 1.0));
    term = -(term * q) / denom;
    sum += term;
    const double abs_term = std::fabs(term.hi());
    magnitude += abs_term;
    if (m + 1.0 > q.hi() && abs_term <= 1e-34 * magnitude) break;
  }
  return lead * sum.value();
}

// Beyond double-double reach: the same series in MPFR with enough bits to
// absorb the cancellation and still leave ~1e-20 absolute accuracy.
double SumMultiprecision(double nu, double x, double magnitude,
                         double scale) {
  const long bits = 64 + static_cast<long>(std::ceil(std::log2(scale))) + 70;
  mpfr_t lead, q, term, sum, tmp, denom;
  mpfr_inits2(bits, lead, q, term, sum, tmp, denom, static_cast<mpfr_ptr>(0));
  // lead = exp(nu log(x/2) - lgamma(nu + 1))
  mpfr_set_d(tmp, x, MPFR_RNDN);
  mpfr_div_2ui(tmp, tmp, 1, MPFR_RNDN);
  mpfr_sqr(q, tmp, MPFR_RNDN);
  mpfr_log(tmp, tmp, MPFR_RNDN);
  mpfr_mul_d(tmp, tmp, nu, MPFR_RNDN);
  mpfr_set_d(denom, nu, MPFR_RNDN);
  mpfr_add_ui(denom, denom, 1, MPFR_RNDN);
  mpfr_lngamma(denom, denom, MPFR_RNDN);
  mpfr_sub(tmp, tmp, denom, MPFR_RNDN);
  mpfr_exp(lead, tmp, MPFR_RNDN);

  mpfr_set_ui(term, 1, MPFR_RNDN);
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  const double q_d = 0.25 * x * x;
  for (int m = 0; m < 10000; ++m) {
    mpfr_set_d(denom, nu, MPFR_RNDN);
    mpfr_add_ui(denom, denom, static_cast<unsigned long>(m) + 1, MPFR_RNDN);
    mpfr_mul_ui(denom, denom, static_cast<unsigned long>(m) + 1, MPFR_RNDN);
    mpfr_mul(term, term, q, MPFR_RNDN);
    mpfr_div(term, term, denom, MPFR_RNDN);
    mpfr_neg(term, term, MPFR_RNDN);
    mpfr_add(sum, sum, term, MPFR_RNDN);
    if (m + 1.0 > q_d &&
        std::fabs(mpfr_get_d(term, MPFR_RNDN)) <= 1e-40 * magnitude) {
      break;
    }
  }
  mpfr_mul(sum, sum, lead, MPFR_RNDN);
  const double result = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(lead, q, term, sum, tmp, denom, static_cast<mpfr_ptr>(0));
  return result;
}

// Sign of J_nu(x); the double pass decides unless its error bound is too
// close to the value.
int BesselSign(double nu, double x) {
  const DoubleSeries s = SumInDouble(nu, x);
  if (s.lead == 0.0) return 0;
  const double bound = 4.0 * (s.terms + 4) * 1.2e-16 * s.magnitude;
  double value = s.sum;
  if (std::fabs(value) <= bound) {
    value = SumCompensated(nu, x, 1.0);
    const double dd_bound = 4.0 * (s.terms + 4) * 0x1p-100 * s.magnitude;
    if (std::fabs(value) <= dd_bound) value = BesselJ(nu, x);
  }
  return (value > 0.0) - (value < 0.0);
}

double Derivative(double nu, double x) {
  if (nu >= 1.0) return 0.5 * (BesselJ(nu - 1.0, x) - BesselJ(nu + 1.0, x));
  const double h = 1e-6;
  return (BesselJ(nu, x + h) - BesselJ(nu, x - h)) / (2.0 * h);
}

std::optional<double> Newton(double nu, double x) {
  for (int it = 0; it < kMaxNewtonIterations; ++it) {
    const double f = BesselJ(nu, x);
    const double d = Derivative(nu, x);
    if (d == 0.0 || !std::isfinite(d)) return std::nullopt;
    const double step = f / d;
    x -= step;
    if (!(x > 0.0)) return std::nullopt;
    if (std::fabs(step) <= 4e-16 * x) return x;
  }
  return std::nullopt;
}

// The first zero exceeds nu + 1.8557571 nu^(1/3) for nu > 0 (Airy lower
// bound), so the grid only samples from just below that point up to x.
double ZeroFreeLimit(double nu) { return nu + 1.85 * std::cbrt(nu); }

bool IsFirstZero(double nu, double x) {
  const double start =
      kGridStep * (std::floor(ZeroFreeLimit(nu) / kGridStep) + 1.0);
  for (double g = start; g < x - 1e-9; g += kGridStep) {
    if (BesselSign(nu, g) <= 0) return false;
  }
  return true;
}

bool Acceptable(double nu, double x) {
  return x > nu && std::fabs(BesselJ(nu, x)) <= kResidualTolerance &&
         IsFirstZero(nu, x);
}

// Monotone scan from max(nu, 1) in half-unit steps, then bisection.
std::optional<double> ScanForZero(double nu) {
  double lo = std::max(nu, 1.0);
  double f_lo = BesselJ(nu, lo);
  for (int i = 0; i < 400; ++i) {
    const double hi = lo + 0.5;
    const double f_hi = BesselJ(nu, hi);
    if ((f_lo > 0.0) != (f_hi > 0.0) || f_hi == 0.0) {
      double a = lo;
      double b = hi;
      double fa = f_lo;
      while (b - a > 1e-15 * b && std::nextafter(a, b) < b) {
        const double mid = 0.5 * (a + b);
        const double fm = BesselJ(nu, mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return Newton(nu, 0.5 * (a + b)).value_or(0.5 * (a + b));
    }
    lo = hi;
    f_lo = f_hi;
  }
  return std::nullopt;
}

}  // namespace

double BesselJ(double nu, double x) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    Fail(ErrorCode::kOutOfRange, "bessel: order must be finite and >= 0");
  }
  if (!(x >= 0.0) || !std::isfinite(x)) {
    Fail(ErrorCode::kOutOfRange, "bessel: argument must be finite and >= 0");
  }
  if (x > nu + kEnvelopeWidth) {
    Fail(ErrorCode::kOutOfRange,
         "bessel: x = " + std::to_string(x) + " exceeds the series envelope " +
             "nu + " + std::to_string(kEnvelopeWidth));
  }
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  const DoubleSeries coarse = SumInDouble(nu, x);
  if (coarse.lead * coarse.magnitude <= kCompensatedMagnitudeLimit) {
    return SumCompensated(nu, x, coarse.lead);
  }
  return SumMultiprecision(nu, x, coarse.magnitude,
                           coarse.lead * coarse.magnitude);
}

double BesselZeroGuess(double nu) {
  if (nu >= 1.0) {
    const double c = std::cbrt(nu);
    return nu + 1.8557571 * c + 1.033150 / c - 0.00397 / nu;
  }
  constexpr double kNodes[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  constexpr double kValues[] = {0.0, std::numbers::pi / 2, 2.404825557695773,
                                std::numbers::pi, 3.831705970207512};
  for (int i = 0; i < 4; ++i) {
    if (nu <= kNodes[i + 1]) {
      const double w = (nu - kNodes[i]) / (kNodes[i + 1] - kNodes[i]);
      return kValues[i] + w * (kValues[i + 1] - kValues[i]);
    }
  }
  return kValues[4];
}

BesselZero BesselFirstZero(double nu) {
  if (!(nu >= 0.0) || !std::isfinite(nu)) {
    Fail(ErrorCode::kOutOfRange, "bessel: order must be finite and >= 0");
  }
  std::optional<double> root = Newton(nu, BesselZeroGuess(nu));
  if (!root || !Acceptable(nu, *root)) root = ScanForZero(nu);
  if (!root || !Acceptable(nu, *root)) {
    Fail(ErrorCode::kNoConvergence,
         "bessel: first zero of J_" + std::to_string(nu) +
             " did not converge to a certified root");
  }
  return {nu, *root, std::fabs(BesselJ(nu, *root))};
}

}  // namespace spherebound
