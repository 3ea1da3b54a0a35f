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

// Jacobi polynomials normalized to R_k(1) = 1.
//
// R_k^{(a,b)}(u) = P_k^{(a,b)}(u) / P_k^{(a,b)}(1) satisfies the three-term
// recurrence
//
//   R_{k+1}(u) = (a_k u + b_k) R_k(u) - c_k R_{k-1}(u),   k >= 1,
//
// with R_0 = 1, R_1(u) = 1 + (a+b+2)(u-1) / (2(a+1)) and, writing s = a+b,
//
//   a_k = (2k+s+1)(2k+s+2) / (2(k+s+1)(k+a+1))
//   b_k = (2k+s+1)(a^2-b^2) / (2(k+s+1)(2k+s)(k+a+1))
//   c_k = k(k+b)(2k+s+2) / ((k+a+1)(k+s+1)(2k+s)).
//
// a_k + b_k - c_k = 1, which is what keeps R_k(1) = 1 exact in rational
// arithmetic. Dividing the classical polynomial by C(k+a, k) is never done.

#ifndef SPHEREBOUND_JACOBI_HPP_
#define SPHEREBOUND_JACOBI_HPP_

#include <cstdint>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "spherebound/compensated.hpp"

namespace spherebound {

struct JacobiParams {
  double alpha = 0.0;
  double beta = 0.0;

  bool symmetric() const { return alpha == beta; }
  /// Throws kOutOfRange unless alpha > -1 and beta > -1.
  void Validate() const;
};

struct ZeroRecord {
  JacobiParams params;
  int degree = 0;
  int index = 0;  // 1-based, ascending
  double value = 0.0;
  double bracket_width = 0.0;
};

/// Bracket width the zero finders refine to.
inline constexpr double kZeroTolerance = 1e-14;

class JacobiFamily {
 public:
  explicit JacobiFamily(JacobiParams params);
  static JacobiFamily Symmetric(double alpha) {
    return JacobiFamily({alpha, alpha});
  }

  JacobiFamily(const JacobiFamily& other);
  JacobiFamily& operator=(const JacobiFamily& other);
  JacobiFamily(JacobiFamily&& other) noexcept;
  JacobiFamily& operator=(JacobiFamily&& other) noexcept;
  ~JacobiFamily();

  const JacobiParams& params() const { return params_; }

  /// R_k(u). Any finite u is accepted; the family is used on [-1, 1].
  double Eval(int k, double u) const;
  Compensated EvalCompensated(int k, double u) const;

  /// Writes R_0(u) .. R_k(u) into out (size k + 1).
  void EvalAll(int k, double u, std::span<double> out) const;

  /// dR_k/du, via dR_k/du = k(k+2a+1)/(2a+2) R^{(a+1,a+1)}_{k-1}(u).
  /// Symmetric families only.
  double EvalDerivative(int k, double u) const;

  /// Number of sign changes in R_0(u), ..., R_k(u), which equals the
  /// number of zeros of R_k strictly greater than u.
  int ZerosAbove(int k, double u) const;

  /// All k zeros, ascending, built degree by degree from interlacing.
  std::vector<ZeroRecord> Zeros(int k) const;

  /// Zeros of every degree 1..k; entry j - 1 holds degree j.
  std::vector<std::vector<ZeroRecord>> ZeroLadder(int k) const;

  /// Largest zero of R_k, bracketed by a sign-change count and seeded by
  /// the Bessel-zero asymptotic cos(j_a / (k + (a+b+1)/2)).
  ZeroRecord LargestZero(int k) const;

  /// The family with parameters (alpha + da, beta + db).
  JacobiFamily Shifted(double da, double db) const {
    return JacobiFamily({params_.alpha + da, params_.beta + db});
  }

 private:
  struct Step {
    Compensated a;
    Compensated b;
    Compensated c;
  };

  void EnsureSteps(int k) const;
  double DerivativeOrNumeric(int k, double u) const;

  JacobiParams params_;
  Compensated r1_slope_;
  mutable std::shared_mutex mu_;
  mutable std::vector<Step> steps_;  // steps_[k] holds (a_k, b_k, c_k)
  mutable std::mutex derivative_mu_;
  mutable std::unique_ptr<JacobiFamily> derivative_family_;
};

/// dim Harm_k(R^n) = C(n+k-1, n-1) - C(n+k-3, n-1). Throws kOverflow
/// rather than wrapping.
std::uint64_t HarmonicDimension(int n, int k);

/// Parses an exact rational from "p", "p/q", or a finite decimal such as
/// "0.9999" or "-1.5e-3". Anything else throws kNotRational.
mpq_class ParseRational(const std::string& text);

/// Exact-arithmetic counterpart of JacobiFamily for rational parameters.
class RationalJacobiFamily {
 public:
  RationalJacobiFamily(mpq_class alpha, mpq_class beta);

  const mpq_class& alpha() const { return alpha_; }
  const mpq_class& beta() const { return beta_; }

  mpq_class Eval(int k, const mpq_class& u) const;
  /// Writes R_0(u) .. R_k(u).
  std::vector<mpq_class> EvalAll(int k, const mpq_class& u) const;

 private:
  mpq_class alpha_;
  mpq_class beta_;
};

}  // namespace spherebound

#endif  // SPHEREBOUND_JACOBI_HPP_
