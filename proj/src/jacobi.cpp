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

#include "spherebound/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "spherebound/bessel.hpp"
#include "spherebound/error.hpp"
#include "spherebound/special.hpp"
#include "root_refine.hpp"

namespace spherebound {
namespace {

void CheckDegree(int k, int min_degree) {
  if (k < min_degree) {
    Fail(ErrorCode::kInvalidArgument,
         "jacobi: degree must be >= " + std::to_string(min_degree) +
             ", got " + std::to_string(k));
  }
}

void CheckFinite(double u) {
  if (!std::isfinite(u)) {
    Fail(ErrorCode::kInvalidArgument, "jacobi: argument must be finite");
  }
}

}  // namespace

void JacobiParams::Validate() const {
  if (!(alpha > -1.0) || !(beta > -1.0) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    Fail(ErrorCode::kOutOfRange,
         "jacobi: parameters must satisfy alpha > -1 and beta > -1 (got " +
             std::to_string(alpha) + ", " + std::to_string(beta) + ")");
  }
}

JacobiFamily::JacobiFamily(JacobiParams params) : params_(params) {
  params_.Validate();
  const Compensated s = Compensated(params_.alpha) + params_.beta;
  r1_slope_ = (s + Compensated(2.0)) /
              (Compensated(2.0) * (Compensated(params_.alpha) + 1.0));
}

JacobiFamily::JacobiFamily(const JacobiFamily& other)
    : params_(other.params_), r1_slope_(other.r1_slope_) {
  std::shared_lock lock(other.mu_);
  steps_ = other.steps_;
}

JacobiFamily& JacobiFamily::operator=(const JacobiFamily& other) {
  if (this != &other) {
    JacobiFamily copy(other);
    *this = std::move(copy);
  }
  return *this;
}

JacobiFamily::JacobiFamily(JacobiFamily&& other) noexcept
    : params_(other.params_),
      r1_slope_(other.r1_slope_),
      steps_(std::move(other.steps_)) {}

JacobiFamily& JacobiFamily::operator=(JacobiFamily&& other) noexcept {
  if (this != &other) {
    params_ = other.params_;
    r1_slope_ = other.r1_slope_;
    std::unique_lock lock(mu_);
    steps_ = std::move(other.steps_);
    std::lock_guard derivative_lock(derivative_mu_);
    derivative_family_.reset();
  }
  return *this;
}

JacobiFamily::~JacobiFamily() = default;

void JacobiFamily::EnsureSteps(int k) const {
  {
    std::shared_lock lock(mu_);
    if (static_cast<int>(steps_.size()) > k) return;
  }
  std::unique_lock lock(mu_);
  if (steps_.empty()) steps_.push_back({});  // k = 0 has no step
  const Compensated alpha(params_.alpha);
  const Compensated beta(params_.beta);
  const Compensated s = alpha + beta;
  const Compensated diff_sq = (alpha - beta) * s;
  const Compensated two(2.0);
  for (int j = static_cast<int>(steps_.size()); j <= k; ++j) {
    const Compensated kk(static_cast<double>(j));
    const Compensated a1 = two * kk + s + 1.0;  // 2k+s+1
    const Compensated a2 = two * kk + s + 2.0;  // 2k+s+2
    const Compensated a3 = kk + s + 1.0;        // k+s+1
    const Compensated a4 = kk + alpha + 1.0;    // k+a+1
    const Compensated a5 = two * kk + s;        // 2k+s
    const Compensated a6 = kk + beta;           // k+b
    Step step;
    step.a = (a1 * a2) / (two * a3 * a4);
    step.b = (a1 * diff_sq) / (two * a3 * a5 * a4);
    step.c = (kk * a6 * a2) / (a4 * a3 * a5);
    steps_.push_back(step);
  }
}

Compensated JacobiFamily::EvalCompensated(int k, double u) const {
  CheckDegree(k, 0);
  CheckFinite(u);
  if (k == 0 || u == 1.0) return 1.0;
  if (u == -1.0) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    if (params_.symmetric()) return sign;
    Compensated ratio(1.0);
    for (int i = 1; i <= k; ++i) {
      ratio *= (Compensated(i) + params_.beta) /
               (Compensated(i) + params_.alpha);
    }
    return Compensated(sign) * ratio;
  }
  const TwoTerm u_minus_1 = TwoSum(u, -1.0);
  Compensated cur =
      Compensated(1.0) + r1_slope_ * Compensated(u_minus_1.hi, u_minus_1.lo);
  if (k == 1) return cur;
  EnsureSteps(k - 1);
  std::shared_lock lock(mu_);
  Compensated prev(1.0);
  for (int j = 1; j < k; ++j) {
    const Step& st = steps_[j];
    const Compensated next = (st.a * u + st.b) * cur - st.c * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double JacobiFamily::Eval(int k, double u) const {
  return EvalCompensated(k, u).value();
}

void JacobiFamily::EvalAll(int k, double u, std::span<double> out) const {
  CheckDegree(k, 0);
  CheckFinite(u);
  if (out.size() < static_cast<std::size_t>(k) + 1) {
    Fail(ErrorCode::kInvalidArgument, "jacobi: output span too small");
  }
  out[0] = 1.0;
  if (k == 0) return;
  if (u == 1.0 || u == -1.0) {
    for (int j = 1; j <= k; ++j) out[j] = Eval(j, u);
    return;
  }
  const TwoTerm u_minus_1 = TwoSum(u, -1.0);
  Compensated cur =
      Compensated(1.0) + r1_slope_ * Compensated(u_minus_1.hi, u_minus_1.lo);
  out[1] = cur.value();
  if (k == 1) return;
  EnsureSteps(k - 1);
  std::shared_lock lock(mu_);
  Compensated prev(1.0);
  for (int j = 1; j < k; ++j) {
    const Step& st = steps_[j];
    const Compensated next = (st.a * u + st.b) * cur - st.c * prev;
    prev = cur;
    cur = next;
    out[j + 1] = cur.value();
  }
}

double JacobiFamily::EvalDerivative(int k, double u) const {
  CheckDegree(k, 0);
  if (!params_.symmetric()) {
    Fail(ErrorCode::kInvalidArgument,
         "jacobi: derivative identity requires alpha == beta");
  }
  if (k == 0) return 0.0;
  const JacobiFamily* shifted = nullptr;
  {
    std::lock_guard lock(derivative_mu_);
    if (!derivative_family_) {
      derivative_family_ = std::make_unique<JacobiFamily>(Shifted(1.0, 1.0));
    }
    shifted = derivative_family_.get();
  }
  const double a = params_.alpha;
  const double scale = k * (k + 2.0 * a + 1.0) / (2.0 * a + 2.0);
  return scale * shifted->Eval(k - 1, u);
}

double JacobiFamily::DerivativeOrNumeric(int k, double u) const {
  if (params_.symmetric()) return EvalDerivative(k, u);
  const double h = 1e-7;
  return (Eval(k, u + h) - Eval(k, u - h)) / (2.0 * h);
}

int JacobiFamily::ZerosAbove(int k, double u) const {
  CheckDegree(k, 0);
  CheckFinite(u);
  std::vector<double> values(static_cast<std::size_t>(k) + 1);
  EvalAll(k, u, values);
  int changes = 0;
  int last_sign = 0;
  for (double v : values) {
    const int sign = (v > 0.0) - (v < 0.0);
    if (sign == 0) continue;
    if (last_sign != 0 && sign != last_sign) ++changes;
    last_sign = sign;
  }
  return changes;
}

std::vector<ZeroRecord> JacobiFamily::Zeros(int k) const {
  return ZeroLadder(k).back();
}

std::vector<std::vector<ZeroRecord>> JacobiFamily::ZeroLadder(int k) const {
  CheckDegree(k, 1);
  const bool symmetric = params_.symmetric();
  std::vector<double> prev;  // zeros of degree j - 1, ascending
  std::vector<std::vector<ZeroRecord>> ladder;
  ladder.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    std::vector<double> nodes;
    nodes.reserve(prev.size() + 2);
    nodes.push_back(-1.0);
    nodes.insert(nodes.end(), prev.begin(), prev.end());
    nodes.push_back(1.0);

    std::vector<ZeroRecord> current(static_cast<std::size_t>(j));
    auto f = [&](double x) { return Eval(j, x); };
    auto df = [&](double x) { return DerivativeOrNumeric(j, x); };
    for (int i = 0; i < j; ++i) {
      ZeroRecord& rec = current[static_cast<std::size_t>(i)];
      rec.params = params_;
      rec.degree = j;
      rec.index = i + 1;
      if (symmetric && 2 * i + 1 == j) {
        rec.value = 0.0;  // odd symmetry
        continue;
      }
      if (symmetric && 2 * i + 1 < j) continue;  // mirrored below
      const double lo = nodes[static_cast<std::size_t>(i)];
      const double hi = nodes[static_cast<std::size_t>(i) + 1];
      const double f_lo = f(lo);
      const double f_hi = f(hi);
      if (f_lo == 0.0) {
        rec.value = lo;
        continue;
      }
      if (f_hi == 0.0) {
        rec.value = hi;
        continue;
      }
      if ((f_lo > 0.0) == (f_hi > 0.0)) {
        Fail(ErrorCode::kBracketNotFound,
             "jacobi: interlacing bracket lost its sign change at degree " +
                 std::to_string(j));
      }
      const detail::Root root = detail::RefineRoot(f, df, lo, hi, f_lo > 0.0);
      rec.value = root.value;
      rec.bracket_width = root.width;
    }
    if (symmetric) {
      for (int i = 0; 2 * i + 1 < j; ++i) {
        const ZeroRecord& mirror = current[static_cast<std::size_t>(j - 1 - i)];
        current[static_cast<std::size_t>(i)].value = -mirror.value;
        current[static_cast<std::size_t>(i)].bracket_width =
            mirror.bracket_width;
      }
    }
    prev.clear();
    for (const ZeroRecord& rec : current) prev.push_back(rec.value);
    ladder.push_back(std::move(current));
  }
  return ladder;
}

ZeroRecord JacobiFamily::LargestZero(int k) const {
  CheckDegree(k, 1);
  ZeroRecord rec;
  rec.params = params_;
  rec.degree = k;
  rec.index = k;
  if (k == 1) {
    // R_1(u) = 1 + slope (u - 1) vanishes at 1 - 1/slope.
    rec.value = (Compensated(1.0) - Compensated(1.0) / r1_slope_).value();
    return rec;
  }
  const double a = params_.alpha;
  const double b = params_.beta;
  const double rho = k + 0.5 * (a + b + 1.0);
  const double theta = BesselZeroGuess(a) / rho;

  double hi = 1.0;
  double lo = -1.0;
  if (theta > 0.0 && theta < std::numbers::pi) {
    double candidate = std::cos(0.5 * theta);
    for (int i = 0; i < 64 && ZerosAbove(k, candidate) != 0; ++i) {
      candidate = 0.5 * (candidate + 1.0);
    }
    if (ZerosAbove(k, candidate) == 0) hi = candidate;
    const double low_candidate = std::cos(std::min(1.5 * theta, 3.0));
    if (low_candidate < hi && ZerosAbove(k, low_candidate) >= 1) {
      lo = low_candidate;
    }
  }
  if (ZerosAbove(k, hi) != 0 || ZerosAbove(k, lo) == 0) {
    Fail(ErrorCode::kBracketNotFound,
         "jacobi: no verified bracket for the largest zero at degree " +
             std::to_string(k) + "; recurrence may be unstable");
  }
  // Narrow until exactly one zero lies above lo.
  for (int i = 0; i < 200 && ZerosAbove(k, lo) > 1; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (ZerosAbove(k, mid) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  auto f = [&](double x) { return Eval(k, x); };
  auto df = [&](double x) { return DerivativeOrNumeric(k, x); };
  const double f_lo = f(lo);
  if (f_lo == 0.0) {
    rec.value = lo;
    return rec;
  }
  const detail::Root root = detail::RefineRoot(f, df, lo, hi, f_lo > 0.0);
  rec.value = root.value;
  rec.bracket_width = root.width;
  return rec;
}

std::uint64_t HarmonicDimension(int n, int k) {
  if (n < 2 || k < 0) {
    Fail(ErrorCode::kInvalidArgument,
         "harm_dim: requires n >= 2 and k >= 0");
  }
  const auto nn = static_cast<std::uint64_t>(n);
  const auto kk = static_cast<std::uint64_t>(k);
  const std::uint64_t first = Binomial(nn + kk - 1, nn - 1);
  const std::uint64_t second = (k >= 2) ? Binomial(nn + kk - 3, nn - 1) : 0;
  return first - second;
}

}  // namespace spherebound
