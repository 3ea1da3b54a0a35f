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

// Error-free transformations and an unevaluated-sum value type.
//
// A Compensated value is hi + lo with |lo| <= ulp(hi)/2. Sums and products
// are formed from TwoSum / fma-based TwoProd, which keeps roughly twice the
// working precision through long recurrences and alternating series.

#ifndef SPHEREBOUND_COMPENSATED_HPP_
#define SPHEREBOUND_COMPENSATED_HPP_

#include <cmath>

namespace spherebound {

struct TwoTerm {
  double hi;
  double lo;
};

inline TwoTerm TwoSum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline TwoTerm QuickTwoSum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline TwoTerm TwoProd(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

class Compensated {
 public:
  constexpr Compensated() = default;
  constexpr Compensated(double v) : hi_(v) {}  // NOLINT(runtime/explicit)
  constexpr Compensated(double hi, double lo) : hi_(hi), lo_(lo) {}

  double hi() const { return hi_; }
  double lo() const { return lo_; }
  double value() const { return hi_ + lo_; }

  friend Compensated operator+(Compensated a, Compensated b) {
    TwoTerm s = TwoSum(a.hi_, b.hi_);
    TwoTerm t = TwoSum(a.lo_, b.lo_);
    s.lo += t.hi;
    s = QuickTwoSum(s.hi, s.lo);
    s.lo += t.lo;
    s = QuickTwoSum(s.hi, s.lo);
    return {s.hi, s.lo};
  }
  friend Compensated operator-(Compensated a) { return {-a.hi_, -a.lo_}; }
  friend Compensated operator-(Compensated a, Compensated b) {
    return a + (-b);
  }
  friend Compensated operator*(Compensated a, Compensated b) {
    TwoTerm p = TwoProd(a.hi_, b.hi_);
    p.lo += a.hi_ * b.lo_ + a.lo_ * b.hi_;
    p = QuickTwoSum(p.hi, p.lo);
    return {p.hi, p.lo};
  }
  friend Compensated operator/(Compensated a, Compensated b) {
    // Long division with one correction step.
    const double q1 = a.hi_ / b.hi_;
    Compensated r = a - b * Compensated(q1);
    const double q2 = r.hi_ / b.hi_;
    r = r - b * Compensated(q2);
    const double q3 = r.hi_ / b.hi_;
    TwoTerm q = QuickTwoSum(q1, q2);
    return Compensated(q.hi, q.lo) + Compensated(q3);
  }
  Compensated& operator+=(Compensated b) { return *this = *this + b; }
  Compensated& operator-=(Compensated b) { return *this = *this - b; }
  Compensated& operator*=(Compensated b) { return *this = *this * b; }

 private:
  double hi_ = 0.0;
  double lo_ = 0.0;
};

// Neumaier's variant of Kahan summation.
class NeumaierSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Result() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace spherebound

#endif  // SPHEREBOUND_COMPENSATED_HPP_
