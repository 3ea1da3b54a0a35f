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

#ifndef SPHEREBOUND_SRC_ROOT_REFINE_HPP_
#define SPHEREBOUND_SRC_ROOT_REFINE_HPP_

#include <algorithm>
#include <cmath>

#include "spherebound/jacobi.hpp"

namespace spherebound::detail {

struct Root {
  double value;
  double width;
};

// Safeguarded Newton on a sign-change bracket [lo, hi]. Newton iterates that
// leave the bracket are replaced by bisection. Once Newton stalls below the
// tolerance, the bracket is collapsed by probing both sides of the iterate.
template <typename F, typename D>
Root RefineRoot(F&& f, D&& df, double lo, double hi, bool lo_positive,
                double tol = kZeroTolerance) {
  auto same_as_lo = [&](double v) { return (v > 0.0) == lo_positive; };
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    if (hi - lo <= tol || std::nextafter(lo, hi) >= hi) break;
    const double fx = f(x);
    if (fx == 0.0) return {x, 0.0};
    if (same_as_lo(fx)) {
      lo = x;
    } else {
      hi = x;
    }
    const double d = df(x);
    const double xn = (d != 0.0 && std::isfinite(d)) ? x - fx / d : lo;
    if (!(xn > lo && xn < hi)) {
      x = 0.5 * (lo + hi);
      continue;
    }
    if (std::fabs(xn - x) < 0.25 * tol) {
      const double a = std::max(lo, xn - 0.5 * tol);
      const double b = std::min(hi, xn + 0.5 * tol);
      const double fa = f(a);
      if (fa == 0.0) return {a, 0.0};
      if (same_as_lo(fa)) {
        lo = a;
      } else {
        hi = a;
      }
      if (b > lo && b < hi) {
        const double fb = f(b);
        if (fb == 0.0) return {b, 0.0};
        if (same_as_lo(fb)) {
          lo = b;
        } else {
          hi = b;
        }
      }
      x = 0.5 * (lo + hi);
      continue;
    }
    x = xn;
  }
  return {0.5 * (lo + hi), hi - lo};
}

}  // namespace spherebound::detail

#endif  // SPHEREBOUND_SRC_ROOT_REFINE_HPP_
