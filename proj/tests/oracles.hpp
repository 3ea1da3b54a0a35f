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


// Independent reference computations shared by the unit and acceptance
// tests. Everything here goes through Boost.Math or closed forms, never
// through the library's own recurrences.

#ifndef SPHEREBOUND_TESTS_ORACLES_HPP_
#define SPHEREBOUND_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include <boost/math/special_functions/jacobi.hpp>
#include <boost/math/special_functions/legendre.hpp>

#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"

namespace oracle {

inline std::vector<double> Grid(int points, double lo = -1.0, double hi = 1.0) {
  std::vector<double> u(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) u[i] = lo + (hi - lo) * i / (points - 1);
  return u;
}

// Classical Jacobi polynomial from Boost divided by its value at 1.
inline double Normalized(int k, double a, double b, double u) {
  const auto kk = static_cast<unsigned>(k);
  return boost::math::jacobi(kk, a, b, u) / boost::math::jacobi(kk, a, b, 1.0);
}

// Minimum of the normalized polynomial over 0 <= k <= last.
inline std::pair<int, double> BruteMinimum(int n, double t, int last) {
  const double a = 0.5 * (n - 3);
  int best_k = 0;
  double best = 1.0;
  for (int k = 0; k <= last; ++k) {
    const double v =
        (n == 3) ? boost::math::legendre_p(k, t) : Normalized(k, a, a, t);
    if (v < best) {
      best = v;
      best_k = k;
    }
  }
  return {best_k, best};
}

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre nodes on [-1, 1] by Newton iteration on P_n.
inline Rule GaussLegendre(int n) {
  Rule rule;
  for (int i = 1; i <= n; ++i) {
    double x = std::cos(M_PI * (i - 0.25) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      const double dx = boost::math::legendre_p(n, x) /
                        boost::math::legendre_p_prime(n, x);
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = boost::math::legendre_p_prime(n, x);
    rule.nodes.push_back(x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

// Integral of R_j R_k (1-u^2)^a over [-1, 1] after u = cos(theta), which
// turns the weight into sin^(2a+1)(theta) and keeps the integrand smooth.
inline double WeightedInner(const spherebound::JacobiFamily& f,
                            const Rule& rule, int j, int k) {
  const double a = f.params().alpha;
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double theta = 0.5 * M_PI * (rule.nodes[i] + 1.0);
    const double u = std::cos(theta);
    sum += rule.weights[i] * std::pow(std::sin(theta), 2.0 * a + 1.0) *
           f.Eval(j, u) * f.Eval(k, u);
  }
  return 0.5 * M_PI * sum;
}

// Largest value of sum_k f_k R_k(u), k = 1..K, over a uniform grid on
// [-1, t].
inline double MaxPolynomial(int n, double t, const std::vector<double>& f,
                            int points) {
  const double a = 0.5 * (n - 3);
  double worst = -std::numeric_limits<double>::infinity();
  for (double u : Grid(points, -1.0, t)) {
    double s = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      s += f[k] * Normalized(static_cast<int>(k + 1), a, a, u);
    }
    worst = std::max(worst, s);
  }
  return worst;
}

template <typename Fn>
spherebound::ErrorCode CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const spherebound::Error& e) {
    return e.code();
  }
  return spherebound::ErrorCode::kInternal;
}

}  // namespace oracle

#endif  // SPHEREBOUND_TESTS_ORACLES_HPP_
