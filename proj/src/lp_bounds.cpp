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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"
#include "spherebound/lp.hpp"

namespace spherebound {
namespace {

constexpr int kTailFactor = 10;
constexpr int kFineFactor = 10;
constexpr int kMaxExchangeRounds = 40;
constexpr int kMaxMarginRounds = 20;
// Exchange stops once no point of [-1, t] violates by more than this.
constexpr double kExchangeTolerance = 1e-11;
// Certified polynomials stay this far below -1 on the fine grid.
constexpr double kCertificateSlack = 1e-12;

void RequireOptimal(const LpSolution& sol, const char* what) {
  if (sol.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kLpFailure, std::string(what) + ": simplex ended " +
                                    LpStatusName(sol.status));
  }
}

// ---------------------------------------------------------------------------
// Delsarte program

class DelsarteProgram {
 public:
  DelsarteProgram(int n, int degree)
      : family_(JacobiFamily::Symmetric(0.5 * (n - 3))),
        degree_(degree),
        scratch_(static_cast<std::size_t>(degree) + 1) {}

  // sum_k f_k R_k(u) + 1; positive where the constraint is violated.
  double Excess(std::span<const double> f, double u) const {
    family_.EvalAll(degree_, u, scratch_);
    double s = 1.0;
    for (int k = 1; k <= degree_; ++k) {
      s += f[static_cast<std::size_t>(k - 1)] *
           scratch_[static_cast<std::size_t>(k)];
    }
    return s;
  }

  LpSolution Solve(const std::vector<double>& points, double margin) const {
    LinearProgram lp(std::vector<double>(static_cast<std::size_t>(degree_),
                                         1.0));
    std::vector<double> row(static_cast<std::size_t>(degree_));
    for (double u : points) {
      family_.EvalAll(degree_, u, scratch_);
      std::copy(scratch_.begin() + 1, scratch_.end(), row.begin());
      lp.AddRow(row, Sense::kLessEqual, -1.0 - margin);
    }
    LpSolution sol = SolveLp(lp);
    if (sol.status == LpStatus::kInfeasible) {
      Fail(ErrorCode::kIncreaseDegree,
           "delsarte program infeasible at degree " + std::to_string(degree_) +
               "; increase degree");
    }
    RequireOptimal(sol, "delsarte program");
    for (double& v : sol.x) v = std::max(v, 0.0);
    return sol;
  }

  // Local maxima of the excess on the grid, each polished by golden-section
  // search between its grid neighbours. Also returns the overall maximum.
  std::vector<double> Peaks(std::span<const double> f,
                            const std::vector<double>& grid,
                            double& max_excess) const {
    std::vector<double> g(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) g[i] = Excess(f, grid[i]);
    max_excess = *std::max_element(g.begin(), g.end());
    std::vector<double> peaks;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const bool left_ok = i == 0 || g[i] >= g[i - 1];
      const bool right_ok = i + 1 == grid.size() || g[i] >= g[i + 1];
      if (!left_ok || !right_ok) continue;
      double u = grid[i];
      double val = g[i];
      if (i > 0 && i + 1 < grid.size()) {
        u = GoldenMax(f, grid[i - 1], grid[i + 1]);
        val = std::max(val, Excess(f, u));
        if (Excess(f, u) < g[i]) u = grid[i];
      }
      max_excess = std::max(max_excess, val);
      peaks.push_back(u);
    }
    return peaks;
  }

 private:
  double GoldenMax(std::span<const double> f, double a, double b) const {
    constexpr double kInvPhi = 0.6180339887498949;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = Excess(f, c);
    double fd = Excess(f, d);
    for (int it = 0; it < 80 && b - a > 1e-15; ++it) {
      if (fc > fd) {
        b = d;
        d = c;
        fd = fc;
        c = b - kInvPhi * (b - a);
        fc = Excess(f, c);
      } else {
        a = c;
        c = d;
        fc = fd;
        d = a + kInvPhi * (b - a);
        fd = Excess(f, d);
      }
    }
    return 0.5 * (a + b);
  }

  JacobiFamily family_;
  int degree_;
  mutable std::vector<double> scratch_;
};

std::vector<double> ChebyshevLobatto(double lo, double hi, int count) {
  std::vector<double> pts(static_cast<std::size_t>(count));
  const double c = 0.5 * (lo + hi);
  const double h = 0.5 * (hi - lo);
  for (int j = 0; j < count; ++j) {
    pts[static_cast<std::size_t>(j)] =
        c - h * std::cos(std::numbers::pi * j / (count - 1));
  }
  pts.front() = lo;
  pts.back() = hi;
  return pts;
}

double Total(const std::vector<double>& f) {
  double s = 1.0;
  for (double v : f) s += v;
  return s;
}

void MergePoints(std::vector<double>& points, const std::vector<double>& add) {
  for (double u : add) {
    const bool present = std::any_of(points.begin(), points.end(), [u](double p) {
      return std::fabs(p - u) <= 1e-15;
    });
    if (!present) points.push_back(u);
  }
}

}  // namespace

DualThetaResult DualThetaLp(const SphereGraph& graph, int degree,
                            double ceil_guard) {
  graph.Validate();
  if (degree < 1) {
    Fail(ErrorCode::kInvalidArgument, "dual LP needs degree >= 1");
  }
  const std::size_t s = graph.inner_products.size();
  const JacobiFamily family = JacobiFamily::Symmetric(graph.alpha());
  const int tail = kTailFactor * degree;

  std::vector<std::vector<double>> values(s);
  for (std::size_t i = 0; i < s; ++i) {
    values[i].resize(static_cast<std::size_t>(tail) + 1);
    family.EvalAll(tail, graph.inner_products[i], values[i]);
  }

  // Dual of the truncated program in y = z / omega^2:
  //   max lambda_0  s.t.  sum_k lambda_k = 1,
  //                       lambda_0 + sum_k lambda_k R_k(t_i) = 0,
  //                       lambda >= 0,
  // whose row multipliers are -y.
  const auto cols = static_cast<std::size_t>(degree) + 1;
  std::vector<double> c(cols, 0.0);
  c[0] = -1.0;
  LinearProgram lp(c);
  lp.AddRow(std::vector<double>(cols, 1.0), Sense::kEqual, 1.0);
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<double> row(values[i].begin(), values[i].begin() + cols);
    row[0] = 1.0;
    lp.AddRow(std::move(row), Sense::kEqual, 0.0);
  }
  const LpSolution sol = SolveLp(lp);
  if (sol.status == LpStatus::kInfeasible) {
    Fail(ErrorCode::kIncreaseDegree,
         "dual theta program unbounded at degree " + std::to_string(degree) +
             ": no R_k(t_i) combination turns negative; increase degree");
  }
  RequireOptimal(sol, "dual theta program");
  std::vector<double> y(s + 1);
  for (std::size_t j = 0; j <= s; ++j) y[j] = -sol.duals[j];

  DualThetaResult out;
  out.graph = graph;
  out.degree = degree;
  out.omega = SphereArea(graph.n);
  out.iterations = sol.iterations;
  const double omega2 = out.omega * out.omega;
  out.bound = out.omega * y[0];
  out.z.resize(s + 1);
  for (std::size_t j = 0; j <= s; ++j) out.z[j] = omega2 * y[j];

  double tail_min = 0.0;
  double envelope = 0.0;
  bool first = true;
  for (int k = degree + 1; k <= tail; ++k) {
    double v = y[0];
    for (std::size_t i = 0; i < s; ++i) {
      const double r = values[i][static_cast<std::size_t>(k)];
      v += y[i + 1] * r;
      envelope = std::max(envelope, std::fabs(r));
    }
    tail_min = first ? v : std::min(tail_min, v);
    first = false;
  }
  double weight = 0.0;
  for (std::size_t i = 0; i < s; ++i) weight += std::fabs(y[i + 1]);
  out.tail_min = omega2 * tail_min;
  out.tail_envelope = envelope;
  out.certified = tail_min >= -1e-12 && y[0] >= weight * envelope;
  out.chi_lower = GuardedCeil(1.0 / y[0], ceil_guard);
  return out;
}

DelsarteResult DelsarteCodeBound(int n, double t, int degree, int grid_size) {
  if (n < 2) {
    Fail(ErrorCode::kInvalidArgument, "delsarte bound needs n >= 2");
  }
  if (!(t > -1.0 && t < 1.0)) {
    Fail(ErrorCode::kOutOfRange, "delsarte bound needs t in (-1, 1)");
  }
  if (degree < 1) {
    Fail(ErrorCode::kIncreaseDegree,
         "delsarte bound needs degree >= 1; increase degree");
  }
  if (grid_size == 0) grid_size = 20 * (degree + 1);
  if (grid_size < 10 * (degree + 1)) {
    Fail(ErrorCode::kInvalidArgument,
         "grid size must be at least 10 (degree + 1) = " +
             std::to_string(10 * (degree + 1)));
  }

  const DelsarteProgram program(n, degree);
  const std::vector<double> grid = ChebyshevLobatto(-1.0, t, grid_size);
  const std::vector<double> fine =
      ChebyshevLobatto(-1.0, t, kFineFactor * (grid_size - 1) + 1);

  DelsarteResult out;
  out.n = n;
  out.t = t;
  out.degree = degree;

  std::vector<double> points = grid;
  LpSolution sol = program.Solve(points, 0.0);
  out.bound = Total(sol.x);

  double excess = 0.0;
  for (int round = 0; round < kMaxExchangeRounds; ++round) {
    const std::vector<double> peaks = program.Peaks(sol.x, fine, excess);
    if (excess <= kExchangeTolerance) break;
    std::vector<double> violators;
    for (double u : peaks) {
      if (program.Excess(sol.x, u) > kExchangeTolerance) violators.push_back(u);
    }
    const std::size_t before = points.size();
    MergePoints(points, violators);
    if (points.size() == before) break;
    sol = program.Solve(points, 0.0);
  }

  double margin = 0.0;
  program.Peaks(sol.x, fine, excess);
  while (excess + kCertificateSlack > 0.0 &&
         out.margin_rounds < kMaxMarginRounds) {
    margin += 2.0 * (excess + kCertificateSlack);
    sol = program.Solve(points, margin);
    program.Peaks(sol.x, fine, excess);
    ++out.margin_rounds;
  }

  out.f = sol.x;
  out.max_violation = excess;
  out.certified = excess <= 0.0;
  out.certified_bound = std::max(Total(sol.x), out.bound);
  out.grid_points = static_cast<int>(points.size());
  return out;
}

double ThetaBarSingle(int n, double t, const ThetaOptions& options) {
  const ThetaResult r = ComputeTheta(n, t, options);
  const double theta_bar = r.omega / r.theta;
  if (std::fabs(theta_bar - r.theta_bar) > 1e-10 * std::fabs(theta_bar)) {
    Fail(ErrorCode::kInternal, "theta * theta_bar drifted from omega_n");
  }
  return theta_bar;
}

}  // namespace spherebound
