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

// Linear-programming bounds on the sphere and the dense simplex under them.

#ifndef SPHEREBOUND_LP_HPP_
#define SPHEREBOUND_LP_HPP_

#include <cstdint>
#include <vector>

#include "spherebound/theta.hpp"

namespace spherebound {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

/// minimize c.x subject to rows (a_i . x  sense_i  b_i); every variable is
/// nonnegative unless marked free.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<Sense> senses;
  std::vector<double> rhs;
  std::vector<bool> free_variables;  // empty means all nonnegative

  explicit LinearProgram(std::vector<double> c = {});

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  void AddRow(std::vector<double> coefficients, Sense sense, double b);
  void SetFree(int variable);
  bool IsFree(int variable) const;

  /// Throws kInvalidArgument on inconsistent sizes or non-finite entries.
  void Validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

const char* LpStatusName(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> x;
  double objective_value = 0.0;
  /// Row multipliers y of the optimal basis: c - A^T y is nonnegative on
  /// nonnegative variables and zero on free ones, and b.y equals the
  /// optimal value.
  std::vector<double> duals;
  int iterations = 0;
};

struct SimplexOptions {
  int max_iterations = 100000;
  double feasibility_tolerance = 1e-9;
  /// Consecutive degenerate pivots tolerated before switching to Bland's
  /// rule.
  int degenerate_streak = 50;
  /// Pivots between rebuilds of the tableau from the original rows.
  int reinversion_interval = 100;
};

/// Two-phase dense primal simplex. Pivots by Dantzig's rule and falls back
/// to Bland's rule once pivots stall. The tableau is rebuilt from the
/// original rows every reinversion_interval pivots and before optimality is
/// declared. The final basis is refactorized with a full-pivoting LU and
/// the solution is re-read from it when that basis is nonsingular.
LpSolution SolveLp(const LinearProgram& program,
                   const SimplexOptions& options = {});

struct DualThetaResult {
  SphereGraph graph;
  int degree = 0;
  double omega = 0.0;
  double bound = 0.0;  // upper bound on theta, z_1 / omega_n
  std::vector<double> z;  // z_1, z_{t_1}, ..., z_{t_s}
  /// Smallest constraint value z_1 + sum z_i R_k(t_i) over K < k <= 10K.
  double tail_min = 0.0;
  /// max |R_k(t_i)| over the same tail.
  double tail_envelope = 0.0;
  /// z_1 >= sum |z_i| * tail_envelope and every tail constraint holds.
  bool certified = false;
  std::int64_t chi_lower = 0;
  int iterations = 0;
};

/// The dual LP for the multi-distance graph, truncated at degree K:
///
///   min z_1 / omega_n  s.t.  z_1 + sum_i z_i >= omega_n^2,
///                            z_1 + sum_i z_i R_k(t_i) >= 0,  k = 1..K.
///
/// Solved through its LP dual, a distribution lambda over degrees 0..K,
/// whose row multipliers give z / omega_n^2. Throws kLpFailure unless
/// optimal.
DualThetaResult DualThetaLp(const SphereGraph& graph, int degree,
                            double ceil_guard = kCeilGuard);

struct DelsarteResult {
  int n = 0;
  double t = 0.0;
  int degree = 0;
  std::vector<double> f;  // f_1 .. f_K
  double bound = 0.0;     // 1 + sum f_k on the initial grid
  double max_violation = 0.0;
  double certified_bound = 0.0;
  bool certified = false;
  int grid_points = 0;
  int margin_rounds = 0;
};

/// Upper bound on the size of a spherical code in S^{n-1} whose pairwise
/// inner products lie in [-1, t]:
///
///   min 1 + sum_k f_k  s.t.  f_k >= 0,  sum_k f_k R_k(u) <= -1 on [-1, t].
///
/// grid_size = 0 picks 20 (K + 1). Throws kIncreaseDegree when the
/// truncated program is infeasible.
DelsarteResult DelsarteCodeBound(int n, double t, int degree,
                                 int grid_size = 0);

/// omega_n / theta(G(n, t)), the complement-style theta of G(n, t).
double ThetaBarSingle(int n, double t, const ThetaOptions& options = {});

}  // namespace spherebound

#endif  // SPHEREBOUND_LP_HPP_
