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
#include <string>

#include <Eigen/Dense>

#include "spherebound/error.hpp"
#include "spherebound/lp.hpp"

namespace spherebound {

LinearProgram::LinearProgram(std::vector<double> c) : objective(std::move(c)) {}

void LinearProgram::AddRow(std::vector<double> coefficients, Sense sense,
                           double b) {
  if (coefficients.size() != objective.size()) {
    Fail(ErrorCode::kInvalidArgument,
         "row has " + std::to_string(coefficients.size()) +
             " coefficients, program has " +
             std::to_string(objective.size()) + " variables");
  }
  rows.push_back(std::move(coefficients));
  senses.push_back(sense);
  rhs.push_back(b);
}

void LinearProgram::SetFree(int variable) {
  if (variable < 0 || variable >= num_variables()) {
    Fail(ErrorCode::kInvalidArgument, "free variable index out of range");
  }
  free_variables.resize(objective.size(), false);
  free_variables[static_cast<std::size_t>(variable)] = true;
}

bool LinearProgram::IsFree(int variable) const {
  const auto j = static_cast<std::size_t>(variable);
  return j < free_variables.size() && free_variables[j];
}

void LinearProgram::Validate() const {
  if (objective.empty()) {
    Fail(ErrorCode::kInvalidArgument, "linear program has no variables");
  }
  if (senses.size() != rows.size() || rhs.size() != rows.size()) {
    Fail(ErrorCode::kInvalidArgument, "row, sense and rhs counts differ");
  }
  if (!free_variables.empty() && free_variables.size() != objective.size()) {
    Fail(ErrorCode::kInvalidArgument, "free-variable mask has wrong size");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) {
      Fail(ErrorCode::kInvalidArgument, "objective has a non-finite entry");
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != objective.size()) {
      Fail(ErrorCode::kInvalidArgument,
           "row " + std::to_string(i) + " has the wrong number of entries");
    }
    if (!std::isfinite(rhs[i]) ||
        !std::all_of(rows[i].begin(), rows[i].end(),
                     [](double v) { return std::isfinite(v); })) {
      Fail(ErrorCode::kInvalidArgument,
           "row " + std::to_string(i) + " has a non-finite entry");
    }
  }
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

using Matrix =
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

constexpr double kPivotTolerance = 1e-9;
constexpr double kCostTolerance = 1e-11;

enum class ColumnKind { kStructural, kSlack, kArtificial };

// Standard form A y = b, y >= 0, b >= 0, with each row scaled to unit
// infinity norm. Free variables are split into two columns.
struct StandardForm {
  Matrix a;
  Eigen::VectorXd b;
  Eigen::VectorXd cost;
  std::vector<ColumnKind> kind;
  std::vector<int> source;  // original variable, or -1
  std::vector<int> sign;    // +1 or -1 for split columns
  std::vector<int> initial_basis;  // the unit column of each row
  std::vector<double> row_factor;  // standard row = factor * original row
};

StandardForm Standardize(const LinearProgram& lp) {
  const int m = lp.num_rows();
  const int nv = lp.num_variables();
  StandardForm s;

  for (int j = 0; j < nv; ++j) {
    s.kind.push_back(ColumnKind::kStructural);
    s.source.push_back(j);
    s.sign.push_back(1);
    if (lp.IsFree(j)) {
      s.kind.push_back(ColumnKind::kStructural);
      s.source.push_back(j);
      s.sign.push_back(-1);
    }
  }
  const int structural = static_cast<int>(s.kind.size());

  std::vector<double> row_sign(static_cast<std::size_t>(m), 1.0);
  std::vector<Sense> sense(lp.senses);
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (lp.rhs[ui] < 0.0) {
      row_sign[ui] = -1.0;
      if (sense[ui] == Sense::kLessEqual) {
        sense[ui] = Sense::kGreaterEqual;
      } else if (sense[ui] == Sense::kGreaterEqual) {
        sense[ui] = Sense::kLessEqual;
      }
    }
  }
  int slacks = 0;
  int artificials = 0;
  for (Sense sn : sense) {
    if (sn != Sense::kEqual) ++slacks;
    if (sn != Sense::kLessEqual) ++artificials;
  }
  const int cols = structural + slacks + artificials;
  s.a = Matrix::Zero(m, cols);
  s.b = Eigen::VectorXd::Zero(m);
  s.cost = Eigen::VectorXd::Zero(cols);
  s.initial_basis.assign(static_cast<std::size_t>(m), -1);

  for (int j = 0; j < structural; ++j) {
    s.cost(j) = s.sign[static_cast<std::size_t>(j)] *
                lp.objective[static_cast<std::size_t>(
                    s.source[static_cast<std::size_t>(j)])];
  }
  int next = structural;
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    for (int j = 0; j < structural; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      s.a(i, j) = row_sign[ui] * s.sign[uj] *
                  lp.rows[ui][static_cast<std::size_t>(s.source[uj])];
    }
    s.b(i) = row_sign[ui] * lp.rhs[ui];
    if (sense[ui] != Sense::kEqual) {
      s.a(i, next) = sense[ui] == Sense::kLessEqual ? 1.0 : -1.0;
      s.kind.push_back(ColumnKind::kSlack);
      s.source.push_back(-1);
      s.sign.push_back(1);
      if (sense[ui] == Sense::kLessEqual) s.initial_basis[ui] = next;
      ++next;
    }
  }
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (s.initial_basis[ui] >= 0) continue;
    s.a(i, next) = 1.0;
    s.kind.push_back(ColumnKind::kArtificial);
    s.source.push_back(-1);
    s.sign.push_back(1);
    s.initial_basis[ui] = next;
    ++next;
  }
  // Slack and artificial columns keep their unit entries; only their
  // scale changes, which their zero cost ignores.
  s.row_factor = row_sign;
  for (int i = 0; i < m; ++i) {
    const double scale = s.a.row(i).head(structural).cwiseAbs().maxCoeff();
    if (scale > 0.0) {
      s.a.row(i).head(structural) /= scale;
      s.b(i) /= scale;
      s.row_factor[static_cast<std::size_t>(i)] /= scale;
    }
  }
  return s;
}

// Tableau with the reduced-cost row stored last and the rhs column last.
class Tableau {
 public:
  Tableau(const StandardForm& form, const SimplexOptions& options)
      : form_(form), options_(options), basis_(form.initial_basis) {
    const auto m = form.a.rows();
    const auto n = form.a.cols();
    t_ = Matrix::Zero(m + 1, n + 1);
    t_.topLeftCorner(m, n) = form.a;
    t_.topRightCorner(m, 1) = form.b;
    allowed_.assign(static_cast<std::size_t>(n), true);
  }

  int rows() const { return static_cast<int>(t_.rows()) - 1; }
  int cols() const { return static_cast<int>(t_.cols()) - 1; }
  int iterations() const { return iterations_; }
  const std::vector<int>& basis() const { return basis_; }
  double objective() const { return -t_(rows(), cols()); }
  double rhs(int i) const { return t_(i, cols()); }
  double entry(int i, int j) const { return t_(i, j); }
  double reduced_cost(int j) const { return t_(rows(), j); }

  void Forbid(int j) { allowed_[static_cast<std::size_t>(j)] = false; }

  // Loads cost c and prices out the current basis.
  void SetCost(const Eigen::VectorXd& c) {
    cost_ = c;
    const int m = rows();
    t_.row(m).setZero();
    t_.row(m).head(cols()) = c.transpose();
    for (int i = 0; i < m; ++i) {
      const double cb = t_(m, basis_[static_cast<std::size_t>(i)]);
      if (cb != 0.0) t_.row(m) -= cb * t_.row(i);
    }
  }

  // Rebuilds the constraint rows as B^{-1} [A | b] from the original data,
  // discarding the drift accumulated by repeated row operations.
  void Reinvert() {
    const auto m = form_.a.rows();
    if (m == 0) return;
    Eigen::MatrixXd b_mat(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
      b_mat.col(i) = form_.a.col(basis_[static_cast<std::size_t>(i)]);
    }
    const Eigen::PartialPivLU<Eigen::MatrixXd> lu(b_mat);
    if (!(std::fabs(lu.determinant()) > 0.0)) return;
    Eigen::MatrixXd rhs(m, form_.a.cols() + 1);
    rhs.leftCols(form_.a.cols()) = form_.a;
    rhs.rightCols(1) = form_.b;
    const Eigen::MatrixXd fresh = lu.solve(rhs);
    if (!fresh.allFinite()) return;
    t_.topRows(m) = fresh;
    for (Eigen::Index i = 0; i < m; ++i) {
      for (Eigen::Index k = 0; k < m; ++k) {
        t_(i, basis_[static_cast<std::size_t>(k)]) = i == k ? 1.0 : 0.0;
      }
    }
    SetCost(cost_);
  }

  void Pivot(int r, int c) {
    t_.row(r) /= t_(r, c);
    for (int i = 0; i <= rows(); ++i) {
      if (i == r) continue;
      const double f = t_(i, c);
      if (f != 0.0) {
        t_.row(i) -= f * t_.row(r);
        t_(i, c) = 0.0;
      }
    }
    t_(r, c) = 1.0;
    basis_[static_cast<std::size_t>(r)] = c;
  }

  LpStatus Run() {
    const int m = rows();
    bool bland = false;
    int streak = 0;
    while (true) {
      if (iterations_ >= options_.max_iterations) {
        return LpStatus::kIterationLimit;
      }
      int enter = ChooseEntering(bland);
      if (enter < 0 && pivots_since_reinversion_ > 0) {
        Reinvert();
        pivots_since_reinversion_ = 0;
        enter = ChooseEntering(bland);
      }
      if (enter < 0) return LpStatus::kOptimal;
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m; ++i) {
        const double a = t_(i, enter);
        if (a <= kPivotTolerance) continue;
        const double ratio = std::max(0.0, rhs(i)) / a;
        if (leave < 0 || ratio < best_ratio - 1e-12) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12) {
          const bool better =
              bland ? basis_[static_cast<std::size_t>(i)] <
                          basis_[static_cast<std::size_t>(leave)]
                    : a > t_(leave, enter);
          if (better) {
            leave = i;
            best_ratio = std::min(best_ratio, ratio);
          }
        }
      }
      if (leave < 0) return LpStatus::kUnbounded;
      Pivot(leave, enter);
      ++iterations_;
      if (++pivots_since_reinversion_ == options_.reinversion_interval) {
        Reinvert();
        pivots_since_reinversion_ = 0;
      }
      if (best_ratio <= 1e-12) {
        if (++streak >= options_.degenerate_streak) bland = true;
      } else {
        streak = 0;
        bland = false;
      }
    }
  }

 private:
  int ChooseEntering(bool bland) const {
    const int m = rows();
    int enter = -1;
    double most_negative = -kCostTolerance;
    for (int j = 0; j < cols(); ++j) {
      if (!allowed_[static_cast<std::size_t>(j)]) continue;
      const double d = t_(m, j);
      if (d >= -kCostTolerance) continue;
      if (bland) return j;
      if (d < most_negative) {
        most_negative = d;
        enter = j;
      }
    }
    return enter;
  }

  const StandardForm& form_;
  SimplexOptions options_;
  Eigen::VectorXd cost_;
  Matrix t_;
  std::vector<int> basis_;
  std::vector<bool> allowed_;
  int iterations_ = 0;
  int pivots_since_reinversion_ = 0;
};

// Recomputes basic values from the original columns. Returns false when
// the basis is numerically singular or the refreshed point is infeasible.
bool Refactorize(const StandardForm& form, const std::vector<int>& basis,
                 double tolerance, Eigen::VectorXd& y) {
  const auto m = form.a.rows();
  if (m == 0) return true;
  Eigen::MatrixXd b_mat(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    b_mat.col(i) = form.a.col(basis[static_cast<std::size_t>(i)]);
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(b_mat);
  if (!lu.isInvertible()) return false;
  const Eigen::VectorXd xb = lu.solve(form.b);
  if (!xb.allFinite() || (xb.array() < -tolerance).any()) return false;
  Eigen::VectorXd refreshed = Eigen::VectorXd::Zero(form.a.cols());
  for (Eigen::Index i = 0; i < m; ++i) {
    refreshed(basis[static_cast<std::size_t>(i)]) = std::max(0.0, xb(i));
  }
  if (((form.a * refreshed - form.b).cwiseAbs().array() > tolerance).any()) {
    return false;
  }
  y = refreshed;
  return true;
}

}  // namespace

LpSolution SolveLp(const LinearProgram& program, const SimplexOptions& options) {
  program.Validate();
  const StandardForm form = Standardize(program);
  const int m = static_cast<int>(form.a.rows());
  const int n = static_cast<int>(form.a.cols());
  Tableau tab(form, options);
  LpSolution out;

  bool has_artificial = false;
  Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    if (form.kind[static_cast<std::size_t>(j)] == ColumnKind::kArtificial) {
      phase1(j) = 1.0;
      has_artificial = true;
    }
  }
  if (has_artificial) {
    tab.SetCost(phase1);
    const LpStatus status = tab.Run();
    out.iterations = tab.iterations();
    if (status == LpStatus::kIterationLimit) {
      out.status = status;
      return out;
    }
    const double scale = 1.0 + (m > 0 ? form.b.cwiseAbs().maxCoeff() : 0.0);
    if (tab.objective() > options.feasibility_tolerance * scale) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    // Drive zero-level artificials out; rows with no other pivot are
    // redundant and keep their artificial at zero.
    for (int i = 0; i < m; ++i) {
      const int basic = tab.basis()[static_cast<std::size_t>(i)];
      if (form.kind[static_cast<std::size_t>(basic)] !=
          ColumnKind::kArtificial) {
        continue;
      }
      int best = -1;
      for (int j = 0; j < n; ++j) {
        if (form.kind[static_cast<std::size_t>(j)] == ColumnKind::kArtificial) {
          continue;
        }
        if (std::fabs(tab.entry(i, j)) > kPivotTolerance &&
            (best < 0 ||
             std::fabs(tab.entry(i, j)) > std::fabs(tab.entry(i, best)))) {
          best = j;
        }
      }
      if (best >= 0) tab.Pivot(i, best);
    }
    for (int j = 0; j < n; ++j) {
      if (form.kind[static_cast<std::size_t>(j)] == ColumnKind::kArtificial) {
        tab.Forbid(j);
      }
    }
  }

  tab.SetCost(form.cost);
  out.status = tab.Run();
  out.iterations = tab.iterations();
  if (out.status != LpStatus::kOptimal) return out;

  Eigen::VectorXd y = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < m; ++i) {
    y(tab.basis()[static_cast<std::size_t>(i)]) = std::max(0.0, tab.rhs(i));
  }
  Refactorize(form, tab.basis(), options.feasibility_tolerance, y);

  out.x.assign(static_cast<std::size_t>(program.num_variables()), 0.0);
  for (int j = 0; j < n; ++j) {
    const int src = form.source[static_cast<std::size_t>(j)];
    if (form.kind[static_cast<std::size_t>(j)] != ColumnKind::kStructural) {
      continue;
    }
    out.x[static_cast<std::size_t>(src)] +=
        form.sign[static_cast<std::size_t>(j)] * y(j);
  }
  // The unit column of row i has zero cost, so its reduced cost is -pi_i.
  out.duals.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    out.duals[ui] =
        -tab.reduced_cost(form.initial_basis[ui]) * form.row_factor[ui];
  }
  out.objective_value = 0.0;
  for (int j = 0; j < program.num_variables(); ++j) {
    out.objective_value += program.objective[static_cast<std::size_t>(j)] *
                           out.x[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace spherebound
