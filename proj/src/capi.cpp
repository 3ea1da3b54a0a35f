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

#include "spherebound/spherebound.h"

#include <algorithm>
#include <memory>
#include <new>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spherebound/bessel.hpp"
#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"
#include "spherebound/limit.hpp"
#include "spherebound/lp.hpp"
#include "spherebound/special.hpp"
#include "spherebound/theta.hpp"

struct sb_jacobi {
  spherebound::JacobiFamily family;
};

struct sb_theta {
  spherebound::ThetaResult result;
};

struct sb_lp {
  spherebound::LinearProgram program;
  std::optional<spherebound::LpSolution> solution;
};

struct sb_dual_lp {
  spherebound::DualThetaResult result;
};

struct sb_delsarte {
  spherebound::DelsarteResult result;
};

namespace {

using spherebound::Error;
using spherebound::ErrorCode;

thread_local std::string g_last_error;

sb_status Report(sb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Runs body, mapping exceptions to status codes and recording the message.
template <typename Body>
sb_status Guard(Body&& body) noexcept {
  try {
    const sb_status status = body();
    if (status == SB_OK) g_last_error.clear();
    return status;
  } catch (const Error& e) {
    return Report(static_cast<sb_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return Report(SB_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Report(SB_INTERNAL, e.what());
  } catch (...) {
    return Report(SB_INTERNAL, "unknown failure");
  }
}

sb_status NullArgument(const char* name) {
  return Report(SB_INVALID_ARGUMENT, std::string(name) + " is NULL");
}

#define SB_REQUIRE(ptr)                              \
  do {                                               \
    if ((ptr) == nullptr) return NullArgument(#ptr); \
  } while (false)

template <typename T>
sb_status CopyOut(std::span<const T> src, T* dst, std::size_t capacity,
                  std::size_t* count) {
  if (count != nullptr) *count = src.size();
  if (dst == nullptr || capacity < src.size()) {
    return Report(SB_BUFFER_TOO_SMALL,
                  "buffer holds " + std::to_string(capacity) + " of " +
                      std::to_string(src.size()) + " entries");
  }
  std::copy(src.begin(), src.end(), dst);
  return SB_OK;
}

spherebound::ThetaOptions ToOptions(const sb_theta_options* options) {
  spherebound::ThetaOptions out;
  if (options == nullptr) return out;
  out.max_degree = options->max_degree;
  out.ceil_guard = options->ceil_guard;
  switch (options->backend) {
    case SB_BACKEND_FLOAT:
      out.backend = spherebound::Backend::kFloat;
      break;
    case SB_BACKEND_RATIONAL:
      out.backend = spherebound::Backend::kRational;
      break;
    default:
      spherebound::Fail(ErrorCode::kInvalidArgument, "unknown backend");
  }
  return out;
}

sb_bracket ToBracket(const spherebound::MinimumBracket& b) {
  return {b.degree, b.left, b.right, b.lo, b.hi};
}

spherebound::Sense ToSense(sb_sense sense) {
  switch (sense) {
    case SB_LE:
      return spherebound::Sense::kLessEqual;
    case SB_GE:
      return spherebound::Sense::kGreaterEqual;
    case SB_EQ:
      return spherebound::Sense::kEqual;
  }
  spherebound::Fail(ErrorCode::kInvalidArgument, "unknown row sense");
}

}  // namespace

extern "C" {

const char* sb_version(void) { return "1.0.0"; }

const char* sb_status_name(sb_status status) {
  switch (status) {
    case SB_OK:
      return "ok";
    case SB_INVALID_ARGUMENT:
      return "invalid-argument";
    case SB_OUT_OF_RANGE:
      return "out-of-range";
    case SB_OVERFLOW:
      return "overflow";
    case SB_NO_CONVERGENCE:
      return "no-convergence";
    case SB_BRACKET_NOT_FOUND:
      return "bracket-not-found";
    case SB_INFEASIBLE:
      return "infeasible";
    case SB_INCREASE_DEGREE:
      return "increase-degree";
    case SB_LP_FAILURE:
      return "lp-failure";
    case SB_NOT_RATIONAL:
      return "not-rational";
    case SB_BUFFER_TOO_SMALL:
      return "buffer-too-small";
    case SB_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* sb_last_error(void) { return g_last_error.c_str(); }

sb_status sb_gamma(double x, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::Gamma(x);
    return SB_OK;
  });
}

sb_status sb_log_gamma(double x, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::LogGamma(x);
    return SB_OK;
  });
}

sb_status sb_sphere_area(int n, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::SphereArea(n);
    return SB_OK;
  });
}

sb_status sb_bessel_j(double nu, double x, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::BesselJ(nu, x);
    return SB_OK;
  });
}

sb_status sb_bessel_first_zero(double nu, double* zero, double* residual) {
  return Guard([&] {
    SB_REQUIRE(zero);
    const spherebound::BesselZero z = spherebound::BesselFirstZero(nu);
    *zero = z.value;
    if (residual != nullptr) *residual = z.residual;
    return SB_OK;
  });
}

sb_status sb_jacobi_create(double alpha, double beta, sb_jacobi** out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = new sb_jacobi{spherebound::JacobiFamily({alpha, beta})};
    return SB_OK;
  });
}

void sb_jacobi_destroy(sb_jacobi* family) { delete family; }

sb_status sb_jacobi_eval(const sb_jacobi* family, int k, double u,
                         double* out) {
  return Guard([&] {
    SB_REQUIRE(family);
    SB_REQUIRE(out);
    *out = family->family.Eval(k, u);
    return SB_OK;
  });
}

sb_status sb_jacobi_eval_derivative(const sb_jacobi* family, int k, double u,
                                    double* out) {
  return Guard([&] {
    SB_REQUIRE(family);
    SB_REQUIRE(out);
    *out = family->family.EvalDerivative(k, u);
    return SB_OK;
  });
}

sb_status sb_jacobi_zeros(const sb_jacobi* family, int k, double* zeros,
                          size_t capacity, size_t* count) {
  return Guard([&] {
    SB_REQUIRE(family);
    const auto records = family->family.Zeros(k);
    std::vector<double> values;
    values.reserve(records.size());
    for (const auto& r : records) values.push_back(r.value);
    return CopyOut<double>(values, zeros, capacity, count);
  });
}

sb_status sb_jacobi_largest_zero(const sb_jacobi* family, int k, double* zero,
                                 double* bracket_width) {
  return Guard([&] {
    SB_REQUIRE(family);
    SB_REQUIRE(zero);
    const auto r = family->family.LargestZero(k);
    *zero = r.value;
    if (bracket_width != nullptr) *bracket_width = r.bracket_width;
    return SB_OK;
  });
}

void sb_theta_options_init(sb_theta_options* options) {
  if (options == nullptr) return;
  const spherebound::ThetaOptions defaults;
  options->max_degree = defaults.max_degree;
  options->backend = SB_BACKEND_FLOAT;
  options->ceil_guard = defaults.ceil_guard;
}

sb_status sb_theta_compute(int n, double t, const sb_theta_options* options,
                           sb_theta** out) {
  return Guard([&] {
    SB_REQUIRE(out);
    const spherebound::ThetaOptions opts = ToOptions(options);
    if (opts.backend == spherebound::Backend::kRational) {
      return Report(SB_INVALID_ARGUMENT,
                    "rational backend takes t as text; use "
                    "sb_theta_compute_exact");
    }
    *out = new sb_theta{spherebound::ComputeTheta(n, t, opts)};
    return SB_OK;
  });
}

sb_status sb_theta_compute_exact(int n, const char* t,
                                 const sb_theta_options* options,
                                 sb_theta** out) {
  return Guard([&] {
    SB_REQUIRE(t);
    SB_REQUIRE(out);
    spherebound::ThetaOptions opts = ToOptions(options);
    opts.backend = spherebound::Backend::kRational;
    const mpq_class exact_t = spherebound::ParseRational(t);
    *out = new sb_theta{spherebound::ComputeThetaExact(n, exact_t, opts)};
    return SB_OK;
  });
}

void sb_theta_destroy(sb_theta* result) { delete result; }

sb_status sb_theta_get_summary(const sb_theta* result, sb_theta_summary* out) {
  return Guard([&] {
    SB_REQUIRE(result);
    SB_REQUIRE(out);
    const spherebound::ThetaResult& r = result->result;
    sb_theta_summary s{};
    s.n = r.graph.n;
    s.t = r.graph.inner_products.empty() ? 0.0 : r.graph.inner_products[0];
    s.alpha = r.alpha;
    s.omega = r.omega;
    s.m_value = r.m_value;
    s.k_star = r.k_star;
    s.theta = r.theta;
    s.theta_bar = r.theta_bar;
    s.chi_lower = r.chi_lower;
    s.certified = r.certified ? 1 : 0;
    s.tie = r.tie ? 1 : 0;
    s.scanned_degree = r.scanned_degree;
    s.backend = r.backend == spherebound::Backend::kRational
                    ? SB_BACKEND_RATIONAL
                    : SB_BACKEND_FLOAT;
    s.has_bracket = r.bracket ? 1 : 0;
    if (r.bracket) s.bracket = ToBracket(*r.bracket);
    s.has_exact = r.exact_chi_lower ? 1 : 0;
    s.exact_chi_lower = r.exact_chi_lower.value_or(0);
    *out = s;
    return SB_OK;
  });
}

sb_status sb_theta_get_exact_m(const sb_theta* result, char* buffer,
                               size_t capacity, size_t* count) {
  return Guard([&] {
    SB_REQUIRE(result);
    if (!result->result.exact_m) {
      return Report(SB_INVALID_ARGUMENT, "result has no exact value");
    }
    const std::string text = result->result.exact_m->get_str();
    std::vector<char> chars(text.begin(), text.end());
    chars.push_back('\0');
    return CopyOut<char>(chars, buffer, capacity, count);
  });
}

sb_status sb_analytic_minimum(int n, int k, double* t, double* m) {
  return Guard([&] {
    SB_REQUIRE(t);
    SB_REQUIRE(m);
    const auto p = spherebound::AnalyticMinimum(n, k);
    *t = p.t;
    *m = p.m_value;
    return SB_OK;
  });
}

sb_status sb_bracket_minimum(int n, double t, sb_bracket* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = ToBracket(spherebound::BracketMinimum(n, t));
    return SB_OK;
  });
}

sb_status sb_theta_bar_single(int n, double t, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::ThetaBarSingle(n, t);
    return SB_OK;
  });
}

sb_status sb_limit_minimum(int n, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::LimitMinimum(n);
    return SB_OK;
  });
}

sb_status sb_bound_table(int first, int last, double ceil_guard,
                         double table_t, sb_bound_row* rows, size_t capacity,
                         size_t* count) {
  return Guard([&] {
    if (last >= first && count != nullptr) {
      *count = static_cast<std::size_t>(last - first + 1);
    }
    if (last >= first &&
        (rows == nullptr ||
         capacity < static_cast<std::size_t>(last - first + 1))) {
      return Report(SB_BUFFER_TOO_SMALL, "row buffer too small");
    }
    const auto table =
        spherebound::BoundTable(first, last, ceil_guard, table_t);
    std::vector<sb_bound_row> out;
    out.reserve(table.size());
    for (const auto& r : table) {
      out.push_back({r.n, r.alpha, r.j_alpha_plus_1, r.limit_m,
                     r.chi_bound_real, r.chi_bound_int,
                     r.high_precision_checked ? 1 : 0, r.table_t, r.m_at_t,
                     r.chi_at_t_real, r.chi_at_t_int,
                     r.at_t_certified ? 1 : 0});
    }
    return CopyOut<sb_bound_row>(out, rows, capacity, count);
  });
}

sb_status sb_growth_floor(int n, double* out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = spherebound::GrowthFloor(n);
    return SB_OK;
  });
}

sb_status sb_convergence_check(int n, const int* degrees, size_t num_degrees,
                               sb_convergence_entry* out) {
  return Guard([&] {
    SB_REQUIRE(degrees);
    SB_REQUIRE(out);
    const auto entries = spherebound::ConvergenceCheck(
        n, std::span<const int>(degrees, num_degrees));
    for (std::size_t i = 0; i < entries.size(); ++i) {
      out[i] = {entries[i].k, entries[i].t, entries[i].m, entries[i].gap};
    }
    return SB_OK;
  });
}

sb_status sb_lp_create(const double* objective, size_t num_variables,
                       sb_lp** out) {
  return Guard([&] {
    SB_REQUIRE(objective);
    SB_REQUIRE(out);
    if (num_variables == 0) {
      return Report(SB_INVALID_ARGUMENT, "linear program has no variables");
    }
    *out = new sb_lp{spherebound::LinearProgram(std::vector<double>(
                         objective, objective + num_variables)),
                     std::nullopt};
    return SB_OK;
  });
}

void sb_lp_destroy(sb_lp* lp) { delete lp; }

sb_status sb_lp_add_row(sb_lp* lp, const double* coefficients, sb_sense sense,
                        double rhs) {
  return Guard([&] {
    SB_REQUIRE(lp);
    SB_REQUIRE(coefficients);
    const auto n = static_cast<std::size_t>(lp->program.num_variables());
    lp->program.AddRow(std::vector<double>(coefficients, coefficients + n),
                       ToSense(sense), rhs);
    lp->solution.reset();
    return SB_OK;
  });
}

sb_status sb_lp_set_free(sb_lp* lp, size_t variable) {
  return Guard([&] {
    SB_REQUIRE(lp);
    lp->program.SetFree(static_cast<int>(variable));
    lp->solution.reset();
    return SB_OK;
  });
}

sb_status sb_lp_solve(sb_lp* lp, sb_lp_status* lp_status,
                      double* objective_value, int* iterations) {
  return Guard([&] {
    SB_REQUIRE(lp);
    SB_REQUIRE(lp_status);
    lp->solution = spherebound::SolveLp(lp->program);
    *lp_status = static_cast<sb_lp_status>(lp->solution->status);
    if (objective_value != nullptr) {
      *objective_value = lp->solution->objective_value;
    }
    if (iterations != nullptr) *iterations = lp->solution->iterations;
    return SB_OK;
  });
}

sb_status sb_lp_get_x(const sb_lp* lp, double* x, size_t capacity,
                      size_t* count) {
  return Guard([&] {
    SB_REQUIRE(lp);
    if (!lp->solution || lp->solution->status != spherebound::LpStatus::kOptimal) {
      return Report(SB_INVALID_ARGUMENT, "no optimal solution to read");
    }
    return CopyOut<double>(lp->solution->x, x, capacity, count);
  });
}

sb_status sb_lp_get_duals(const sb_lp* lp, double* duals, size_t capacity,
                          size_t* count) {
  return Guard([&] {
    SB_REQUIRE(lp);
    if (!lp->solution || lp->solution->status != spherebound::LpStatus::kOptimal) {
      return Report(SB_INVALID_ARGUMENT, "no optimal solution to read");
    }
    return CopyOut<double>(lp->solution->duals, duals, capacity, count);
  });
}

sb_status sb_dual_lp_compute(int n, const double* inner_products, size_t count,
                             int degree, double ceil_guard, sb_dual_lp** out) {
  return Guard([&] {
    SB_REQUIRE(inner_products);
    SB_REQUIRE(out);
    spherebound::SphereGraph graph;
    graph.n = n;
    graph.inner_products.assign(inner_products, inner_products + count);
    *out = new sb_dual_lp{spherebound::DualThetaLp(graph, degree, ceil_guard)};
    return SB_OK;
  });
}

void sb_dual_lp_destroy(sb_dual_lp* result) { delete result; }

sb_status sb_dual_lp_get_summary(const sb_dual_lp* result,
                                 sb_dual_lp_summary* out) {
  return Guard([&] {
    SB_REQUIRE(result);
    SB_REQUIRE(out);
    const auto& r = result->result;
    *out = {r.graph.n,        r.degree,          r.omega,
            r.bound,          r.tail_min,        r.tail_envelope,
            r.certified ? 1 : 0, r.chi_lower,    r.iterations};
    return SB_OK;
  });
}

sb_status sb_dual_lp_get_z(const sb_dual_lp* result, double* z,
                           size_t capacity, size_t* count) {
  return Guard([&] {
    SB_REQUIRE(result);
    return CopyOut<double>(result->result.z, z, capacity, count);
  });
}

sb_status sb_delsarte_compute(int n, double t, int degree, int grid_size,
                              sb_delsarte** out) {
  return Guard([&] {
    SB_REQUIRE(out);
    *out = new sb_delsarte{
        spherebound::DelsarteCodeBound(n, t, degree, grid_size)};
    return SB_OK;
  });
}

void sb_delsarte_destroy(sb_delsarte* result) { delete result; }

sb_status sb_delsarte_get_summary(const sb_delsarte* result,
                                  sb_delsarte_summary* out) {
  return Guard([&] {
    SB_REQUIRE(result);
    SB_REQUIRE(out);
    const auto& r = result->result;
    *out = {r.n,
            r.t,
            r.degree,
            r.bound,
            r.max_violation,
            r.certified_bound,
            r.certified ? 1 : 0,
            r.grid_points,
            r.margin_rounds};
    return SB_OK;
  });
}

sb_status sb_delsarte_get_coefficients(const sb_delsarte* result, double* f,
                                       size_t capacity, size_t* count) {
  return Guard([&] {
    SB_REQUIRE(result);
    return CopyOut<double>(result->result.f, f, capacity, count);
  });
}

}  // extern "C"
