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


#include <array>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "doctest.h"
#include "oracles.hpp"
#include "limit_highprec.hpp"
#include "spherebound/bessel.hpp"
#include "spherebound/error.hpp"
#include "spherebound/limit.hpp"

namespace sb = spherebound;
using oracle::CodeOf;

namespace {

using Big = boost::multiprecision::cpp_bin_float_50;

// 1 - 1/L with L = 2^a Gamma(a+1) J_a(j) / j^a and j the first zero of
// J_{a+1}, evaluated with Boost at 50 digits.
Big ChiOracle(int n) {
  const Big a = Big(n - 3) / 2;
  const Big j = boost::math::cyl_bessel_j_zero(a + 1, 1);
  const Big limit = boost::multiprecision::pow(Big(2), a) *
                    boost::math::tgamma(a + 1) *
                    boost::math::cyl_bessel_j(a, j) /
                    boost::multiprecision::pow(j, a);
  return 1 - 1 / limit;
}

double LimitOracle(int n) {
  const double a = 0.5 * (n - 3);
  const double j = boost::math::cyl_bessel_j_zero(a + 1.0, 1);
  return std::exp(a * std::log(2.0) + std::lgamma(a + 1.0) -
                  a * std::log(j)) *
         boost::math::cyl_bessel_j(a, j);
}

constexpr std::array<std::int64_t, 15> kTable = {
    48, 64, 85, 113, 147, 191, 248, 319, 408, 521, 662, 839, 1060, 1336, 1679};

}  // namespace

TEST_SUITE("limit") {
  TEST_CASE("limit of m at n = 3 is J_0(j_1)") {
    const double want = boost::math::cyl_bessel_j(0.0, 3.8317059702075125);
    CHECK(sb::LimitMinimum(3) == doctest::Approx(want).epsilon(1e-13));
    CHECK(sb::LimitMinimum(3) == doctest::Approx(-0.402759395702553).epsilon(1e-12));
  }

  TEST_CASE("limit of m agrees with Boost and is negative") {
    for (int n = 3; n <= 128; ++n) {
      CAPTURE(n);
      const double m = sb::LimitMinimum(n);
      CHECK(m < 0.0);
      CHECK(m > -1.0);
      CHECK(std::abs(m - LimitOracle(n)) <= 1e-10 * std::abs(m));
    }
  }

  TEST_CASE("chi bound rows") {
    for (int n = 3; n <= 40; ++n) {
      CAPTURE(n);
      const auto row = sb::ChiLimitLower(n);
      CHECK(row.n == n);
      CHECK(row.alpha == 0.5 * (n - 3));
      CHECK(row.j_alpha_plus_1 ==
            doctest::Approx(sb::BesselFirstZero(row.alpha + 1).value)
                .epsilon(1e-15));
      CHECK(row.limit_m == doctest::Approx(sb::LimitMinimum(n)).epsilon(1e-14));
      CHECK(row.chi_bound_real ==
            doctest::Approx(1.0 - 1.0 / row.limit_m).epsilon(1e-13));
      CHECK(row.chi_bound_int == sb::GuardedCeil(row.chi_bound_real));
      const double oracle = ChiOracle(n).convert_to<double>();
      CHECK(std::abs(row.chi_bound_real - oracle) <= 1e-12 * oracle);
      CHECK(row.chi_bound_int ==
            boost::multiprecision::ceil(ChiOracle(n)).convert_to<std::int64_t>());
      CHECK(row.chi_bound_int == sb::detail::HighPrecisionChiCeil(n));
    }
  }

  TEST_CASE("published bounds from the limit") {
    CHECK(sb::ChiLimitLower(9).chi_bound_int == 35);
    CHECK(sb::ChiLimitLower(10).chi_bound_int == 48);
    CHECK(sb::ChiLimitLower(14).chi_bound_int == 147);
    CHECK(sb::ChiLimitLower(17).chi_bound_int == 319);
    CHECK(sb::ChiLimitLower(24).chi_bound_int == 1679);
  }

  TEST_CASE("table: fixed-t column reproduces every published entry") {
    const auto rows = sb::BoundTable(10, 24);
    REQUIRE(rows.size() == kTable.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      CAPTURE(rows[i].n);
      CHECK(rows[i].n == static_cast<int>(10 + i));
      CHECK(rows[i].table_t == sb::kTableInnerProduct);
      CHECK(rows[i].at_t_certified);
      CHECK(rows[i].chi_at_t_int == kTable[i]);
      CHECK(rows[i].chi_at_t_int ==
            sb::GuardedCeil(1.0 - 1.0 / rows[i].m_at_t));
      // Finite t never beats the limit by more than one unit here.
      CHECK(rows[i].chi_at_t_real <= rows[i].chi_bound_real);
    }
  }

  TEST_CASE("table: limit column differs from the published entries only at 20..22") {
    const auto rows = sb::BoundTable(10, 24);
    for (const auto& row : rows) {
      CAPTURE(row.n);
      const auto published = kTable[row.n - 10];
      if (row.n >= 20 && row.n <= 22) {
        // chi_real is 662.0034, 839.0633, 1060.2096 at 50 digits.
        CHECK(row.chi_bound_int == published + 1);
        CHECK(ChiOracle(row.n) > Big(published));
      } else {
        CHECK(row.chi_bound_int == published);
      }
    }
  }

  TEST_CASE("table without fixed-t columns") {
    const auto rows = sb::BoundTable(5, 7, sb::kCeilGuard, 0.0);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
      CHECK(row.table_t == 0.0);
      CHECK(row.chi_at_t_int == 0);
    }
    CHECK(CodeOf([] { sb::BoundTable(10, 9); }) ==
          sb::ErrorCode::kInvalidArgument);
    CHECK(CodeOf([] { sb::ChiLimitLower(2); }) ==
          sb::ErrorCode::kInvalidArgument);
  }

  TEST_CASE("convergence toward the limit") {
    const std::vector<int> ks = {50, 100, 200, 400};
    for (int n : {3, 10, 24}) {
      const auto entries = sb::ConvergenceCheck(n, ks);
      REQUIRE(entries.size() == ks.size());
      for (std::size_t i = 1; i < entries.size(); ++i) {
        CAPTURE(n);
        CAPTURE(entries[i].k);
        CHECK(entries[i].gap < entries[i - 1].gap);
        CHECK(entries[i].t > entries[i - 1].t);
      }
    }
    const std::vector<int> small = {10, 100};
    const auto e3 = sb::ConvergenceCheck(3, small);
    CHECK(e3[1].gap < e3[0].gap);
  }

  TEST_CASE("growth floor") {
    CHECK(sb::GrowthFloor(4) ==
          doctest::Approx(std::sqrt(2.0) / std::sqrt(M_PI)).epsilon(1e-14));
    const double g24 = sb::GrowthFloor(24);
    CHECK(g24 > 0.0);
    CHECK(g24 < 1678.0);
    CHECK(CodeOf([] { sb::GrowthFloor(3); }) == sb::ErrorCode::kInvalidArgument);

    for (int n = 4; n <= 128; ++n) {
      CAPTURE(n);
      const auto row = sb::ChiLimitLower(n);
      CHECK(row.chi_bound_real - 1.0 > sb::GrowthFloor(n));
      if (n >= 40) CHECK(std::pow(row.chi_bound_real, 1.0 / n) >= 1.16);
    }
  }

  TEST_CASE("growth floor against Stirling") {
    for (int n : {40, 64, 100, 128}) {
      const double a = 0.5 * (n - 3);
      const double stirling = 0.5 * std::log(2.0) + a * (1.0 - std::log(2.0)) -
                              0.5 * std::log(2.0 * M_PI * a) - 1.0 / (12.0 * a) +
                              1.0 / (360.0 * a * a * a);
      CHECK(std::log(sb::GrowthFloor(n)) == doctest::Approx(stirling).epsilon(1e-10));
    }
    // Growth per unit n tends to (1 - ln 2)/2, which is log(e/2) per unit alpha.
    const double rate = std::log(sb::GrowthFloor(128)) - std::log(sb::GrowthFloor(127));
    CHECK(std::abs(rate - std::log(1.165)) < 0.02);
  }
}
