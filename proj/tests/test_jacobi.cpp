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
#include <thread>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "spherebound/error.hpp"
#include "spherebound/jacobi.hpp"

namespace sb = spherebound;
using oracle::CodeOf;
using oracle::Grid;

namespace {

constexpr double kAlphas[] = {0.0, 0.5, 1.0, 10.5};

}  // namespace

TEST_SUITE("jacobi") {
  TEST_CASE("low degrees") {
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (double u : Grid(21)) {
        CHECK(f.Eval(0, u) == 1.0);
        CHECK(f.Eval(1, u) == doctest::Approx(u).epsilon(1e-15));
        const double r2 = ((2 * a + 3) * u * u - 1) / (2 * a + 2);
        CHECK(std::abs(f.Eval(2, u) - r2) < 1e-15);
      }
    }
    CHECK(sb::JacobiFamily::Symmetric(0.0).Eval(2, 0.0) == -0.5);
    CHECK(sb::JacobiFamily::Symmetric(3.0).Eval(0, 0.3) == 1.0);
  }

  TEST_CASE("agrees with the classical polynomial from Boost") {
    for (double a : kAlphas) {
      for (double b : {a, a + 1.0}) {
        const sb::JacobiFamily f({a, b});
        for (int k = 0; k <= 50; ++k) {
          for (double u : Grid(101)) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(k);
            CAPTURE(u);
            CHECK(std::abs(f.Eval(k, u) - oracle::Normalized(k, a, b, u)) <
                  1e-12);
          }
        }
      }
    }
  }

  TEST_CASE("degree 1131 at 0.9999 for alpha = 10.5") {
    const auto f = sb::JacobiFamily::Symmetric(10.5);
    const double v = f.Eval(1131, 0.9999);
    CHECK(std::abs(v - (-0.00059623)) < 5e-9);
    CHECK(std::abs(v - oracle::Normalized(1131, 10.5, 10.5, 0.9999)) < 1e-12);
  }

  TEST_CASE("normalization at u = 1") {
    for (double a : kAlphas) {
      for (double b : {a, a + 1.0, 0.25}) {
        const sb::JacobiFamily f({a, b});
        std::vector<double> all(201);
        f.EvalAll(200, 1.0, all);
        for (int k = 0; k <= 200; ++k) {
          CHECK(std::abs(f.Eval(k, 1.0) - 1.0) <= 1e-12);
          CHECK(std::abs(all[k] - 1.0) <= 1e-12);
        }
      }
    }
    const auto f = sb::JacobiFamily::Symmetric(2.0);
    for (int k = 0; k <= 200; ++k) {
      CHECK(f.Eval(k, -1.0) == (k % 2 == 0 ? 1.0 : -1.0));
    }
  }

  TEST_CASE("EvalAll matches Eval") {
    const auto f = sb::JacobiFamily::Symmetric(10.5);
    std::vector<double> all(301);
    for (double u : {-0.93, 0.0, 0.41, 0.9999}) {
      f.EvalAll(300, u, all);
      for (int k = 0; k <= 300; ++k) CHECK(all[k] == f.Eval(k, u));
    }
  }

  TEST_CASE("parity under u -> -u") {
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (int k = 0; k <= 50; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (double u : Grid(101)) {
          CHECK(std::abs(f.Eval(k, -u) - sign * f.Eval(k, u)) <= 1e-12);
        }
      }
    }
  }

  TEST_CASE("reflection between the (a, a+1) and (a+1, a) families") {
    for (double a : kAlphas) {
      const sb::JacobiFamily p({a, a + 1.0});
      const sb::JacobiFamily q({a + 1.0, a});
      for (int k = 0; k <= 50; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        for (double u : Grid(101)) {
          const double lhs = sign * (a + 1.0) * p.Eval(k, -u);
          const double rhs = (k + a + 1.0) * q.Eval(k, u);
          CHECK(std::abs(lhs - rhs) <= 1e-10);
        }
      }
    }
  }

  TEST_CASE("contiguous relations") {
    for (double a : kAlphas) {
      const auto r = sb::JacobiFamily::Symmetric(a);
      const auto s = sb::JacobiFamily::Symmetric(a + 1.0);
      const sb::JacobiFamily p({a, a + 1.0});
      const sb::JacobiFamily q({a + 1.0, a});
      for (int k = 1; k <= 50; ++k) {
        for (double u : Grid(101)) {
          CAPTURE(a);
          CAPTURE(k);
          CAPTURE(u);
          const double e4 = (2 * a + 2) * p.Eval(k, u) -
                            ((k + 2 * a + 2) * s.Eval(k, u) -
                             k * s.Eval(k - 1, u));
          CHECK(std::abs(e4) <= 1e-10);
          const double e5 = (2 * k + 2 * a + 2) * q.Eval(k, u) -
                            ((k + 2 * a + 2) * s.Eval(k, u) +
                             k * s.Eval(k - 1, u));
          CHECK(std::abs(e5) <= 1e-10);
          if (u < 1.0) {
            // Multiplied through by (1 - u) to keep the check pointwise.
            const double e6 =
                (k + a + 1) * q.Eval(k, u) * (1.0 - u) -
                (a + 1) * (r.Eval(k, u) - r.Eval(k + 1, u));
            CHECK(std::abs(e6) <= 1e-10);
          }
        }
      }
    }
  }

  TEST_CASE("derivative examples") {
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (double u : Grid(11)) {
        CHECK(f.EvalDerivative(0, u) == 0.0);
        CHECK(f.EvalDerivative(1, u) == doctest::Approx(1.0).epsilon(1e-15));
      }
    }
    CHECK(std::abs(sb::JacobiFamily::Symmetric(0.0).EvalDerivative(2, 0.0)) <
          1e-15);
    // d/du ((2a+3)u^2 - 1)/(2a+2) at u = 1 is (2a+3)/(a+1) = 24/11.5.
    const auto f = sb::JacobiFamily::Symmetric(10.5);
    const double d = f.EvalDerivative(2, 1.0);
    CHECK(d == doctest::Approx(24.0 / 11.5).epsilon(1e-15));
    const double h = 1e-6;
    const double fd = (f.Eval(2, 1.0) - f.Eval(2, 1.0 - h)) / h;
    CHECK(std::abs(fd - d) / d < 1e-5);
    CHECK(CodeOf([] { sb::JacobiFamily({1.0, 2.0}).EvalDerivative(3, 0.1); }) ==
          sb::ErrorCode::kInvalidArgument);
  }

  TEST_CASE("derivative agrees with central differences") {
    const double h = 1e-6;
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (int k = 1; k <= 50; ++k) {
        const double scale = k * (k + 2 * a + 1) / (2 * a + 2);
        for (double u : Grid(101)) {
          if (std::abs(u) > 0.99) continue;
          const double d = f.EvalDerivative(k, u);
          const double fd = (f.Eval(k, u + h) - f.Eval(k, u - h)) / (2 * h);
          // Relative to the derivative's scale so sign changes of R_k'
          // do not dominate.
          CHECK(std::abs(fd - d) <= 1e-5 * std::max(std::abs(d), 1e-2 * scale));
        }
      }
    }
  }

  TEST_CASE("differential equation") {
    const double h = 1e-6;
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (int k = 1; k <= 50; ++k) {
        for (double u : Grid(101)) {
          if (std::abs(u) > 0.99) continue;
          const double d2 = (f.EvalDerivative(k, u + h) -
                             f.EvalDerivative(k, u - h)) / (2 * h);
          const double residual = (1 - u * u) * d2 -
                                  (2 * a + 2) * u * f.EvalDerivative(k, u) +
                                  k * (k + 2 * a + 1) * f.Eval(k, u);
          CHECK(std::abs(residual) <= 1e-4 * k * k);
        }
      }
    }
  }

  TEST_CASE("orthogonality") {
    const auto rule = oracle::GaussLegendre(160);
    for (double a : kAlphas) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      std::vector<double> norms(31);
      for (int k = 0; k <= 30; ++k) norms[k] = oracle::WeightedInner(f, rule, k, k);
      for (int j = 0; j <= 30; ++j) {
        for (int k = j + 1; k <= 30; ++k) {
          CAPTURE(a);
          CAPTURE(j);
          CAPTURE(k);
          CHECK(std::abs(oracle::WeightedInner(f, rule, j, k)) <=
                1e-9 * std::max(norms[j], norms[k]));
        }
      }
    }
  }

  TEST_CASE("zero examples") {
    for (double a : kAlphas) {
      const auto z = sb::JacobiFamily::Symmetric(a).Zeros(1);
      REQUIRE(z.size() == 1);
      CHECK(z[0].value == 0.0);
      CHECK(sb::JacobiFamily::Symmetric(a).LargestZero(1).value == 0.0);
    }
    const auto z2 = sb::JacobiFamily::Symmetric(0.0).Zeros(2);
    REQUIRE(z2.size() == 2);
    CHECK(std::abs(z2[0].value + 1.0 / std::sqrt(3.0)) <= 1e-14);
    CHECK(std::abs(z2[1].value - 1.0 / std::sqrt(3.0)) <= 1e-14);
    CHECK(std::abs(sb::JacobiFamily::Symmetric(0.0).LargestZero(2).value -
                   0.5773502691896258) <= 1e-14);

    const auto z3 = sb::JacobiFamily::Symmetric(1.0).Zeros(3);
    REQUIRE(z3.size() == 3);
    CHECK(z3[1].value == 0.0);
    CHECK(z3[0].value == -z3[2].value);

    const auto f = sb::JacobiFamily::Symmetric(11.5);
    const double l19 = f.LargestZero(19).value;
    const double l20 = f.LargestZero(20).value;
    CHECK(l19 < l20);
    CHECK(l20 < 1.0);
    CHECK(std::abs(l20 - f.Zeros(20).back().value) <= 1e-14);
  }

  TEST_CASE("zeros are sign changes and interlace") {
    for (double a : kAlphas) {
      for (double b : {a, a + 1.0}) {
        const sb::JacobiFamily f({a, b});
        const auto ladder = f.ZeroLadder(100);
        REQUIRE(ladder.size() == 100);
        std::vector<sb::ZeroRecord> previous;
        for (int k = 1; k <= 100; ++k) {
          const auto& zeros = ladder[k - 1];
          REQUIRE(zeros.size() == static_cast<std::size_t>(k));
          for (int j = 0; j < k; ++j) {
            CHECK(zeros[j].index == j + 1);
            CHECK(zeros[j].degree == k);
            CHECK(zeros[j].bracket_width <= 1e-14);
            CHECK(zeros[j].value > -1.0);
            CHECK(zeros[j].value < 1.0);
            if (j > 0) CHECK(zeros[j - 1].value < zeros[j].value);
          }
          for (int j = 0; j + 1 < k; ++j) {
            CAPTURE(a);
            CAPTURE(b);
            CAPTURE(k);
            CAPTURE(j);
            CHECK(zeros[j].value < previous[j].value);
            CHECK(previous[j].value < zeros[j + 1].value);
          }
          CHECK(f.ZerosAbove(k, -1.0 + 1e-12) == k);
          CHECK(f.ZerosAbove(k, zeros.back().value + 1e-12) == 0);
          const double mid =
              k > 1 ? 0.5 * (zeros[k - 2].value + zeros[k - 1].value) : -0.5;
          CHECK(f.ZerosAbove(k, mid) == 1);
          previous = zeros;
        }
        CHECK(f.Zeros(100).back().value == ladder.back().back().value);
      }
    }
  }

  TEST_CASE("largest zero matches the full zero set") {
    for (double a : {0.0, 0.5, 3.0, 10.5, 11.5}) {
      const auto f = sb::JacobiFamily::Symmetric(a);
      for (int k : {2, 5, 17, 64, 150}) {
        CHECK(std::abs(f.LargestZero(k).value - f.Zeros(k).back().value) <=
              2e-14);
      }
    }
  }

  TEST_CASE("parameter validation") {
    CHECK(CodeOf([] { sb::JacobiFamily({-1.0, 0.0}); }) ==
          sb::ErrorCode::kOutOfRange);
    CHECK(CodeOf([] { sb::JacobiFamily({0.0, -1.5}); }) ==
          sb::ErrorCode::kOutOfRange);
    CHECK(CodeOf([] { sb::JacobiFamily({std::nan(""), 0.0}); }) ==
          sb::ErrorCode::kOutOfRange);
  }

  TEST_CASE("a shared family is safe across threads") {
    const auto f = sb::JacobiFamily::Symmetric(10.5);
    std::vector<double> results(8);
    std::vector<std::thread> threads;
    for (int i = 0; i < 8; ++i) {
      threads.emplace_back(
          [&f, &results, i] { results[i] = f.Eval(1000 + 10 * i, 0.9999); });
    }
    for (auto& th : threads) th.join();
    const auto fresh = sb::JacobiFamily::Symmetric(10.5);
    for (int i = 0; i < 8; ++i) {
      CHECK(results[i] == fresh.Eval(1000 + 10 * i, 0.9999));
    }
  }

  TEST_CASE("rational backend") {
    const sb::RationalJacobiFamily r(0, 0);
    CHECK(r.Eval(2, 0) == mpq_class(-1, 2));
    const sb::RationalJacobiFamily r105(mpq_class(21, 2), mpq_class(21, 2));
    const auto ones = r105.EvalAll(200, 1);
    for (const auto& v : ones) CHECK(v == 1);
    const sb::RationalJacobiFamily asym(mpq_class(1, 2), mpq_class(3, 2));
    const auto at_one = asym.EvalAll(60, 1);
    for (const auto& v : at_one) CHECK(v == 1);

    const mpq_class u(3, 10);
    const auto f = sb::JacobiFamily({0.5, 1.5});
    const auto exact = asym.EvalAll(60, u);
    for (int k = 0; k <= 60; ++k) {
      CHECK(std::abs(exact[k].get_d() - f.Eval(k, 0.3)) < 1e-13);
    }
  }

  TEST_CASE("rational literals") {
    CHECK(sb::ParseRational("1/3") == mpq_class(1, 3));
    CHECK(sb::ParseRational("0.9999") == mpq_class(9999, 10000));
    CHECK(sb::ParseRational("-5e-1") == mpq_class(-1, 2));
    CHECK(sb::ParseRational("0") == 0);
    CHECK(sb::ParseRational("-2/4") == mpq_class(-1, 2));
    for (const char* bad : {"abc", "1/0", "", "0.5.1", "1e", "nan"}) {
      CAPTURE(bad);
      CHECK(CodeOf([bad] { sb::ParseRational(bad); }) ==
            sb::ErrorCode::kNotRational);
    }
  }
}
