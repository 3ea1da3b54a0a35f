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

// Cross-check path for table rows whose bound sits next to an integer.
// Uses Boost.Math at 50 digits, independent of the double pipeline.

#include "limit_highprec.hpp"

#include <sstream>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace spherebound::detail {
namespace {

using Real = boost::multiprecision::cpp_bin_float_50;

Real ChiBound(int n) {
  const Real a = Real(n - 3) / 2;
  const Real j = boost::math::cyl_bessel_j_zero(a + 1, 1);
  const Real bessel = boost::math::cyl_bessel_j(a, j);
  return 1 + pow(j, a) / (pow(Real(2), a) * boost::math::tgamma(a + 1) *
                          abs(bessel));
}

}  // namespace

std::string HighPrecisionChiBound(int n) {
  std::ostringstream out;
  out.precision(50);
  out << std::scientific << ChiBound(n);
  return out.str();
}

std::int64_t HighPrecisionChiCeil(int n) {
  return static_cast<std::int64_t>(ceil(ChiBound(n)));
}

}  // namespace spherebound::detail
