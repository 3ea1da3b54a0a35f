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

#ifndef SPHEREBOUND_BESSEL_HPP_
#define SPHEREBOUND_BESSEL_HPP_

namespace spherebound {

struct BesselZero {
  double order = 0.0;
  double value = 0.0;
  double residual = 0.0;  // |J_order(value)|
};

/// Bessel function of the first kind J_nu(x), nu >= 0, x >= 0, from the
/// power series summed in compensated (double-double) arithmetic.
///
/// The series is only used where its cancellation is provably harmless:
/// x must satisfy x <= nu + 60 and the sum of absolute term magnitudes must
/// stay below 1e15 (so the absolute error is below ~1e-16). Outside that
/// envelope a kOutOfRange error is thrown instead of returning a value.
double BesselJ(double nu, double x);

/// Rough first positive zero of J_nu for nu > -1 (Olver's expansion for
/// nu >= 1, interpolation below). Only a starting point.
double BesselZeroGuess(double nu);

/// First positive zero j_nu of J_nu. Newton from BesselZeroGuess, with a
/// monotone scan as fallback; the result is certified as the first zero by
/// checking J_nu > 0 on a 0.01 grid over (0, j_nu).
BesselZero BesselFirstZero(double nu);

}  // namespace spherebound

#endif  // SPHEREBOUND_BESSEL_HPP_
