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

#ifndef SPHEREBOUND_SPECIAL_HPP_
#define SPHEREBOUND_SPECIAL_HPP_

#include <cstdint>

namespace spherebound {

/// Gamma function for x > 0. Integers up to 170 go through an exact
/// factorial product, half-integers through the duplication product, and
/// everything else through a Lanczos approximation (g = 7, 9 terms).
double Gamma(double x);

/// log Gamma(x) for x > 0, safe against overflow for large arguments.
double LogGamma(double x);

/// Binomial coefficient C(n, k) with overflow detection (throws kOverflow).
std::uint64_t Binomial(std::uint64_t n, std::uint64_t k);

}  // namespace spherebound

#endif  // SPHEREBOUND_SPECIAL_HPP_
