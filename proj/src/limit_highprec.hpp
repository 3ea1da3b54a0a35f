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

#ifndef SPHEREBOUND_SRC_LIMIT_HIGHPREC_HPP_
#define SPHEREBOUND_SRC_LIMIT_HIGHPREC_HPP_

#include <cstdint>
#include <string>

namespace spherebound::detail {

/// 1 + j^a / (2^a Gamma(a+1) |J_a(j)|) at 50 significant digits, in
/// scientific notation.
std::string HighPrecisionChiBound(int n);

/// Ceiling of the 50-digit value.
std::int64_t HighPrecisionChiCeil(int n);

}  // namespace spherebound::detail

#endif  // SPHEREBOUND_SRC_LIMIT_HIGHPREC_HPP_
